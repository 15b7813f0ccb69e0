"""Exhaustive generation of diagrams of a given complexity and sweep statistics."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from enriques.core import (
    E,
    V,
    DomainError,
    EnriquesDiagram,
    EnriquesError,
    _check_complexity,
    alpha,
    diagram,
    omega,
    pi,
    symbol_set,
    validate_code,
)
from enriques.invariants import milnor_from_sequence, multiplicities_by_paths


def fibonacci(k: int) -> int:
    if k < 0:
        raise DomainError(f"Fibonacci index must be >= 0, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _completions(n, members):
    """Valid ways to decorate ``e_{n-1}``, ``v_{n-1}`` when passing from ``E_n`` to ``E_{n+1}``.

    Three from a diagram with ``v_{n-2}`` neutral, two when it is breaking
    (then ``e_{n-1}`` must stay straight).
    """
    e, v = E(n - 1), V(n - 1)
    if V(n - 2) in members:
        out = [members | {e}, members | {e, v}]
    else:
        out = [members, members | {e}, members | {e, v}]
    return out


def iter_diagrams(n: int):
    """Lazily yield every diagram of complexity ``n`` (generation order, O(n) memory)."""
    _check_complexity(n)

    def grow(k, members):
        if k == n:
            yield diagram(n, members)
            return
        ext = _completions(k, members)
        assert len(ext) == (2 if V(k - 2) in members else 3)
        for m in ext:
            yield from grow(k + 1, m)

    yield from grow(3, frozenset())


def enumerate_diagrams(n: int) -> list[EnriquesDiagram]:
    """All diagrams of complexity ``n`` in canonical (text key) order."""
    return sorted(iter_diagrams(n), key=lambda d: d.key)


def enumerate_bruteforce(n: int) -> list[EnriquesDiagram]:
    """Power-set filtering through code validation; exponential, for cross-checks only."""
    syms = symbol_set(n)
    out = []
    for r in range(len(syms) + 1):
        for subset in itertools.combinations(syms, r):
            try:
                code = validate_code(n, subset)
            except EnriquesError:
                continue
            out.append(EnriquesDiagram(code))
    return sorted(out, key=lambda d: d.key)


def in_class_a(d: EnriquesDiagram) -> bool:
    """``v_{n-2}`` neutral (always true for n = 3, where it is ``v_1``)."""
    return not d.vertex_breaking(d.n - 2)


def partition_by_prefix(n: int, depth: int = 2):
    """Split the generation tree at complexity ``min(n, 3 + depth)`` into independent shards.

    Each shard is a callable returning the diagrams below one prefix, so a
    sweep can run them in parallel and merge results associatively.
    """
    _check_complexity(n)
    cut = min(n, 3 + depth)
    prefixes = [frozenset()]
    for k in range(3, cut):
        prefixes = [m for p in prefixes for m in _completions(k, p)]

    def shard(prefix):
        def run():
            stack = [(cut, prefix)]
            while stack:
                k, m = stack.pop()
                if k == n:
                    yield diagram(n, m)
                else:
                    stack.extend((k + 1, x) for x in reversed(_completions(k, m)))
        return run

    return [shard(p) for p in prefixes]


@dataclass
class EnumerationStats:
    n: int
    total: int = 0
    count_a: int = 0
    count_b: int = 0
    max_m0: int = 0
    max_m0_achievers: list = field(default_factory=list)
    min_m0: int | None = None
    min_m0_achievers: list = field(default_factory=list)
    max_milnor: int = 0
    max_milnor_achievers: list = field(default_factory=list)
    min_milnor: int | None = None
    min_milnor_achievers: list = field(default_factory=list)
    degenerate: bool = False

    def add(self, d: EnriquesDiagram, seq=None):
        seq = seq or multiplicities_by_paths(d)
        m0, mu = seq[0], milnor_from_sequence(seq)
        self.total += 1
        if in_class_a(d):
            self.count_a += 1
        else:
            self.count_b += 1
        key = d.key
        self.max_m0, self.max_m0_achievers = _keep(max, self.max_m0, self.max_m0_achievers, m0, key)
        self.min_m0, self.min_m0_achievers = _keep(min, self.min_m0, self.min_m0_achievers, m0, key)
        self.max_milnor, self.max_milnor_achievers = _keep(
            max, self.max_milnor, self.max_milnor_achievers, mu, key)
        self.min_milnor, self.min_milnor_achievers = _keep(
            min, self.min_milnor, self.min_milnor_achievers, mu, key)

    def merge(self, other: "EnumerationStats") -> "EnumerationStats":
        if other.n != self.n:
            raise DomainError("cannot merge statistics of different complexities")
        out = EnumerationStats(self.n, self.total + other.total, self.count_a + other.count_a,
                               self.count_b + other.count_b, degenerate=self.degenerate)
        for name, pick in (("max_m0", max), ("min_m0", min), ("max_milnor", max),
                           ("min_milnor", min)):
            val, ach = getattr(self, name), getattr(self, name + "_achievers")
            for key in getattr(other, name + "_achievers"):
                val, ach = _keep(pick, val, ach, getattr(other, name), key)
            setattr(out, name, val)
            setattr(out, name + "_achievers", ach)
        return out

    def finish(self) -> "EnumerationStats":
        for name in ("max_m0", "min_m0", "max_milnor", "min_milnor"):
            setattr(self, name + "_achievers", sorted(set(getattr(self, name + "_achievers"))))
        self.degenerate = self.n == 3
        return self


def _keep(pick, best, achievers, value, key):
    if best is None or (value != best and pick(value, best) == value):
        return value, [key]
    if value == best:
        achievers.append(key)
    return best, achievers


def stats(n: int, parallel_shards: int = 0) -> EnumerationStats:
    """One streaming sweep over ``E_n``.

    For ``n = 3`` the maximal multiplicity is reached by ``omega(3)`` alone
    (``pi`` needs ``n >= 4``) and ``degenerate`` is set.
    """
    _check_complexity(n)
    if parallel_shards:
        from concurrent.futures import ProcessPoolExecutor

        shards = partition_by_prefix(n)
        with ProcessPoolExecutor(parallel_shards) as ex:
            parts = list(ex.map(_stats_of_shard, [n] * len(shards), range(len(shards))))
        acc = parts[0]
        for p in parts[1:]:
            acc = acc.merge(p)
        return acc.finish()
    acc = EnumerationStats(n)
    for d in iter_diagrams(n):
        acc.add(d)
    return acc.finish()


def _stats_of_shard(n, idx):
    acc = EnumerationStats(n)
    for d in partition_by_prefix(n)[idx]():
        acc.add(d)
    return acc


@dataclass
class ComplexityBoundReport:
    max_n: int
    max_complexity: dict
    achievers: dict
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def complexity_bound_check(max_n: int) -> ComplexityBoundReport:
    """For each even Milnor number ``mu <= 2N-4`` find the largest complexity realizing it.

    Expected: ``2 + mu/2``, realized only by ``alpha``.  Also checks
    ``m_0 <= F_n`` on every diagram.
    """
    _check_complexity(max_n)
    best_n: dict = {}
    achievers = defaultdict(list)
    failures = []
    for n in range(3, max_n + 1):
        fn = fibonacci(n)
        for d in iter_diagrams(n):
            seq = multiplicities_by_paths(d)
            if seq[0] > fn:
                failures.append(("m0 exceeds F_n", d.key))
            mu = milnor_from_sequence(seq)
            if best_n.get(mu, 0) < n:
                best_n[mu] = n
                achievers[mu] = []
            if best_n[mu] == n:
                achievers[mu].append(d.key)
    for mu in range(2, 2 * max_n - 4 + 1, 2):
        want = 2 + mu // 2
        if best_n.get(mu) != want:
            failures.append((f"max complexity for mu={mu} is {best_n.get(mu)}, want {want}", None))
        elif sorted(achievers[mu]) != [alpha(want).key]:
            failures.append((f"mu={mu} achieved by {sorted(achievers[mu])}", None))
    return ComplexityBoundReport(max_n, dict(best_n), {k: sorted(v) for k, v in achievers.items()},
                                 failures)


def extremal(n: int) -> dict:
    out = {"alpha": alpha(n), "omega": omega(n)}
    if n >= 4:
        out["pi"] = pi(n)
    return out
