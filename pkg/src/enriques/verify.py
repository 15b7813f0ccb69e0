"""Rerun every counted and extremal claim about ``E_n`` and collect a pass/fail report."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field

from enriques.core import E, V, alpha, omega, parse, pi
from enriques.enumeration import (
    complexity_bound_check,
    enumerate_diagrams,
    fibonacci,
    in_class_a,
    iter_diagrams,
    stats,
)
from enriques.invariants import (
    milnor,
    milnor_from_sequence,
    milnor_torus,
    multiplicities_by_paths,
    multiplicities_by_proximity,
)
from enriques.lattice import (
    FencePoset,
    birkhoff,
    dual,
    halve,
    hasse,
    join,
    leq,
    meet,
    reversing_bijections_backtrack,
    reversing_bijections_fence,
    self_duals,
    unhalve,
)
from enriques.operators import OpKind, applications, strict_increase_set

DEFAULT_MAX_N = 10
RANDOM_TRIPLES = 100_000


@dataclass
class ClaimResult:
    claim: str
    anchor: str
    params: dict
    passed: bool = True
    witness: str | None = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        params = json.dumps(self.params, sort_keys=True)
        return f"{status} {self.claim} {self.anchor} {params} ({self.seconds:.2f}s){tail}"

    def fail(self, message, d=None):
        if self.passed:
            self.passed = False
            self.witness = message if d is None else f"{message}: {d}"
        return self


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self):
        return [r.line() for r in self.results]

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.results], indent=2, sort_keys=True)


def claim_cardinality(max_n=14):
    r = ClaimResult("C01", "cardinality is F(2n-4)", {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        count = sum(1 for _ in iter_diagrams(n))
        if count != fibonacci(2 * n - 4):
            return r.fail(f"|E_{n}| = {count}, want F_{2 * n - 4} = {fibonacci(2 * n - 4)}")
    return r


def claim_ab_refinement(max_n=14):
    r = ClaimResult("C02", "A/B split is F(2n-5), F(2n-6)", {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        a = b = 0
        for d in iter_diagrams(n):
            if in_class_a(d):
                a += 1
            else:
                b += 1
        if (a, b) != (fibonacci(2 * n - 5), fibonacci(2 * n - 6)):
            return r.fail(f"n={n}: |A|={a}, |B|={b}")
    return r


def claim_extremal_multiplicity(max_n=12):
    r = ClaimResult("C03", "max initial multiplicity F(n) only at omega, pi", {"n": [3, max_n]})
    s3 = stats(3)
    if not s3.degenerate or s3.max_m0_achievers != [omega(3).key]:
        r.fail("n=3 degenerate case not flagged", s3.max_m0_achievers)
    for n in range(4, max_n + 1):
        s = stats(n)
        want = sorted([omega(n).key, pi(n).key])
        if s.max_m0 != fibonacci(n) or s.max_m0_achievers != want:
            return r.fail(f"n={n}: max m0 {s.max_m0} at {s.max_m0_achievers}")
    return r


def claim_extremal_milnor(max_n=12):
    r = ClaimResult("C04", "min Milnor 2n-4 at alpha, max (F(n+1)-1)(F(n)-1) at omega",
                    {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        s = stats(n)
        if s.min_milnor != 2 * n - 4 or s.min_milnor_achievers != [alpha(n).key]:
            return r.fail(f"n={n}: min milnor {s.min_milnor} at {s.min_milnor_achievers}")
        if s.min_m0 != 2 or s.min_m0_achievers != [alpha(n).key]:
            return r.fail(f"n={n}: min m0 {s.min_m0} at {s.min_m0_achievers}")
        want = (fibonacci(n + 1) - 1) * (fibonacci(n) - 1)
        if s.max_milnor != want or s.max_milnor_achievers != [omega(n).key]:
            return r.fail(f"n={n}: max milnor {s.max_milnor} at {s.max_milnor_achievers}")
    return r


def claim_milnor_torus(max_n=14):
    r = ClaimResult("C05", "Milnor numbers of the extremal branch equations", {"n": [4, max_n]})
    for n in range(4, max_n + 1):
        f = fibonacci
        pairs = [
            (alpha(n), (2 * n - 3, 2)),
            (omega(n), (f(n + 1), f(n))),
            (pi(n), (f(n - 2) + f(n), f(n))),
        ]
        for d, (a, b) in pairs:
            if milnor(d) != milnor_torus(a, b):
                return r.fail(f"milnor {milnor(d)} != ({a}-1)({b}-1)", d)
    return r


def claim_engine_equivalence(max_n=DEFAULT_MAX_N):
    r = ClaimResult("C06", "two multiplicity engines agree", {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        for d in iter_diagrams(n):
            if multiplicities_by_paths(d) != multiplicities_by_proximity(d):
                return r.fail("engines disagree", d)
    d = parse("n=6;chi=e3")
    if multiplicities_by_paths(d) != (4, 4, 2, 2, 1, 1) or milnor(d) != 28:
        r.fail("pinned regression changed", d)
    return r


def claim_operator_theorem(max_n=9):
    r = ClaimResult("C07", "operators raise multiplicities and Milnor number", {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        for d in iter_diagrams(n):
            m = multiplicities_by_paths(d)
            for app in applications(d):
                m2 = multiplicities_by_paths(app.output)
                tag = f"{app.kind.value} at {app.position} on"
                if any(b < a for a, b in zip(m, m2)) or m2 == m:
                    return r.fail(f"{tag} not pointwise increasing", d)
                same_m0 = m2[0] == m[0]
                expect_same = app.kind is OpKind.BREAK and not d.edge_straight(app.position - 1)
                if same_m0 != expect_same:
                    return r.fail(f"{tag} initial multiplicity equality case wrong", d)
                if milnor_from_sequence(m2) <= milnor_from_sequence(m):
                    return r.fail(f"{tag} Milnor number did not increase", d)
                observed = frozenset(i for i in range(n) if m2[i] > m[i])
                if observed != strict_increase_set(d, app.kind, app.position):
                    return r.fail(f"{tag} predicted increase set differs", d)
                if not (d.members < app.output.members):
                    return r.fail(f"{tag} output not above input", d)
    return r


def claim_duality(max_n=9):
    r = ClaimResult("C08", "duality is an order-reversing involution", {"n": [3, max_n]})
    if dual(parse("n=6;chi=e3")).key != "n=6;chi=e2,e3,e4,v2,v4":
        return r.fail("worked example mismatch", dual(parse("n=6;chi=e3")))
    for n in range(3, max_n + 1):
        if dual(alpha(n)) != omega(n) or dual(omega(n)) != alpha(n):
            return r.fail(f"dual does not swap alpha and omega at n={n}")
        elems = enumerate_diagrams(n)
        duals = {d: dual(d) for d in elems}
        for d in elems:
            if dual(duals[d]) != d:
                return r.fail("not an involution", d)
        for a in elems:
            for b in elems:
                if leq(a, b) and not leq(duals[b], duals[a]):
                    return r.fail(f"order not reversed for {a} <= {b}")
    return r


def _closed_and_distributive(a, b, c):
    if meet(a, join(b, c)) != join(meet(a, b), meet(a, c)):
        return False
    return join(a, meet(b, c)) == meet(join(a, b), join(a, c))


def claim_lattice_laws(exhaustive_n=6, closure_n=8, random_ns=(7, 8, 9), hasse_n=8,
                       samples=RANDOM_TRIPLES, seed=0):
    import networkx as nx

    r = ClaimResult("C09", "distributive lattice and its Hasse graph",
                    {"exhaustive_n": exhaustive_n, "random_n": list(random_ns),
                     "samples": samples, "seed": seed, "hasse_n": hasse_n})
    for n in range(3, closure_n + 1):
        elems = enumerate_diagrams(n)
        for a in elems:
            for b in elems:
                # construction validates; an invalid code would raise
                meet(a, b), join(a, b)
    for n in range(3, exhaustive_n + 1):
        elems = enumerate_diagrams(n)
        for a in elems:
            for b in elems:
                for c in elems:
                    if not _closed_and_distributive(a, b, c):
                        return r.fail(f"distributivity fails at ({a}, {b}, {c})")
    rng = random.Random(seed)
    for n in random_ns:
        elems = enumerate_diagrams(n)
        for _ in range(samples):
            a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
            if not _closed_and_distributive(a, b, c):
                return r.fail(f"distributivity fails at ({a}, {b}, {c})")
    for n in range(3, hasse_n + 1):
        g = hasse(n).to_networkx()
        if not nx.is_directed_acyclic_graph(g):
            return r.fail(f"Hasse graph of E_{n} has a cycle")
        if set(nx.transitive_reduction(g).edges) != set(g.edges):
            return r.fail(f"Hasse graph of E_{n} has a transitive shortcut")
        order = nx.DiGraph()
        elems = enumerate_diagrams(n)
        order.add_nodes_from(d.key for d in elems)
        order.add_edges_from((a.key, b.key) for a in elems for b in elems
                             if a.members < b.members)
        if set(nx.transitive_reduction(order).edges) != set(g.edges):
            return r.fail(f"Hasse graph of E_{n} is not the cover relation")
    return r


def claim_birkhoff(max_n=DEFAULT_MAX_N):
    r = ClaimResult("C10", "codes are the hereditary subsets of the fence", {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        fence = FencePoset(n)
        codes = set()
        for d in iter_diagrams(n):
            image = birkhoff(d)
            if not fence.is_hereditary(d.members):
                return r.fail("image not hereditary", d)
            joined = frozenset().union(*image) if image else frozenset()
            if joined != d.members:
                return r.fail("join of sup-irreducibles below is not the element", d)
            codes.add(d.members)
        ideals = list(fence.hereditary_subsets())
        if len(ideals) != len(set(ideals)) or set(ideals) != codes:
            return r.fail(f"hereditary subsets of the fence differ from the codes at n={n}")
    return r


def claim_unique_duality(backtrack_n=5, fence_n=14, mapping_n=DEFAULT_MAX_N):
    r = ClaimResult("C11", "duality is the only order-reversing bijection",
                    {"backtrack_n": backtrack_n, "fence_n": fence_n, "mapping_n": mapping_n})
    for n in range(3, backtrack_n + 1):
        found = reversing_bijections_backtrack(n)
        want = {d.key: dual(d).key for d in enumerate_diagrams(n)}
        if found != [want]:
            return r.fail(f"n={n}: found {len(found)} order-reversing bijections")
    for n in range(3, fence_n + 1):
        fence = FencePoset(n)
        autos = fence.automorphisms()
        if autos != [{s: s for s in fence.elements}]:
            return r.fail(f"fence poset of n={n} has {len(autos)} automorphisms")
    for n in range(3, mapping_n + 1):
        want = {d.key: dual(d).key for d in enumerate_diagrams(n)}
        if reversing_bijections_fence(n) != [want]:
            return r.fail(f"n={n}: fence reduction does not reproduce the duality")
    return r


def claim_self_duals(max_n=14):
    r = ClaimResult("C12", "F(n-2) self-dual diagrams and the halving bijections",
                    {"n": [3, max_n]})
    for n in range(3, max_n + 1):
        sd = self_duals(n)
        if len(sd) != fibonacci(n - 2):
            return r.fail(f"n={n}: {len(sd)} self-duals, want F_{n - 2}")
        halves = [halve(d) for d in sd]
        if n % 2 == 0:
            target = enumerate_diagrams(n // 2 + 1)
        else:
            target = [d for d in enumerate_diagrams((n + 3) // 2) if in_class_a(d)]
        if sorted(h.key for h in halves) != sorted(t.key for t in target):
            return r.fail(f"n={n}: halving is not a bijection onto its codomain")
        for d, h in zip(sd, halves):
            if unhalve(h, n) != d:
                return r.fail("halving not inverted", d)
            if n % 2 == 0 and n >= 4 and (E(n // 2) not in d.members or V(n // 2) in d.members):
                return r.fail("middle edge/vertex decoration unexpected", d)
    return r


def claim_complexity_bound(max_n=DEFAULT_MAX_N):
    r = ClaimResult("C13", "largest complexity for Milnor number mu is 2 + mu/2",
                    {"N": max_n, "mu_max": 2 * max_n - 4})
    report = complexity_bound_check(max_n)
    if not report.passed:
        msg, key = report.failures[0]
        r.fail(msg if key is None else f"{msg}: {key}")
    return r


def run_all(max_n: int = DEFAULT_MAX_N, seed: int = 0, samples: int = RANDOM_TRIPLES,
            progress=None) -> VerificationReport:
    """Run the whole suite; ``max_n`` bounds the sweeps whose default bound is 10."""
    jobs = [
        lambda: claim_cardinality(),
        lambda: claim_ab_refinement(),
        lambda: claim_extremal_multiplicity(),
        lambda: claim_extremal_milnor(),
        lambda: claim_milnor_torus(),
        lambda: claim_engine_equivalence(max_n),
        lambda: claim_operator_theorem(),
        lambda: claim_duality(),
        lambda: claim_lattice_laws(samples=samples, seed=seed),
        lambda: claim_birkhoff(max_n),
        lambda: claim_unique_duality(mapping_n=max_n),
        lambda: claim_self_duals(),
        lambda: claim_complexity_bound(max_n),
    ]
    report = VerificationReport()
    for job in jobs:
        t0 = time.perf_counter()
        res = job()
        res.seconds = time.perf_counter() - t0
        report.results.append(res)
        if progress:
            progress(res.line())
    return report
