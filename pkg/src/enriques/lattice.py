"""The staircase order on ``E_n``: code inclusion.

It is a distributive lattice (meet = intersection, join = union of codes)
whose sup-irreducible elements form a fence poset on the symbols, and it
carries exactly one order-reversing bijection, the duality :func:`dual`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from enriques.core import (
    E,
    V,
    DomainError,
    EnriquesDiagram,
    EnriquesError,
    Kind,
    ResourceError,
    Symbol,
    _check_complexity,
    diagram,
    symbol_set,
)

DEFAULT_HASSE_BOUND = 14
DEFAULT_BACKTRACK_BOUND = 6


def _same_n(d1, d2):
    if d1.n != d2.n:
        raise DomainError(f"complexities differ: {d1.n} != {d2.n}")


def leq(d1: EnriquesDiagram, d2: EnriquesDiagram) -> bool:
    _same_n(d1, d2)
    return d1.members <= d2.members


def meet(d1: EnriquesDiagram, d2: EnriquesDiagram) -> EnriquesDiagram:
    _same_n(d1, d2)
    return diagram(d1.n, d1.members & d2.members)


def join(d1: EnriquesDiagram, d2: EnriquesDiagram) -> EnriquesDiagram:
    _same_n(d1, d2)
    return diagram(d1.n, d1.members | d2.members)


def dual(d: EnriquesDiagram) -> EnriquesDiagram:
    """Swap curved edges with breaking vertices under the index reversal ``k -> n-k``."""
    n = d.n
    out = set()
    for k in range(2, n - 1):
        if E(n - k) not in d.members:
            out.add(V(k))
        if V(n - k) not in d.members:
            out.add(E(k))
    return diagram(n, out)


def cover_successors(d: EnriquesDiagram) -> list[tuple[Symbol, EnriquesDiagram]]:
    """Upper covers of ``d``, each tagged with the single symbol it adds."""
    n = d.n
    out = []
    for s in symbol_set(n):
        if s in d.members:
            continue
        if s.kind == Kind.VERTEX:
            i = s.index
            if E(i) not in d.members or (i < n - 2 and E(i + 1) not in d.members):
                continue
        out.append((s, diagram(n, d.members | {s})))
    return out


def rank(d: EnriquesDiagram) -> int:
    return len(d.members)


@dataclass(frozen=True)
class HasseGraph:
    n: int
    nodes: tuple
    edges: tuple

    def successors(self, key: str) -> list[str]:
        return [u for (l, u, _) in self.edges if l == key]

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        for lo, hi, s in self.edges:
            g.add_edge(lo, hi, label=str(s))
        return g

    def to_dot(self) -> str:
        from enriques.invariants import milnor_from_sequence, multiplicities_by_paths
        from enriques.core import parse

        lines = [f'digraph "E_{self.n}" {{', "  rankdir=BT;"]
        for key in self.nodes:
            d = parse(key)
            seq = multiplicities_by_paths(d)
            attrs = f"m0={seq[0]}, milnor={milnor_from_sequence(seq)}"
            if dual(d) == d:
                attrs += ", selfdual=true"
            lines.append(f'  "{key}" [{attrs}];')
        for lo, hi, s in self.edges:
            lines.append(f'  "{lo}" -> "{hi}" [label="{s}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(n: int, max_n: int = DEFAULT_HASSE_BOUND) -> HasseGraph:
    from enriques.enumeration import enumerate_diagrams

    _check_complexity(n)
    if n > max_n:
        raise ResourceError(f"Hasse graph of E_{n} exceeds the configured bound n <= {max_n}")
    nodes = enumerate_diagrams(n)
    edges = []
    for d in nodes:
        for s, up in cover_successors(d):
            edges.append((d.key, up.key, s))
    edges.sort(key=lambda e: (e[0], e[1]))
    return HasseGraph(n, tuple(d.key for d in nodes), tuple(edges))


class FencePoset:
    """The zigzag order on ``S_n``: ``v_i`` covers ``e_i`` and ``e_{i+1}``, ``v_{n-2}`` covers ``e_{n-2}``.

    Isomorphic to the poset of sup-irreducible elements of ``E_n`` via
    ``e_i -> {e_i}``, ``v_i -> {v_i, e_i, e_{i+1}}``.
    """

    def __init__(self, n: int):
        _check_complexity(n)
        self.n = n
        self.elements = tuple(symbol_set(n))
        covers = []
        for i in range(2, n - 1):
            covers.append((E(i), V(i)))
            if i < n - 2:
                covers.append((E(i + 1), V(i)))
        self.covers = tuple(covers)
        self._below = {s: frozenset(lo for lo, hi in covers if hi == s) for s in self.elements}

    def down(self, s: Symbol) -> frozenset:
        # height is at most one, so the strict down-set is the set of lower covers
        return self._below[s]

    def leq(self, a: Symbol, b: Symbol) -> bool:
        return a == b or a in self._below[b]

    def is_hereditary(self, subset) -> bool:
        subset = frozenset(subset)
        return all(self._below[s] <= subset for s in subset)

    def irreducible(self, s: Symbol) -> frozenset:
        """The sup-irreducible code (as a set of symbols) attached to ``s``."""
        return frozenset({s}) | self._below[s]

    def hereditary_subsets(self):
        """All order ideals, built edge-set first and then adding supported vertices."""
        edges = [s for s in self.elements if s.kind == Kind.EDGE]
        verts = [s for s in self.elements if s.kind == Kind.VERTEX]
        for r in range(len(edges) + 1):
            for es in combinations(edges, r):
                es = frozenset(es)
                free = [v for v in verts if self._below[v] <= es]
                for q in range(len(free) + 1):
                    for vs in combinations(free, q):
                        yield es | frozenset(vs)

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers)
        return g

    def automorphisms(self) -> list[dict]:
        """All order automorphisms, via directed graph isomorphism of the cover graph."""
        from networkx.algorithms.isomorphism import DiGraphMatcher

        g = self.to_networkx()
        return [dict(m) for m in DiGraphMatcher(g, g).isomorphisms_iter()]


def sup_irreducibles(n: int) -> FencePoset:
    return FencePoset(n)


def birkhoff(d: EnriquesDiagram) -> frozenset:
    """The hereditary subset of sup-irreducibles below ``d``, as a set of irreducible codes."""
    fence = FencePoset(d.n)
    image = frozenset(fence.irreducible(s) for s in d.members)
    assert fence.is_hereditary(d.members)
    return image


def join_irreducibles(diagrams) -> list[EnriquesDiagram]:
    """Elements with exactly one lower cover, computed directly from the order."""
    diagrams = list(diagrams)
    out = []
    for d in diagrams:
        below = [x for x in diagrams if x.members < d.members]
        maximal = [x for x in below if not any(x.members < y.members for y in below)]
        if len(maximal) == 1:
            out.append(d)
    return out


def reversing_bijections_backtrack(n: int, max_n: int = DEFAULT_BACKTRACK_BOUND) -> list[dict]:
    """Every order-reversing bijection of ``E_n`` found by exhaustive backtracking.

    Rank-``r`` elements may only go to rank ``R - r`` elements, where ``R`` is
    the rank of the top.
    """
    from enriques.enumeration import enumerate_diagrams

    _check_complexity(n)
    if n > max_n:
        raise ResourceError(f"backtracking over E_{n} exceeds the configured bound n <= {max_n}")
    elems = sorted(enumerate_diagrams(n), key=lambda d: (rank(d), d.key))
    top = max(rank(d) for d in elems)
    by_rank: dict = {}
    for d in elems:
        by_rank.setdefault(rank(d), []).append(d)
    codes = [d.members for d in elems]
    idx = {d.members: i for i, d in enumerate(elems)}
    assign = [None] * len(elems)
    used = set()
    found = []

    def consistent(i, j):
        a, fa = codes[i], codes[j]
        for t in range(i):
            b, fb = codes[t], codes[assign[t]]
            if (a <= b) != (fa >= fb) or (b <= a) != (fb >= fa):
                return False
        return True

    def go(i):
        if i == len(elems):
            found.append({elems[t].key: elems[assign[t]].key for t in range(len(elems))})
            return
        for cand in by_rank.get(top - rank(elems[i]), []):
            j = idx[cand.members]
            if j in used or not consistent(i, j):
                continue
            assign[i] = j
            used.add(j)
            go(i + 1)
            used.discard(j)
            assign[i] = None

    go(0)
    return found


def reversing_bijections_fence(n: int, max_n: int = DEFAULT_HASSE_BOUND) -> list[dict]:
    """Order-reversing bijections obtained as ``dual`` composed with lattice automorphisms.

    A lattice automorphism is fixed by its action on sup-irreducibles, i.e. by
    an automorphism of the fence poset, so this enumerates all of them.
    """
    from enriques.enumeration import enumerate_diagrams

    _check_complexity(n)
    if n > max_n:
        raise ResourceError(f"E_{n} exceeds the configured bound n <= {max_n}")
    fence = FencePoset(n)
    out = []
    elems = enumerate_diagrams(n)
    for phi in fence.automorphisms():
        mapping = {}
        for d in elems:
            moved = diagram(n, {phi[s] for s in d.members})
            mapping[d.key] = dual(moved).key
        out.append(mapping)
    return out


def order_reversing_bijections(n: int, strategy: str = "fence", max_n=None) -> list[dict]:
    if strategy == "backtrack":
        return reversing_bijections_backtrack(n, max_n or DEFAULT_BACKTRACK_BOUND)
    if strategy == "fence":
        return reversing_bijections_fence(n, max_n or DEFAULT_HASSE_BOUND)
    raise DomainError(f"unknown strategy {strategy!r}")


def self_duals(n: int) -> list[EnriquesDiagram]:
    from enriques.enumeration import iter_diagrams

    return sorted((d for d in iter_diagrams(n) if dual(d) == d), key=lambda d: d.key)


def halve(d: EnriquesDiagram) -> EnriquesDiagram:
    """Restrict a self-dual diagram to its first half.

    ``n = 2m`` lands in ``E_{m+1}``; ``n = 2m+1`` lands in ``E_{m+2}`` with
    ``v_m`` neutral.
    """
    n = d.n
    target = n // 2 + 1 if n % 2 == 0 else (n + 3) // 2
    keep = {s for s in d.members if s.index <= target - 2}
    return diagram(target, keep)


def unhalve(h: EnriquesDiagram, n: int) -> EnriquesDiagram:
    """Inverse of :func:`halve`: rebuild the self-dual diagram of complexity ``n``."""
    target = n // 2 + 1 if n % 2 == 0 else (n + 3) // 2
    if h.n != target:
        raise DomainError(f"half of a complexity-{n} diagram has complexity {target}, got {h.n}")
    first = set(h.members)
    if n % 2 == 0:
        # a self-dual diagram of even complexity 2m has e_m straight and v_m neutral
        first.add(E(n // 2))
    members = set(first)
    # the second half is read off the first through the duality rule
    for k in range(target - 1, n - 1):
        if E(n - k) not in first:
            members.add(V(k))
        if V(n - k) not in first:
            members.add(E(k))
    try:
        out = diagram(n, members)
    except EnriquesError as exc:
        raise DomainError(f"{h} does not extend to a self-dual diagram: {exc}") from exc
    if dual(out) != out:
        raise DomainError(f"{h} does not extend to a self-dual diagram")
    return out
