import networkx as nx
import pytest

from enriques.core import E, V, DomainError, Kind, ResourceError, alpha, omega, parse, pi
from enriques.enumeration import enumerate_diagrams, fibonacci, in_class_a
from enriques.lattice import (
    FencePoset,
    birkhoff,
    cover_successors,
    dual,
    halve,
    hasse,
    join,
    join_irreducibles,
    leq,
    meet,
    order_reversing_bijections,
    reversing_bijections_backtrack,
    self_duals,
    sup_irreducibles,
    unhalve,
)
from enriques.operators import break_at, straighten


def test_meet_join_examples():
    assert join(parse("n=6;chi=e2"), parse("n=6;chi=e3")) == parse("n=6;chi=e2,e3")
    assert meet(omega(6), pi(6)) == pi(6)
    for d in enumerate_diagrams(6):
        assert meet(omega(6), d) == d
        assert join(alpha(6), d) == d
        assert leq(alpha(6), d) and leq(d, omega(6))


def test_mismatched_complexity():
    with pytest.raises(DomainError):
        meet(alpha(5), alpha(6))
    with pytest.raises(DomainError):
        leq(alpha(5), alpha(6))


@pytest.mark.parametrize("n", range(3, 9))
def test_meet_join_closed(n, diagrams_upto):
    elems = diagrams_upto(n)
    for a in elems:
        for b in elems:
            assert meet(a, b).members == a.members & b.members
            assert join(a, b).members == a.members | b.members


def test_dual_examples():
    assert dual(parse("n=6;chi=e3")).key == "n=6;chi=e2,e3,e4,v2,v4"
    for n in range(3, 12):
        assert dual(alpha(n)) == omega(n)
        assert dual(omega(n)) == alpha(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_dual_involution(n, diagrams_upto):
    for d in diagrams_upto(n):
        assert dual(dual(d)) == d


@pytest.mark.parametrize("n", range(3, 10))
def test_dual_reverses_order(n, diagrams_upto):
    elems = diagrams_upto(n)
    duals = {d: dual(d) for d in elems}
    for a in elems:
        for b in elems:
            if leq(a, b):
                assert leq(duals[b], duals[a])


def test_cover_successors_examples():
    assert cover_successors(alpha(4)) == [(E(2), parse("n=4;chi=e2"))]
    assert cover_successors(parse("n=4;chi=e2")) == [(V(2), omega(4))]
    for n in range(3, 9):
        assert cover_successors(omega(n)) == []


@pytest.mark.parametrize("n", range(3, 9))
def test_covers_realized_by_operators(n, diagrams_upto):
    for d in diagrams_upto(n):
        for s, up in cover_successors(d):
            assert up.members - d.members == {s}
            p = s.index
            if s.kind == Kind.VERTEX:
                assert break_at(d, p) == up
            elif not d.edge_straight(p + 1):
                assert straighten(d, p) == up


def test_hasse_small():
    g4 = hasse(4)
    assert len(g4.nodes) == 3 and len(g4.edges) == 2
    assert [str(s) for _, _, s in g4.edges] == ["e2", "v2"]
    assert len(hasse(5).nodes) == 8
    assert len(hasse(6).nodes) == 21


@pytest.mark.parametrize("n", range(3, 9))
def test_hasse_structure(n):
    h = hasse(n)
    g = h.to_networkx()
    assert nx.is_directed_acyclic_graph(g)
    assert set(nx.transitive_reduction(g).edges) == set(g.edges)
    sources = [v for v in g if g.in_degree(v) == 0]
    sinks = [v for v in g if g.out_degree(v) == 0]
    assert sources == [alpha(n).key]
    assert sinks == [omega(n).key]
    for lo, hi, s in h.edges:
        assert parse(hi).members - parse(lo).members == {s}


def test_hasse_bound():
    with pytest.raises(ResourceError):
        hasse(9, max_n=8)


def test_dot_output():
    dot = hasse(6).to_dot()
    assert dot == hasse(6).to_dot()
    assert dot.startswith('digraph "E_6" {')
    assert '"n=6;chi=e3" [m0=4, milnor=28];' in dot
    assert '"n=6;chi=" -> "n=6;chi=e2" [label="e2"];' in dot
    assert dot.count("selfdual=true") == 3
    for d in self_duals(6):
        assert f'"{d.key}" [' in dot
        line = next(l for l in dot.splitlines() if l.strip().startswith(f'"{d.key}" ['))
        assert "selfdual=true" in line


def test_fence_poset_n4():
    fence = sup_irreducibles(4)
    assert fence.elements == (E(2), V(2))
    assert fence.covers == ((E(2), V(2)),)
    assert fence.irreducible(V(2)) == {E(2), V(2)}


@pytest.mark.parametrize("n", range(3, 11))
def test_fence_ideals_are_codes(n, diagrams_upto):
    fence = FencePoset(n)
    ideals = list(fence.hereditary_subsets())
    assert len(ideals) == len(set(ideals))
    assert set(ideals) == {d.members for d in diagrams_upto(n)}
    minimal = [s for s in fence.elements if not fence.down(s)]
    assert minimal == [s for s in fence.elements if s.kind == Kind.EDGE]


@pytest.mark.parametrize("n", range(4, 9))
def test_fence_matches_lattice_irreducibles(n, diagrams_upto):
    fence = FencePoset(n)
    direct = {d.members for d in join_irreducibles(diagrams_upto(n))}
    assert direct == {fence.irreducible(s) for s in fence.elements}
    # order among irreducibles is inclusion, which is the fence order
    for a in fence.elements:
        for b in fence.elements:
            assert fence.leq(a, b) == (fence.irreducible(a) <= fence.irreducible(b))


def test_birkhoff_extremes():
    for n in range(3, 9):
        assert birkhoff(alpha(n)) == frozenset()
        assert {s for irr in birkhoff(omega(n)) for s in irr} == set(omega(n).members)
        assert len(birkhoff(omega(n))) == 2 * (n - 3)


def test_unique_reversal_n4():
    (f,) = reversing_bijections_backtrack(4)
    assert f == {"n=4;chi=": "n=4;chi=e2,v2", "n=4;chi=e2": "n=4;chi=e2",
                 "n=4;chi=e2,v2": "n=4;chi="}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_unique_reversal_backtracking(n):
    found = reversing_bijections_backtrack(n)
    assert found == [{d.key: dual(d).key for d in enumerate_diagrams(n)}]


@pytest.mark.parametrize("n", range(3, 15))
def test_fence_automorphisms_trivial(n):
    fence = FencePoset(n)
    assert fence.automorphisms() == [{s: s for s in fence.elements}]


def test_reversal_strategies_agree():
    for n in range(3, 7):
        assert order_reversing_bijections(n, "fence") == order_reversing_bijections(n, "backtrack")
    with pytest.raises(ResourceError):
        order_reversing_bijections(7, "backtrack")
    with pytest.raises(DomainError):
        order_reversing_bijections(4, "guess")


def test_self_duals_small():
    assert [d.key for d in self_duals(4)] == ["n=4;chi=e2"]
    assert len(self_duals(6)) == 3
    assert self_duals(3) == [alpha(3)]


@pytest.mark.parametrize("n", range(3, 15))
def test_self_dual_count_and_halving(n):
    sd = self_duals(n)
    assert len(sd) == fibonacci(n - 2)
    halves = [halve(d) for d in sd]
    if n % 2 == 0:
        target = enumerate_diagrams(n // 2 + 1)
    else:
        target = [d for d in enumerate_diagrams((n + 3) // 2) if in_class_a(d)]
    assert sorted(h.key for h in halves) == sorted(t.key for t in target)
    assert [unhalve(h, n) for h in halves] == sd


def test_unhalve_rejects_wrong_size():
    with pytest.raises(DomainError):
        unhalve(alpha(4), 10)
