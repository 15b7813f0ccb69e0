"""Straightening and breaking operators.

Both operators only ever add symbols to a code, so they move a diagram
strictly upward in the staircase order and make every multiplicity grow
weakly (strictly somewhere).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from enriques.core import E, V, EnriquesDiagram, OperatorError, diagram


class OpKind(str, enum.Enum):
    STRAIGHTEN = "straighten"
    BREAK = "break"


@dataclass(frozen=True)
class OperatorApplication:
    kind: OpKind
    position: int
    input: EnriquesDiagram
    output: EnriquesDiagram


def _check_position(d, p):
    if not 2 <= p <= d.n - 2:
        raise OperatorError(f"position {p} outside 2..{d.n - 2} for n={d.n}")


def can_straighten(d: EnriquesDiagram, p: int) -> bool:
    return 2 <= p <= d.n - 2 and E(p) not in d.members


def can_break(d: EnriquesDiagram, p: int) -> bool:
    return (
        2 <= p <= d.n - 2
        and d.edge_straight(p)
        and d.edge_straight(p + 1)
        and V(p) not in d.members
    )


def straighten(d: EnriquesDiagram, p: int) -> EnriquesDiagram:
    """Make ``e_p`` straight; ``v_p`` becomes breaking when ``e_{p+1}`` is straight.

    ``v_{p-1}`` is never touched: if ``e_{p-1}`` is straight the new edge
    simply continues it.
    """
    _check_position(d, p)
    if E(p) in d.members:
        raise OperatorError(f"cannot straighten e{p}: it is already straight in {d}")
    added = {E(p)}
    if d.edge_straight(p + 1):
        added.add(V(p))
    return diagram(d.n, d.members | added)


def break_at(d: EnriquesDiagram, p: int) -> EnriquesDiagram:
    _check_position(d, p)
    if not can_break(d, p):
        raise OperatorError(
            f"cannot break v{p} in {d}: needs e{p}, e{p + 1} straight and v{p} neutral"
        )
    return diagram(d.n, d.members | {V(p)})


def apply(d: EnriquesDiagram, kind, p: int) -> EnriquesDiagram:
    kind = OpKind(kind)
    if kind is OpKind.STRAIGHTEN:
        return straighten(d, p)
    return break_at(d, p)


def applications(d: EnriquesDiagram):
    """Every applicable (kind, position) on ``d``, straightenings first."""
    for p in range(2, d.n - 1):
        if can_straighten(d, p):
            yield OperatorApplication(OpKind.STRAIGHTEN, p, d, straighten(d, p))
    for p in range(2, d.n - 1):
        if can_break(d, p):
            yield OperatorApplication(OpKind.BREAK, p, d, break_at(d, p))


def _straight_reach(d, end):
    """Largest ``l >= 1`` with ``[v_{end-l} v_end]`` a straight path of ``d``.

    Returns 0 when ``e_end`` itself is curved.
    """
    l = 0
    while d.edges[end - l] and (l == 0 or not d.vertices[end - l]):
        l += 1
    return l


def strict_increase_set(d: EnriquesDiagram, kind, p: int) -> frozenset:
    """Indices whose multiplicity strictly grows under the operator, predicted from the shape."""
    kind = OpKind(kind)
    out = apply(d, kind, p)
    # e_p is straight in the output; interior vertices v_{p-l+1}..v_{p-1} are unchanged
    l = _straight_reach(out, p)
    if kind is OpKind.STRAIGHTEN:
        return frozenset(range(p - l))
    if l > 1:
        return frozenset(range(p))
    if not d.edge_straight(p - 1):
        return frozenset({p - 1})
    # k >= 2 maximal with [v_{p-k} v_{p-1}] straight: that path has k-1 edges
    k = _straight_reach(d, p - 1) + 1
    assert k >= 2
    return frozenset(range(p - k)) | {p - 1}
