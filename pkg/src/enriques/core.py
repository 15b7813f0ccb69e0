"""Symbols, codes and Enriques diagrams, plus their canonical text form.

A diagram of blow-up complexity ``n`` has vertices ``v_0 .. v_{n-1}`` and
edges ``e_1 .. e_{n-1}``.  Only the decorations of ``e_2 .. e_{n-2}`` and
``v_2 .. v_{n-2}`` vary; a diagram is therefore determined by its *code*,
the set of its straight edges and breaking vertices among those symbols.

Text form::

    n=6;chi=e3
    n=4;chi=e2,v2
    n=3;chi=
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

MIN_COMPLEXITY = 3


class EnriquesError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(EnriquesError):
    pass


class IndexRangeError(EnriquesError):
    pass


class ValidityError(EnriquesError):
    def __init__(self, message, symbol=None):
        super().__init__(message)
        self.symbol = symbol


class ParseError(EnriquesError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class OperatorError(EnriquesError):
    pass


class ResourceError(EnriquesError):
    pass


class Kind(enum.IntEnum):
    EDGE = 0
    VERTEX = 1


class Symbol(NamedTuple):
    """Name of an edge ``e_i`` or vertex ``v_i``.

    Tuple ordering puts every edge before every vertex, each group by index,
    which is the canonical order used for serialization.
    """

    kind: Kind
    index: int

    def __str__(self):
        return ("e" if self.kind == Kind.EDGE else "v") + str(self.index)

    def __repr__(self):
        return f"Symbol({self})"


def E(i: int) -> Symbol:
    return Symbol(Kind.EDGE, i)


def V(i: int) -> Symbol:
    return Symbol(Kind.VERTEX, i)


def _check_complexity(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"complexity must be an integer, got {n!r}")
    if n < MIN_COMPLEXITY:
        raise DomainError(f"blow-up complexity of a singular branch is >= 3, got {n}")


def symbol_set(n: int) -> list[Symbol]:
    """The ``2(n-3)`` symbols whose decoration varies over diagrams of complexity ``n``."""
    _check_complexity(n)
    idx = range(2, n - 1)
    return [E(i) for i in idx] + [V(i) for i in idx]


def is_admissible(n: int, s: Symbol) -> bool:
    return 2 <= s.index <= n - 2


def _vertex_condition_a(n, members):
    """Return the first vertex symbol violating "v_i in chi => e_i, e_{i+1} in chi"."""
    for s in sorted(s for s in members if s.kind == Kind.VERTEX):
        i = s.index
        # e_{n-1} is always straight, so v_{n-2} only needs e_{n-2}
        needed = [E(i)] if i == n - 2 else [E(i), E(i + 1)]
        if any(e not in members for e in needed):
            return s
    return None


def satisfies_condition_b(n: int, members: Iterable[Symbol]) -> bool:
    """Edge-side form of the validity test: a curved edge ``e_j`` has neutral ends ``v_{j-1}, v_j``."""
    members = frozenset(members)
    for j in range(2, n - 1):
        # e_j joins v_{j-1} and v_j; v_1 is never breaking
        if E(j) not in members and (V(j - 1) in members or V(j) in members):
            return False
    return True


@dataclass(frozen=True)
class Code:
    """A validated set of straight-edge and breaking-vertex symbols."""

    complexity: int
    members: frozenset

    def __post_init__(self):
        _check_complexity(self.complexity)
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        n = self.complexity
        for s in self.members:
            if not isinstance(s, tuple) or len(s) != 2:
                raise IndexRangeError(f"not a symbol: {s!r}")
            if not is_admissible(n, s):
                raise IndexRangeError(f"symbol {s} outside S_{n} (indices 2..{n - 2})")
        bad = _vertex_condition_a(n, self.members)
        if bad is not None:
            raise ValidityError(
                f"breaking vertex {bad} requires its adjacent edges to be straight", bad
            )

    def __contains__(self, s):
        return s in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


def validate_code(n: int, members: Iterable[Symbol]) -> Code:
    return Code(n, frozenset(members))


@dataclass(frozen=True)
class EnriquesDiagram:
    code: Code

    @property
    def n(self) -> int:
        return self.code.complexity

    @property
    def members(self) -> frozenset:
        return self.code.members

    def edge_straight(self, i: int) -> bool:
        """Decoration of ``e_i`` for ``1 <= i <= n-1``."""
        n = self.n
        if not 1 <= i <= n - 1:
            raise IndexRangeError(f"edge index {i} outside 1..{n - 1}")
        if i == 1:
            return False
        if i == n - 1:
            return True
        return E(i) in self.code.members

    def vertex_breaking(self, i: int) -> bool:
        """Decoration of ``v_i`` for ``0 <= i <= n-1``."""
        n = self.n
        if not 0 <= i <= n - 1:
            raise IndexRangeError(f"vertex index {i} outside 0..{n - 1}")
        if i < 2 or i == n - 1:
            return False
        return V(i) in self.code.members

    @cached_property
    def edges(self) -> tuple:
        """Straightness of ``e_0 .. e_n``; the out-of-range ends are padded with False."""
        return (False,) + tuple(self.edge_straight(i) for i in range(1, self.n)) + (False,)

    @cached_property
    def vertices(self) -> tuple:
        return tuple(self.vertex_breaking(i) for i in range(self.n))

    @cached_property
    def key(self) -> str:
        return format_diagram(self)

    def __str__(self):
        return self.key

    def __repr__(self):
        return f"EnriquesDiagram({self.key!r})"


def diagram(n: int, members: Iterable[Symbol] = ()) -> EnriquesDiagram:
    """Validated diagram from a complexity and a code; equal inputs return the same object."""
    if not isinstance(members, frozenset):
        members = frozenset(members)
    return _interned(n, members)


@lru_cache(maxsize=1 << 18)
def _interned(n, members):
    d = EnriquesDiagram(validate_code(n, members))
    _assert_decorations(d)
    return d


def _assert_decorations(d):
    # breaking vertex => both adjacent edges straight; curved edge => neutral ends
    for i in range(1, d.n - 1):
        if d.vertex_breaking(i):
            assert d.edge_straight(i) and d.edge_straight(i + 1), d
    for i in range(1, d.n):
        if not d.edge_straight(i):
            assert not d.vertex_breaking(i - 1) and not d.vertex_breaking(i), d


def alpha(n: int) -> EnriquesDiagram:
    """All varying edges curved: the branch ``x^(2n-3) = y^2``."""
    return diagram(n)


def omega(n: int) -> EnriquesDiagram:
    """All varying vertices breaking: the branch ``x^F(n+1) = y^F(n)``."""
    return diagram(n, symbol_set(n))


def pi(n: int) -> EnriquesDiagram:
    """``omega(n)`` with ``v_2`` neutral: the branch ``x^(F(n-2)+F(n)) = y^F(n)``."""
    _check_complexity(n)
    if n < 4:
        raise DomainError("pi(n) needs the vertex v_2, which exists only for n >= 4")
    return diagram(n, set(symbol_set(n)) - {V(2)})


def chi_text(members) -> str:
    return ",".join(str(s) for s in sorted(members))


def format_diagram(d: EnriquesDiagram) -> str:
    return f"n={d.n};chi={chi_text(d.members)}"


def _scan_int(text, pos):
    start = pos
    while pos < len(text) and text[pos] in "0123456789":
        pos += 1
    if pos == start:
        raise ParseError("expected digits", start)
    if text[start] == "0" and pos - start > 1:
        raise ParseError("leading zero in integer", start)
    return int(text[start:pos]), pos


def _expect(text, pos, literal):
    if not text.startswith(literal, pos):
        raise ParseError(f"expected {literal!r}", pos)
    return pos + len(literal)


def parse(text: str) -> EnriquesDiagram:
    """Parse ``n=<int>;chi=<sym>,<sym>...``; symbols may come in any order."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    if not text.isascii():
        bad = next(i for i, c in enumerate(text) if not c.isascii())
        raise ParseError("non-ASCII character", len(text[:bad].encode()))
    pos = _expect(text, 0, "n=")
    n, pos = _scan_int(text, pos)
    pos = _expect(text, pos, ";chi=")
    members = []
    seen = set()
    if pos < len(text):
        while True:
            c = text[pos] if pos < len(text) else ""
            if c == "e":
                kind = Kind.EDGE
            elif c == "v":
                kind = Kind.VERTEX
            else:
                raise ParseError("expected symbol 'e<int>' or 'v<int>'", pos)
            start = pos
            idx, pos = _scan_int(text, pos + 1)
            s = Symbol(kind, idx)
            if s in seen:
                raise ParseError(f"duplicate symbol {s}", start)
            seen.add(s)
            members.append(s)
            if pos == len(text):
                break
            pos = _expect(text, pos, ",")
    return diagram(n, members)
