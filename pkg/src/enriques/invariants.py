"""Proximities, multiplicity sequences and Milnor numbers of diagrams.

Two multiplicity engines are kept on purpose and must agree:

* :func:`multiplicities_by_paths` walks forward from each vertex along the
  maximal straight path starting right after it;
* :func:`multiplicities_by_proximity` sums over the point-side proximity
  sets, which are found by walking *backward* from each satellite point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from enriques.core import DomainError, EnriquesDiagram, chi_text


@dataclass(frozen=True)
class ProximityStructure:
    """For each point ``P_k`` the indices of the earlier points it is proximate to.

    ``proximate_to[0]`` is empty; every other entry has one element (free
    point) or two (satellite point).
    """

    n: int
    proximate_to: tuple

    def is_satellite(self, k: int) -> bool:
        return len(self.proximate_to[k]) == 2

    def points_proximate_to(self, i: int) -> list[int]:
        return [k for k in range(i + 1, self.n) if i in self.proximate_to[k]]


@dataclass(frozen=True)
class MultiplicityProfile:
    n: int
    chi: str
    sequence: tuple
    milnor: int

    @property
    def initial(self) -> int:
        return self.sequence[0]

    def to_dict(self) -> dict:
        return {"n": self.n, "chi": self.chi, "m": list(self.sequence), "m0": self.initial,
                "milnor": self.milnor}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def path_end(d: EnriquesDiagram, i: int) -> int:
    """Last index ``j`` of the points proximate to ``P_i`` (they are ``P_{i+1} .. P_j``).

    ``j > i+1`` exactly when a maximal straight path ``[v_{i+1} v_j]`` starts at
    ``v_{i+1}``: edge ``i+2`` is straight and the straight run cannot be
    continued backward across ``v_{i+1}``.
    """
    n = d.n
    edges, breaking = d.edges, d.vertices
    if i + 2 > n - 1 or not edges[i + 2]:
        return i + 1
    if edges[i + 1] and not breaking[i + 1]:
        return i + 1
    j = i + 2
    while j + 1 <= n - 1 and edges[j + 1] and not breaking[j]:
        j += 1
    return j


def proximity(d: EnriquesDiagram) -> ProximityStructure:
    """Point-side proximities, read off by walking backward from each point."""
    n = d.n
    edges, breaking = d.edges, d.vertices
    out = [frozenset()]
    for k in range(1, n):
        if not edges[k]:
            out.append(frozenset({k - 1}))
            continue
        # start of the maximal straight path through e_k
        a = k - 1
        while edges[a] and not breaking[a]:
            a -= 1
        out.append(frozenset({k - 1, a - 1}))
    return ProximityStructure(n, tuple(out))


def multiplicities_by_paths(d: EnriquesDiagram) -> tuple:
    n = d.n
    m = [0] * n
    m[n - 1] = 1
    for i in range(n - 2, -1, -1):
        m[i] = sum(m[i + 1 : path_end(d, i) + 1])
    return tuple(m)


def multiplicities_by_proximity(d: EnriquesDiagram) -> tuple:
    prox = proximity(d)
    n = d.n
    m = [0] * n
    m[n - 1] = 1
    for k in range(n - 1, 0, -1):
        # m_k is final once every later point has been pushed back
        if k < n - 1:
            assert m[k] > 0
        for i in prox.proximate_to[k]:
            m[i] += m[k]
    return tuple(m)


def milnor_from_sequence(seq) -> int:
    return sum(m * (m - 1) for m in seq)


def multiplicity_sequence(d: EnriquesDiagram) -> MultiplicityProfile:
    seq = multiplicities_by_paths(d)
    return MultiplicityProfile(d.n, chi_text(d.members), seq, milnor_from_sequence(seq))


def milnor(d: EnriquesDiagram) -> int:
    return milnor_from_sequence(multiplicities_by_paths(d))


def initial_multiplicity(d: EnriquesDiagram) -> int:
    return multiplicities_by_paths(d)[0]


def milnor_torus(a: int, b: int) -> int:
    """Milnor number of ``x^a - y^b = 0`` for coprime positive ``a, b``."""
    if a < 1 or b < 1:
        raise DomainError(f"exponents must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise DomainError(f"exponents must be coprime, got ({a}, {b})")
    return (a - 1) * (b - 1)


def satellite_run_count(d: EnriquesDiagram) -> int:
    """Number of maximal runs of consecutive satellite points among ``P_1 .. P_{n-1}``."""
    runs = 0
    prev = False
    for i in range(1, d.n):
        cur = d.edge_straight(i)
        if cur and not prev:
            runs += 1
        prev = cur
    return runs
