"""Truncated Weil complexes and the combinatorics of secondary classes.

``weil_complex(q, framed=True)`` builds the codimension-q complex: exterior
generators y_i of degree 2i-1 (all i when framed, odd i only otherwise),
polynomial generators c_i of degree 2i, polynomial degrees above 2q killed,
and d(y_i) = c_i.

The Vey basis of the framed complex is described purely combinatorially by
:class:`VeyIndex`; rigidity is the index inequality i_1 + sum(J) >= q + 2.
The spherically supported rigid families in even codimension are enumerated
by :func:`spherical_rigid_classes`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, GeneratorSet
from .dga import Differential


class OddCodimension(ValueError):
    """Spherical rigid families are only defined for even codimension >= 4."""


def weil_complex(q: int, framed: bool = True) -> tuple[GeneratorSet, Differential]:
    """The codimension-q complex (generators, differential).

    Framed: Lambda(y_1..y_q) tensor Q[c_1..c_q], polynomial degree <= 2q.
    Unframed: only odd-indexed y_i survive (largest odd index <= q).
    """
    if q < 1:
        raise ValueError("codimension must be a positive integer")
    ys = range(1, q + 1) if framed else range(1, q + 1, 2)
    exterior = tuple((f"y{i}", 2 * i - 1) for i in ys)
    poly = tuple((f"c{i}", 2 * i, None) for i in range(1, q + 1))
    gens = GeneratorSet(exterior, poly, truncation=2 * q)
    images = {f"y{i}": gens.generator(f"c{i}") for i in ys}
    return gens, Differential(gens, images)


def weil_top_degree(q: int) -> int:
    return q * q + 2 * q


@dataclass(frozen=True, order=True)
class VeyIndex:
    """The pair (I, J) indexing a monomial y_I c_J.

    I is strictly increasing, J nondecreasing, entries in [1, q].  The
    empty pair stands for the unit class and is never a basis member.
    """

    I: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self):
        if any(self.I[k] >= self.I[k + 1] for k in range(len(self.I) - 1)):
            raise ValueError("I must be strictly increasing")
        if any(self.J[k] > self.J[k + 1] for k in range(len(self.J) - 1)):
            raise ValueError("J must be nondecreasing")
        if any(i < 1 for i in self.I) or any(j < 1 for j in self.J):
            raise ValueError("indices start at 1")

    @property
    def degree(self) -> int:
        return sum(2 * i - 1 for i in self.I) + 2 * sum(self.J)

    def is_member(self, q: int) -> bool:
        """Basis membership: sum(J) <= q, i_1 + sum(J) >= q+1, i_1 <= j_1."""
        if not self.I:
            return False
        if any(i > q for i in self.I) or any(j > q for j in self.J):
            return False
        sj = sum(self.J)
        if sj > q:
            return False
        if self.I[0] + sj < q + 1:
            return False
        if self.J and self.I[0] > self.J[0]:
            return False
        return True

    def is_rigid(self, q: int) -> bool:
        """Rigidity: i_1 + sum(J) >= q + 2 (on top of membership)."""
        return self.is_member(q) and self.I[0] + sum(self.J) >= q + 2

    def label(self) -> str:
        parts = [f"y{i}" for i in self.I]
        j = 0
        while j < len(self.J):
            k = j
            while k < len(self.J) and self.J[k] == self.J[j]:
                k += 1
            e = k - j
            parts.append(f"c{self.J[j]}" if e == 1 else f"c{self.J[j]}^{e}")
            j = k
        return "*".join(parts) if parts else "1"

    def element(self, gens: GeneratorSet) -> Element:
        """The monomial y_I c_J over a framed complex's generators."""
        ext = tuple(i - 1 for i in self.I)
        exps = [0] * gens.n_poly
        for j in self.J:
            exps[j - 1] += 1
        return gens.monomial(ext, tuple(exps))


def is_rigid(v: VeyIndex, q: int) -> bool:
    if not v.is_member(q):
        raise ValueError(f"{v.label()} is not a basis member in codimension {q}")
    return v.I[0] + sum(v.J) >= q + 2


def _increasing_tuples(q: int):
    """Nonempty strictly increasing tuples over [1, q], lexicographic."""
    def rec(start: int, chosen: list[int]):
        for i in range(start, q + 1):
            chosen.append(i)
            yield tuple(chosen)
            yield from rec(i + 1, chosen)
            chosen.pop()
    yield from rec(1, [])


def _nondecreasing_tuples(q: int):
    """Nondecreasing tuples over [1, q] with sum <= q (incl. empty), lexicographic."""
    def rec(lo: int, budget: int, chosen: list[int]):
        yield tuple(chosen)
        for j in range(lo, budget + 1):
            chosen.append(j)
            yield from rec(j, budget - j, chosen)
            chosen.pop()
    yield from rec(1, q, [])


def vey_basis(q: int, min_degree: int | None = None,
              max_degree: int | None = None) -> list[VeyIndex]:
    """All Vey indices for codimension q, ordered by (I, J) lexicographically.

    The unit class is excluded; report it separately when counting degree 0.
    """
    if q < 1:
        raise ValueError("codimension must be a positive integer")
    js = list(_nondecreasing_tuples(q))
    out = []
    for I in _increasing_tuples(q):
        need = q + 1 - I[0]
        for J in js:
            if sum(J) < need:
                continue
            v = VeyIndex(I, J)
            if not v.is_member(q):
                continue
            deg = v.degree
            if min_degree is not None and deg < min_degree:
                continue
            if max_degree is not None and deg > max_degree:
                continue
            out.append(v)
    return out


def vey_counts_by_degree(q: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for v in vey_basis(q):
        counts[v.degree] = counts.get(v.degree, 0) + 1
    return counts


def godbillon_vey(q: int) -> VeyIndex:
    """The class y_1 c_1^q, the archetypal non-rigid secondary class."""
    return VeyIndex((1,), (1,) * q)


@dataclass(frozen=True)
class RigidFamilyEntry:
    """One spherically supported rigid class in even codimension."""

    vey: VeyIndex
    degree: int
    family: str  # "A": y_2 y_K c_2^{q/2};  "B": y_{2k} c_{2k}

    def label(self) -> str:
        return self.vey.label()


def spherical_rigid_classes(q: int) -> list[RigidFamilyEntry]:
    """The rigid classes supported on spheres, for even codimension q >= 4.

    Family A: y_2 y_K c_2^m with m = q/2 and K running over all subsets
    (including the empty one) of {4, 6, ..., 2B}, B = floor((q+2)/4).
    Family B (only when q = 2 mod 4): y_{2k} c_{2k} with k = (q+2)/4.
    Every entry is checked against basis membership and rigidity.
    """
    if q % 2 == 1 or q < 4:
        raise OddCodimension("families are defined for even codimension >= 4")
    m = q // 2
    top = (q + 2) // 4
    pool = [2 * k for k in range(2, top + 1)]
    entries: list[RigidFamilyEntry] = []

    def subsets(start: int, chosen: list[int]):
        yield tuple(chosen)
        for idx in range(start, len(pool)):
            chosen.append(pool[idx])
            yield from subsets(idx + 1, chosen)
            chosen.pop()

    for K in sorted(subsets(0, [])):
        v = VeyIndex((2,) + K, (2,) * m)
        if not v.is_rigid(q):
            raise AssertionError(f"family A produced a non-rigid index {v}")
        entries.append(RigidFamilyEntry(v, v.degree, "A"))
    if q % 4 == 2:
        k = (q + 2) // 4
        v = VeyIndex((2 * k,), (2 * k,))
        if not v.is_rigid(q):
            raise AssertionError(f"family B produced a non-rigid index {v}")
        entries.append(RigidFamilyEntry(v, v.degree, "B"))
    return entries


def family_a_size(q: int) -> int:
    """|family A| = 2^(B-1) with B = floor((q+2)/4)."""
    return len([e for e in spherical_rigid_classes(q) if e.family == "A"])


@dataclass(frozen=True)
class RigidCountRow:
    q: int
    rigid_vey: int
    spherical: int
    degrees: tuple[int, ...]


def rigid_count_table(q_max: int) -> list[RigidCountRow]:
    """Exact rigid-class counts per codimension, by exhaustive enumeration.

    Exhaustive over the Vey index set, so intended for desk-scale q; the
    spherical column uses the closed-form families and stays cheap.
    """
    if q_max < 1:
        raise ValueError("q_max must be positive")
    rows = []
    for q in range(1, q_max + 1):
        n_rigid = sum(1 for v in vey_basis(q) if v.is_rigid(q))
        if q % 2 == 0 and q >= 4:
            fam = spherical_rigid_classes(q)
            rows.append(RigidCountRow(q, n_rigid, len(fam),
                                      tuple(e.degree for e in fam)))
        else:
            rows.append(RigidCountRow(q, n_rigid, 0, ()))
    return rows
