"""Exact graded-commutative algebra over the rationals.

Everything in this package lives over a fixed :class:`GeneratorSet`: an
ordered family of odd-degree exterior generators (whose squares vanish)
and even-degree polynomial generators, together with an optional bound on
the polynomial-part degree and optional per-generator exponent caps.  The
degree bound and the caps cut out the only ideals we ever quotient by,
which keeps every ring a finite combinatorial object.

A monomial is a pair ``(ext, exps)``: a strictly increasing tuple of
positions into the exterior generator list, and a full-length exponent
tuple over the polynomial generators.  Products carry the Koszul sign,
the parity of the permutation sorting the concatenated exterior index
sequences; even-degree generators commute with everything, so no other
sign ever appears.

Coefficients are :class:`fractions.Fraction` throughout.  No floating
point is used anywhere; equality of elements is structural equality of
their canonical term maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Mono = tuple[tuple[int, ...], tuple[int, ...]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GeneratorMismatch(ValueError):
    """Two values over different generator sets were combined."""


def merge_exterior(a: tuple[int, ...], b: tuple[int, ...]):
    """Merge strictly increasing index tuples, counting transpositions.

    Returns ``(parity, merged)`` with parity in {0, 1}, or ``None`` when an
    index repeats (odd generators square to zero).  The parity is the number
    of transpositions, mod 2, needed to sort the concatenation ``a + b``.
    """
    if not a:
        return 0, b
    if not b:
        return 0, a
    merged = []
    swaps = 0
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        x, y = a[i], b[j]
        if x == y:
            return None
        if x < y:
            merged.append(x)
            i += 1
        else:
            # y jumps over the remaining entries of a
            merged.append(y)
            swaps += na - i
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return swaps & 1, tuple(merged)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a free graded-commutative algebra with truncation.

    ``exterior``: tuple of ``(name, degree)`` with odd degrees.
    ``poly``: tuple of ``(name, degree, cap)`` with even degrees; ``cap``
    is the largest allowed exponent (``None`` = unbounded).
    ``truncation``: monomials whose polynomial-part degree exceeds this
    bound are zero (0 = no bound).  Exterior degrees never count against
    the truncation.

    The generator order is fixed at construction and is the canonical
    sort order used for all sign computations.
    """

    exterior: tuple[tuple[str, int], ...]
    poly: tuple[tuple[str, int, int | None], ...]
    truncation: int = 0

    def __post_init__(self):
        names = [n for n, _ in self.exterior] + [n for n, _, _ in self.poly]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for name, deg in self.exterior:
            if deg <= 0 or deg % 2 == 0:
                raise ValueError(f"exterior generator {name} must have odd positive degree")
        for name, deg, cap in self.poly:
            if deg <= 0 or deg % 2 == 1:
                raise ValueError(f"polynomial generator {name} must have even positive degree")
            if cap is not None and cap < 0:
                raise ValueError(f"cap for {name} must be nonnegative")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")

    # -- basic queries -------------------------------------------------

    @property
    def n_exterior(self) -> int:
        return len(self.exterior)

    @property
    def n_poly(self) -> int:
        return len(self.poly)

    def unit_mono(self) -> Mono:
        return ((), (0,) * self.n_poly)

    def poly_degree(self, exps: tuple[int, ...]) -> int:
        return sum(e * self.poly[j][1] for j, e in enumerate(exps) if e)

    def mono_degree(self, m: Mono) -> int:
        ext, exps = m
        return sum(self.exterior[i][1] for i in ext) + self.poly_degree(exps)

    def mono_valid(self, m: Mono) -> bool:
        ext, exps = m
        if len(exps) != self.n_poly:
            return False
        if any(i < 0 or i >= self.n_exterior for i in ext):
            return False
        if any(ext[i] >= ext[i + 1] for i in range(len(ext) - 1)):
            return False
        for e, (_, _, cap) in zip(exps, self.poly):
            if e < 0 or (cap is not None and e > cap):
                return False
        if self.truncation and self.poly_degree(exps) > self.truncation:
            return False
        return True

    # -- multiplication ------------------------------------------------

    def mono_mul(self, a: Mono, b: Mono):
        """Product of two monomials: ``(sign, mono)`` or ``None`` if zero."""
        merged = merge_exterior(a[0], b[0])
        if merged is None:
            return None
        parity, ext = merged
        exps = tuple(x + y for x, y in zip(a[1], b[1]))
        for e, (_, _, cap) in zip(exps, self.poly):
            if cap is not None and e > cap:
                return None
        if self.truncation and self.poly_degree(exps) > self.truncation:
            return None
        return (-1 if parity else 1), (ext, exps)

    # -- element constructors -------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def unit(self) -> "Element":
        return Element(self, {self.unit_mono(): _ONE})

    def generator(self, name: str) -> "Element":
        """The named generator as an element."""
        for i, (n, _) in enumerate(self.exterior):
            if n == name:
                return Element(self, {((i,), (0,) * self.n_poly): _ONE})
        for j, (n, _, _) in enumerate(self.poly):
            if n == name:
                exps = tuple(1 if k == j else 0 for k in range(self.n_poly))
                return Element(self, {((), exps): _ONE})
        raise KeyError(f"no generator named {name!r}")

    def monomial(self, ext: tuple[int, ...], exps: tuple[int, ...],
                 coeff=_ONE) -> "Element":
        m = (tuple(ext), tuple(exps))
        if not self.mono_valid(m):
            raise ValueError(f"invalid monomial {m} over this generator set")
        return Element(self, {m: Fraction(coeff)})

    # -- counting and printing -------------------------------------------

    def dimension(self) -> int | None:
        """Total number of monomials, or None when infinite."""
        n_poly = count_poly_monomials(self)
        if n_poly is None:
            return None
        return (1 << self.n_exterior) * n_poly

    def top_degree(self) -> int | None:
        """Largest degree of a nonzero monomial, or None when unbounded."""
        ext_top = sum(d for _, d in self.exterior)
        if not self.poly:
            return ext_top
        if self.truncation:
            capped = _max_poly_degree_capped(self)
            poly_top = self.truncation if capped is None else min(self.truncation, capped)
        else:
            capped = _max_poly_degree_capped(self)
            if capped is None:
                return None
            poly_top = capped
        return ext_top + poly_top

    def mono_str(self, m: Mono) -> str:
        ext, exps = m
        parts = [self.exterior[i][0] for i in ext]
        for (name, _, _), e in zip(self.poly, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _max_poly_degree_capped(gens: GeneratorSet) -> int | None:
    total = 0
    for _, deg, cap in gens.poly:
        if cap is None:
            return None
        total += deg * cap
    return total


@lru_cache(maxsize=None)
def count_poly_monomials(gens: GeneratorSet) -> int | None:
    """Number of polynomial monomials respecting caps and truncation.

    Counted without enumeration so dimension guards stay cheap.  Returns
    None when the count is infinite (some generator unbounded and no
    truncation).
    """
    bound = gens.truncation
    if not bound:
        if any(cap is None for _, _, cap in gens.poly):
            return None if gens.poly else 1
        bound = _max_poly_degree_capped(gens)
        if bound is None:
            return None
    # ways[d] = number of exponent vectors of polynomial degree exactly d
    ways = [0] * (bound + 1)
    ways[0] = 1
    for _, deg, cap in gens.poly:
        nxt = [0] * (bound + 1)
        emax_global = bound // deg if cap is None else cap
        for d in range(bound + 1):
            if not ways[d]:
                continue
            emax = min(emax_global, (bound - d) // deg)
            for e in range(emax + 1):
                nxt[d + e * deg] += ways[d]
        ways = nxt
    return sum(ways)


@lru_cache(maxsize=None)
def basis_of_degree(gens: GeneratorSet, n: int) -> tuple[Mono, ...]:
    """All monomials of total degree ``n`` in canonical order.

    Exterior index tuples run lexicographically, and for each the
    polynomial exponent tuples run lexicographically.
    """
    if n < 0:
        return ()
    out: list[Mono] = []
    ext_degs = [d for _, d in gens.exterior]

    def poly_parts(target: int):
        if gens.truncation and target > gens.truncation:
            return
        def rec(j: int, remaining: int):
            if j == gens.n_poly:
                if remaining == 0:
                    yield ()
                return
            _, deg, cap = gens.poly[j]
            emax = remaining // deg
            if cap is not None:
                emax = min(emax, cap)
            for e in range(emax + 1):
                for rest in rec(j + 1, remaining - e * deg):
                    yield (e,) + rest
        yield from rec(0, target)

    def subsets(start: int, chosen: list[int], deg_so_far: int):
        target = n - deg_so_far
        if target >= 0:
            ext = tuple(chosen)
            for exps in poly_parts(target):
                out.append((ext, exps))
        for i in range(start, gens.n_exterior):
            d = deg_so_far + ext_degs[i]
            if d > n:
                continue
            chosen.append(i)
            subsets(i + 1, chosen, d)
            chosen.pop()

    subsets(0, [], 0)
    return tuple(out)


class Element:
    """Sparse rational linear combination of monomials, in canonical form.

    Canonical means: no stored zero coefficients, so two elements are equal
    iff their term maps are equal.  Elements are immutable by convention
    (operations always build new ones) and safe to share across threads.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: dict[Mono, Fraction] | None = None):
        self.gens = gens
        clean: dict[Mono, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Degree of a homogeneous nonzero element."""
        degs = {self.gens.mono_degree(m) for m in self.terms}
        if not degs:
            raise ValueError("the zero element has no degree")
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.gens.mono_degree(m) for m in self.terms}) <= 1

    def coefficient(self, m: Mono) -> Fraction:
        return self.terms.get(m, _ZERO)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Element"):
        if self.gens != other.gens:
            raise GeneratorMismatch("elements live over different generator sets")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element(self.gens, out)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _ZERO) - c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element(self.gens, out)

    def __neg__(self) -> "Element":
        return Element(self.gens, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = Fraction(c)
        if not c:
            return Element(self.gens, {})
        return Element(self.gens, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            out: dict[Mono, Fraction] = {}
            mono_mul = self.gens.mono_mul
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    r = mono_mul(ma, mb)
                    if r is None:
                        continue
                    s, m = r
                    v = out.get(m, _ZERO) + (ca * cb if s > 0 else -(ca * cb))
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
            return Element(self.gens, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.gens.unit()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.gens == other.gens
                and self.terms == other.terms)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda t: (self.gens.mono_degree(t[0]), t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            s = self.gens.mono_str(m)
            if s == "1":
                body = str(c)
            elif c == 1:
                body = s
            elif c == -1:
                body = f"-{s}"
            else:
                body = f"{c}*{s}"
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Element({self})"
