"""Differentials and exact cohomology of finite graded-commutative complexes.

A differential is given on generators and extended by the graded Leibniz
rule; ``d(d(g)) = 0`` is checked on every generator at construction.  Degree
slices are finite thanks to truncation, so cohomology reduces to exact
rank computations degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GeneratorSet, Mono, basis_of_degree
from .linalg import Echelon, IntegerEliminator, kernel_from_columns


class DegreeMismatch(ValueError):
    """A generator image fails the degree-(+1) contract."""


class NotACocycle(ValueError):
    """An operation requiring a cocycle received a non-cocycle."""


class Differential:
    """Degree +1 derivation determined by its values on generators.

    ``images`` maps generator names to elements; omitted names get zero.
    Each image must be homogeneous of degree ``deg(gen) + 1`` (or zero),
    and the composite ``d(d(g))`` must vanish for every generator.
    """

    __slots__ = ("gens", "ext_images", "poly_images")

    def __init__(self, gens: GeneratorSet, images: dict[str, Element] | None = None):
        self.gens = gens
        images = dict(images or {})
        zero = gens.zero()

        def take(name: str, degree: int) -> Element:
            img = images.pop(name, None)
            if img is None or img.is_zero():
                return zero
            if img.gens != gens:
                raise DegreeMismatch(f"image of {name} lives over a different generator set")
            if img.degree() != degree + 1:
                raise DegreeMismatch(
                    f"d({name}) must have degree {degree + 1}, got {img.degree()}")
            return img

        self.ext_images = tuple(take(n, d) for n, d in gens.exterior)
        self.poly_images = tuple(take(n, d) for n, d, _ in gens.poly)
        if images:
            raise KeyError(f"images given for unknown generators: {sorted(images)}")
        for name, img in zip([n for n, _ in gens.exterior], self.ext_images):
            if not self(img).is_zero():
                raise ValueError(f"d(d(g)) != 0 on generator {name}")
        for name, img in zip([n for n, _, _ in gens.poly], self.poly_images):
            if not self(img).is_zero():
                raise ValueError(f"d(d(g)) != 0 on generator {name}")

    def __call__(self, x: Element) -> Element:
        """Apply the differential via the graded Leibniz rule, term by term."""
        gens = self.gens
        out = gens.zero()
        for (ext, exps), coeff in x.terms.items():
            for pos, idx in enumerate(ext):
                img = self.ext_images[idx]
                if img.is_zero():
                    continue
                c = -coeff if pos & 1 else coeff
                rest = Element(gens, {(ext[:pos] + ext[pos + 1:], exps): c})
                out = out + rest * img
            sign = -1 if len(ext) & 1 else 1
            for j, e in enumerate(exps):
                if not e:
                    continue
                img = self.poly_images[j]
                if img.is_zero():
                    continue
                lowered = exps[:j] + (e - 1,) + exps[j + 1:]
                rest = Element(gens, {(ext, lowered): coeff * sign * e})
                out = out + rest * img
        return out

    def is_square_zero(self) -> bool:
        """True iff d(d(g)) = 0 for every generator (always, post-construction)."""
        return all(self(img).is_zero() for img in self.ext_images + self.poly_images)


@dataclass(frozen=True)
class DegreeSlice:
    chain_dim: int
    dim: int
    representatives: tuple[Element, ...]


@dataclass(frozen=True)
class CohomologyReport:
    max_degree: int
    by_degree: dict[int, DegreeSlice]

    def dims(self) -> dict[int, int]:
        return {n: s.dim for n, s in self.by_degree.items() if s.dim}

    def euler_characteristics(self) -> tuple[int, int]:
        chain = sum((-1) ** n * s.chain_dim for n, s in self.by_degree.items())
        cohom = sum((-1) ** n * s.dim for n, s in self.by_degree.items())
        return chain, cohom


def _image_columns(gens: GeneratorSet, d: Differential, n: int):
    """Coordinates of d(m) for the degree-n basis, over the degree-(n+1) basis."""
    basis_n = basis_of_degree(gens, n)
    index = {m: i for i, m in enumerate(basis_of_degree(gens, n + 1))}
    cols = []
    for m in basis_n:
        dm = d(Element(gens, {m: Fraction(1)}))
        cols.append({index[mm]: c for mm, c in dm.terms.items()})
    return basis_n, cols


def cohomology(gens: GeneratorSet, d: Differential,
               max_degree: int | None = None) -> CohomologyReport:
    """Exact cohomology dimensions and representatives up to ``max_degree``.

    ``max_degree`` defaults to the top degree of the finite complex.
    Representatives are reduced-echelon kernel vectors not in the image,
    chosen with a deterministic pivot rule, so output is reproducible.
    """
    if max_degree is None:
        max_degree = gens.top_degree()
        if max_degree is None:
            raise ValueError("complex is infinite; pass an explicit max_degree")
    by_degree: dict[int, DegreeSlice] = {}
    prev_image: list[dict] = []
    for n in range(max_degree + 1):
        basis_n, cols = _image_columns(gens, d, n)
        chain_dim = len(basis_n)
        kernel = kernel_from_columns(cols, chain_dim)
        stack = Echelon()
        for row in prev_image:
            stack.add(row)
        image_rank = stack.rank
        reps = []
        for vec in kernel:
            residual = stack.add(vec)
            if residual is not None:
                reps.append(Element(gens, {basis_n[j]: c for j, c in residual.items()}))
        by_degree[n] = DegreeSlice(chain_dim, len(kernel) - image_rank, tuple(reps))
        prev_image = [c for c in cols if c]
    return CohomologyReport(max_degree, by_degree)


def class_nonzero(gens: GeneratorSet, d: Differential, x: Element) -> bool:
    """True iff the cocycle ``x`` is not a coboundary (exact rank test)."""
    if x.is_zero():
        return False
    if not d(x).is_zero():
        raise NotACocycle(f"d(x) = {d(x)} != 0")
    n = x.degree()
    basis_n = basis_of_degree(gens, n)
    index = {m: i for i, m in enumerate(basis_n)}
    elim = IntegerEliminator()
    if n > 0:
        below = basis_of_degree(gens, n - 1)
        for m in below:
            dm = d(Element(gens, {m: Fraction(1)}))
            if dm.is_zero():
                continue
            elim.add({index[mm]: c for mm, c in dm.terms.items()})
    return elim.add({index[m]: c for m, c in x.terms.items()})
