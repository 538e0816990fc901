"""Koszul models of orthonormal frame bundles and characteristic maps.

For a rank-q bundle over a finite base ring, the frame-bundle model is
base tensor Lambda(u_1, ..., u_umax [, v]): u_i has degree 4i-1 and kills
the i-th Pontrjagin image, v (even q only) has degree q-1 and kills the
Euler image.  The number of u's is (q-1)/2 for odd q and q/2-1 for even q,
matching the primitive generators of the rotation group's cohomology.

The characteristic map from the codimension-q Weil complex sends c_{2j} to
the j-th Pontrjagin image, y_{2j} to u_j, odd-indexed generators to zero,
and (even q, full models) y_q to v times the Euler image; it commutes with
the differentials on generators by construction, which is asserted.

The certificates for the rigid families deliberately drop the Euler
transgression from the model: the classes y_I c_2^k land in the subalgebra
generated by the Pontrjagin data alone, and over (CP^2)^k the Euler
differential would make the whole subalgebra's image exact (the witness is
u_I * v * a_1...a_k, whose differential is u_I * a_1^2...a_k^2 on the nose
because every Pontrjagin image annihilates a_1...a_k).  Nonvanishing is
therefore certified in the Pontrjagin-transgression model, which is the
finite computation the degree-filtration argument reduces to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GeneratorSet, basis_of_degree
from .dga import DegreeMismatch, Differential, NotACocycle
from .linalg import Echelon
from .models import (BundleMap, Factor, ModelRing, canonical_bundle,
                     product_model, sphere_model)
from .weil import VeyIndex, weil_complex
from . import dga


class IndexOutOfRange(ValueError):
    """A twisting index addresses a generator the complex does not have."""


def fiber_primitive_count(q: int) -> int:
    """Number of Pontrjagin transgressions u_i in the rank-q fiber."""
    return (q - 1) // 2 if q % 2 else q // 2 - 1


@dataclass(frozen=True, eq=False)
class FrameModel:
    """Finite Koszul model of the frame bundle of a rank-q bundle."""

    q: int
    base: ModelRing
    bundle: BundleMap | None
    gens: GeneratorSet
    d: Differential
    has_euler_transgression: bool

    def dimension(self) -> int:
        return self.gens.dimension()

    def lift(self, x: Element) -> Element:
        """Re-house a base-ring element inside the model (same poly slots)."""
        if x.gens != self.base.gens:
            raise DegreeMismatch("element does not live over the base ring")
        return Element(self.gens, dict(x.terms))

    def cohomology(self, max_degree: int | None = None):
        return dga.cohomology(self.gens, self.d, max_degree)

    def class_nonzero(self, x: Element) -> bool:
        return dga.class_nonzero(self.gens, self.d, x)


def build_frame_model(base: ModelRing, bundle: BundleMap, q: int,
                      include_euler: bool = True) -> FrameModel:
    """Assemble the Koszul model; differentials vanish on the base."""
    if q < 2:
        raise ValueError("frame models need q >= 2")
    if bundle.ring.gens != base.gens:
        raise DegreeMismatch("bundle data must live over the base ring")
    n_u = fiber_primitive_count(q)
    exterior = [(f"u{i}", 4 * i - 1) for i in range(1, n_u + 1)]
    with_v = q % 2 == 0 and include_euler
    if with_v:
        exterior.append(("v", q - 1))
    gens = GeneratorSet(tuple(exterior), base.gens.poly, base.gens.truncation)

    def lift(x: Element) -> Element:
        return Element(gens, dict(x.terms))

    images = {}
    for i in range(1, n_u + 1):
        img = bundle.p(i)
        if img:
            if img.degree() != 4 * i:
                raise DegreeMismatch(f"p_{i} image has the wrong degree")
            images[f"u{i}"] = lift(img)
    if with_v:
        e = bundle.euler_image()
        if e:
            if e.degree() != q:
                raise DegreeMismatch("Euler image must have degree q")
            images["v"] = lift(e)
    d = Differential(gens, images)
    return FrameModel(q, base, bundle, gens, d, with_v)


class CharacteristicMap:
    """The multiplicative map from the codimension-q Weil complex.

    In a model without the Euler transgression the top even generator y_q
    (even q) has no image; applying the map to an element involving it
    raises.  Everything else is total.
    """

    def __init__(self, model: FrameModel):
        self.model = model
        q = model.q
        self.source_gens, self.source_d = weil_complex(q, framed=True)
        zero = model.gens.zero()
        n_u = fiber_primitive_count(q)

        def lift(x: Element) -> Element:
            return Element(model.gens, dict(x.terms))

        y_images: list[Element | None] = []
        c_images: list[Element] = []
        for i in range(1, q + 1):
            if i % 2 == 1:
                c_images.append(zero)
                continue
            j = i // 2
            img = model.bundle.p(j)
            c_images.append(lift(img) if img else zero)
        for i in range(1, q + 1):
            if i % 2 == 1:
                y_images.append(zero)
            elif i // 2 <= n_u:
                y_images.append(model.gens.generator(f"u{i // 2}"))
            elif q % 2 == 0 and i == q:
                if model.has_euler_transgression:
                    e = lift(model.bundle.euler_image())
                    y_images.append(model.gens.generator("v") * e)
                else:
                    y_images.append(None)
            else:
                raise AssertionError(f"unhoused generator y{i}")
        self.y_images = tuple(y_images)
        self.c_images = tuple(c_images)
        self._check_chain_property()

    def _check_chain_property(self):
        d = self.model.d
        for i, img in enumerate(self.y_images, start=1):
            if img is None:
                continue
            target = self.c_images[i - 1]
            if d(img) != target:
                raise DegreeMismatch(
                    f"map fails to commute with d on y{i}: "
                    f"d(image) = {d(img)}, image of c{i} = {target}")
        for i, img in enumerate(self.c_images, start=1):
            if img and not d(img).is_zero():
                raise DegreeMismatch(f"image of c{i} is not a cocycle")

    def __call__(self, x: Element) -> Element:
        if x.gens != self.source_gens:
            raise DegreeMismatch("element does not live over the Weil complex")
        gens = self.model.gens
        out = gens.zero()
        for (ext, exps), coeff in x.terms.items():
            term = gens.unit().scale(coeff)
            for pos in ext:
                img = self.y_images[pos]
                if img is None:
                    raise IndexOutOfRange(
                        f"y{pos + 1} has no image in a model without the "
                        "Euler transgression")
                term = term * img
                if term.is_zero():
                    break
            else:
                for j, e in enumerate(exps):
                    if not e:
                        continue
                    term = term * self.c_images[j] ** e
                    if term.is_zero():
                        break
            if term:
                out = out + term
        return out


@dataclass(frozen=True)
class CertifiedClass:
    source: str
    image: str
    degree: int | None
    nonzero: bool
    expected_zero: bool = False


@dataclass(frozen=True)
class FrameCertificate:
    q: int
    model_label: str
    model_dimension: int
    classes: tuple[CertifiedClass, ...]
    jointly_independent: bool
    passed: bool


def _certify(model: FrameModel, elements, labels) -> tuple[list[CertifiedClass], bool]:
    """Cocycle check, individual nonvanishing, joint independence mod image."""
    entries = []
    by_degree: dict[int, list[tuple[str, Element]]] = {}
    for label, x in zip(labels, elements):
        if x.is_zero():
            entries.append(CertifiedClass(label, "0", None, False))
            continue
        if not model.d(x).is_zero():
            raise NotACocycle(f"{label} maps to a non-cocycle")
        by_degree.setdefault(x.degree(), []).append((label, x))
    joint = True
    for n in sorted(by_degree):
        basis_n = basis_of_degree(model.gens, n)
        index = {m: i for i, m in enumerate(basis_n)}
        image_stack = Echelon()
        if n > 0:
            for m in basis_of_degree(model.gens, n - 1):
                dm = model.d(Element(model.gens, {m: Fraction(1)}))
                if dm:
                    image_stack.add({index[mm]: c for mm, c in dm.terms.items()})
        joint_stack = Echelon()
        for row in (dict(image_stack.pivots[c]) for c in image_stack.pivot_columns()):
            joint_stack.add(row)
        for label, x in by_degree[n]:
            coords = {index[m]: c for m, c in x.terms.items()}
            nonzero = bool(image_stack.reduce(coords))
            if joint_stack.add(coords) is None:
                joint = False
            entries.append(CertifiedClass(label, str(x), n, nonzero))
    order = {lbl: k for k, lbl in enumerate(labels)}
    entries.sort(key=lambda e: order[e.source])
    return entries, joint


def projective_base_model(k: int, include_euler: bool = False) -> FrameModel:
    """Frame model of the canonical rank-2k sum over (CP^2)^k."""
    if k < 2:
        raise ValueError("the projective family starts at k = 2")
    base = product_model([Factor("cp2", 1)] * k)
    return build_frame_model(base, canonical_bundle(base), 2 * k,
                             include_euler=include_euler)


def certify_projective_family(k: int) -> FrameCertificate:
    """Rigid classes y_I c_2^k over (CP^2)^k, q = 2k: nonzero and independent.

    I runs over index sets (2 = 2i_1 < 2i_2 < ...) within the fiber
    primitives; the images are p_1-image^k times u_{i_1}...u_{i_l}.
    """
    model = projective_base_model(k)
    q = 2 * k
    delta = CharacteristicMap(model)
    gens_w = delta.source_gens
    n_u = fiber_primitive_count(q)
    index_sets = []

    def extend(start: int, chosen: list[int]):
        index_sets.append(tuple(chosen))
        for i in range(start, n_u + 1):
            chosen.append(i)
            extend(i + 1, chosen)
            chosen.pop()

    extend(2, [1])
    elements = []
    labels = []
    for iset in sorted(index_sets):
        v = VeyIndex(tuple(2 * i for i in iset), (2,) * k)
        labels.append(v.label())
        elements.append(delta(v.element(gens_w)))
    entries, joint = _certify(model, elements, labels)
    passed = joint and all(e.nonzero for e in entries)
    return FrameCertificate(q, model.base.label, model.dimension(),
                            tuple(entries), joint, passed)


def sphere_base_model(k: int) -> FrameModel:
    """Frame model over S^{4k} for q = 4k-2, with p_k normalized to the volume."""
    if k < 2:
        raise ValueError("the sphere family starts at k = 2")
    q = 4 * k - 2
    base = sphere_model(k)
    gen = base.gens.generator("s")
    bundle = BundleMap(base, q, {k: gen}, euler=None)
    return build_frame_model(base, bundle, q, include_euler=True)


def certify_sphere_family(k: int) -> FrameCertificate:
    """Rigid classes y_I c_{2k} over S^{4k}, q = 4k-2, plus the vanishing check.

    I runs over (2k = 2i_1 < 2i_2 < ...); images are s tensor u_{i_1}... .
    The class y_2 c_2^{2k-1} maps to zero here (p_1 pulls back to zero),
    which is reported as an expected-zero entry.
    """
    model = sphere_base_model(k)
    q = 4 * k - 2
    delta = CharacteristicMap(model)
    gens_w = delta.source_gens
    n_u = fiber_primitive_count(q)
    index_sets = []

    def extend(start: int, chosen: list[int]):
        index_sets.append(tuple(chosen))
        for i in range(start, n_u + 1):
            chosen.append(i)
            extend(i + 1, chosen)
            chosen.pop()

    extend(k + 1, [k])
    elements = []
    labels = []
    for iset in sorted(index_sets):
        v = VeyIndex(tuple(2 * i for i in iset), (2 * k,))
        labels.append(v.label())
        elements.append(delta(v.element(gens_w)))
    entries, joint = _certify(model, elements, labels)
    vanishing = VeyIndex((2,), (2,) * (2 * k - 1))
    vanished = delta(vanishing.element(gens_w))
    entries = tuple(entries) + (CertifiedClass(vanishing.label(), str(vanished),
                                               None, not vanished.is_zero(),
                                               expected_zero=True),)
    passed = (joint and all(e.nonzero for e in entries if not e.expected_zero)
              and all(not e.nonzero for e in entries if e.expected_zero))
    return FrameCertificate(q, model.base.label, model.dimension(),
                            entries, joint, passed)


def permanence_family(I: tuple[int, ...], J: tuple[int, ...], q: int,
                      r_list: tuple[int, ...]) -> FrameCertificate:
    """Twisted families over SO(q) x S^n from one nonvanishing class.

    Given a Vey index (I, J) of degree n with a designated nonzero
    evaluation on S^n, each subset R of ``r_list`` yields the class
    Tp_R tensor the sphere class, living in the zero-differential tensor
    model Lambda(fiber primitives) tensor Q[chi]/chi^2.  Preconditions:
    r strictly increasing, last(I) < 2r, 2r <= q, and u_r present in the
    fiber (the twist needs the corresponding primitive).
    """
    seed = VeyIndex(tuple(I), tuple(J))
    if not seed.is_member(q):
        raise ValueError(f"{seed.label()} is not a basis member in codimension {q}")
    r_list = tuple(r_list)
    if any(r_list[a] >= r_list[a + 1] for a in range(len(r_list) - 1)):
        raise ValueError("twisting indices must be strictly increasing")
    n_u = fiber_primitive_count(q)
    i_last = seed.I[-1]
    for r in r_list:
        if 2 * r > q:
            raise IndexOutOfRange(f"y{2 * r} does not exist in codimension {q}")
        if r > n_u:
            raise IndexOutOfRange(f"the fiber of SO({q}) has no primitive Tp_{r}")
        if not i_last < 2 * r:
            raise ValueError(f"twist index 2r = {2 * r} must exceed i_last = {i_last}")
    n = seed.degree
    exterior = [(f"u{i}", 4 * i - 1) for i in range(1, n_u + 1)]
    if q % 2 == 0:
        exterior.append(("v", q - 1))
    if n % 2 == 1:
        gens = GeneratorSet(tuple(exterior) + (("x", n),), ())
        chi = gens.generator("x")
    else:
        gens = GeneratorSet(tuple(exterior), (("x", n, 1),))
        chi = gens.generator("x")
    d = Differential(gens, {})
    model = FrameModel(q, ModelRing(gens, None, f"SO({q}) x S^{n}"),
                       None, gens, d, q % 2 == 0)
    subsets: list[tuple[int, ...]] = []

    def extend(start: int, chosen: list[int]):
        subsets.append(tuple(chosen))
        for idx in range(start, len(r_list)):
            chosen.append(r_list[idx])
            extend(idx + 1, chosen)
            chosen.pop()

    extend(0, [])
    elements = []
    labels = []
    for R in sorted(subsets):
        elem = chi
        for r in R:
            elem = gens.generator(f"u{r}") * elem
        twisted = "*".join([f"y{2 * r}" for r in R])
        labels.append(seed.label() if not R else
                      f"{seed.label()} twisted by {twisted}")
        elements.append(elem)
    entries, joint = _certify(model, elements, labels)
    passed = joint and all(e.nonzero for e in entries)
    return FrameCertificate(q, model.base.label, gens.dimension(),
                            tuple(entries), joint, passed)
