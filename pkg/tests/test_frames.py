"""Frame-bundle Koszul models, characteristic maps, and certificates."""

import random
from fractions import Fraction

import pytest

from secclasses.dga import DegreeMismatch
from secclasses.frames import (CharacteristicMap, IndexOutOfRange,
                               build_frame_model, certify_projective_family,
                               certify_sphere_family, fiber_primitive_count,
                               permanence_family, projective_base_model,
                               sphere_base_model)
from secclasses.models import (BundleMap, Factor, canonical_bundle, cp2,
                               product_model, sphere_model)
from secclasses.weil import VeyIndex


def test_fiber_primitive_counts():
    assert fiber_primitive_count(3) == 1
    assert fiber_primitive_count(4) == 1
    assert fiber_primitive_count(5) == 2
    assert fiber_primitive_count(6) == 2
    assert fiber_primitive_count(7) == 3
    assert fiber_primitive_count(8) == 3


def test_projective_full_model_structure():
    base = product_model([Factor("cp2", 1), Factor("cp2", 1)])
    model = build_frame_model(base, canonical_bundle(base), 4)
    assert model.gens.exterior == (("u1", 3), ("v", 3))
    a1, a2 = (model.gens.generator(n) for n in ("a1", "a2"))
    assert model.d(model.gens.generator("u1")) == a1 * a1 + a2 * a2
    assert model.d(model.gens.generator("v")) == a1 * a2
    assert model.dimension() == 36


def test_sphere_model_structure():
    model = sphere_base_model(2)  # q = 6 over S^8
    assert model.gens.exterior == (("u1", 3), ("u2", 7), ("v", 5))
    s = model.gens.generator("s")
    assert model.d(model.gens.generator("u2")) == s
    assert model.d(model.gens.generator("u1")).is_zero()
    assert model.d(model.gens.generator("v")).is_zero()
    assert model.dimension() == 16


def test_zero_bundle_model_is_kuenneth():
    base = cp2()
    bundle = BundleMap(base, 5, {})
    model = build_frame_model(base, bundle, 5)
    report = model.cohomology()
    # cohomology is base tensor exterior fiber: dimensions multiply
    base_dims = {0: 1, 2: 1, 4: 1}
    fiber_dims = {0: 1, 3: 1, 7: 1, 10: 1}
    for n, s in report.by_degree.items():
        expected = sum(b * fiber_dims.get(n - bn, 0)
                       for bn, b in base_dims.items())
        assert s.dim == expected
    total = sum(s.dim for s in report.by_degree.values())
    assert total == 3 * 4


def test_degree_mismatch_rejected():
    base = cp2()
    a = base.gens.generator("a")
    with pytest.raises(DegreeMismatch):
        BundleMap(base, 4, {1: a})  # p_1 image must have degree 4


def test_chain_map_property_randomized():
    from secclasses.acceptance import random_element
    rng = random.Random(41)
    cases = []
    base = product_model([Factor("cp2", 1), Factor("cp2", 1)])
    cases.append(build_frame_model(base, canonical_bundle(base), 4))
    cases.append(sphere_base_model(2))
    for model in cases:
        delta = CharacteristicMap(model)
        gens_w = delta.source_gens
        d_w = delta.source_d
        d_m = model.d
        for _ in range(100):
            x = random_element(gens_w, rng)
            assert delta(d_w(x)) == d_m(delta(x))


def test_top_even_generator_image_in_full_model():
    base = product_model([Factor("cp2", 1), Factor("cp2", 1)])
    model = build_frame_model(base, canonical_bundle(base), 4)
    delta = CharacteristicMap(model)
    y4 = delta.source_gens.generator("y4")
    image = delta(y4)
    v = model.gens.generator("v")
    a1, a2 = (model.gens.generator(n) for n in ("a1", "a2"))
    assert image == v * (a1 * a2)
    assert model.d(image) == delta(delta.source_gens.generator("c4"))


def test_certificate_model_drops_euler_transgression():
    model = projective_base_model(2)
    assert [n for n, _ in model.gens.exterior] == ["u1"]
    delta = CharacteristicMap(model)
    with pytest.raises(IndexOutOfRange):
        delta(delta.source_gens.generator("y4"))


def test_projective_certificates():
    cert = certify_projective_family(2)
    assert cert.passed and cert.jointly_independent
    assert [c.source for c in cert.classes] == ["y2*c2^2"]
    assert cert.classes[0].image == "2*u1*a1^2*a2^2"
    assert cert.classes[0].degree == 11

    cert3 = certify_projective_family(3)
    assert cert3.passed
    assert [(c.source, c.degree) for c in cert3.classes] == \
        [("y2*c2^3", 15), ("y2*y4*c2^3", 22)]
    with pytest.raises(ValueError):
        certify_projective_family(1)


def test_sphere_certificate():
    cert = certify_sphere_family(2)
    assert cert.passed
    nonzero = [c for c in cert.classes if not c.expected_zero]
    assert [(c.source, c.image) for c in nonzero] == [("y4*c4", "u2*s")]
    vanishing = [c for c in cert.classes if c.expected_zero]
    assert len(vanishing) == 1
    assert vanishing[0].source == "y2*c2^3"
    assert not vanishing[0].nonzero
    with pytest.raises(ValueError):
        certify_sphere_family(1)


def test_sphere_characteristic_images():
    model = sphere_base_model(2)
    delta = CharacteristicMap(model)
    gens_w = delta.source_gens
    image = delta(VeyIndex((4,), (4,)).element(gens_w))
    assert image == model.gens.monomial((1,), (1,))  # u2 * s
    assert delta(VeyIndex((2,), (2, 2, 2)).element(gens_w)).is_zero()


def test_permanence_seed_only():
    cert = permanence_family((2,), (2, 2), 4, ())
    assert cert.passed
    assert len(cert.classes) == 1
    assert cert.classes[0].degree == 11


def test_permanence_adds_twisted_class():
    cert = permanence_family((2,), (2, 2, 2), 6, (2,))
    assert cert.passed
    degrees = sorted(c.degree for c in cert.classes)
    assert degrees == [15, 22]  # 2q+3 and 2q+3 + (4*2-1)
    labels = [c.source for c in cert.classes]
    assert any("twisted" in lbl for lbl in labels)


def test_permanence_strictness_and_range():
    with pytest.raises(ValueError):
        permanence_family((4,), (4,), 6, (2,))  # i_last = 4 is not < 2r = 4
    with pytest.raises(IndexOutOfRange):
        permanence_family((2,), (2, 2), 4, (3,))  # y6 does not exist for q=4
    with pytest.raises(IndexOutOfRange):
        permanence_family((2,), (2, 2, 2), 6, (3,))  # no Tp_3 in SO(6)
    with pytest.raises(ValueError):
        permanence_family((2,), (1, 1), 4, ())  # not a basis member
    with pytest.raises(ValueError):
        permanence_family((2,), (2, 2, 2), 6, (2, 2))  # not strictly increasing


def test_permanence_degree_bookkeeping():
    # degree of the twisted class is seed degree + sum(4r - 1)
    seed = VeyIndex((2,), (2, 2, 2))
    cert = permanence_family(seed.I, seed.J, 6, (2,))
    by_label = {c.source: c.degree for c in cert.classes}
    assert by_label[seed.label()] == seed.degree == 15
    assert by_label[f"{seed.label()} twisted by y4"] == seed.degree + 7


def test_certified_classes_are_rigid():
    for k in (2, 3):
        cert = certify_projective_family(k)
        for cls in cert.classes:
            ii = tuple(int(p[1:]) for p in cls.source.split("*")
                       if p.startswith("y"))
            assert VeyIndex(ii, (2,) * k).is_rigid(2 * k)


def test_sphere_model_euler_honest_zero():
    # the Euler image over a sphere base is zero, so v is a cycle there
    model = sphere_base_model(3)  # q = 10 over S^12
    assert model.d(model.gens.generator("v")).is_zero()
    assert model.has_euler_transgression
