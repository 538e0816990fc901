"""Sign conventions, truncation, and basis enumeration of the algebra core."""

import random
from fractions import Fraction
from itertools import product

import pytest

from secclasses.algebra import (Element, GeneratorMismatch, GeneratorSet,
                                basis_of_degree, count_poly_monomials,
                                merge_exterior)
from secclasses.weil import weil_complex


def test_merge_exterior_signs():
    assert merge_exterior((0,), (1,)) == (0, (0, 1))
    assert merge_exterior((1,), (0,)) == (1, (0, 1))
    assert merge_exterior((0,), (0,)) is None
    assert merge_exterior((), (0, 2)) == (0, (0, 2))
    # two transpositions: 2 jumps over both 0 and 1
    assert merge_exterior((2,), (0, 1)) == (0, (0, 1, 2))
    assert merge_exterior((1, 2), (0,)) == (0, (0, 1, 2))


def test_exterior_anticommute():
    gens, _ = weil_complex(2)
    y1, y2 = gens.generator("y1"), gens.generator("y2")
    assert y1 * y2 == gens.monomial((0, 1), (0, 0))
    assert y2 * y1 == gens.monomial((0, 1), (0, 0), -1)
    assert (y1 * y1).is_zero()


def test_truncation_kills_high_polynomial_degree():
    gens, _ = weil_complex(1)
    c1 = gens.generator("c1")
    assert (c1 * c1).is_zero()  # degree 4 > 2q = 2


def test_truncation_boundary_survives():
    gens, _ = weil_complex(3)
    c1 = gens.generator("c1")
    cube = c1 * c1 * c1  # polynomial degree 6 = 2q exactly
    assert cube == gens.monomial((), (3, 0, 0))
    assert (cube * c1).is_zero()


def test_unit_law():
    gens, _ = weil_complex(2)
    one = gens.unit()
    x = gens.generator("y1") * gens.generator("c2") + gens.generator("c1")
    assert x * one == x
    assert one * x == x


def test_exterior_square_inside_product():
    gens, _ = weil_complex(2)
    y1, c1 = gens.generator("y1"), gens.generator("c1")
    assert (y1 + c1) * y1 == c1 * y1  # y1*y1 = 0


def test_basis_w1():
    gens, _ = weil_complex(1)
    assert basis_of_degree(gens, 3) == (((0,), (1,)),)
    assert basis_of_degree(gens, 0) == (((), (0,)),)
    assert [gens.mono_str(m) for m in basis_of_degree(gens, 3)] == ["y1*c1"]


def test_basis_w2_degree7_against_brute_force():
    gens, _ = weil_complex(2)
    got = set(basis_of_degree(gens, 7))
    # independent brute-force enumeration of the complex
    expected = set()
    for e1, e2 in product((0, 1), repeat=2):
        ext = tuple(i for i, e in enumerate((e1, e2)) if e)
        for a in range(3):
            for b in range(2):
                if 2 * a + 4 * b > 4:
                    continue
                deg = e1 * 1 + e2 * 3 + 2 * a + 4 * b
                if deg == 7:
                    expected.add((ext, (a, b)))
    assert got == expected
    assert [gens.mono_str(m) for m in basis_of_degree(gens, 7)] == \
        ["y2*c2", "y2*c1^2"]


def test_basis_sizes_sum_to_product_formula():
    for q in (1, 2, 3):
        gens, _ = weil_complex(q)
        total = sum(len(basis_of_degree(gens, n))
                    for n in range(gens.top_degree() + 1))
        assert total == (1 << gens.n_exterior) * count_poly_monomials(gens)
        assert total == gens.dimension()


def test_basis_canonical_order_is_deterministic():
    gens, _ = weil_complex(3)
    for n in (5, 7, 9):
        monos = basis_of_degree(gens, n)
        exts = [m[0] for m in monos]
        assert exts == sorted(exts)
        for ext in set(exts):
            exps = [m[1] for m in monos if m[0] == ext]
            assert exps == sorted(exps)


def test_caps_model_projective_plane():
    gens = GeneratorSet((), (("a", 2, 2),))
    a = gens.generator("a")
    assert a * a == gens.monomial((), (2,))
    assert (a * a * a).is_zero()
    assert gens.dimension() == 3


def test_graded_commutativity_randomized():
    rng = random.Random(7)
    gens, _ = weil_complex(4)
    monos = [m for n in range(11) for m in basis_of_degree(gens, n)]
    for _ in range(300):
        a, b = rng.choice(monos), rng.choice(monos)
        ea = Element(gens, {a: Fraction(1)})
        eb = Element(gens, {b: Fraction(1)})
        sign = -1 if (gens.mono_degree(a) * gens.mono_degree(b)) % 2 else 1
        assert ea * eb == (eb * ea).scale(sign)


def test_associativity_and_distributivity_randomized():
    from secclasses.acceptance import random_element
    rng = random.Random(11)
    gens, _ = weil_complex(3)
    for _ in range(200):
        a, b, c = (random_element(gens, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_generator_mismatch_raises():
    g1, _ = weil_complex(1)
    g2, _ = weil_complex(2)
    with pytest.raises(GeneratorMismatch):
        g1.generator("y1") * g2.generator("y1")
    with pytest.raises(GeneratorMismatch):
        g1.generator("y1") + g2.generator("y1")


def test_canonical_form():
    gens, _ = weil_complex(2)
    x = gens.generator("y1")
    assert (x - x).is_zero()
    assert (x - x).terms == {}
    assert x + x == x.scale(2)


def test_degree_and_homogeneity():
    gens, _ = weil_complex(2)
    y1, c1 = gens.generator("y1"), gens.generator("c1")
    assert y1.degree() == 1 and c1.degree() == 2
    assert not (y1 + c1).is_homogeneous()
    with pytest.raises(ValueError):
        (y1 + c1).degree()
    with pytest.raises(ValueError):
        gens.zero().degree()


def test_element_str():
    gens, _ = weil_complex(2)
    x = gens.generator("y1") * gens.generator("c1").scale(Fraction(1, 2))
    assert str(x) == "1/2*y1*c1"
    assert str(gens.zero()) == "0"
    assert str(gens.unit()) == "1"
    assert str(-gens.generator("y2")) == "-y2"


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet((("y", 2),), ())  # even exterior degree
    with pytest.raises(ValueError):
        GeneratorSet((), (("c", 3, None),))  # odd polynomial degree
    with pytest.raises(ValueError):
        GeneratorSet((("y", 1),), (("y", 2, None),))  # duplicate name
