import random
from fractions import Fraction

import pytest

from tropkit import (DomainError, InputError, LatticePolytope,
                     TropicalPolynomial, TropicalScalar, active_terms,
                     concavify, evaluate, functionally_equal, newton_polytope,
                     restrict_to_active, trop_product)
from conftest import rand_fraction, rand_poly_in_triangle


def test_evaluate_line():
    f = TropicalPolynomial(2, {(0, 0): 0, (1, 0): 0, (0, 1): 0})
    assert evaluate(f, (3, 4)) == TropicalScalar(4)
    assert evaluate(f, (-1, -2)) == TropicalScalar(0)


def test_duplicate_exponents_rejected():
    with pytest.raises(InputError):
        TropicalPolynomial(1, [((0,), 0), ((0,), 1)])


def test_wrong_point_length():
    f = TropicalPolynomial(2, {(0, 0): 0})
    with pytest.raises(DomainError):
        evaluate(f, (1,))


def test_product_evaluation_identity():
    rng = random.Random(7)
    for _ in range(25):
        f = rand_poly_in_triangle(rng, rng.randint(1, 3), full=False)
        g = rand_poly_in_triangle(rng, rng.randint(1, 3), full=False)
        h = trop_product(f, g)
        for _ in range(5):
            x = (rand_fraction(rng), rand_fraction(rng))
            assert (evaluate(h, x).finite_value
                    == evaluate(f, x).finite_value + evaluate(g, x).finite_value)


def test_newton_polytope_triangle():
    f = TropicalPolynomial(2, {(0, 0): 0, (2, 0): 0, (0, 2): 0,
                               (1, 0): 0, (1, 1): 0})
    assert newton_polytope(f) == LatticePolytope([(0, 0), (2, 0), (0, 2)])


def test_concavify_buried_term():
    # middle coefficient too low to matter
    f = TropicalPolynomial(1, {(0,): 0, (1,): -5, (2,): 0})
    assert concavify(f, (1,)) == Fraction(0)
    acts = active_terms(f)
    assert [m.exp for m in acts] == [(0,), (2,)]


def test_active_terms_on_hull():
    f = TropicalPolynomial(1, {(0,): 0, (1,): 0, (2,): 0})
    assert len(active_terms(f)) == 3      # (1,) lies on the hull, not below


def test_functionally_equal_examples():
    f = TropicalPolynomial(1, {(0,): 0, (1,): -1, (2,): 0})
    g = TropicalPolynomial(1, {(0,): 0, (2,): 0})
    assert functionally_equal(f, g)
    h = TropicalPolynomial(1, {(0,): 0, (1,): 1, (2,): 0})
    assert not functionally_equal(h, g)
    assert functionally_equal(restrict_to_active(h), h)


def test_functional_equality_sampling_oracle(rng):
    """Exact decision must agree with dense sampling on random pairs."""
    for _ in range(30):
        f = rand_poly_in_triangle(rng, 2, full=False)
        g = rand_poly_in_triangle(rng, 2, full=False)
        if rng.random() < 0.5:
            g = restrict_to_active(f)       # force some equal pairs
        verdict = functionally_equal(f, g)
        samples = [(Fraction(i, 3), Fraction(j, 3))
                   for i in range(-15, 16, 2) for j in range(-15, 16, 2)]
        sampled = all(evaluate(f, x) == evaluate(g, x) for x in samples)
        if verdict:
            assert sampled
        # inequality must show up at scale: check far-out points too
        if not verdict:
            far = samples + [(Fraction(i * 97, 2), Fraction(j * 89, 3))
                             for i in (-3, 3) for j in (-3, 3)]
            assert not all(evaluate(f, x) == evaluate(g, x) for x in far)


def test_evaluate_is_convex_along_segments(rng):
    for _ in range(10):
        f = rand_poly_in_triangle(rng, 3, full=False)
        a = (rand_fraction(rng), rand_fraction(rng))
        b = (rand_fraction(rng), rand_fraction(rng))
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        va = evaluate(f, a).finite_value
        vb = evaluate(f, b).finite_value
        assert evaluate(f, mid).finite_value <= (va + vb) / 2
