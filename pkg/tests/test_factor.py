import pytest

from entryloci.kernel import (
    QQ,
    CharacteristicError,
    NotSquarefreeError,
    PrimeField,
    RingContext,
)
from entryloci.kernel.factor import (
    absolute_factor_count,
    absolute_factor_degrees,
    bivariate_gcd,
    poly_exact_div,
    squarefree_part,
)
from entryloci.kernel.rng import seeded_rng
from entryloci.kernel.univar import u_gcd


@pytest.fixture
def plane():
    return RingContext(("x", "y"), QQ)


def test_squarefree_strips_repeated_factor(plane):
    f = plane.from_string("x - y") ** 2 * plane.from_string("x + y")
    sf = squarefree_part(f)
    assert sf.proportional_to(plane.from_string("x^2 - y^2"))


def test_squarefree_idempotent_on_squarefree_input(plane):
    f = plane.from_string("x^2 + y^2 - 1")
    assert squarefree_part(f).proportional_to(f)


def test_squarefree_perfect_square(plane):
    f = plane.from_string("x^4 - 2*x^2*y^2 + y^4")
    assert squarefree_part(f).proportional_to(plane.from_string("x^2 - y^2"))


def test_squarefree_characteristic_guard():
    ring = RingContext(("x", "y"), PrimeField(3))
    with pytest.raises(CharacteristicError):
        squarefree_part(ring.from_string("x^4 + y"))


def test_bivariate_gcd(plane):
    a = plane.from_string("x - y") * plane.from_string("x + y + 1")
    b = plane.from_string("x - y") * plane.from_string("x^2 + y")
    g = bivariate_gcd(a, b)
    assert g.proportional_to(plane.from_string("x - y"))
    assert poly_exact_div(a, g).proportional_to(plane.from_string("x + y + 1"))


def test_factor_count_fixed_triple(plane):
    assert absolute_factor_count(plane.from_string("x^2 - y^2")) == 2
    # splits over the closure as (x + iy)(x - iy): the rational count would be 1
    assert absolute_factor_count(plane.from_string("x^2 + y^2")) == 2
    assert absolute_factor_count(plane.from_string("y^2 - x^3 + x")) == 1


def test_irreducibility_oracle_for_elliptic_example():
    # independent oracle: y^2 - g(x) factors over the closure iff g is a
    # perfect square; x^3 - x is squarefree of odd degree, hence not a square
    g = [0, -1, 0, 1]  # x^3 - x
    dg = [-1, 0, 3]
    from fractions import Fraction

    gq = [Fraction(c) for c in g]
    dgq = [Fraction(c) for c in dg]
    assert len(u_gcd(gq, dgq, QQ)) == 1  # constant gcd: squarefree


def test_factor_count_rejects_non_squarefree(plane):
    with pytest.raises(NotSquarefreeError):
        absolute_factor_count(plane.from_string("x^2 - 2*x*y + y^2"))


def test_factor_count_affine_invariance(plane):
    rng = seeded_rng("factor-invariance")
    f = plane.from_string("x^2 + y^2") * plane.from_string("x - y + 2")
    base = absolute_factor_count(f, rng)
    assert base == 3
    x_img = plane.from_string("2*x + y + 1")
    y_img = plane.from_string("x - y + 3")
    moved = f.substitute([x_img, y_img], plane)
    assert absolute_factor_count(moved, rng) == base
    assert absolute_factor_count(moved.scale(7), rng) == base


def test_factor_degrees_over_prime_field():
    F = PrimeField(2147483659)
    ring = RingContext(("x", "y"), F)
    rng = seeded_rng("factor-degrees")
    f = ring.from_string("x^2 + y^2") * ring.from_string("x^2 - 2*y^2 + 1")
    assert absolute_factor_degrees(f, rng) == [1, 1, 2]
    g = (
        ring.from_string("x^2 + y^2 - 1")
        * ring.from_string("x^2 + 2*y^2 - 3")
        * ring.from_string("2*x^2 + y^2 + x*y - 5")
    )
    assert absolute_factor_degrees(g, rng) == [2, 2, 2]
    assert absolute_factor_degrees(ring.from_string("y^2 - x^3 + x"), rng) == [3]


def test_factor_count_small_characteristic_guard():
    ring = RingContext(("x", "y"), PrimeField(5))
    with pytest.raises(CharacteristicError):
        absolute_factor_count(ring.from_string("x^3 - y^3 + x*y"))
