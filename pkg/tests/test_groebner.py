from fractions import Fraction

import pytest

from entryloci.kernel import (
    QQ,
    Budget,
    BudgetExceededError,
    Ideal,
    PrimeField,
    RingContext,
    eliminate,
    groebner_basis,
    normal_form,
    verify_groebner_basis,
)
from entryloci.kernel.orders import GREVLEX, LEX, Block
from entryloci.kernel.univar import u_resultant


def test_single_generator_is_its_own_basis():
    ring = RingContext(("x", "y"), QQ)
    gb = groebner_basis(Ideal.of(ring, [ring.from_string("x")]))
    assert [g.to_string() for g in gb.basis] == ["x"]


def test_twisted_cubic_parameter_elimination():
    # oracle: substituting x = t^2, y = t^3 must kill every output generator,
    # and the resultant of the two inputs with respect to t pins the eliminant
    ring = RingContext(("t", "x", "y"), QQ)
    gens = [ring.from_string("x - t^2"), ring.from_string("y - t^3")]
    out = eliminate(Ideal.of(ring, gens), 1)
    assert len(out.gens) == 1
    g = out.gens[0]
    pring = RingContext(("t",), QQ)
    t = pring.variable(0)
    assert g.substitute([t**2, t**3], pring).is_zero()
    # resultant oracle: Res_t(x - t^2, y - t^3) as univariate in t with the
    # (x, y) evaluated at a sample point must vanish exactly on the curve
    for tv in (2, 3, 5):
        x, y = Fraction(tv * tv), Fraction(tv**3)
        a = [x, Fraction(0), Fraction(-1)]  # x - t^2
        b = [y, Fraction(0), Fraction(0), Fraction(-1)]  # y - t^3
        assert u_resultant(a, b, QQ) == 0
        assert g.evaluate((x, y)) == 0
    # minimality: degree 3 with 2 affine solutions' worth of structure
    assert g.total_degree() == 3


def test_shape_position_example():
    # oracle: solving x = y, 2y^2 = 1 by hand gives two solutions
    ring = RingContext(("x", "y"), QQ)
    gb = groebner_basis(
        Ideal.of(ring, [ring.from_string("x^2 + y^2 - 1"), ring.from_string("x - y")])
    )
    lts = sorted(g.leading_monomial() for g in gb.basis)
    assert lts == [(0, 2), (1, 0)]
    univ = [g for g in gb.basis if g.leading_monomial() == (0, 2)][0]
    # the univariate member is y^2 - 1/2, consistent with the two hand solutions
    assert univ.constant_value() == Fraction(-1, 2)


def test_normal_form_membership_and_idempotence():
    ring = RingContext(("x", "y"), QQ)
    gb = groebner_basis(Ideal.of(ring, [ring.from_string("x")]))
    assert normal_form(ring.from_string("x^2"), gb).is_zero()
    r = normal_form(ring.from_string("y + x*y"), gb)
    assert r == ring.from_string("y")
    assert normal_form(r, gb) == r


def test_every_emitted_basis_passes_spolynomial_closure():
    ring = RingContext(("x0", "x1", "x2", "x3"), QQ)
    x0, x1, x2, x3 = ring.gens()
    samples = [
        [x1 * x1 - x0 * x2, x1 * x2 - x0 * x3, x2 * x2 - x1 * x3],
        [x0**2 + x1**2 - x2**2, x0 - x1 + x3],
        [x0 * x1 - x2 * x3, x0**3 - x1 * x2 * x3],
    ]
    for gens in samples:
        gb = groebner_basis(Ideal.of(ring, gens))
        assert len(gb.basis) <= 30
        assert verify_groebner_basis(gb)


def test_block_order_eliminates_leading_variables():
    ring = RingContext(("t", "u", "x", "y", "z"), QQ, Block(2))
    key = ring.order.key
    assert key((1, 0, 0, 0, 0)) > key((0, 0, 5, 5, 5))
    assert key((0, 1, 0, 0, 0)) > key((0, 0, 9, 0, 0))


def test_lex_vs_grevlex_leading_terms():
    ring_g = RingContext(("x", "y", "z"), QQ, GREVLEX)
    ring_l = RingContext(("x", "y", "z"), QQ, LEX)
    f_g = ring_g.from_string("x + y^2")
    f_l = ring_l.from_string("x + y^2")
    assert f_g.leading_monomial() == (0, 2, 0)
    assert f_l.leading_monomial() == (1, 0, 0)


def test_budget_error_is_raised_not_partial():
    ring = RingContext(("a", "b", "c", "d"), PrimeField(32003))
    gens = [
        ring.from_string("a^3*b - c*d^2 + a"),
        ring.from_string("b^3*c - a*d^2 + b"),
        ring.from_string("c^3*d - a^2*b + c"),
    ]
    with pytest.raises(BudgetExceededError):
        groebner_basis(Ideal.of(ring, gens), GREVLEX, Budget(max_pairs=3))


def test_groebner_over_prime_field_matches_rational_leading_terms():
    ring_q = RingContext(("x", "y", "z"), QQ)
    gens_q = [ring_q.from_string("x^2 + y*z - 1"), ring_q.from_string("x*z - y + 2")]
    p = 2147483659
    ring_p = RingContext(("x", "y", "z"), PrimeField(p))
    gens_p = [g.reduce_mod(ring_p) for g in gens_q]
    gb_q = groebner_basis(Ideal.of(ring_q, gens_q))
    gb_p = groebner_basis(Ideal.of(ring_p, gens_p))
    assert [g.leading_monomial() for g in gb_q.basis] == [
        g.leading_monomial() for g in gb_p.basis
    ]
