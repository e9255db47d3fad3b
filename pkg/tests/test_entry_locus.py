from entryloci.catalog import build_catalog_variety
from entryloci.entry_locus import (
    classify_entry_locus,
    component_count,
    entry_locus_ideal,
    irrelevant_saturate,
)
from entryloci.geometry import random_point
from entryloci.kernel import (
    Ideal,
    PrimeField,
    RingContext,
    groebner_basis,
    normal_form,
    same_saturation,
)
from entryloci.kernel.hilbert import hilbert_invariants
from entryloci.kernel.rng import seeded_rng
from entryloci.kernel.univar import u_degree, u_gcd, u_trim

FP = PrimeField(2147483659)


def general_q(var, tag, seed):
    rng = seeded_rng(tag, seed)
    while True:
        q = random_point(var.field, rng, var.ambient + 1, off_coordinate_hyperplanes=True)
        if not var.contains_point(q):
            return q


def test_scroll_locus_is_a_plane_conic():
    var = build_catalog_variety("scroll12", 1, FP)
    q = general_q(var, "scroll-q", 1)
    locus = entry_locus_ideal(var, q)
    inv = hilbert_invariants(locus)
    assert (inv.dimension, inv.degree) == (1, 2)
    degs = sorted(g.total_degree() for g in locus.gens)
    assert degs == [1, 1, 2]  # two hyperplanes and a quadric: a plane conic


def test_locus_contained_in_variety():
    var = build_catalog_variety("delpezzo4", 1, FP)
    q = general_q(var, "dp-q", 1)
    locus = entry_locus_ideal(var, q)
    gb = groebner_basis(locus)
    for g in var.ideal.gens:
        assert normal_form(g, gb).is_zero()


def test_witness_closure_on_slice_points():
    # for points a on a slice of the locus, the line through a and q must meet
    # the variety again away from a: the substituted binary forms share a root
    # besides the diagonal one
    from entryloci.suite import _slice_points, prime_stream

    found = None
    for attempt, p in zip(range(12), prime_stream(31)):
        F2 = PrimeField(p)
        var = build_catalog_variety("scroll12", 1, F2)
        q = general_q(var, "scroll-qw", 3)
        locus = entry_locus_ideal(var, q)
        pts = _slice_points(locus, seeded_rng("wslice", attempt), None)
        if pts:
            found = (F2, var, q, pts)
            break
    assert found, "no splitting prime for the slice in the probe window"
    F2, var, q, pts = found
    lring = RingContext(("t",), F2)
    for a in pts:
        assert var.contains_point(a)
        # b = t*a + q on X: generators become univariate in t; the partner
        # point is a finite common root
        coeff_lists = []
        for g in var.ideal.gens:
            images = [
                lring.variable(0).scale(ac) + lring.constant(qc)
                for ac, qc in zip(a.coords, q.coords)
            ]
            f = g.substitute(images, lring)
            cs = [F2.zero] * (f.total_degree() + 1)
            for m, c in f.terms:
                cs[m[0]] = c
            coeff_lists.append(u_trim(cs, F2))
        g = coeff_lists[0]
        for nxt in coeff_lists[1:]:
            g = u_gcd(g, nxt, F2)
        assert u_degree(g) >= 1  # a partner point exists on the punctured line


def test_strategy_agreement_for_scroll():
    var = build_catalog_variety("scroll12", 1, FP)
    q = general_q(var, "scroll-q2", 2)
    locus = entry_locus_ideal(var, q, strategy="both")
    assert hilbert_invariants(locus).degree == 2


def test_classify_scroll_full_report():
    var = build_catalog_variety("scroll12", 1, FP)
    rep = classify_entry_locus(var, seed=1)
    assert (rep.gamma, rep.ell, rep.reduced_degree, rep.component_count) == (1, 2, 2, 1)
    assert rep.type_irreducibility == "I"
    assert rep.type_ab == "A"
    assert rep.degree_formula["pass"] and rep.dimension_formula["pass"]
    # the minimal-degree relation: span dimension exceeds locus dimension by one
    assert rep.ell == rep.gamma + 1


def test_classify_cone_two_components():
    var = build_catalog_variety("cone_twisted_cubic", 1, FP)
    rep = classify_entry_locus(var, seed=1)
    assert (rep.reduced_degree, rep.component_count) == (2, 2)
    assert rep.type_irreducibility == "II"


def test_classify_delpezzo_type_b():
    var = build_catalog_variety("delpezzo4", 1, FP)
    rep = classify_entry_locus(var, seed=1)
    assert (rep.gamma, rep.ell, rep.reduced_degree, rep.component_count) == (1, 3, 4, 1)
    assert rep.type_irreducibility == "I"
    assert rep.type_ab == "B"


def test_seed_stability_of_invariants():
    var = build_catalog_variety("scroll12", 1, FP)
    seen = set()
    for seed in range(5):
        rep = classify_entry_locus(var, seed=seed, ab_trials=1)
        seen.add(
            (rep.gamma, rep.ell, rep.reduced_degree, rep.component_count, rep.type_irreducibility)
        )
    assert len(seen) == 1


def test_type_ab_self_comparison():
    var = build_catalog_variety("scroll12", 1, FP)
    q = general_q(var, "scroll-q3", 4)
    locus = entry_locus_ideal(var, q)
    again = entry_locus_ideal(var, q)
    assert same_saturation(locus, again)


def test_component_count_two_skew_lines():
    ring = RingContext(("x0", "x1", "x2", "x3"), FP)
    x0, x1, x2, x3 = ring.gens()
    # (x2, x3) . (x0, x1): union of two skew lines
    union = Ideal.of(
        ring, [x0 * x2, x0 * x3, x1 * x2, x1 * x3]
    )
    assert component_count(union, seed=1, expected_degree=2) == 2


def test_component_count_twisted_cubic_irreducible():
    var = build_catalog_variety("rnc3", 1, FP)
    assert component_count(var.ideal, seed=1, expected_degree=3) == 1


def test_equidimensional_invariants_of_locus():
    var = build_catalog_variety("veronese_proj4", 1, FP)
    rep = classify_entry_locus(var, seed=1)
    assert rep.gamma == 1
    assert rep.reduced_degree >= rep.component_count
    assert rep.component_count == 3
    assert rep.reduced_degree == 6


def test_irrelevant_saturate_fast_path():
    ring = RingContext(("x0", "x1", "x2"), FP)
    clean = Ideal.of(ring, [ring.from_string("x0*x2 - x1^2")])
    assert same_saturation(irrelevant_saturate(clean), clean)


def test_irrelevant_saturate_intersection_fallback():
    # (x^2, xy, xz) = (x) with an embedded origin component: no single-variable
    # saturation sits inside the ideal, so the fold-intersect branch runs
    ring = RingContext(("x", "y", "z"), FP)
    junky = Ideal.of(
        ring,
        [ring.from_string("x^2"), ring.from_string("x*y"), ring.from_string("x*z")],
    )
    sat = irrelevant_saturate(junky)
    gb = groebner_basis(sat)
    assert [g.to_string() for g in gb.basis] == ["x"]
