import pytest

from entryloci.catalog import build_catalog_variety
from entryloci.geometry import random_point
from entryloci.kernel import Ideal, PrimeField, groebner_basis
from entryloci.kernel.linalg import rank
from entryloci.kernel.rng import seeded_rng
from entryloci.kernel.zerodim import count_distinct_points, is_zero_dimensional
from entryloci.rank_secant import secant_dims, two_decompositions
from entryloci.suite import prime_stream

FP = PrimeField(2147483659)


def test_rnc4_secant_line_dimension():
    var = build_catalog_variety("rnc4", 1, FP)
    prof = secant_dims(var, 2, seed=3)
    assert prof.dim(2) == 3
    assert not prof.steps[1].defective


def test_veronese_defect():
    var = build_catalog_variety("veronese5", 1, FP)
    prof = secant_dims(var, 2, seed=3)
    assert prof.dim(2) == 4
    assert prof.steps[1].expected == 5
    assert prof.steps[1].defective
    assert prof.r_gen is None


def test_scroll_generic_rank_two():
    var = build_catalog_variety("scroll12", 1, FP)
    prof = secant_dims(var, 2, seed=3)
    assert prof.dim(2) == 4
    assert prof.r_gen == 2


@pytest.mark.parametrize("key", ["rnc3", "rnc5", "scroll12", "veronese5", "delpezzo4"])
def test_profile_monotone_and_bounded(key):
    var = build_catalog_variety(key, 1, FP)
    for seed in range(5):
        prof = secant_dims(var, 3, seed=seed)
        dims = [st.dim for st in prof.steps]
        assert dims == sorted(dims)
        assert all(st.dim <= st.expected for st in prof.steps)
        assert prof.dim(1) == var.meta["n"]


def test_rnc3_unique_decomposition_counts():
    var = build_catalog_variety("rnc3", 1, FP)
    for seed in range(5):
        q = random_point(FP, seeded_rng("q", seed), 4, off_coordinate_hyperplanes=True)
        ds = two_decompositions(var, q, seed=seed)
        assert not ds.positive_dimensional
        assert ds.count == 1


def test_rational_quartic_three_decompositions():
    # node-count oracle: (d-1)(d-2)/2 - g = 3*2/2 - 0 = 3
    var = build_catalog_variety("rational_quartic3", 1, FP)
    q = random_point(FP, seeded_rng("q4"), 4, off_coordinate_hyperplanes=True)
    ds = two_decompositions(var, q, seed=1)
    assert ds.count == 3


def test_pairs_satisfy_exact_incidence():
    # find a splitting instance, then verify the rank conditions exactly
    found = None
    for p in prime_stream(11):
        F2 = PrimeField(p)
        var = build_catalog_variety("rnc3", 1, F2)
        q = random_point(F2, seeded_rng("qs", p), 4, off_coordinate_hyperplanes=True)
        ds = two_decompositions(var, q, seed=2)
        if ds.pairs:
            found = (F2, var, q, ds.pairs)
            break
    F2, var, q, pairs = found
    for a, b in pairs:
        assert var.contains_point(a) and var.contains_point(b)
        assert a.coords != b.coords
        stacked = [list(a.coords), list(b.coords), list(q.coords)]
        assert rank(stacked, F2) == 2  # q on the line spanned by the pair


def test_node_count_matches_plane_projection_oracle():
    # independent oracle: nodes of a generic plane projection of the twisted
    # cubic, counted by solving f = f_x = f_y = 0 on the plane model
    from entryloci.entry_locus import plane_model

    var = build_catalog_variety("rnc3", 1, FP)
    rng = seeded_rng("nodes")
    f = plane_model(var.ideal, rng, expected_degree=3)
    ring = f.ring
    system = Ideal.of(ring, [f, f.derivative(0), f.derivative(1)])
    gb = groebner_basis(system)
    assert is_zero_dimensional(gb)
    nodes = count_distinct_points(gb, rng, trials=3)
    q = random_point(FP, seeded_rng("qn"), 4, off_coordinate_hyperplanes=True)
    ds = two_decompositions(var, q, seed=9)
    assert nodes == ds.count == 1


def test_decomposition_rejects_point_on_variety():
    from entryloci.geometry import sample_point
    from entryloci.kernel import DegenerateInputError

    var = build_catalog_variety("rnc3", 1, FP)
    pt = sample_point(var, seeded_rng("onx"))
    with pytest.raises(DegenerateInputError):
        two_decompositions(var, pt, seed=1)
