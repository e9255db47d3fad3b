"""Entry loci of generic-rank-2 varieties: the locus ideal, its invariants
(dimension, span, reduced degree, component count) and the two type
classifications (irreducible vs not; stable vs moving under span points).

The incidence construction fixes the base point q and parametrizes the second
decomposition point as b = lam * a + mu * q; clearing mu (one added-variable
saturation) removes exactly the diagonal branch b ~ a, and eliminating
(lam : mu) projects onto the first factor.  This has the same zero set as the
doubled-coordinate incidence variety and one Groebner run instead of a cascade
of saturations.  A parametrized strategy substitutes a = phi(s), b = phi(u)
and must agree with the implicit one when both run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .geometry import (
    ProjectivePoint,
    ProjectiveVariety,
    random_linear_form,
    random_point,
    random_scalar,
    reduced_dim_degree,
    span_dim,
    span_point_basis,
)
from .kernel.errors import BudgetExceededError, DegenerateInputError
from .kernel.factor import absolute_factor_count, squarefree_part, bivariate_gcd
from .kernel.fields import PrimeField
from .kernel.groebner import Budget
from .kernel.hilbert import hilbert_invariants
from .kernel.ideals import (
    Ideal,
    eliminate,
    groebner_basis,
    homogeneous_generators,
    in_irrelevant_saturation,
    intersect,
    normal_form,
    saturate_single,
    saturate_wrt_variable,
)
from .kernel.linalg import kernel_basis
from .kernel.orders import GREVLEX, Block
from .kernel.poly import Polynomial, RingContext
from .kernel.rng import seeded_rng
from .rank_secant import secant_dims


@dataclass
class EntryLocusReport:
    variety: str
    seed: int
    field: str
    q: tuple
    gamma: int
    ell: int
    reduced_degree: int
    component_count: int
    type_irreducibility: str  # "I" | "II"
    type_ab: str  # "A" | "B" | "undetermined"
    degree_formula: dict
    dimension_formula: dict
    genus_recomputed: int | None
    primes: list
    timings: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {
            "variety": self.variety,
            "seed": self.seed,
            "field": self.field,
            "q": [str(c) for c in self.q],
            "gamma": self.gamma,
            "ell": self.ell,
            "reduced_degree": self.reduced_degree,
            "component_count": self.component_count,
            "type_irreducibility": self.type_irreducibility,
            "type_ab": self.type_ab,
            "degree_formula": self.degree_formula,
            "dimension_formula": self.dimension_formula,
            "genus_recomputed": self.genus_recomputed,
            "primes": self.primes,
            "timings": self.timings,
        }


def entry_locus_ideal(
    X: ProjectiveVariety,
    q: ProjectivePoint,
    budget: Budget | None = None,
    strategy: str = "implicit",
) -> Ideal:
    """Homogeneous ideal whose zero set is the entry locus of q (r_gen = 2)."""
    if X.contains_point(q):
        raise DegenerateInputError("entry locus base point lies on the variety")
    if strategy == "implicit":
        raw = _implicit_entry_locus(X, q, budget)
    elif strategy == "parametrized":
        raw = _parametrized_entry_locus(X, q, budget)
    elif strategy == "both":
        a = _implicit_entry_locus(X, q, budget)
        b = _parametrized_entry_locus(X, q, budget)
        if not _same_scheme(a, b, budget):
            raise DegenerateInputError("entry-locus strategies disagree")
        raw = a
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return irrelevant_saturate(raw, budget)


def _implicit_entry_locus(X: ProjectiveVariety, q: ProjectivePoint, budget) -> Ideal:
    ring = X.ring
    field = X.field
    n = ring.nvars
    names = ("w_", "lam_", "mu_") + ring.names
    big = RingContext(names, field, Block(3))
    w = big.variable(0)
    lam = big.variable(1)
    mu = big.variable(2)
    a_vars = [big.variable(3 + i) for i in range(n)]
    # the second decomposition point: b = lam * a + mu * q
    b_imgs = [lam * a_vars[i] + mu.scale(q.coords[i]) for i in range(n)]
    gens = [w * mu - big.one()]
    pad = (0, 0, 0)
    for g in X.ideal.gens:
        gens.append(big.from_dict({pad + m: c for m, c in g.terms}))
    for g in X.ideal.gens:
        gens.append(g.substitute(b_imgs, big))
    out = eliminate(Ideal.of(big, gens), 3, budget)
    target = ring
    out = Ideal.of(target, [Polynomial(target, g.terms) for g in out.gens])
    return homogeneous_generators(out)


def _parametrized_entry_locus(X: ProjectiveVariety, q: ProjectivePoint, budget) -> Ideal:
    """Entry locus via a = phi(s), b = phi(u): eliminate u (with the line
    coordinates), then implicitize the resulting parameter locus."""
    if X.param is None:
        raise DegenerateInputError("parametrized strategy needs a parametrization")
    pring = X.param.ring
    field = X.field
    m = pring.nvars
    r = X.ambient
    names = ("w_", "lam_", "mu_") + tuple(f"u{i}" for i in range(m)) + tuple(pring.names)
    big = RingContext(names, field, Block(3 + m))
    lam = big.variable(1)
    mu = big.variable(2)
    w = big.variable(0)
    pad_u = (0, 0, 0)
    pad_s = (0, 0, 0) + (0,) * m
    forms_u = [
        big.from_dict({pad_u + mm + (0,) * m: c for mm, c in f.terms}) for f in X.param.forms
    ]
    forms_s = [big.from_dict({pad_s + mm: c for mm, c in f.terms}) for f in X.param.forms]
    gens = [w * mu - big.one()]
    for i in range(r + 1):
        gens.append(forms_u[i] - lam * forms_s[i] - mu * big.constant(q.coords[i]))
    s_locus = eliminate(Ideal.of(big, gens), 3 + m, budget)
    s_ring = RingContext(tuple(pring.names), field)
    s_locus = Ideal.of(s_ring, [Polynomial(s_ring, g.terms) for g in s_locus.gens])
    s_locus = homogeneous_generators(s_locus)
    # image of the parameter locus under phi
    names2 = tuple(pring.names) + tuple(X.ring.names)
    big2 = RingContext(names2, field, Block(m))
    forms2 = [big2.from_dict({mm + (0,) * (r + 1): c for mm, c in f.terms}) for f in X.param.forms]
    ys = [big2.variable(m + i) for i in range(r + 1)]
    gens2 = [big2.from_dict({mm + (0,) * (r + 1): c for mm, c in g.terms}) for g in s_locus.gens]
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            gens2.append(ys[i] * forms2[j] - ys[j] * forms2[i])
    rng = seeded_rng(("param-strategy", X.meta.get("key"), tuple(q.coords.__repr__())))
    combo = big2.zero()
    for f in forms2:
        combo = combo + f.scale(field.coerce(random_scalar(field, rng)))
    sat = saturate_single(Ideal.of(big2, gens2), combo, budget)
    out = eliminate(sat.map_ring(big2), m, budget)
    target = X.ring
    out = Ideal.of(target, [Polynomial(target, g.terms) for g in out.gens])
    return homogeneous_generators(out)


def irrelevant_saturate(ideal: Ideal, budget: Budget | None = None) -> Ideal:
    """Saturation by the irrelevant ideal.

    Fast path: if some single-variable saturation already sits inside the
    ideal, the ideal is its own saturation.  Otherwise fold the per-variable
    saturations through pairwise intersections.
    """
    if not ideal.gens:
        return ideal
    gb = groebner_basis(ideal, GREVLEX, budget)
    parts = []
    for var in range(ideal.ring.nvars):
        sat = saturate_wrt_variable(ideal, var, budget)
        if all(normal_form(g, gb, budget).is_zero() for g in sat.gens):
            return Ideal.of(ideal.ring, gb.basis)
        parts.append(sat)
    acc = parts[0]
    for nxt in parts[1:]:
        acc = homogeneous_generators(intersect(acc, nxt, budget))
    return acc


def _same_scheme(a: Ideal, b: Ideal, budget) -> bool:
    from .kernel.ideals import same_saturation

    return same_saturation(a, b, budget)


# -- component counting ----------------------------------------------------------


def plane_model(
    curve: Ideal,
    rng: random.Random,
    expected_degree: int | None = None,
    budget: Budget | None = None,
) -> Polynomial:
    """Squarefree affine plane model of a projective curve under a seeded
    random projection to P^2 (re-projecting on detected collapse).

    The projection defined by a random 3 x (r+1) matrix is realized through a
    coordinate change adapted to its kernel, so the image arises from one
    small block elimination (the attached-graph construction computes the same
    image ideal but drags a junk component at the cone point).
    """
    from .geometry import complete_to_basis

    ring = curve.ring
    field = ring.field
    n = ring.nvars
    for attempt in range(5):
        matrix = [[field.coerce(random_scalar(field, rng)) for _ in range(n)] for _ in range(3)]
        center_rows = kernel_basis(matrix, field)
        if len(center_rows) != n - 3:
            continue
        cols = complete_to_basis(field, center_rows, n)
        B = [[cols[j][i] for j in range(n)] for i in range(n)]
        moved = _apply_columns(curve, B)
        moved = Ideal.of(ring.with_order(Block(n - 3)), moved.gens)
        image = eliminate(moved, n - 3, budget)
        if not image.gens:
            continue
        # a seeded random chart keeps every component affine w.h.p.
        from .geometry import dehomogenize

        aff_ring, aff_gens, _ = dehomogenize(image, rng)
        aff_gens = [g for g in aff_gens if not g.is_zero()]
        if not aff_gens:
            continue
        f = aff_gens[0]
        for g in aff_gens[1:]:
            f = bivariate_gcd(f, g)
        if f.total_degree() < 1:
            continue
        sf = squarefree_part(f)
        if expected_degree is not None and sf.total_degree() != expected_degree:
            continue
        return sf
    raise DegenerateInputError("no non-collapsing plane projection found")


def _apply_columns(ideal: Ideal, B) -> Ideal:
    from .geometry import apply_linear_substitution

    return apply_linear_substitution(ideal, B)


def component_count(
    curve: Ideal, seed: int, expected_degree: int | None = None, budget: Budget | None = None
) -> int:
    """Number of geometric components of a projective curve: the absolute
    factor count of a plane model, maximized over 3 independent projections
    (a special projection can only merge components)."""
    best = 0
    for trial in range(3):
        rng = seeded_rng(("components", seed, trial))
        try:
            f = plane_model(curve, rng, expected_degree, budget)
            best = max(best, absolute_factor_count(f, rng))
        except DegenerateInputError:
            continue
    if best == 0:
        raise DegenerateInputError("all plane projections collapsed")
    return best


# -- classification ----------------------------------------------------------------


def type_ab_test(
    X: ProjectiveVariety,
    q: ProjectivePoint,
    locus: Ideal,
    trials: int = 3,
    seed: int = 0,
    budget: Budget | None = None,
) -> str:
    """A / B / undetermined: does the entry locus stay the same for general
    points of its span?

    Scheme equality of irrelevant-saturated ideals via two-sided saturation
    membership; a B verdict needs failure in both directions.
    """
    field = X.field
    span_basis = span_point_basis(locus, budget)
    if len(span_basis) < 2:
        raise DegenerateInputError("entry locus span is a point")
    verdicts = []
    for trial in range(trials):
        rng = seeded_rng(("typeab", X.meta.get("key"), seed, trial))
        o = None
        for _ in range(20):
            coeffs = [field.coerce(random_scalar(field, rng)) for _ in range(len(span_basis))]
            vec = [field.zero] * X.ring.nvars
            for c, row in zip(coeffs, span_basis):
                for i, x in enumerate(row):
                    vec[i] = field.add(vec[i], field.mul(c, x))
            if all(v == field.zero for v in vec):
                continue
            cand = ProjectivePoint.make(field, vec)
            if not X.contains_point(cand) and cand.coords != q.coords:
                o = cand
                break
        if o is None:
            verdicts.append("undetermined")
            continue
        try:
            other = entry_locus_ideal(X, o, budget)
        except (DegenerateInputError, BudgetExceededError):
            verdicts.append("undetermined")
            continue
        fwd = all(in_irrelevant_saturation(g, other, budget) for g in locus.gens)
        bwd = all(in_irrelevant_saturation(g, locus, budget) for g in other.gens)
        if fwd and bwd:
            verdicts.append("A")
        elif not fwd and not bwd:
            verdicts.append("B")
        else:
            verdicts.append("undetermined")
    if all(v == "A" for v in verdicts):
        return "A"
    if any(v == "B" for v in verdicts):
        return "B"
    return "undetermined"


def classify_entry_locus(
    X: ProjectiveVariety,
    seed: int,
    budget: Budget | None = None,
    ab_trials: int = 3,
    strategy: str = "implicit",
) -> EntryLocusReport:
    """Full entry-locus report for a catalog or file variety with r_gen = 2."""
    import time

    t0 = time.monotonic()
    field = X.field
    r = X.ambient
    n = X.meta.get("n")
    d = X.meta.get("d")
    timings = {}
    profile = secant_dims(X, 2, trials=3, seed=seed, budget=budget)
    if profile.r_gen != 2:
        raise DegenerateInputError(f"generic rank is not 2: {profile.as_dict()}")
    dim_sigma1 = profile.dim(1)
    if n is None:
        n = dim_sigma1
    gamma_pred = dim_sigma1 + n + 1 - r
    timings["secant_profile_s"] = round(time.monotonic() - t0, 3)

    t1 = time.monotonic()
    locus = None
    q = None
    gamma = None
    for attempt in range(5):
        rng = seeded_rng(("entrylocus-q", X.meta.get("key"), seed, attempt))
        cand = random_point(field, rng, r + 1, off_coordinate_hyperplanes=True)
        if X.contains_point(cand):
            continue
        trial_locus = entry_locus_ideal(X, cand, budget, strategy=strategy)
        inv = hilbert_invariants(trial_locus, budget)
        if inv.dimension != gamma_pred:
            continue
        locus, q, gamma = trial_locus, cand, inv.dimension
        break
    if locus is None:
        raise DegenerateInputError("no sampled q passed the dimension sanity check")
    timings["entry_locus_ideal_s"] = round(time.monotonic() - t1, 3)

    t2 = time.monotonic()
    ell = span_dim(locus, budget)
    _, red_degree = reduced_dim_degree(locus, seed, budget)
    timings["span_and_degree_s"] = round(time.monotonic() - t2, 3)

    t3 = time.monotonic()
    if gamma >= 1:
        comps = component_count(locus, seed, expected_degree=red_degree, budget=budget)
    else:
        comps = red_degree
    timings["components_s"] = round(time.monotonic() - t3, 3)

    genus_re = None
    degree_formula = {"applicable": False}
    if n == 2 and r == 4 and d is not None:
        rng = seeded_rng(("genus", X.meta.get("key"), seed))
        slice_gens = list(X.ideal.gens) + [random_linear_form(X.ring, rng)]
        sl = hilbert_invariants(Ideal.of(X.ring, slice_gens), budget)
        genus_re = sl.arithmetic_genus
        expected = (d - 1) * (d - 2) - 2 * genus_re
        degree_formula = {
            "applicable": True,
            "expected": expected,
            "computed": red_degree,
            "pass": expected == red_degree,
        }
    dimension_formula = {
        "expected": gamma_pred,
        "computed": gamma,
        "pass": gamma == gamma_pred,
    }

    t4 = time.monotonic()
    if gamma >= 1 and ell >= 1:
        ab = type_ab_test(X, q, locus, trials=ab_trials, seed=seed, budget=budget)
    else:
        ab = "undetermined"
    timings["type_ab_s"] = round(time.monotonic() - t4, 3)
    timings["total_s"] = round(time.monotonic() - t0, 3)

    primes = [field.p] if isinstance(field, PrimeField) else []
    report = EntryLocusReport(
        variety=X.meta.get("key", X.meta.get("name", "variety")),
        seed=seed,
        field=field.describe(),
        q=tuple(q.coords),
        gamma=gamma,
        ell=ell,
        reduced_degree=red_degree,
        component_count=comps,
        type_irreducibility="I" if comps == 1 else "II",
        type_ab=ab,
        degree_formula=degree_formula,
        dimension_formula=dimension_formula,
        genus_recomputed=genus_re,
        primes=primes,
        timings=timings,
    )
    report.locus = locus  # working artifacts for downstream checks
    report.q_point = q
    return report
