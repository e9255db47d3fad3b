"""Secant dimensions by tangent-space stacking, generic rank, and enumeration
of length-2 decompositions of a point.

Secant dimensions use the classical tangent-span computation: the tangent
space to the s-th secant at a general point of the span of s general points is
the span of the tangent spaces at those points, so its dimension is the rank
of the stacked Jacobians.  Ranks are maximized over independent trials since a
special sample can only under-estimate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import (
    ProjectivePoint,
    ProjectiveVariety,
    random_coords,
    witness_points,
)
from .kernel.errors import DegenerateInputError
from .kernel.fields import PrimeField
from .kernel.groebner import Budget
from .kernel.hilbert import hilbert_invariants
from .kernel.ideals import Ideal, groebner_basis
from .kernel.linalg import kernel_basis, rank
from .kernel.orders import GREVLEX
from .kernel.poly import RingContext
from .kernel.rng import seeded_rng
from .kernel.zerodim import (
    count_distinct_points,
    enumerate_points_prime_field,
    is_zero_dimensional,
)


@dataclass(frozen=True)
class SecantStep:
    s: int
    dim: int
    expected: int
    defective: bool


@dataclass(frozen=True)
class SecantProfile:
    steps: tuple
    r_gen: int | None  # None: undetermined up to s_max

    def dim(self, s: int) -> int:
        return self.steps[s - 1].dim

    def as_dict(self):
        return {
            "dims": [
                {"s": st.s, "dim": st.dim, "expected": st.expected, "defective": st.defective}
                for st in self.steps
            ],
            "r_gen": self.r_gen,
        }


@dataclass(frozen=True)
class DecompositionSet:
    positive_dimensional: bool
    count: int | None  # number of unordered pairs (None if positive-dimensional)
    pairs: tuple | None  # explicit pairs when rational over the field

    def as_dict(self):
        out = {
            "positive_dimensional": self.positive_dimensional,
            "count": self.count,
        }
        if self.pairs is not None:
            out["pairs"] = [
                [[str(c) for c in a.coords], [str(c) for c in b.coords]]
                for a, b in self.pairs
            ]
        return out


def _param_jacobian_rows(X: ProjectiveVariety, rng: random.Random):
    """Rows spanning the affine tangent space at a random parametrized point."""
    param = X.param
    field = X.field
    jac = [[f.derivative(i) for i in range(param.nparams)] for f in param.forms]
    for _ in range(20):
        values = random_coords(field, rng, param.nparams)
        rows = []
        for i in range(param.nparams):
            row = [jac[j][i].evaluate(values) for j in range(len(param.forms))]
            rows.append(row)
        if any(any(c != field.zero for c in row) for row in rows):
            return rows
    raise DegenerateInputError("degenerate parametrized sample")


def _implicit_tangent_rows(X: ProjectiveVariety, pt: ProjectivePoint):
    """Affine tangent space at a point of an implicit variety: the kernel of
    the generator Jacobian evaluated there."""
    field = X.field
    rows = []
    for g in X.ideal.gens:
        rows.append([g.derivative(i).evaluate(pt.coords) for i in range(X.ring.nvars)])
    return kernel_basis(rows, field)


def secant_dims(
    X: ProjectiveVariety,
    s_max: int,
    trials: int = 3,
    seed: int = 0,
    budget: Budget | None = None,
) -> SecantProfile:
    """Dimensions of the secants sigma_s for s = 1..s_max, and the generic rank.

    Parametrized varieties stack parametrization Jacobians at seeded random
    parameter points; implicit ones use generator-Jacobian kernels at rational
    witness points (prime fields only).
    """
    field = X.field
    r = X.ambient
    n = X.meta.get("n")
    if n is None:
        n = hilbert_invariants(X.ideal, budget).dimension
    best = [0] * s_max
    for trial in range(trials):
        rng = seeded_rng(("terracini", X.meta.get("key"), seed, trial))
        if X.param is not None:
            blocks = [_param_jacobian_rows(X, rng) for _ in range(s_max)]
        else:
            pts = witness_points(X, rng, want=s_max, budget=budget)
            if len(pts) < s_max:
                raise DegenerateInputError("not enough witness points for the secant profile")
            blocks = [_implicit_tangent_rows(X, p) for p in pts]
        stacked = []
        for s in range(1, s_max + 1):
            stacked.extend(blocks[s - 1])
            dim_s = rank(stacked, field) - 1
            if dim_s > best[s - 1]:
                best[s - 1] = dim_s
    steps = []
    r_gen = None
    for s in range(1, s_max + 1):
        expected = min(s * (n + 1) - 1, r)
        dim_s = best[s - 1]
        steps.append(SecantStep(s, dim_s, expected, dim_s < expected))
        if r_gen is None and dim_s == r:
            r_gen = s
    return SecantProfile(tuple(steps), r_gen)


def _incidence_affine_system(X: ProjectiveVariety, q: ProjectivePoint, rng: random.Random):
    """Affine incidence system for rank-2 decompositions through q.

    Points b on the line through a and q are written b = lam * a + q (the
    second line coordinate is fixed to 1, which exactly removes the diagonal
    branch b ~ a).  The a-block is dehomogenized on a seeded random chart.
    Returns the system and a chart map recovering (a, lam) from a solution.
    """
    ring = X.ring
    field = X.field
    n = ring.nvars
    proj_gens = list(X.ideal.gens)
    coeffs = random_coords(field, rng, n)
    pivot = max(i for i, c in enumerate(coeffs) if c != field.zero)
    names = tuple(nm for i, nm in enumerate(ring.names) if i != pivot) + ("lam",)
    aff = RingContext(names, field)
    lam = aff.variable(aff.nvars - 1)
    a_imgs = []
    slot = 0
    rest = []
    for i in range(n):
        if i == pivot:
            a_imgs.append(None)
            continue
        a_imgs.append(aff.variable(slot))
        rest.append((i, slot))
        slot += 1
    expr = aff.constant(field.one)
    for i, s in rest:
        expr = expr - aff.variable(s).scale(coeffs[i])
    a_imgs[pivot] = expr.scale(field.inv(coeffs[pivot]))
    b_imgs = [lam * a_imgs[i] + aff.constant(q.coords[i]) for i in range(n)]
    gens = [g.substitute(a_imgs, aff) for g in proj_gens]
    gens += [g.substitute(b_imgs, aff) for g in proj_gens]

    def chart(values):
        full = [None] * n
        acc = field.one
        for (i, s) in rest:
            full[i] = values[s]
            acc = field.sub(acc, field.mul(coeffs[i], values[s]))
        full[pivot] = field.mul(acc, field.inv(coeffs[pivot]))
        return tuple(full), values[aff.nvars - 1]

    return Ideal.of(aff, gens), chart


def two_decompositions(
    X: ProjectiveVariety,
    q: ProjectivePoint,
    seed: int = 0,
    budget: Budget | None = None,
    enumerate_pairs: bool = True,
) -> DecompositionSet:
    """The set S(X, q) of unordered pairs {a, b} on X with q in their span.

    Counting is chart- and field-robust (squarefree eliminant degree); explicit
    pairs are produced when the solution coordinates split over a prime field.
    """
    if X.contains_point(q):
        raise DegenerateInputError("base point lies on the variety")
    field = X.field
    counts = []
    best = None
    for round_idx in range(3):
        rng = seeded_rng(("decomp", X.meta.get("key"), seed, round_idx))
        system, chart = _incidence_affine_system(X, q, rng)
        gb = groebner_basis(system, GREVLEX, budget)
        if gb.is_unit():
            counts.append(0)
            continue
        if not is_zero_dimensional(gb):
            return DecompositionSet(True, None, None)
        c = count_distinct_points(gb, rng, trials=2, budget=budget)
        counts.append(c)
        if best is None or c > counts[best[0]]:
            best = (round_idx, gb, chart, rng)
        if round_idx == 1 and counts[0] == counts[1]:
            break
    solutions = max(counts)
    if solutions % 2 != 0:
        raise DegenerateInputError(f"odd ordered-solution count {solutions}")
    npairs = solutions // 2
    pairs = None
    if enumerate_pairs and npairs and best is not None and isinstance(field, PrimeField):
        _, gb, chart, rng = best
        raw = enumerate_points_prime_field(gb, rng, budget)
        if raw is not None and len(raw) == solutions:
            seen = {}
            for values in raw:
                coords, lam = chart(values)
                a = ProjectivePoint.make(field, coords)
                b_coords = [
                    field.add(field.mul(lam, c), qc) for c, qc in zip(coords, q.coords)
                ]
                b = ProjectivePoint.make(field, b_coords)
                key = tuple(sorted([a.coords, b.coords]))
                seen[key] = (a, b) if a.coords <= b.coords else (b, a)
            if len(seen) == npairs:
                pairs = tuple(seen[k] for k in sorted(seen))
    return DecompositionSet(False, npairs, pairs)
