"""Projective varieties: the catalog, implicitization, projections, cones,
spans, reduced degree and point sampling.

Ambient rings use variables x0..xr; parameter rings use s0..sm.  "General"
choices are seeded small-height integers over Q and uniform residues over F_p,
made generic a posteriori by sanity checks with bounded resampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .kernel.errors import DegenerateInputError, HomogeneityError
from .kernel.fields import PrimeField
from .kernel.groebner import Budget
from .kernel.hilbert import hilbert_invariants
from .kernel.ideals import (
    Ideal,
    eliminate,
    groebner_basis,
    homogeneous_generators,
    saturate_single,
    saturate_wrt_variable,
)
from .kernel.linalg import (
    kernel_basis,
    mat_inverse,
    rank,
    row_space_intersection,
    rref,
)
from .kernel.orders import GREVLEX, Block
from .kernel.poly import Polynomial, RingContext
from .kernel.rng import seeded_rng
from .kernel.zerodim import (
    count_distinct_points,
    enumerate_points_prime_field,
    is_zero_dimensional,
    random_linear_combination,
)

QQ_HEIGHT = 1000  # height bound for "general" rational choices


# -- basic types --------------------------------------------------------------


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of P^r with the first nonzero coordinate normalized to 1."""

    coords: tuple

    @staticmethod
    def make(field, coords) -> "ProjectivePoint":
        coords = [field.coerce(c) for c in coords]
        pivot = next((c for c in coords if c != field.zero), None)
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = field.inv(pivot)
        return ProjectivePoint(tuple(field.mul(c, inv) for c in coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class LinearSubspace:
    """Span of the row points; rows are linearly independent."""

    rows: tuple  # tuple of coordinate tuples
    field: object

    @staticmethod
    def span(field, rows) -> "LinearSubspace":
        rows = [[field.coerce(c) for c in r] for r in rows]
        if rank(rows, field) != len(rows):
            raise ValueError("spanning rows are linearly dependent")
        return LinearSubspace(tuple(tuple(r) for r in rows), field)

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return len(self.rows) - 1

    def contains_point(self, pt: ProjectivePoint) -> bool:
        stacked = [list(r) for r in self.rows] + [list(pt.coords)]
        return rank(stacked, self.field) == len(self.rows)


@dataclass(frozen=True)
class Parametrization:
    ring: RingContext  # parameter ring s0..sm
    forms: tuple  # r+1 forms of a common degree

    @property
    def nparams(self) -> int:
        return self.ring.nvars

    @property
    def degree(self) -> int:
        return max(f.total_degree() for f in self.forms)

    def evaluate(self, values):
        return [f.evaluate(values) for f in self.forms]


@dataclass
class ProjectiveVariety:
    ambient: int  # r: lives in P^r
    ideal: Ideal  # homogeneous, in x0..xr
    param: Parametrization | None
    meta: dict  # name, key, seed, n, d, g, frame, ...

    @property
    def ring(self) -> RingContext:
        return self.ideal.ring

    @property
    def field(self):
        return self.ideal.ring.field

    def gens(self):
        return self.ideal.gens

    def contains_point(self, pt: ProjectivePoint) -> bool:
        zero = self.field.zero
        return all(g.evaluate(pt.coords) == zero for g in self.ideal.gens)


# -- seeded random helpers -----------------------------------------------------


def random_scalar(field, rng: random.Random):
    if isinstance(field, PrimeField):
        return rng.randrange(field.p)
    return rng.randint(-QQ_HEIGHT, QQ_HEIGHT)


def random_coords(field, rng: random.Random, n: int, avoid_zero=True):
    while True:
        coords = [field.coerce(random_scalar(field, rng)) for _ in range(n)]
        if not avoid_zero or any(c != field.zero for c in coords):
            return coords


def random_point(field, rng: random.Random, n: int, off_coordinate_hyperplanes=False):
    while True:
        coords = random_coords(field, rng, n)
        if off_coordinate_hyperplanes and any(c == field.zero for c in coords):
            continue
        return ProjectivePoint.make(field, coords)


def random_linear_form(ring: RingContext, rng: random.Random) -> Polynomial:
    return random_linear_combination(ring, rng, span=QQ_HEIGHT)


def random_invertible_matrix(field, rng: random.Random, n: int):
    for _ in range(50):
        m = [[field.coerce(random_scalar(field, rng)) for _ in range(n)] for _ in range(n)]
        if mat_inverse(m, field) is not None:
            return m
    raise DegenerateInputError("could not draw an invertible matrix")


def ambient_ring(r: int, field, prefix: str = "x") -> RingContext:
    return RingContext(tuple(f"{prefix}{i}" for i in range(r + 1)), field)


# -- linear coordinate changes -------------------------------------------------


def apply_linear_substitution(ideal: Ideal, matrix) -> Ideal:
    """Ideal of generators f(B y): columns of ``matrix`` are the images of the
    new basis vectors (so points transform by x = B y)."""
    ring = ideal.ring
    n = ring.nvars
    gens_y = ring.gens()
    images = []
    for i in range(n):
        form = ring.zero()
        for j in range(n):
            c = matrix[i][j]
            if c != ring.field.zero:
                form = form + gens_y[j].scale(c)
        images.append(form)
    return Ideal.of(ring, [g.substitute(images, ring) for g in ideal.gens])


def complete_to_basis(field, rows, n: int):
    """Extend independent rows to an invertible n x n matrix, deterministically
    preferring standard basis vectors."""
    base = [list(r) for r in rows]
    for i in range(n):
        cand = [field.one if j == i else field.zero for j in range(n)]
        trial = base + [cand]
        if rank(trial, field) == len(trial):
            base.append(cand)
        if len(base) == n:
            break
    if len(base) != n:
        raise DegenerateInputError("could not complete basis")
    return base


# -- implicitization -----------------------------------------------------------


def implicitize(
    param: Parametrization,
    field=None,
    budget: Budget | None = None,
    rng: random.Random | None = None,
) -> Ideal:
    """Ideal of the closure of the parametrization image.

    Builds the 2 x (r+1) matrix [y; P(s)], takes its 2x2 minors, saturates by
    a random combination of the parametrization forms (which removes both the
    irrelevant parameter locus and any base-point fibers), and eliminates the
    parameters.
    """
    rng = rng or random.Random(0)
    pring = param.ring
    field = field or pring.field
    r = len(param.forms) - 1
    names = tuple(pring.names) + tuple(f"x{i}" for i in range(r + 1))
    big = RingContext(names, field, Block(pring.nvars))
    m = pring.nvars
    forms_big = [
        big.from_dict({tuple(mm) + (0,) * (r + 1): c for mm, c in f.terms})
        for f in param.forms
    ]
    ys = [big.variable(m + i) for i in range(r + 1)]
    minors = []
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            minors.append(ys[i] * forms_big[j] - ys[j] * forms_big[i])
    combo = big.zero()
    for f in forms_big:
        combo = combo + f.scale(field.coerce(random_scalar(field, rng)))
    if combo.is_zero():
        combo = forms_big[0]
    sat = saturate_single(Ideal.of(big, minors), combo, budget)
    out = eliminate(sat.map_ring(big), m, budget)
    target = ambient_ring(r, field)
    out = Ideal.of(target, [Polynomial(target, g.terms) for g in out.gens])
    return homogeneous_generators(out)


def check_base_points(param: Parametrization, rng: random.Random, samples: int = 25) -> bool:
    """Probabilistic check that the forms have no common zero on random inputs."""
    field = param.ring.field
    hits = 0
    for _ in range(samples):
        values = random_coords(field, rng, param.nparams)
        if all(v == field.zero for v in param.evaluate(values)):
            hits += 1
    return hits == 0


# -- projections, cones, slices --------------------------------------------------


def project_image(
    X: ProjectiveVariety,
    center: LinearSubspace,
    budget: Budget | None = None,
    certified: bool = False,
    rng: random.Random | None = None,
) -> ProjectiveVariety:
    """Closure of the image of X under linear projection from ``center``.

    Coordinates are changed so the center is a coordinate subspace (the change
    is recorded in the result metadata), then the center block is eliminated.
    """
    rng = rng or random.Random(0)
    field = X.field
    r = X.ambient
    k = len(center.rows)
    if certified:
        forms = _vanishing_forms(center, X.ring)
        total = Ideal.of(X.ring, list(X.ideal.gens) + forms)
        if hilbert_invariants(total, budget).dimension != -1:
            raise DegenerateInputError("projection center meets the variety")
    else:
        if X.param is not None:
            for i in range(5):
                pt = sample_point(X, rng)
                if center.contains_point(pt):
                    raise DegenerateInputError("projection center meets the variety")
    cols = complete_to_basis(field, center.rows, r + 1)
    B = [[cols[j][i] for j in range(r + 1)] for i in range(r + 1)]  # columns = basis
    moved = apply_linear_substitution(X.ideal, B)
    moved = Ideal.of(X.ring.with_order(Block(k)), moved.gens)
    out = eliminate(moved, k, budget)
    new_r = r - k
    target = ambient_ring(new_r, field)
    ideal = Ideal.of(target, [Polynomial(target, g.terms) for g in out.gens])
    new_param = None
    if X.param is not None:
        binv = mat_inverse(B, field)
        rows = binv[k:]
        forms = []
        for row in rows:
            f = X.param.ring.zero()
            for c, form in zip(row, X.param.forms):
                if c != field.zero:
                    f = f + form.scale(c)
            forms.append(f)
        new_param = Parametrization(X.param.ring, tuple(forms))
    meta = dict(X.meta)
    meta["frame"] = tuple(tuple(row) for row in B)
    meta["name"] = meta.get("name", "variety") + "_proj"
    return ProjectiveVariety(new_r, ideal, new_param, meta)


def _vanishing_forms(space: LinearSubspace, ring: RingContext):
    """Linear forms cutting out the subspace."""
    normals = kernel_basis([list(r) for r in space.rows], space.field)
    forms = []
    for nvec in normals:
        data = {}
        for i, c in enumerate(nvec):
            if c != space.field.zero:
                m = [0] * ring.nvars
                m[i] = 1
                data[tuple(m)] = c
        forms.append(ring.from_dict(data))
    return forms


def cone_over(B: ProjectiveVariety, vertex_name: str | None = None) -> ProjectiveVariety:
    """Cone in P^(r+1) over B in P^r, with vertex the new coordinate point."""
    r = B.ambient + 1
    target = ambient_ring(r, B.field)
    gens = [target.from_dict({m + (0,): c for m, c in g.terms}) for g in B.ideal.gens]
    new_param = None
    if B.param is not None:
        pring = B.param.ring
        e = B.param.degree
        new_pring = RingContext(
            tuple(pring.names) + (f"s{pring.nvars}",), B.field, pring.order
        )
        lifted = [
            new_pring.from_dict({m + (0,): c for m, c in f.terms}) for f in B.param.forms
        ]
        # the cone coordinate: free parameter times a pin of degree e-1
        pin_mono = (e - 1,) + (0,) * (new_pring.nvars - 2) + (1,)
        lifted.append(new_pring.monomial(pin_mono))
        new_param = Parametrization(new_pring, tuple(lifted))
    meta = dict(B.meta)
    meta["name"] = "cone_" + meta.get("name", "variety")
    if "n" in meta:
        meta["n"] = meta["n"] + 1
    return ProjectiveVariety(r, Ideal.of(target, gens), new_param, meta)


def dehomogenize(ideal: Ideal, rng: random.Random):
    """Pass to a seeded random affine chart {c . x = 1}.

    Returns (affine ring, affine generators, chart) where chart recovers full
    projective coordinates from an affine solution vector.
    """
    ring = ideal.ring
    field = ring.field
    n = ring.nvars
    coeffs = random_coords(field, rng, n)
    pivot = max(i for i, c in enumerate(coeffs) if c != field.zero)
    names = tuple(nm for i, nm in enumerate(ring.names) if i != pivot)
    aring = RingContext(names, field)
    images = []
    slot = 0
    pivot_image = aring.constant(field.inv(coeffs[pivot]))
    remaining = []
    for i in range(n):
        if i == pivot:
            images.append(None)
            continue
        v = aring.variable(slot)
        remaining.append((i, slot))
        images.append(v)
        slot += 1
    expr = aring.constant(field.one)
    for i, s in remaining:
        expr = expr - aring.variable(s).scale(coeffs[i])
    images[pivot] = expr.scale(field.inv(coeffs[pivot]))
    gens = [g.substitute(images, aring) for g in ideal.gens]

    def chart(values):
        full = [None] * n
        acc = field.one
        for (i, s) in remaining:
            full[i] = values[s]
            acc = field.sub(acc, field.mul(coeffs[i], values[s]))
        full[pivot] = field.mul(acc, field.inv(coeffs[pivot]))
        return tuple(full)

    return aring, gens, chart


# -- dimension, degree, span -----------------------------------------------------


def reduced_dim_degree(
    ideal: Ideal, seed: int, budget: Budget | None = None
) -> tuple[int, int]:
    """(projective dimension, set-theoretic degree) of V(I).

    Dimension from Hilbert invariants; reduced degree by slicing with
    dimension-many seeded hyperplanes and counting distinct points through the
    squarefree eliminant of a random linear coordinate.  Two seeds must agree;
    a third arbitrates; persistent mismatch is an error.
    """
    inv = hilbert_invariants(ideal, budget)
    if inv.dimension < 0:
        return (-1, 0)
    if inv.dimension == 0:
        rng = seeded_rng((seed, "dim0"))
        return (0, _count_on_slice(ideal, 0, rng, budget))
    counts = []
    for round_idx in range(3):
        rng = seeded_rng((seed, "slice", round_idx))
        counts.append(_count_on_slice(ideal, inv.dimension, rng, budget))
        if round_idx == 1 and counts[0] == counts[1]:
            return (inv.dimension, counts[0])
    best = max(set(counts), key=counts.count)
    if counts.count(best) < 2:
        raise DegenerateInputError(f"slice degree arbitration failed: {counts}")
    return (inv.dimension, best)


def _count_on_slice(ideal: Ideal, dim: int, rng: random.Random, budget) -> int:
    field = ideal.ring.field
    for _ in range(5):
        gens = list(ideal.gens)
        for _ in range(dim):
            gens.append(random_linear_form(ideal.ring, rng))
        aring, agens, _ = dehomogenize(Ideal.of(ideal.ring, gens), rng)
        gb = groebner_basis(Ideal.of(aring, agens), GREVLEX, budget)
        if gb.is_unit():
            continue  # chart or slice missed every point
        if not is_zero_dimensional(gb):
            continue  # non-generic slice; retry
        return count_distinct_points(gb, rng, trials=2, budget=budget)
    raise DegenerateInputError("could not find a generic slice")


def linear_part_rows(ideal: Ideal):
    """Coefficient rows of the degree-1 elements among the generators."""
    ring = ideal.ring
    rows = []
    for g in ideal.gens:
        if g.is_zero() or g.total_degree() != 1:
            continue
        row = [ring.field.zero] * ring.nvars
        for m, c in g.terms:
            idx = next(i for i, e in enumerate(m) if e)
            row[idx] = c
        rows.append(row)
    red, piv = rref(rows, ring.field)
    return [red[i] for i in range(len(piv))]


def span_form_rows(ideal: Ideal, budget: Budget | None = None):
    """Rows of the independent linear forms vanishing on the scheme after
    irrelevant saturation: the intersection over variables of the degree-1
    parts of the per-variable saturations."""
    if not ideal.homogeneous:
        raise HomogeneityError("span computation requires a homogeneous ideal")
    ring = ideal.ring
    field = ring.field
    current = None
    for var in range(ring.nvars):
        sat = saturate_wrt_variable(ideal, var, budget)
        if any(g.total_degree() == 0 for g in sat.gens):
            continue  # unit ideal: degree-1 part is the whole space, no constraint
        rows = linear_part_rows(sat)
        if current is None:
            current = rows
        else:
            current = row_space_intersection(current, rows, field)
        if not current:
            return []
    if current is None:
        # every single-variable saturation is the unit ideal: empty scheme
        from .kernel.linalg import identity

        return identity(ring.nvars, field)
    return current


def span_dim(ideal: Ideal, budget: Budget | None = None) -> int:
    """Dimension of the linear span of the (saturated) scheme."""
    return ideal.ring.nvars - 1 - len(span_form_rows(ideal, budget))


def span_point_basis(ideal: Ideal, budget: Budget | None = None):
    """Spanning points of the linear span (kernel of the span forms)."""
    rows = span_form_rows(ideal, budget)
    field = ideal.ring.field
    if not rows:
        from .kernel.linalg import identity

        return identity(ideal.ring.nvars, field)
    return kernel_basis(rows, field)


def graded_piece_rows(ideal: Ideal, degree: int):
    """Basis of the degree-d part of the ideal as coefficient rows over the
    monomials of degree d (ordered by the ring's term order, descending)."""
    ring = ideal.ring
    field = ring.field
    monos = _monomials_of_degree(ring.nvars, degree)
    monos.sort(key=ring.order.key, reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in ideal.gens:
        e = g.total_degree()
        if not g.is_homogeneous() or e > degree:
            continue
        for shift in _monomials_of_degree(ring.nvars, degree - e):
            row = [field.zero] * len(monos)
            for m, c in g.terms:
                mm = tuple(a + b for a, b in zip(m, shift))
                row[index[mm]] = c
            rows.append(row)
    red, piv = rref(rows, field)
    return [red[i] for i in range(len(piv))], monos


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def slice_by_span(ideal: Ideal, span_rows, budget: Budget | None = None) -> Ideal:
    """Restrict a homogeneous ideal to the linear span cut out by the given
    form rows, rewritten in intrinsic coordinates of the span."""
    ring = ideal.ring
    field = ring.field
    c = len(span_rows)
    if c == 0:
        return ideal
    point_basis = kernel_basis([list(r) for r in span_rows], field)
    cols = point_basis + complete_to_basis(field, point_basis, ring.nvars)[len(point_basis):]
    B = [[cols[j][i] for j in range(ring.nvars)] for i in range(ring.nvars)]
    moved = apply_linear_substitution(ideal, B)
    keep = ring.nvars - c
    target = ambient_ring(keep - 1, field)
    gens = []
    for g in moved.gens:
        data = {}
        for m, coeff in g.terms:
            if any(m[keep:]):
                continue
            data[m[:keep]] = coeff
        gg = target.from_dict(data)
        if not gg.is_zero():
            gens.append(gg)
    return Ideal.of(target, gens)


# -- point sampling ---------------------------------------------------------------


def sample_point(X: ProjectiveVariety, rng: random.Random) -> ProjectivePoint:
    """Seeded point on a parametrized variety."""
    if X.param is None:
        raise DegenerateInputError("sample_point needs a parametrization")
    field = X.field
    for _ in range(40):
        values = random_coords(field, rng, X.param.nparams)
        coords = X.param.evaluate(values)
        if any(c != field.zero for c in coords):
            return ProjectivePoint.make(field, coords)
    raise DegenerateInputError("parametrization kept hitting base points")


def witness_points(
    X: ProjectiveVariety, rng: random.Random, want: int = 2, budget: Budget | None = None
):
    """Distinct F_p-rational points on an implicit variety, by slicing down to
    dimension zero and enumerating; retries slices until enough points split."""
    field = X.field
    if not isinstance(field, PrimeField):
        raise DegenerateInputError("witness sampling runs over a prime field")
    inv = hilbert_invariants(X.ideal, budget)
    if inv.dimension < 0:
        raise DegenerateInputError("empty variety")
    found = []
    seen = set()
    for _ in range(12):
        gens = list(X.ideal.gens)
        for _ in range(inv.dimension):
            gens.append(random_linear_form(X.ring, rng))
        aring, agens, chart = dehomogenize(Ideal.of(X.ring, gens), rng)
        gb = groebner_basis(Ideal.of(aring, agens), GREVLEX, budget)
        if gb.is_unit() or not is_zero_dimensional(gb):
            continue
        pts = enumerate_points_prime_field(gb, rng, budget, require_all=False)
        if not pts:
            continue
        for values in pts:
            pt = ProjectivePoint.make(field, chart(values))
            if pt.coords not in seen and X.contains_point(pt):
                seen.add(pt.coords)
                found.append(pt)
        if len(found) >= want:
            return found[:want]
    if found:
        return found
    raise DegenerateInputError("no rational witness points found")
