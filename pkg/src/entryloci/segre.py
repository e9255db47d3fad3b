"""Segre points of space curves, the quadric-pencil count for elliptic
quartics, and the pair test for curves with coinciding projections.

A point is a Segre point of a curve when projecting away from it drops the
reduced image degree below the curve degree (the projection is then a
non-trivial cover of its image).  For a smooth quartic complete-intersection
curve in P^3 the Segre points are the vertices of the singular members of its
quadric pencil: the distinct roots of the binary quartic det(l*A + m*B).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import (
    LinearSubspace,
    ProjectivePoint,
    ProjectiveVariety,
    ambient_ring,
    graded_piece_rows,
    project_image,
    reduced_dim_degree,
    span_form_rows,
)
from .kernel.errors import DegenerateInputError
from .kernel.fields import PrimeField
from .kernel.groebner import Budget
from .kernel.ideals import Ideal, radical_membership
from .kernel.linalg import kernel_basis, rank, row_space_intersection
from .kernel.rng import seeded_rng
from .kernel.univar import u_degree, u_roots_prime_field, u_squarefree_part, u_trim


@dataclass(frozen=True)
class SegreVerdict:
    point: tuple
    curve: str
    verdict: bool
    image_degree: int
    source_degree: int

    def as_dict(self):
        return {
            "point": [str(c) for c in self.point],
            "curve": self.curve,
            "verdict": self.verdict,
            "image_degree": self.image_degree,
            "source_degree": self.source_degree,
        }


@dataclass(frozen=True)
class QuadricPencil:
    a: tuple  # symmetric 4x4 matrix
    b: tuple
    det_form: tuple  # binary quartic coefficients: det(l*A + m*B), l-degree ascending
    field: object


def quadric_pencil(curve: ProjectiveVariety | Ideal, budget: Budget | None = None) -> QuadricPencil:
    """Extract the pencil of quadrics through a curve in P^3 from the degree-2
    graded piece of its ideal; errors unless that piece is 2-dimensional."""
    ideal = curve.ideal if isinstance(curve, ProjectiveVariety) else curve
    ring = ideal.ring
    field = ring.field
    if ring.nvars != 4:
        raise DegenerateInputError("quadric pencils live in P^3")
    rows, monos = graded_piece_rows(ideal, 2)
    if len(rows) != 2:
        raise DegenerateInputError(f"pencil not 2-dimensional (got {len(rows)} quadrics)")
    mats = [_symmetric_matrix(row, monos, field) for row in rows]
    det_form = _pencil_det_form(mats[0], mats[1], field)
    if all(c == field.zero for c in det_form):
        raise DegenerateInputError("pencil determinant form vanishes identically")
    return QuadricPencil(
        tuple(tuple(r) for r in mats[0]), tuple(tuple(r) for r in mats[1]), tuple(det_form), field
    )


def _symmetric_matrix(row, monos, field):
    m = [[field.zero] * 4 for _ in range(4)]
    half = field.inv(field.coerce(2))
    for coeff, mono in zip(row, monos):
        if coeff == field.zero:
            continue
        support = [i for i, e in enumerate(mono) if e]
        if len(support) == 1:
            i = support[0]
            if mono[i] == 2:
                m[i][i] = coeff
        else:
            i, j = support
            v = field.mul(coeff, half)
            m[i][j] = v
            m[j][i] = v
    return m


def _pencil_det_form(a, b, field):
    """Coefficients of det(l*A + m*B) as a binary quartic, by interpolation in
    l at m = 1 plus the leading coefficient det(A)."""
    from .kernel.linalg import det
    from .kernel.univar import u_interpolate

    xs, ys = [], []
    t = 0
    while len(xs) < 5:
        tv = field.coerce(t)
        t += 1
        m = [
            [field.add(field.mul(tv, a[i][j]), b[i][j]) for j in range(4)]
            for i in range(4)
        ]
        xs.append(tv)
        ys.append(det(m, field))
    coeffs = u_interpolate(xs, ys, field)
    coeffs = list(coeffs) + [field.zero] * (5 - len(coeffs))
    return coeffs


def pencil_det_distinct_roots(pencil: QuadricPencil) -> int:
    """Distinct projective roots of the binary determinant quartic."""
    field = pencil.field
    f = u_trim(list(pencil.det_form), field)
    if not f:
        raise DegenerateInputError("determinant form is zero")
    finite = u_degree(u_squarefree_part(f, field))
    at_infinity = 1 if u_degree(f) < 4 else 0  # root l:m = 1:0 when det(A) side collapses
    return finite + at_infinity


def pencil_vertices(pencil: QuadricPencil, rng: random.Random):
    """Vertices of the singular pencil members, when the determinant quartic
    splits over the prime field; None otherwise."""
    field = pencil.field
    if not isinstance(field, PrimeField):
        raise DegenerateInputError("vertex extraction runs over a prime field")
    f = u_trim(list(pencil.det_form), field)
    sf = u_squarefree_part(f, field)
    roots = u_roots_prime_field(sf, field, rng)
    if len(roots) != u_degree(sf):
        return None
    lam_mu = [(rt, field.one) for rt in roots]
    if u_degree(f) < 4:
        lam_mu.append((field.one, field.zero))
    vertices = []
    for l, m in lam_mu:
        mat = [
            [
                field.add(field.mul(l, pencil.a[i][j]), field.mul(m, pencil.b[i][j]))
                for j in range(4)
            ]
            for i in range(4)
        ]
        kb = kernel_basis(mat, field)
        if len(kb) != 1:
            raise DegenerateInputError("singular pencil member has a positive-dimensional vertex")
        vertices.append(ProjectivePoint.make(field, kb[0]))
    return vertices


def points_variety(field, pts, name: str = "points") -> ProjectiveVariety:
    """The reduced variety of a finite point set, with forms through degree 2."""
    n = len(pts[0].coords)
    ring = ambient_ring(n - 1, field)
    gens = []
    for degree in (1, 2):
        monos = _monomials_of_degree(n, degree)
        rows = []
        for p in pts:
            row = []
            for m in monos:
                v = field.one
                for i, e in enumerate(m):
                    for _ in range(e):
                        v = field.mul(v, p.coords[i])
                row.append(v)
            rows.append(row)
        for vec in kernel_basis(rows, field):
            data = {m: c for m, c in zip(monos, vec) if c != field.zero}
            if data:
                gens.append(ring.from_dict(data))
    meta = {"name": name, "key": name, "points": tuple(pts), "n": 0, "d": len(pts)}
    return ProjectiveVariety(n - 1, Ideal.of(ring, gens), None, meta)


def _monomials_of_degree(n, d):
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def is_segre_point(
    Y: ProjectiveVariety,
    o: ProjectivePoint,
    seed: int = 0,
    budget: Budget | None = None,
    source_degree: int | None = None,
) -> SegreVerdict:
    """Does projection away from o identify points of Y?

    Curves: compare the reduced image degree with the curve degree.  Finite
    pairs {a, b}: true exactly when o lies on their line, away from both.
    """
    if Y.contains_point(o):
        raise DegenerateInputError("candidate Segre point lies on the curve")
    field = Y.field
    pts = Y.meta.get("points")
    if pts is not None:
        if len(pts) != 2:
            raise DegenerateInputError("finite-set variant expects exactly two points")
        a, b = pts
        stacked = [list(a.coords), list(b.coords), list(o.coords)]
        on_line = rank(stacked, field) == 2
        verdict = on_line and o.coords != a.coords and o.coords != b.coords
        return SegreVerdict(tuple(o.coords), Y.meta.get("key", "points"), verdict, 1 if verdict else 2, 2)
    if source_degree is None:
        source_degree = Y.meta.get("d")
    if source_degree is None:
        _, source_degree = reduced_dim_degree(Y.ideal, seed, budget)
    center = LinearSubspace.span(field, [list(o.coords)])
    image = project_image(Y, center, budget=budget, rng=seeded_rng(("segre", seed)))
    _, img_degree = reduced_dim_degree(image.ideal, seed, budget)
    return SegreVerdict(
        tuple(o.coords),
        Y.meta.get("key", Y.meta.get("name", "curve")),
        img_degree < source_degree,
        img_degree,
        source_degree,
    )


def segre_count_elliptic_quartic(
    C: ProjectiveVariety, seed: int = 0, budget: Budget | None = None, want_vertices: bool = True
):
    """Count (and over a splitting prime, the vertices) of the quadric cones
    through a degree-4 genus-1 complete-intersection curve in P^3."""
    dim, deg = reduced_dim_degree(C.ideal, seed, budget)
    if (dim, deg) != (1, 4):
        raise DegenerateInputError(f"not a quartic curve: (dim, deg) = ({dim}, {deg})")
    pencil = quadric_pencil(C, budget)
    count = pencil_det_distinct_roots(pencil)
    vertices = None
    if want_vertices and isinstance(C.field, PrimeField):
        vertices = pencil_vertices(pencil, seeded_rng(("vertices", seed)))
        if vertices is not None:
            checked = []
            for v in vertices:
                verdict = is_segre_point(C, v, seed, budget, source_degree=4)
                if not verdict.verdict:
                    raise DegenerateInputError("pencil vertex failed the projection test")
                checked.append(v)
            vertices = checked
    return count, vertices


def union_span_is_ambient(Y: ProjectiveVariety, T: ProjectiveVariety, budget=None) -> bool:
    """span(Y u T) = P^r, via the intersection of the span form spaces."""
    rows_y = span_form_rows(Y.ideal, budget)
    rows_t = span_form_rows(T.ideal, budget)
    if not rows_y or not rows_t:
        return True
    both = row_space_intersection(rows_y, rows_t, Y.field)
    return len(both) == 0


def pair_segre_test(
    Y: ProjectiveVariety,
    T: ProjectiveVariety,
    o: ProjectivePoint,
    seed: int = 0,
    budget: Budget | None = None,
) -> bool:
    """True when the projections of T and Y away from o coincide as sets
    (tested through reduced containment of the image ideals)."""
    if Y.ideal.gens == T.ideal.gens:
        raise DegenerateInputError("pair test needs two distinct curves")
    if Y.contains_point(o) or T.contains_point(o):
        raise DegenerateInputError("candidate point lies on one of the curves")
    if not union_span_is_ambient(Y, T, budget):
        raise DegenerateInputError("the two curves do not span the ambient space")
    field = Y.field
    center = LinearSubspace.span(field, [list(o.coords)])
    rng = seeded_rng(("pair-segre", seed))
    img_y = project_image(Y, center, budget=budget, rng=rng)
    img_t = project_image(T, center, budget=budget, rng=rng)
    # V(J_T) subset of V(J_Y)  <=>  every generator of J_Y vanishes on V(J_T)
    fwd = all(radical_membership(g, img_t.ideal, budget) for g in img_y.ideal.gens)
    if not fwd:
        return False
    bwd = all(radical_membership(g, img_y.ideal, budget) for g in img_t.ideal.gens)
    return fwd and bwd
