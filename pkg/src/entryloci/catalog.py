"""The variety catalog: rational normal curves, the cubic scroll, cones,
Veronese surfaces and projections, and seeded random complete intersections.

Seeded instances are sanity-checked (dimension, degree, genus, parametrization
consistency) and automatically reseeded up to 5 attempts before failing.
"""

from __future__ import annotations

import random

from .geometry import (
    LinearSubspace,
    Parametrization,
    ProjectiveVariety,
    ambient_ring,
    cone_over,
    implicitize,
    project_image,
    random_linear_form,
    random_scalar,
)
from .kernel.errors import DegenerateInputError
from .kernel.fields import QQ
from .kernel.groebner import Budget
from .kernel.hilbert import hilbert_invariants
from .kernel.ideals import Ideal
from .kernel.linalg import det
from .kernel.poly import RingContext
from .kernel.rng import seeded_rng


def catalog_keys():
    return [
        "rnc3",
        "rnc4",
        "rnc5",
        "rnc6",
        "rational_quartic3",
        "elliptic4",
        "scroll12",
        "cone_twisted_cubic",
        "veronese5",
        "veronese_proj4",
        "delpezzo4",
        "k3_23",
    ]


_EXPECTED = {
    "rnc3": (1, 3, 0),
    "rnc4": (1, 4, 0),
    "rnc5": (1, 5, 0),
    "rnc6": (1, 6, 0),
    "rational_quartic3": (1, 4, 0),
    "elliptic4": (1, 4, 1),
    "scroll12": (2, 3, 0),
    "cone_twisted_cubic": (2, 3, 0),
    "veronese5": (2, 4, 0),
    "veronese_proj4": (2, 4, 0),
    "delpezzo4": (2, 4, 1),
    "k3_23": (2, 6, 4),
}


def catalog_metadata(key: str):
    n, d, g = _EXPECTED[key]
    return {"n": n, "d": d, "g": g}


def normalize_key(key: str) -> str:
    k = key.strip().lower().replace("(", "").replace(")", "")
    if k in _EXPECTED:
        return k
    if k.startswith("rnc") and k[3:].isdigit():
        return "rnc" + k[3:]
    raise KeyError(f"unknown catalog key {key!r}")


def _monomials_of_degree(n, d):
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def _random_form(ring: RingContext, degree: int, rng: random.Random):
    field = ring.field
    while True:
        data = {m: field.coerce(random_scalar(field, rng)) for m in _monomials_of_degree(ring.nvars, degree)}
        f = ring.from_dict(data)
        if not f.is_zero() and f.total_degree() == degree:
            return f


def _check_param_consistency(var: ProjectiveVariety):
    if var.param is None:
        return True
    images = list(var.param.forms)
    pring = var.param.ring
    return all(g.substitute(images, pring).is_zero() for g in var.ideal.gens)


def _rnc(d: int, field) -> ProjectiveVariety:
    ring = ambient_ring(d, field)
    xs = ring.gens()
    gens = []
    for i in range(d):
        for j in range(i + 1, d):
            gens.append(xs[i] * xs[j + 1] - xs[i + 1] * xs[j])
    pring = RingContext(("s0", "s1"), field)
    s, t = pring.gens()
    forms = tuple(s ** (d - i) * t**i for i in range(d + 1))
    meta = {"name": f"rnc{d}", "key": f"rnc{d}", **catalog_metadata(f"rnc{d}")}
    return ProjectiveVariety(d, Ideal.of(ring, gens), Parametrization(pring, forms), meta)


def _scroll12(field) -> ProjectiveVariety:
    # 2x2 minors of [[x0, x2, x3], [x1, x3, x4]]: the cubic scroll S(1,2),
    # parametrized by the conics through one point of the plane
    ring = ambient_ring(4, field)
    x0, x1, x2, x3, x4 = ring.gens()
    gens = [x0 * x3 - x1 * x2, x0 * x4 - x1 * x3, x2 * x4 - x3 * x3]
    pring = RingContext(("s0", "s1", "s2"), field)
    z0, z1, z2 = pring.gens()
    forms = (z0 * z1, z0 * z2, z1 * z1, z1 * z2, z2 * z2)
    meta = {"name": "scroll12", "key": "scroll12", **catalog_metadata("scroll12")}
    return ProjectiveVariety(4, Ideal.of(ring, gens), Parametrization(pring, forms), meta)


def _veronese5(field) -> ProjectiveVariety:
    ring = ambient_ring(5, field)
    x = ring.gens()
    cat = [[x[0], x[1], x[2]], [x[1], x[3], x[4]], [x[2], x[4], x[5]]]
    gens = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    g = cat[r1][c1] * cat[r2][c2] - cat[r1][c2] * cat[r2][c1]
                    if not g.is_zero() and g not in gens:
                        gens.append(g)
    pring = RingContext(("s0", "s1", "s2"), field)
    z0, z1, z2 = pring.gens()
    forms = (z0 * z0, z0 * z1, z0 * z2, z1 * z1, z1 * z2, z2 * z2)
    meta = {"name": "veronese5", "key": "veronese5", **catalog_metadata("veronese5")}
    return ProjectiveVariety(5, Ideal.of(ring, gens), Parametrization(pring, forms), meta)


def _catalecticant_det(field, coords):
    a0, a1, a2, a3, a4, a5 = coords
    m = [[a0, a1, a2], [a1, a3, a4], [a2, a4, a5]]
    return det(m, field)


def _veronese_proj4(field, rng: random.Random, budget) -> ProjectiveVariety:
    v5 = _veronese5(field)
    for _ in range(30):
        coords = [field.coerce(random_scalar(field, rng)) for _ in range(6)]
        if any(c != field.zero for c in coords) and _catalecticant_det(field, coords) != field.zero:
            break
    else:
        raise DegenerateInputError("no center off the secant cubic found")
    center = LinearSubspace.span(field, [coords])
    out = project_image(v5, center, budget=budget, rng=rng)
    out.meta.update(catalog_metadata("veronese_proj4"))
    out.meta["name"] = "veronese_proj4"
    out.meta["key"] = "veronese_proj4"
    return out


def _rational_quartic3(field, budget) -> ProjectiveVariety:
    pring = RingContext(("s0", "s1"), field)
    s, t = pring.gens()
    forms = (s**4, s**3 * t, s * t**3, t**4)
    param = Parametrization(pring, forms)
    ideal = implicitize(param, field, budget, random.Random(17))
    meta = {
        "name": "rational_quartic3",
        "key": "rational_quartic3",
        **catalog_metadata("rational_quartic3"),
    }
    return ProjectiveVariety(3, ideal, param, meta)


def _complete_intersection(key, ambient, degrees, field, rng, budget) -> ProjectiveVariety:
    ring = ambient_ring(ambient, field)
    gens = [_random_form(ring, d, rng) for d in degrees]
    meta = {"name": key, "key": key, **catalog_metadata(key)}
    return ProjectiveVariety(ambient, Ideal.of(ring, gens), None, meta)


def _pencil_root_count(var: ProjectiveVariety, budget) -> int:
    """Distinct roots of det(l*A + m*B) for the quadric pencil of a curve in P^3."""
    from .segre import quadric_pencil, pencil_det_distinct_roots

    pencil = quadric_pencil(var, budget)
    return pencil_det_distinct_roots(pencil)


def build_catalog_variety(
    key: str, seed: int, field=None, budget: Budget | None = None
) -> ProjectiveVariety:
    """Construct a catalog entry; seeded instances are reseeded on sanity failure."""
    key = normalize_key(key)
    field = field or QQ
    n_exp, d_exp, g_exp = _EXPECTED[key]
    last = None
    for attempt in range(5):
        rng = seeded_rng(("catalog", key, seed, attempt))
        try:
            if key.startswith("rnc"):
                var = _rnc(int(key[3:]), field)
            elif key == "scroll12":
                var = _scroll12(field)
            elif key == "cone_twisted_cubic":
                var = cone_over(_rnc(3, field))
                var.meta.update(catalog_metadata(key))
                var.meta["name"] = key
                var.meta["key"] = key
            elif key == "veronese5":
                var = _veronese5(field)
            elif key == "veronese_proj4":
                var = _veronese_proj4(field, rng, budget)
            elif key == "rational_quartic3":
                var = _rational_quartic3(field, budget)
            elif key == "delpezzo4":
                var = _complete_intersection(key, 4, (2, 2), field, rng, budget)
            elif key == "elliptic4":
                var = _complete_intersection(key, 3, (2, 2), field, rng, budget)
            elif key == "k3_23":
                var = _complete_intersection(key, 4, (2, 3), field, rng, budget)
            else:
                raise KeyError(key)
            var.meta["seed"] = seed
            var.meta["field"] = field.describe()
            _sanity_check(var, key, rng, budget)
            return var
        except DegenerateInputError as err:
            last = err
            continue
    raise DegenerateInputError(f"catalog entry {key} failed sanity checks: {last}")


def _sanity_check(var: ProjectiveVariety, key: str, rng: random.Random, budget):
    n_exp, d_exp, g_exp = _EXPECTED[key]
    if not _check_param_consistency(var):
        raise DegenerateInputError("parametrization does not satisfy the ideal")
    inv = hilbert_invariants(var.ideal, budget)
    if (inv.dimension, inv.degree) != (n_exp, d_exp):
        raise DegenerateInputError(
            f"{key}: got (dim, deg) = ({inv.dimension}, {inv.degree}), "
            f"expected ({n_exp}, {d_exp})"
        )
    if inv.dimension == 1 and inv.arithmetic_genus != g_exp:
        raise DegenerateInputError(
            f"{key}: arithmetic genus {inv.arithmetic_genus}, expected {g_exp}"
        )
    if key in ("delpezzo4", "k3_23"):
        slice_gens = list(var.ideal.gens) + [random_linear_form(var.ring, rng)]
        sl = hilbert_invariants(Ideal.of(var.ring, slice_gens), budget)
        if (sl.dimension, sl.degree, sl.arithmetic_genus) != (1, d_exp, g_exp):
            raise DegenerateInputError(f"{key}: hyperplane slice genus check failed")
    if key == "elliptic4":
        if _pencil_root_count(var, budget) != 4:
            raise DegenerateInputError("elliptic quartic pencil is degenerate")
