"""Ideals, Groebner bases, elimination, saturation and membership tests."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomogeneityError, RingMismatchError
from .groebner import Budget, buchberger, normal_form as nf_terms, spolynomial
from .orders import GREVLEX, Block
from .poly import Polynomial, RingContext


@dataclass(frozen=True)
class Ideal:
    """Generator list in a fixed ring; zero generators are dropped on build."""

    ring: RingContext
    gens: tuple
    homogeneous: bool

    @staticmethod
    def of(ring: RingContext, gens) -> "Ideal":
        kept = []
        for g in gens:
            if g.ring.names != ring.names or g.ring.field != ring.field:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                kept.append(Polynomial(ring, g.terms) if g.ring != ring else g)
        homog = all(g.is_homogeneous() for g in kept)
        return Ideal(ring, tuple(kept), homog)

    def map_ring(self, ring: RingContext) -> "Ideal":
        """Reinterpret generators in a ring with the same names and field."""
        return Ideal.of(ring, [Polynomial(ring, g.terms) for g in self.gens])


@dataclass(frozen=True)
class GroebnerBasis:
    source: Ideal
    basis: tuple
    order: object

    @property
    def ring(self) -> RingContext:
        return self.source.ring.with_order(self.order)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].total_degree() == 0


_GB_CACHE: dict = {}
_GB_CACHE_LIMIT = 512


def groebner_basis(ideal: Ideal, order=None, budget: Budget | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order`` (default: ring's order)."""
    order = order if order is not None else ideal.ring.order
    ring = ideal.ring.with_order(order)
    cache_key = (ring, ideal.gens)
    hit = _GB_CACHE.get(cache_key)
    if hit is not None:
        return GroebnerBasis(ideal, hit, order)
    gens = [Polynomial(ring, g.terms) for g in ideal.gens]
    # construction order is irrelevant to the reduced basis; sorting makes
    # the computation independent of generator ordering quirks
    gens.sort(key=lambda p: (p.total_degree(), p.terms))
    basis = tuple(buchberger(gens, ring, budget))
    if len(_GB_CACHE) >= _GB_CACHE_LIMIT:
        _GB_CACHE.clear()
    _GB_CACHE[cache_key] = basis
    return GroebnerBasis(ideal, basis, order)


def normal_form(f: Polynomial, gb: GroebnerBasis, budget: Budget | None = None) -> Polynomial:
    ring = gb.ring
    if f.ring.names != ring.names or f.ring.field != ring.field:
        raise RingMismatchError("polynomial and basis live in different rings")
    g = Polynomial(ring, f.terms) if f.ring != ring else f
    g = ring.from_dict(dict(g.terms))
    return nf_terms(g, gb.basis, budget)


def ideal_contains(gb: GroebnerBasis, other: Ideal, budget: Budget | None = None) -> bool:
    """True when every generator of ``other`` reduces to zero against ``gb``."""
    return all(normal_form(g, gb, budget).is_zero() for g in other.gens)


def verify_groebner_basis(gb: GroebnerBasis, budget: Budget | None = None) -> bool:
    """Exhaustive S-polynomial closure check (meant for bases of modest size)."""
    basis = list(gb.basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spolynomial(basis[i], basis[j])
            if not nf_terms(s, basis, budget).is_zero():
                return False
    for g in basis:
        if g.is_zero() or g.leading_coeff() != gb.ring.field.one:
            return False
        for h in basis:
            if h is g:
                continue
            lt = h.leading_monomial()
            if any(all(a >= b for a, b in zip(m, lt)) for m, _ in g.terms):
                return False
    return True


# -- elimination --------------------------------------------------------------


def eliminate(ideal: Ideal, k: int, budget: Budget | None = None) -> Ideal:
    """Intersection of the ideal with the subring omitting the first k variables.

    Computed from a block(k) Groebner basis; the result lives in the subring
    (for k = 0 this is just a Groebner basis of the input in its own ring).
    """
    if k == 0:
        gb = groebner_basis(ideal, GREVLEX, budget)
        return Ideal.of(ideal.ring.with_order(GREVLEX), gb.basis)
    gb = groebner_basis(ideal, Block(k), budget)
    sub = ideal.ring.subring(k)
    kept = []
    for g in gb.basis:
        if all(all(e == 0 for e in m[:k]) for m, _ in g.terms):
            kept.append(sub.from_dict({m[k:]: c for m, c in g.terms}))
    return Ideal.of(sub, kept)


def _fresh_name(ring: RingContext, base: str) -> str:
    name = base
    n = 0
    while name in ring.names:
        n += 1
        name = f"{base}{n}"
    return name


def extend_front(ideal: Ideal, count: int, base: str = "aux"):
    """Embed the ideal into a ring with ``count`` fresh leading variables."""
    ring = ideal.ring
    fresh = []
    for i in range(count):
        fresh.append(_fresh_name(ring, f"{base}_{i}" if count > 1 else base))
    big = ring.extend(fresh, front=True)
    pad = (0,) * count
    gens = [big.from_dict({pad + m: c for m, c in g.terms}) for g in ideal.gens]
    return big, gens


def intersect(a: Ideal, b: Ideal, budget: Budget | None = None) -> Ideal:
    """Two-ideal intersection via the u*I + (1-u)*J elimination trick."""
    if a.ring != b.ring:
        raise RingMismatchError("intersection of ideals in different rings")
    big, a_gens = extend_front(a, 1, "u")
    _, b_gens = extend_front(b, 1, "u")
    u = big.variable(0)
    one = big.one()
    mixed = [u * g for g in a_gens] + [(one - u) * g for g in b_gens]
    out = eliminate(Ideal.of(big, mixed), 1, budget)
    return out.map_ring(a.ring) if out.ring != a.ring else out


def saturate_single(ideal: Ideal, g: Polynomial, budget: Budget | None = None) -> Ideal:
    """(I : g^infinity) via the added-variable trick: adjoin w, add w*g - 1."""
    big, gens = extend_front(ideal, 1, "w")
    w = big.variable(0)
    g_big = big.from_dict({(0,) + m: c for m, c in g.terms})
    gens.append(w * g_big - big.one())
    out = eliminate(Ideal.of(big, gens), 1, budget)
    return out.map_ring(ideal.ring) if out.ring != ideal.ring else out


def saturate(ideal: Ideal, by: Ideal, budget: Budget | None = None) -> Ideal:
    """(I : J^infinity) as the intersection over generators g of J of (I : g^inf)."""
    if ideal.ring != by.ring:
        raise RingMismatchError("saturation operands in different rings")
    parts = [saturate_single(ideal, g, budget) for g in by.gens]
    if not parts:
        return ideal
    acc = parts[0]
    for nxt in parts[1:]:
        acc = intersect(acc, nxt, budget)
    return acc


def saturate_wrt_variable(ideal: Ideal, var: int, budget: Budget | None = None) -> Ideal:
    """(I : x_var^infinity) for homogeneous I, by the reverse-lex division trick.

    A grevlex basis with x_var as the smallest variable, divided termwise by
    the largest power of x_var, generates the saturation.
    """
    if not ideal.homogeneous:
        raise HomogeneityError("variable saturation trick requires a homogeneous ideal")
    ring = ideal.ring
    n = ring.nvars
    perm = [i for i in range(n) if i != var] + [var]
    inv = [0] * n
    for pos, i in enumerate(perm):
        inv[i] = pos
    pring = RingContext(tuple(ring.names[i] for i in perm), ring.field, GREVLEX)
    pgens = [
        pring.from_dict({tuple(m[i] for i in perm): c for m, c in g.terms})
        for g in ideal.gens
    ]
    gb = buchberger(pgens, pring, budget)
    divided = []
    for g in gb:
        v = min(m[-1] for m, _ in g.terms)
        if v:
            g = pring.from_dict({m[:-1] + (m[-1] - v,): c for m, c in g.terms})
        divided.append(g)
    back = [
        ring.from_dict({tuple(m[inv[i]] for i in range(n)): c for m, c in g.terms})
        for g in divided
    ]
    return Ideal.of(ring, back)


def in_irrelevant_saturation(f: Polynomial, ideal: Ideal, budget: Budget | None = None) -> bool:
    """Membership of f in (I : (x_0..x_n)^infinity) = the intersection of the
    per-variable saturations, tested variable by variable."""
    for var in range(ideal.ring.nvars):
        sat = saturate_wrt_variable(ideal, var, budget)
        gb = groebner_basis(sat, GREVLEX, budget)
        if not normal_form(f, gb, budget).is_zero():
            return False
    return True


def same_saturation(a: Ideal, b: Ideal, budget: Budget | None = None) -> bool:
    """Scheme equality of the irrelevant-ideal saturations of two homogeneous
    ideals, via mutual membership (no saturation intersections needed)."""
    return all(in_irrelevant_saturation(g, b, budget) for g in a.gens) and all(
        in_irrelevant_saturation(g, a, budget) for g in b.gens
    )


def radical_membership(f: Polynomial, ideal: Ideal, budget: Budget | None = None) -> bool:
    """f in rad(I) iff 1 in I + (w*f - 1)."""
    if f.is_zero():
        return True
    big, gens = extend_front(ideal, 1, "w")
    w = big.variable(0)
    f_big = big.from_dict({(0,) + m: c for m, c in f.terms})
    gens.append(w * f_big - big.one())
    gb = buchberger(gens, big, budget)
    return len(gb) == 1 and gb[0].total_degree() == 0


def homogeneous_generators(ideal: Ideal) -> Ideal:
    """Split every generator into homogeneous components.

    Only valid when the ideal is known to be homogeneous (e.g. the restriction
    of a multigraded ideal to a graded subring); then each component of any
    element lies in the ideal.
    """
    parts = []
    for g in ideal.gens:
        parts.extend(g.homogeneous_components())
    return Ideal.of(ideal.ring, parts)
