"""Dense univariate polynomial helpers over an exact field.

Polynomials are coefficient lists indexed by degree (little-endian) with no
trailing zeros.  Used for eliminants, minimal polynomials, binary forms and
root extraction over prime fields.
"""

from __future__ import annotations

from .fields import PrimeField
from .linalg import det as _mat_det


def trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def u_trim(c, field):
    c = list(c)
    while c and c[-1] == field.zero:
        c.pop()
    return c


def u_degree(c) -> int:
    return len(c) - 1


def u_add(a, b, field):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return u_trim(out, field)


def u_sub(a, b, field):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.sub(x, y))
    return u_trim(out, field)


def u_scale(a, c, field):
    if c == field.zero:
        return []
    return [field.mul(x, c) for x in a]


def u_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == field.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return u_trim(out, field)


def u_divmod(a, b, field):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coeff = field.mul(a[-1], inv_lead)
        q[shift] = coeff
        for i, x in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(coeff, x))
        a = u_trim(a, field)
    return u_trim(q, field), a


def u_monic(a, field):
    if not a:
        return a
    inv = field.inv(a[-1])
    return [field.mul(x, inv) for x in a]


def u_gcd(a, b, field):
    a, b = list(a), list(b)
    while b:
        _, r = u_divmod(a, b, field)
        a, b = b, r
    return u_monic(a, field)


def u_derivative(a, field):
    return u_trim([field.mul(c, field.coerce(i)) for i, c in enumerate(a)][1:], field)


def u_eval(a, x, field):
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def u_squarefree_part(a, field):
    if not a or len(a) == 1:
        return u_monic(a, field)
    g = u_gcd(a, u_derivative(a, field), field)
    q, r = u_divmod(a, g, field)
    if r:
        raise ArithmeticError("squarefree division left a remainder")
    return u_monic(q, field)


def u_pow_mod(base, e, mod, field):
    result = [field.one]
    base = u_divmod(base, mod, field)[1]
    while e:
        if e & 1:
            result = u_divmod(u_mul(result, base, field), mod, field)[1]
        e >>= 1
        if e:
            base = u_divmod(u_mul(base, base, field), mod, field)[1]
    return result


def u_rational_root_part(a, field: PrimeField):
    """gcd(f, x^p - x): the product of (x - r) over the F_p-rational roots."""
    p = field.p
    xp = u_pow_mod([field.zero, field.one], p, a, field)
    return u_gcd(a, u_sub(xp, [field.zero, field.one], field), field)


def u_roots_prime_field(a, field: PrimeField, rng):
    """All distinct roots of f in F_p (equal-degree splitting of gcd(f, x^p - x))."""
    a = u_monic(u_squarefree_part(a, field), field)
    lin = u_rational_root_part(a, field)
    roots = []
    stack = [lin]
    p = field.p
    while stack:
        g = stack.pop()
        if u_degree(g) <= 0:
            continue
        if u_degree(g) == 1:
            roots.append(field.neg(g[0]))
            continue
        while True:
            delta = rng.randrange(p)
            shifted = [delta, field.one]
            h = u_pow_mod(shifted, (p - 1) // 2, g, field)
            h = u_sub(h, [field.one], field)
            d = u_gcd(g, h, field)
            if 0 < u_degree(d) < u_degree(g):
                stack.append(d)
                stack.append(u_divmod(g, d, field)[0])
                break
    roots.sort()
    return roots


def u_factor_squarefree(a, field: PrimeField, rng):
    """Irreducible factors of a squarefree monic polynomial over F_p.

    Distinct-degree splitting by gcd with x^(p^d) - x, then Cantor-Zassenhaus
    equal-degree splitting.  Returns monic factors sorted by (degree, coeffs).
    """
    a = u_monic(a, field)
    p = field.p
    out = []
    x = [field.zero, field.one]
    frob = u_pow_mod(x, p, a, field)  # x^p mod a
    power = list(frob)
    d = 1
    rest = list(a)
    while u_degree(rest) >= 1:
        if 2 * d > u_degree(rest):
            out.append(u_monic(rest, field))
            break
        g = u_gcd(rest, u_sub(power, x, field), field)
        if u_degree(g) >= 1:
            out.extend(_equal_degree_split(g, d, field, rng))
            rest = u_divmod(rest, g, field)[0]
        d += 1
        if u_degree(rest) >= 1:
            power = u_pow_mod(power, p, rest, field)
    out.sort(key=lambda f: (u_degree(f), f))
    return out


def _equal_degree_split(g, d, field: PrimeField, rng):
    """Split a product of distinct irreducibles, all of degree d."""
    if u_degree(g) == d:
        return [u_monic(g, field)]
    p = field.p
    exponent = (p**d - 1) // 2
    while True:
        h = [field.coerce(rng.randrange(p)) for _ in range(u_degree(g))] + [field.one]
        w = u_pow_mod(h, exponent, g, field)
        w = u_sub(w, [field.one], field)
        f1 = u_gcd(g, w, field)
        if 0 < u_degree(f1) < u_degree(g):
            f2 = u_divmod(g, f1, field)[0]
            return _equal_degree_split(f1, d, field, rng) + _equal_degree_split(
                f2, d, field, rng
            )


def u_splits_completely(a, field: PrimeField) -> bool:
    """True when the squarefree part of f factors into distinct linear factors over F_p."""
    sf = u_squarefree_part(a, field)
    return u_degree(u_rational_root_part(sf, field)) == u_degree(sf)


def u_interpolate(xs, ys, field):
    """Lagrange interpolation through (xs[i], ys[i])."""
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [field.one]
        den = field.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = u_mul(num, [field.neg(xj), field.one], field)
            den = field.mul(den, field.sub(xi, xj))
        out = u_add(out, u_scale(num, field.div(yi, den), field), field)
    return out


def u_resultant(a, b, field):
    """Resultant via the Sylvester determinant (small degrees only)."""
    m, n = u_degree(a), u_degree(b)
    if m < 0 or n < 0:
        return field.zero
    if m == 0:
        return pow_field_elem(a[0], n, field)
    if n == 0:
        return pow_field_elem(b[0], m, field)
    size = m + n
    rows = []
    for i in range(n):
        row = [field.zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [field.zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return _mat_det(rows, field)


def pow_field_elem(x, e, field):
    if isinstance(field, PrimeField):
        return pow(x, e, field.p)
    return x**e
