"""Exact dense linear algebra over Q or a prime field.

Matrices are plain lists of row lists holding field-element payloads
(Fractions over Q, ints over F_p).  Everything here is Gaussian elimination;
sizes stay small so no fraction-free cleverness is needed.
"""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form. Returns (new rows, pivot column list)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    m, n = len(a), len(a[0])
    zero = field.zero
    piv_cols = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        pivot = None
        for i in range(r, m):
            if a[i][c] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != zero:
                f = a[i][c]
                row_r = a[r]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], row_r)]
        piv_cols.append(c)
        r += 1
    return a, piv_cols


def rank(rows, field) -> int:
    _, piv = rref(rows, field)
    return len(piv)


def kernel_basis(rows, field):
    """Basis of the right null space; empty matrix means the full space."""
    if not rows:
        return []
    n = len(rows[0])
    red, piv = rref(rows, field)
    piv_set = set(piv)
    free = [j for j in range(n) if j not in piv_set]
    basis = []
    for f in free:
        vec = [field.zero] * n
        vec[f] = field.one
        for row_idx, pc in enumerate(piv):
            vec[pc] = field.neg(red[row_idx][f])
        basis.append(vec)
    return basis


def solve(rows, rhs, field):
    """One solution of A x = b (free variables zero), or None if inconsistent."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, field)
    zero = field.zero
    for row in red:
        if all(x == zero for x in row[:n]) and row[n] != zero:
            return None
    x = [zero] * n
    for row_idx, pc in enumerate(piv):
        if pc < n:
            x[pc] = red[row_idx][n]
    return x


def det(rows, field):
    a = [list(r) for r in rows]
    n = len(a)
    zero = field.zero
    sign_flip = False
    result = field.one
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if a[i][c] != zero:
                pivot = i
                break
        if pivot is None:
            return zero
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign_flip = not sign_flip
        result = field.mul(result, a[c][c])
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != zero:
                f = field.mul(a[i][c], inv)
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[c])]
    return field.neg(result) if sign_flip else result


def mat_vec(rows, vec, field):
    out = []
    zero = field.zero
    for r in rows:
        s = zero
        for x, v in zip(r, vec):
            s = field.add(s, field.mul(x, v))
        out.append(s)
    return out


def mat_mul(a, b, field):
    bt = list(zip(*b))
    return [[_dot(r, col, field) for col in bt] for r in a]


def _dot(u, v, field):
    s = field.zero
    for x, y in zip(u, v):
        s = field.add(s, field.mul(x, y))
    return s


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_inverse(rows, field):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + list(e) for r, e in zip(rows, identity(n, field))]
    red, piv = rref(aug, field)
    if len(piv) < n or any(p >= n for p in piv):
        return None
    return [row[n:] for row in red]


def row_space_intersection(u_rows, v_rows, field):
    """Basis of (row space of U) intersect (row space of V)."""
    if not u_rows or not v_rows:
        return []
    stacked = [list(r) for r in u_rows] + [[field.neg(x) for x in r] for r in v_rows]
    coeffs = kernel_basis(list(map(list, zip(*stacked))), field)
    out = []
    for c in coeffs:
        vec = [field.zero] * len(u_rows[0])
        for alpha, row in zip(c[: len(u_rows)], u_rows):
            for j, x in enumerate(row):
                vec[j] = field.add(vec[j], field.mul(alpha, x))
        if any(x != field.zero for x in vec):
            out.append(vec)
    red, piv = rref(out, field)
    return [red[i] for i in range(len(piv))]
