"""Polynomials, dense matrices, and the structured inverses built on w-sequences.

Conventions:

* a polynomial is a list of field elements in ascending degree with no
  trailing zeros (the zero polynomial is ``[]``);
* a matrix is a list of rows, each a list of field elements;
* for points ``alpha`` with ``G(x) = prod (x - alpha_i) = x^n + d_{n-1} x^{n-1} + ... + d_0``
  the weights are ``u_i = 1 / G'(alpha_i)`` and ``w_t = sum_i u_i alpha_i^t``.

``w_0 = ... = w_{n-2} = 0``, ``w_{n-1} = 1`` and ``(w_t)`` obeys the order-n
recurrence with the coefficients of ``G``, which is what lets a shift register
produce Toeplitz and Vandermonde inverses without elimination.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (
    DuplicateRoots,
    IndexOutOfRange,
    LeadingNotOne,
    NotSquare,
    Singular,
    ZeroEvaluationPoint,
    ZeroRootNegativePower,
)
from .field import GF

Poly = list
Matrix = list


# -- polynomials -------------------------------------------------------------------

def poly_trim(f: Sequence[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(gf: GF, f: Sequence[int], g: Sequence[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = gf.add(out[i + j], gf.mul(a, b))
    return poly_trim(out)


def _check_distinct(alpha: Sequence[int]) -> None:
    if len(set(alpha)) != len(alpha):
        raise DuplicateRoots(f"evaluation points not distinct: {list(alpha)}")


def poly_from_roots(gf: GF, alpha: Sequence[int]) -> list[int]:
    """Monic ``prod (x - a)`` over the given distinct roots."""
    _check_distinct(alpha)
    f = [1]
    for a in alpha:
        f = poly_mul(gf, f, [gf.neg(a), 1])
    return f


def poly_eval(gf: GF, f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = gf.add(gf.mul(acc, x), c)
    return acc


def poly_derivative(gf: GF, f: Sequence[int]) -> list[int]:
    return poly_trim(gf.mul(gf.embed(i), c) for i, c in enumerate(f) if i)


def format_poly(gf: GF, f: Sequence[int]) -> str:
    return " ".join(gf.render(c) for c in f)


def parse_poly(gf: GF, text: str) -> list[int]:
    return poly_trim(gf.parse(tok) for tok in text.split())


# -- generic exact matrices ---------------------------------------------------------

def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_mul(gf: GF, a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0]) if b else 0}")
    bt = transpose(b)
    return [[gf.dot(row, col) for col in bt] for row in a]


def mat_vec(gf: GF, a: Matrix, x: Sequence[int]) -> list[int]:
    return [gf.dot(row, x) for row in a]


def diag(d: Sequence[int]) -> Matrix:
    n = len(d)
    return [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]


def mat_scale(gf: GF, c: int, a: Matrix) -> Matrix:
    return [[gf.mul(c, x) for x in row] for row in a]


def _require_square(m: Matrix) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotSquare(f"matrix is not square ({n} rows)")
    return n


def det(gf: GF, m: Matrix) -> int:
    """Determinant by Gaussian elimination (first nonzero pivot)."""
    n = _require_square(m)
    if n == 0:
        return 1
    if gf.m == 1:
        return _det_prime(m, n, gf.p)
    a = [list(row) for row in m]
    result = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = gf.neg(result)
        pc = a[c][c]
        result = gf.mul(result, pc)
        inv = gf.inv(pc)
        row_c = a[c]
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = gf.mul(f, inv)
                row_r = a[r]
                for j in range(c + 1, n):
                    if row_c[j]:
                        row_r[j] = gf.sub(row_r[j], gf.mul(f, row_c[j]))
    return result


def _det_prime(m: Matrix, n: int, p: int) -> int:
    a = [list(row) for row in m]
    result = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        pc = a[c][c]
        result = result * pc % p
        inv = pow(pc, p - 2, p)
        row_c = a[c]
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f * inv % p
                row_r = a[r]
                for j in range(c + 1, n):
                    row_r[j] = (row_r[j] - f * row_c[j]) % p
    return result % p


def rank(gf: GF, m: Matrix) -> int:
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = gf.inv(a[r][c])
        for i in range(rows):
            if i != r and a[i][c]:
                f = gf.mul(a[i][c], inv)
                a[i] = [gf.sub(x, gf.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def gaussian_inverse(gf: GF, m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; the independent oracle for every closed-form inverse here."""
    n = _require_square(m)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = gf.inv(a[c][c])
        a[c] = [gf.mul(inv, x) for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [gf.sub(x, gf.mul(f, y)) for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def format_matrix(gf: GF, m: Matrix) -> str:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    lines = [f"{rows} {cols}"]
    lines += [" ".join(gf.render(x) for x in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_matrix(gf: GF, text: str) -> Matrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    rows, cols = (int(x) for x in lines[0].split())
    m = [[gf.parse(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(m) != rows or any(len(r) != cols for r in m):
        raise ValueError(f"matrix body does not match header {rows}x{cols}")
    return m


# -- weights and the w-sequence -----------------------------------------------------

def u_weights(gf: GF, alpha: Sequence[int]) -> list[int]:
    g = poly_from_roots(gf, alpha)
    dg = poly_derivative(gf, g)
    return [gf.inv(poly_eval(gf, dg, a)) for a in alpha]


def wseq_direct(gf: GF, alpha: Sequence[int], t: int) -> int:
    """``w_t = sum_i u_i alpha_i^t`` by direct summation."""
    if t < 0 and 0 in alpha:
        raise ZeroRootNegativePower(f"w_{t} needs 1/0")
    u = u_weights(gf, alpha)
    return gf.sum(gf.mul(ui, gf.pow(a, t)) for ui, a in zip(u, alpha))


class WSeq:
    """A cached window ``w_lo .. w_hi`` of the w-sequence of a point set."""

    def __init__(self, gf: GF, alpha: Sequence[int], lo: int, hi: int):
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        if not alpha:
            raise ValueError("need at least one point")
        self.gf = gf
        self.alpha = tuple(alpha)
        self.gpoly = poly_from_roots(gf, alpha)
        self.u = u_weights(gf, alpha)
        n = len(alpha)
        d = self.gpoly  # d_0 .. d_{n-1}, 1
        if lo < 0 and d[0] == 0:
            raise ZeroRootNegativePower("backward extension needs every point nonzero")
        start, stop = min(lo, 0), max(hi, n - 1)
        vals = {t: 0 for t in range(n - 1)}
        vals[n - 1] = 1
        for t in range(n, stop + 1):
            # w_t = -(d_{n-1} w_{t-1} + ... + d_0 w_{t-n})
            vals[t] = gf.neg(gf.dot(d[:n], [vals[t - n + j] for j in range(n)]))
        if start < 0:
            inv_d0 = gf.inv(d[0])
            for s in range(-1, start - 1, -1):
                # w_s = -(w_{s+n} + d_{n-1} w_{s+n-1} + ... + d_1 w_{s+1}) / d_0
                acc = gf.add(vals[s + n], gf.dot(d[1:n], [vals[s + j] for j in range(1, n)]))
                vals[s] = gf.neg(gf.mul(inv_d0, acc))
        self.lo, self.hi = lo, hi
        self._vals = {t: vals[t] for t in range(lo, hi + 1)}

    def __getitem__(self, t: int) -> int:
        try:
            return self._vals[t]
        except KeyError:
            raise IndexOutOfRange(f"w_{t} outside cached window [{self.lo}, {self.hi}]") from None

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def items(self):
        return [(t, self._vals[t]) for t in range(self.lo, self.hi + 1)]

    def values(self, a: int, b: int) -> list[int]:
        return [self[t] for t in range(a, b + 1)]


def wseq_lfsr(gf: GF, alpha: Sequence[int], lo: int, hi: int) -> WSeq:
    return WSeq(gf, alpha, lo, hi)


def lfsr_inverse_series(gf: GF, col: Sequence[int], count: int) -> list[int]:
    """First ``count`` terms of ``1 / (1 + c_1 x + c_2 x^2 + ...)``.

    This is the shift register with feedback ``-c_1, -c_2, ...`` started from
    ``(0, ..., 0, 1)``; read from index n-1 on it is the w-sequence of the roots.
    """
    if not col or col[0] != 1:
        raise LeadingNotOne("leading coefficient must be 1")
    taps = list(col[1:])
    s: list[int] = []
    for j in range(count):
        if j == 0:
            s.append(1)
            continue
        acc = 0
        for i in range(1, min(j, len(taps)) + 1):
            c = taps[i - 1]
            if c:
                acc = gf.add(acc, gf.mul(c, s[j - i]))
        s.append(gf.neg(acc))
    return s


# -- Vandermonde ------------------------------------------------------------------------

def vandermonde(gf: GF, alpha: Sequence[int], ncols: int) -> Matrix:
    """Row i is ``(1, alpha_i, ..., alpha_i^(ncols-1))``."""
    if ncols < 1:
        raise ValueError("need at least one column")
    return [[gf.pow(a, j) for j in range(ncols)] for a in alpha]


def vandermonde_det(gf: GF, alpha: Sequence[int]) -> int:
    """``prod_{i<j} (alpha_j - alpha_i)``."""
    d = 1
    for j in range(len(alpha)):
        for i in range(j):
            d = gf.mul(d, gf.sub(alpha[j], alpha[i]))
    return d


def _check_nonzero_points(alpha: Sequence[int]) -> None:
    _check_distinct(alpha)
    if 0 in alpha:
        raise ZeroEvaluationPoint("closed-form inverse needs nonzero points; use gaussian_inverse")


def vandermonde_inverse_explicit(gf: GF, alpha: Sequence[int]) -> Matrix:
    """Entry (h, i) is ``-(u_i / alpha_i^(h+1)) * G_h(alpha_i)`` with ``G_h`` the degree-h truncation of G."""
    _check_nonzero_points(alpha)
    n = len(alpha)
    d = poly_from_roots(gf, alpha)
    u = u_weights(gf, alpha)
    out = zeros(n, n)
    for i, a in enumerate(alpha):
        a_inv = gf.inv(a)
        g_h = 0  # G_h(a)
        a_pow = 1  # a^h
        scale = gf.mul(u[i], a_inv)  # u_i / a^(h+1)
        for h in range(n):
            g_h = gf.add(g_h, gf.mul(d[h], a_pow))
            out[h][i] = gf.neg(gf.mul(scale, g_h))
            a_pow = gf.mul(a_pow, a)
            scale = gf.mul(scale, a_inv)
    return out


def vandermonde_inverse_factored(gf: GF, alpha: Sequence[int]) -> Matrix:
    """``-T(d_0, ..., d_{n-1}) . [alpha_j^(-i)]_{i=1..n} . diag(u)``."""
    _check_nonzero_points(alpha)
    n = len(alpha)
    d = poly_from_roots(gf, alpha)
    u = u_weights(gf, alpha)
    recip = [[gf.pow(a, -i) for a in alpha] for i in range(1, n + 1)]
    t = toeplitz_lower(d[:n], n)
    return mat_scale(gf, gf.neg(1), mat_mul(gf, mat_mul(gf, t, recip), diag(u)))


def bordered_vandermonde_ratio(gf: GF, alpha: Sequence[int], t: int) -> int:
    """det of rows ``1, alpha, ..., alpha^(n-2), alpha^t`` divided by the Vandermonde determinant."""
    _check_distinct(alpha)
    if t < 0 and 0 in alpha:
        raise ZeroRootNegativePower(f"alpha^{t} needs 1/0")
    n = len(alpha)
    rows = [[gf.pow(a, j) for a in alpha] for j in range(n - 1)]
    rows.append([gf.pow(a, t) for a in alpha])
    return gf.div(det(gf, rows), vandermonde_det(gf, alpha))


# -- Toeplitz ---------------------------------------------------------------------------

def toeplitz_lower(col: Sequence[int], size: int) -> Matrix:
    """Lower-triangular Toeplitz matrix with first column ``col`` (zero-padded)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    c = list(col[:size]) + [0] * max(0, size - len(col))
    return [[c[i - j] if i >= j else 0 for j in range(size)] for i in range(size)]


def _check_prefix(gf: GF, col: Sequence[int], alpha: Sequence[int]) -> list[int]:
    """Return G's coefficients ``(1, c_1, ..., c_n)`` after checking col agrees with them."""
    _check_distinct(alpha)
    c = list(reversed(poly_from_roots(gf, alpha)))
    if list(col) != c[: len(col)]:
        raise ValueError(f"col {list(col)} is not a prefix of the coefficients {c} of prod (x - alpha_i)")
    return c


def toeplitz_inverse_unit(gf: GF, col: Sequence[int], size: int, alpha: Sequence[int]) -> Matrix:
    """Inverse of ``T(1, c_1, ...)`` as ``T(w_{n-1}, w_n, ..., w_{n-2+size})``.

    ``col`` must start with 1 and agree with the coefficients of
    ``prod (x - alpha_i)``; it is zero-padded to ``size`` just as in
    :func:`toeplitz_lower`.  When ``col`` carries every coefficient through
    ``c_n`` (or ``size <= len(col)``) the first column is exactly the
    w-sequence of ``alpha``.
    """
    if not col or col[0] != 1:
        raise LeadingNotOne(f"leading diagonal must be 1, got {list(col[:1])}")
    _check_prefix(gf, col, alpha)
    return toeplitz_lower(lfsr_inverse_series(gf, col, size), size)


def toeplitz_inverse_reversed(gf: GF, col: Sequence[int], alpha: Sequence[int]) -> Matrix:
    """Inverse of ``T(c_n, c_{n-1}, ..., c_1)`` as ``-T(w_{-1}, ..., w_{-n})``."""
    if 0 in alpha:
        raise ZeroRootNegativePower("reversed Toeplitz inverse needs every point nonzero")
    _check_distinct(alpha)
    n = len(alpha)
    c = list(reversed(poly_from_roots(gf, alpha)))
    expected = [c[n - i] for i in range(n)]
    if list(col) != expected:
        raise ValueError(f"col {list(col)} is not (c_n, ..., c_1) = {expected}")
    w = WSeq(gf, alpha, -n, -1)
    return toeplitz_lower([gf.neg(w[-i]) for i in range(1, n + 1)], n)


def is_lower_toeplitz(m: Matrix) -> bool:
    n = len(m)
    for i in range(n):
        for j in range(n):
            if j > i and m[i][j]:
                return False
            if i and j and m[i][j] != m[i - 1][j - 1]:
                return False
    return True
