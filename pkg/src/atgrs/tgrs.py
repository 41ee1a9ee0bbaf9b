"""Arbitrary-twist generalized Reed-Solomon codes and their MDS test.

A code is fixed by distinct points ``alpha``, nonzero column multipliers ``v``
and a k x (n-k) twist matrix ``eta``: message ``(f_0, ..., f_{k-1})`` maps to
the evaluations of ``sum_i f_i x^i + sum_i f_i sum_j eta[i][j-1] x^(k-1+j)``.

Indexing is 0-based throughout the Python API: subset members are column
indices ``0..n-1``, ``eta[m][j]`` is the coefficient of ``x^(k+j)`` added to
the monomial ``x^m``.

For a k-subset ``I`` of columns with ``G_I(x) = c_0 x^k + ... + c_k`` the
generator minor on ``I`` equals ``det(I_k + B_I) * det V_k``, where row m of
``B_I`` depends only on row m of ``eta`` and on the w-sequence of the points in
``I``.  The code is MDS exactly when every such determinant is nonzero.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidSpec,
    LengthMismatch,
    MethodDisagreement,
    NotSingleTwist,
    SearchSpaceTooLarge,
    ZeroEvaluationPoint,
    ZeroTwist,
)
from .field import GF
from .structmat import (
    Matrix,
    WSeq,
    det,
    mat_mul,
    poly_eval,
    poly_from_roots,
    u_weights,
)

METHODS = ("criterion", "brute-force", "both")

KNOWN = "known-pattern"
CONDITION_I = "condition-i"
CONDITION_II = "condition-ii"
NEITHER = "neither"


@dataclass(frozen=True)
class CodeSpec:
    gf: GF
    n: int
    k: int
    alpha: tuple
    eta: tuple
    v: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "eta", tuple(tuple(row) for row in self.eta))
        if self.v is None:
            object.__setattr__(self, "v", (1,) * self.n)
        else:
            object.__setattr__(self, "v", tuple(self.v))
        self.validate()

    def validate(self) -> None:
        n, k, q = self.n, self.k, self.gf.q
        if not 3 <= k < n <= q:
            raise InvalidSpec(f"need 3 <= k < n <= q, got k={k}, n={n}, q={q}")
        if len(self.alpha) != n:
            raise InvalidSpec(f"alpha has {len(self.alpha)} entries, expected n={n}")
        for a in self.alpha:
            self.gf.check(a)
        if len(set(self.alpha)) != n:
            raise InvalidSpec("alpha not distinct")
        if len(self.v) != n:
            raise InvalidSpec(f"v has {len(self.v)} entries, expected n={n}")
        for x in self.v:
            self.gf.check(x)
        if 0 in self.v:
            raise InvalidSpec("v has a zero entry")
        if len(self.eta) != k or any(len(row) != n - k for row in self.eta):
            raise InvalidSpec(f"eta must be {k} x {n - k}")
        for row in self.eta:
            for x in row:
                self.gf.check(x)

    def with_eta(self, eta) -> "CodeSpec":
        return CodeSpec(self.gf, self.n, self.k, self.alpha, eta, self.v)

    def with_v(self, v) -> "CodeSpec":
        return CodeSpec(self.gf, self.n, self.k, self.alpha, self.eta, v)


def zero_twist(k: int, n: int) -> tuple:
    return tuple((0,) * (n - k) for _ in range(k))


# -- generator and encoding ------------------------------------------------------------

def generator_matrix(spec: CodeSpec) -> Matrix:
    """``(I_k | A(eta)) . V_n(alpha) . diag(v)``; row m, column j is ``v_j (alpha_j^m + sum_i eta[m][i] alpha_j^(k+i))``."""
    gf, n, k = spec.gf, spec.n, spec.k
    powers = [[gf.pow(a, e) for e in range(n)] for a in spec.alpha]
    rows = []
    for m in range(k):
        coeffs = [0] * n
        coeffs[m] = 1
        for i, e in enumerate(spec.eta[m]):
            coeffs[k + i] = e
        rows.append([gf.mul(spec.v[j], gf.dot(coeffs, powers[j])) for j in range(n)])
    return rows


def message_polynomial(spec: CodeSpec, message: Sequence[int]) -> list[int]:
    """The twisted polynomial ``sum f_i x^i + sum_i f_i sum_j eta_{i,j} x^(k-1+j)`` (ascending, untrimmed)."""
    gf, n, k = spec.gf, spec.n, spec.k
    if len(message) != k:
        raise LengthMismatch(f"message has {len(message)} symbols, expected k={k}")
    f = list(message) + [0] * (n - k)
    for i, fi in enumerate(message):
        if fi:
            for j, e in enumerate(spec.eta[i]):
                if e:
                    f[k + j] = gf.add(f[k + j], gf.mul(fi, e))
    return f


def encode(spec: CodeSpec, message: Sequence[int]) -> list[int]:
    if len(message) != spec.k:
        raise LengthMismatch(f"message has {len(message)} symbols, expected k={spec.k}")
    g = generator_matrix(spec)
    gf = spec.gf
    return [gf.dot(message, col) for col in zip(*g)]


def encode_by_evaluation(spec: CodeSpec, message: Sequence[int]) -> list[int]:
    gf = spec.gf
    f = message_polynomial(spec, message)
    return [gf.mul(v, poly_eval(gf, f, a)) for a, v in zip(spec.alpha, spec.v)]


# -- per-subset quantities ----------------------------------------------------------------

@dataclass
class SubsetCtx:
    gf: GF
    n: int
    k: int
    subset: tuple
    points: tuple
    c: list  # c_0 = 1, c_1, ..., c_k  (descending coefficients of G_I)
    d: list  # d_j = c_{k-j}, ascending
    companion: Matrix
    w: WSeq
    _kernel: list = field(default=None, repr=False)

    def kernel(self) -> list:
        """(n-k) x k matrix P with ``g_{m,t} = sum_i eta[m][i] P[i][t-1]``."""
        if self._kernel is None:
            gf, n, k, d, w = self.gf, self.n, self.k, self.d, self.w
            rows = []
            for i in range(1, n - k + 1):
                row = []
                for t in range(1, k + 1):
                    acc = gf.dot(d[:t], [w[k - 1 - t + i + j] for j in range(t)])
                    row.append(gf.neg(acc))
                rows.append(row)
            self._kernel = rows
        return self._kernel


def companion_matrix(gf: GF, c: Sequence[int]) -> Matrix:
    """Superdiagonal ones, last row ``(-c_k, ..., -c_1)``."""
    k = len(c) - 1
    a = [[int(j == i + 1) for j in range(k)] for i in range(k - 1)]
    a.append([gf.neg(c[k - j]) for j in range(k)])
    return a


def subset_context(spec: CodeSpec, subset: Sequence[int]) -> SubsetCtx:
    n, k, gf = spec.n, spec.k, spec.gf
    subset = tuple(sorted(subset))
    if len(subset) != k or len(set(subset)) != k or not all(0 <= i < n for i in subset):
        raise IndexOutOfRange(f"{subset} is not a {k}-subset of range({n})")
    pts = tuple(spec.alpha[i] for i in subset)
    d = poly_from_roots(gf, pts)
    c = list(reversed(d))
    return SubsetCtx(
        gf=gf, n=n, k=k, subset=subset, points=pts, c=c, d=d,
        companion=companion_matrix(gf, c),
        w=WSeq(gf, pts, 0, n - 2 + k),
    )


def twist_coefficients(sc: SubsetCtx, eta: Sequence[Sequence[int]], m: int, t: int) -> dict:
    """``a_{m,t}^l = sum_{i+j=l, 1<=i<=n-k, 0<=j<=t-1} eta_{m,i} d_j`` keyed by l."""
    gf = sc.gf
    a: dict[int, int] = {}
    for i in range(1, sc.n - sc.k + 1):
        e = eta[m][i - 1]
        if not e:
            continue
        for j in range(t):
            a[i + j] = gf.add(a.get(i + j, 0), gf.mul(e, sc.d[j]))
    return a


def _check_mt(sc: SubsetCtx, m: int, t: int) -> None:
    if not (0 <= m < sc.k and 1 <= t <= sc.k):
        raise IndexOutOfRange(f"(m, t) = ({m}, {t}) outside 0<=m<{sc.k}, 1<=t<={sc.k}")


def g_entry_companion(sc: SubsetCtx, eta: Sequence[Sequence[int]], m: int, t: int) -> int:
    """``-gamma F_{m,t}(A_I) gamma^T`` with the matrix polynomial evaluated in full."""
    _check_mt(sc, m, t)
    gf, n, k = sc.gf, sc.n, sc.k
    a = twist_coefficients(sc, eta, m, t)
    # F_{m,t}(x) = sum_{l=t}^{n-k+t-1} a^l x^(l-t), evaluated by Horner
    acc = [[0] * k for _ in range(k)]
    for l in range(n - k + t - 1, t - 1, -1):
        acc = mat_mul(gf, acc, sc.companion)
        coef = a.get(l, 0)
        if coef:
            for i in range(k):
                acc[i][i] = gf.add(acc[i][i], coef)
    return gf.neg(acc[k - 1][k - 1])


def g_entry_wsum(sc: SubsetCtx, eta: Sequence[Sequence[int]], m: int, t: int) -> int:
    """``-sum_{l=t}^{n-k+t-1} a_{m,t}^l w_{k-1-t+l}``."""
    _check_mt(sc, m, t)
    gf, n, k = sc.gf, sc.n, sc.k
    a = twist_coefficients(sc, eta, m, t)
    acc = 0
    for l in range(t, n - k + t):
        coef = a.get(l, 0)
        if coef:
            acc = gf.add(acc, gf.mul(coef, sc.w[k - 1 - t + l]))
    return gf.neg(acc)


def criterion_matrix(sc: SubsetCtx, eta: Sequence[Sequence[int]]) -> Matrix:
    """``I_k + [g_{m,t}]`` computed through the precomputed twist kernel."""
    gf, k = sc.gf, sc.k
    ker = sc.kernel()
    out = []
    for m in range(k):
        row = [int(m == t) for t in range(k)]
        for i, e in enumerate(eta[m]):
            if e:
                krow = ker[i]
                for t in range(k):
                    if krow[t]:
                        row[t] = gf.add(row[t], gf.mul(e, krow[t]))
        out.append(row)
    return out


def criterion_det(sc: SubsetCtx, eta: Sequence[Sequence[int]]) -> int:
    """``M(n, k, alpha, A(eta), I) = det(I_k + [g_{m,t}]_{t=1..k})``."""
    return det(sc.gf, criterion_matrix(sc, eta))


def reduced_criterion_det(sc: SubsetCtx, eta: Sequence[Sequence[int]]) -> int:
    """The criterion restricted to the principal minor on the nonzero rows of eta.

    Rows of ``I + B`` with a zero eta row are unit vectors, so the full
    determinant collapses to this minor; every single-, double- and l-twist
    reduction is an instance.
    """
    rows = [m for m, r in enumerate(eta) if any(r)]
    full = criterion_matrix(sc, eta)
    return det(sc.gf, [[full[a][b] for b in rows] for a in rows])


# -- MDS decision -------------------------------------------------------------------------

@dataclass
class MdsReport:
    is_mds: bool
    failing_subsets: list
    method: str
    novelty: str

    def to_dict(self) -> dict:
        return {
            "mds": self.is_mds,
            "method": self.method,
            "failing_subsets": [list(s) for s in self.failing_subsets],
            "novelty": self.novelty,
        }


def iter_subsets(n: int, k: int) -> Iterator[tuple]:
    return itertools.combinations(range(n), k)


def minor(gf: GF, g: Matrix, subset: Sequence[int]) -> int:
    return det(gf, [[row[j] for j in subset] for row in g])


class CriterionKernel:
    """Per-subset twist kernels for fixed (alpha, n, k), reusable across many twist matrices."""

    def __init__(self, gf: GF, n: int, k: int, alpha: Sequence[int]):
        probe = CodeSpec(gf, n, k, alpha, zero_twist(k, n))
        self.gf, self.n, self.k, self.alpha = gf, n, k, tuple(alpha)
        self.contexts = [subset_context(probe, s) for s in iter_subsets(n, k)]
        for sc in self.contexts:
            sc.kernel()
        self._hot = 0

    def fails(self, sc: SubsetCtx, eta) -> bool:
        return criterion_det(sc, eta) == 0

    def is_mds(self, eta) -> bool:
        """Early-exit check; starts from the subset that failed last time."""
        ctxs = self.contexts
        order = itertools.chain([self._hot], range(len(ctxs)))
        seen = set()
        for idx in order:
            if idx in seen:
                continue
            seen.add(idx)
            if criterion_det(ctxs[idx], eta) == 0:
                self._hot = idx
                return False
        return True

    def failing(self, eta, full: bool = True) -> list:
        out = []
        for sc in self.contexts:
            if criterion_det(sc, eta) == 0:
                out.append(sc.subset)
                if not full:
                    break
        return out


def _subset_verdicts(spec: CodeSpec, method: str, subsets: Iterable[Sequence[int]], full: bool) -> list:
    """[(subset, failed)] for each subset in order; stops after the first failure unless full."""
    gf = spec.gf
    g = generator_matrix(spec) if method in ("brute-force", "both") else None
    out = []
    for s in subsets:
        if method == "brute-force":
            failed = minor(gf, g, s) == 0
        else:
            failed = criterion_det(subset_context(spec, s), spec.eta) == 0
            if method == "both":
                brute = minor(gf, g, s) == 0
                if brute != failed:
                    raise MethodDisagreement(f"subset {tuple(s)}: criterion={not failed}, minors={not brute}")
        out.append((tuple(s), failed))
        if failed and not full:
            break
    return out


def _chunk_worker(args):
    spec, method, subsets, full = args
    return _subset_verdicts(spec, method, subsets, full)


def is_mds(spec: CodeSpec, method: str = "criterion", full_report: bool = False, jobs: int = 1) -> MdsReport:
    """Decide MDS by the subset criterion, by all k x k generator minors, or both.

    Subsets are visited in lexicographic order.  Without ``full_report`` the
    scan stops at the first failing subset.
    """
    if method == "brute":
        method = "brute-force"
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if jobs > 1:
        subsets = list(iter_subsets(spec.n, spec.k))
        size = max(1, math.ceil(len(subsets) / (4 * jobs)))
        chunks = [(spec, method, subsets[i:i + size], full_report) for i in range(0, len(subsets), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = [v for part in pool.map(_chunk_worker, chunks) for v in part]
        failing = sorted(s for s, bad in verdicts if bad)
        if not full_report:
            failing = failing[:1]
    else:
        verdicts = _subset_verdicts(spec, method, iter_subsets(spec.n, spec.k), full_report)
        failing = [s for s, bad in verdicts if bad]
    return MdsReport(not failing, failing, method, classify_novelty(spec.eta))


MAX_CODEWORDS = 10**6


def minimum_distance(spec: CodeSpec) -> int:
    """Smallest nonzero codeword weight, by enumerating all q^k codewords."""
    gf, k = spec.gf, spec.k
    if gf.q**k > MAX_CODEWORDS:
        raise SearchSpaceTooLarge(f"q^k = {gf.q**k} codewords exceeds {MAX_CODEWORDS}")
    g = generator_matrix(spec)
    words = [tuple([0] * spec.n)]
    for row in g:
        multiples = [[gf.mul(x, r) for r in row] for x in gf.elements()]
        words = [tuple(gf.add(a, b) for a, b in zip(w, mult)) for w in words for mult in multiples]
    return min(wt for wt in (sum(1 for x in w if x) for w in words) if wt)


# -- single-twist reductions ---------------------------------------------------------------

def single_twist_position(eta: Sequence[Sequence[int]]) -> tuple:
    nz = [(i, j) for i, row in enumerate(eta) for j, x in enumerate(row) if x]
    if len(nz) != 1:
        raise NotSingleTwist(f"expected exactly one nonzero twist entry, found {len(nz)}")
    return nz[0]


def single_twist_scalar(sc: SubsetCtx, eta_value: int, hook: int, twistpos: int) -> int:
    """``eta * sum_{i=0}^{t} c_{k-h+t-i} w_{k-1+i}`` with ``c_j = 0`` beyond j = k."""
    gf, k, c = sc.gf, sc.k, sc.c
    acc = 0
    for i in range(twistpos + 1):
        idx = k - hook + twistpos - i
        if idx <= k:
            acc = gf.add(acc, gf.mul(c[idx], sc.w[k - 1 + i]))
    return gf.mul(eta_value, acc)


def special_case_mds(spec: CodeSpec, hook: int, twistpos: int) -> bool:
    """MDS verdict for a single twist ``eta[hook][twistpos]`` via the closed-form scalar test."""
    pos = single_twist_position(spec.eta)
    if pos != (hook, twistpos):
        raise NotSingleTwist(f"nonzero twist sits at {pos}, not {(hook, twistpos)}")
    e = spec.eta[hook][twistpos]
    for s in iter_subsets(spec.n, spec.k):
        if single_twist_scalar(subset_context(spec, s), e, hook, twistpos) == 1:
            return False
    return True


# -- novelty ------------------------------------------------------------------------------

def _support(eta) -> set:
    return {(i, j) for i, row in enumerate(eta) for j, x in enumerate(row) if x}


def known_template(eta: Sequence[Sequence[int]]) -> str | None:
    """Name of the previously studied twist shape that eta matches, if any."""
    k = len(eta)
    supp = _support(eta)
    if not supp:
        return "grs"
    if len(supp) == 1:
        return "single-twist"
    rows = {i for i, _ in supp}
    cols = {j for _, j in supp}
    if len(rows) == 1:
        return "single-row"
    if supp <= {(k - 2, 0), (k - 2, 1), (k - 1, 0), (k - 1, 1)}:
        return "bottom-left-2x2"
    size = len(supp)
    if supp == {(k - size + s, s) for s in range(size)}:
        return "diagonal-band"
    if len(rows) == size and len(cols) == size:
        return "isolated-entries"
    return None


def classify_novelty(eta: Sequence[Sequence[int]]) -> str:
    """Place a twist matrix relative to earlier constructions.

    Known template shapes win; otherwise condition (i) is two nonzero rows
    with support outside the bottom-left 2x2 corner, and condition (ii) is
    more than two nonzero rows with ``RW + CW < 2 |support|``.
    """
    if known_template(eta) is not None:
        return KNOWN
    k = len(eta)
    supp = _support(eta)
    rw = len({i for i, _ in supp})
    cw = len({j for _, j in supp})
    if rw == 2 and not supp <= {(k - 2, 0), (k - 2, 1), (k - 1, 0), (k - 1, 1)}:
        return CONDITION_I
    if rw > 2 and rw + cw < 2 * len(supp):
        return CONDITION_II
    return NEITHER


# -- the single-twist code with an x^(q-2) term, and its parity check ------------------------

def inverse_twist_generator(gf: GF, n: int, k: int, eta: int, alpha: Sequence[int], v: Sequence[int]) -> Matrix:
    """Rows ``v_i alpha_i^j`` for j < k-1 and last row ``v_i (alpha_i^(k-1) + eta alpha_i^(q-2))``."""
    rows = [[gf.mul(vi, gf.pow(a, j)) for a, vi in zip(alpha, v)] for j in range(k - 1)]
    rows.append([
        gf.mul(vi, gf.add(gf.pow(a, k - 1), gf.mul(eta, gf.pow(a, gf.q - 2))))
        for a, vi in zip(alpha, v)
    ])
    return rows


def parity_polynomial(gf: GF, n: int, k: int, l: int, eta: int, alpha: Sequence[int]) -> list[int]:
    """``f(x) = x^(n-l-1) + c_1 x^(n-l-2) + ... + c_{k-l-1} x^(n-k) + c_n / eta`` (ascending).

    The constant is ``-w_{n-1} / (eta w_{-1})`` with ``w_{-1} = -1/c_n``.
    """
    if eta == 0:
        raise ZeroTwist("eta must be nonzero")
    if not 0 <= l <= k - 1:
        raise IndexOutOfRange(f"l = {l} outside [0, {k - 1}]")
    c = list(reversed(poly_from_roots(gf, alpha)))
    f = [0] * (n - l)
    for j in range(k - l):
        f[n - l - 1 - j] = c[j]
    f[0] = gf.add(f[0], gf.div(c[n], eta))
    return f


def parity_check_inverse_twist(gf: GF, n: int, k: int, l: int, eta: int, alpha: Sequence[int], v: Sequence[int]) -> Matrix:
    """(n-k) x n parity-check matrix of :func:`inverse_twist_generator`'s code."""
    if len(set(alpha)) != len(alpha):
        raise InvalidSpec("alpha not distinct")
    if 0 in alpha:
        raise ZeroEvaluationPoint("every point must be nonzero")
    f = parity_polynomial(gf, n, k, l, eta, alpha)
    u = u_weights(gf, alpha)
    scale = [gf.div(ui, vi) for ui, vi in zip(u, v)]
    first = [gf.mul(s, poly_eval(gf, f, a)) for s, a in zip(scale, alpha)]
    rest = [[gf.mul(gf.mul(s, a), gf.pow(a, j)) for s, a in zip(scale, alpha)] for j in range(n - k - 1)]
    return [first] + rest


def inverse_twist_minor_condition(gf: GF, eta: int, points: Sequence[int]) -> bool:
    """Minor of :func:`inverse_twist_generator` on these k points is nonzero iff ``eta / c_k != 1``."""
    c = list(reversed(poly_from_roots(gf, points)))
    return gf.div(eta, c[-1]) != 1


__all__ = [
    "CONDITION_I",
    "CONDITION_II",
    "CodeSpec",
    "CriterionKernel",
    "KNOWN",
    "METHODS",
    "MdsReport",
    "NEITHER",
    "SubsetCtx",
    "classify_novelty",
    "companion_matrix",
    "criterion_det",
    "criterion_matrix",
    "encode",
    "encode_by_evaluation",
    "g_entry_companion",
    "g_entry_wsum",
    "generator_matrix",
    "is_mds",
    "iter_subsets",
    "known_template",
    "message_polynomial",
    "minimum_distance",
    "minor",
    "parity_check_inverse_twist",
    "parity_polynomial",
    "reduced_criterion_det",
    "single_twist_position",
    "single_twist_scalar",
    "special_case_mds",
    "subset_context",
    "twist_coefficients",
    "zero_twist",
    "inverse_twist_generator",
    "inverse_twist_minor_condition",
]
