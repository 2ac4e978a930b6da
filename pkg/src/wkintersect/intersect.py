"""The closed formula for intersection numbers and its repackagings.

With D the genus-independent Schur coefficients of the master
polynomial components, Q the mod-3-gated determinant

    Q_{nu,mu} = det_{ij} [ d(L_j(mu) - L_i(nu)) / ((L_j(mu) - L_i(nu))/3)! ]

(d(k) = 1 iff k >= 0 and 3 | k) and K~ the weighted Kostka numbers,

    <tau_{lam_1} ... tau_{lam_n}>_g
        = 24^(-g) sum_r 12^r sum_nu sum_{mu >= lam} D_{r,n}(nu) Q_{nu,mu} K~_{mu,lam}.

The same data yields the generating polynomials, the correlator
coefficient tables (where the Kostka numbers cancel entirely), and a
truncated determinant producing all genera of a correlator at once.
"""

import math

from .rational import RAT_ONE, RAT_ZERO, Rat, double_factorial_odd_int, gamma_half_ratio
from .partitions import format_partition, hook_numbers, partition_class, ptrim
from .hop import HContext, _dden, _gnum
from . import oracle as oracle_mod
from .pengine import DTable, degree_rn, r_max
from .sympoly import (
    MONOMIAL,
    SCHUR,
    SymPoly,
    kostka_column,
    power_sum_times_schur,
)

_Q_CACHE = {}


def clear_q_cache():
    _Q_CACHE.clear()


def _bareiss_det(m):
    """Fraction-free Gaussian elimination determinant, exact over Rat."""
    n = len(m)
    if n == 0:
        return RAT_ONE
    a = [row[:] for row in m]
    sign = 1
    prev = RAT_ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return RAT_ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def laplace_det(m):
    """Cofactor-expansion determinant (cross-check path for small sizes)."""
    n = len(m)
    if n == 0:
        return RAT_ONE
    if n == 1:
        return m[0][0]
    total = RAT_ZERO
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        c = m[0][j] * laplace_det(minor)
        total += c if j % 2 == 0 else -c
    return total


def _q_matrix(nu, mu, n):
    lnu = hook_numbers(nu, n)
    lmu = hook_numbers(mu, n)
    rows = []
    for li in lnu:
        row = []
        for lj in lmu:
            k = lj - li
            if k >= 0 and k % 3 == 0:
                row.append(Rat(1, math.factorial(k // 3)))
            else:
                row.append(RAT_ZERO)
        rows.append(row)
    return rows


def q_coeff(nu, mu, n):
    """Q_{nu,mu} = <p_3^k s_nu, s_mu> / k! with 3k = |mu| - |nu|, evaluated
    as the gated reciprocal-factorial determinant."""
    nu = ptrim(nu)
    mu = ptrim(mu)
    if max(len(nu), len(mu)) > n:
        raise ValueError("partitions need at most %d rows" % (n,))
    diff = sum(mu) - sum(nu)
    if diff < 0 or diff % 3:
        return RAT_ZERO
    key = (nu, mu, n)
    val = _Q_CACHE.get(key)
    if val is None:
        val = _Q_CACHE[key] = _bareiss_det(_q_matrix(nu, mu, n))
    return val


def tau(g, d, dtable=None, a_provider=None):
    """Intersection number <tau_{d_1} ... tau_{d_n}>_g by the closed formula.

    n = 1, 2 delegate to the recursion oracle (the determinantal chain
    behind the coefficient tables starts at three points).  Missing table
    blocks are bootstrapped on demand through ``a_provider`` (defaults to
    the oracle's generating polynomials).
    """
    d = tuple(d)
    n = len(d)
    if n < 1 or 2 * g - 2 + n <= 0:
        raise ValueError("inadmissible (g, n) = (%d, %d)" % (g, n))
    if any(x < 0 for x in d):
        raise ValueError("negative tau index in %r" % (d,))
    if sum(d) != degree_rn(g, n):
        return RAT_ZERO
    if n <= 2:
        return oracle_mod.virasoro_tau(g, d)
    lam = tuple(sorted(d, reverse=True))
    if dtable is None:
        dtable = DTable()
    if a_provider is None:
        a_provider = lambda gg: oracle_mod.a_gn_oracle(gg, n)
    top = min(g, r_max(n))
    dtable.ensure_upto(top, n, a_provider)

    col = kostka_column(lam, n)  # mu >= lam with K_{mu,lam} != 0
    total = RAT_ZERO
    for r in range(top + 1):
        block = dtable.get(r, n)
        if not block:
            continue
        sub = RAT_ZERO
        for mu, k in col.items():
            qsum = RAT_ZERO
            for nu, dv in block.items():
                q = q_coeff(nu, mu, n)
                if q:
                    qsum += dv * q
            if qsum:
                sub += qsum * k * _gnum(mu)
        total += (12 ** r) * sub
    return total / (_dden(lam) * 24 ** g)


def a_gn(g, n, basis=MONOMIAL, dtable=None, a_provider=None):
    """Generating polynomial A_{g,n} through the coefficient tables:
    24^g A_{g,n} = sum_r 12^r / (g-r)! H^{-1}(p_3^(g-r) P_{r,n})."""
    if n < 1 or 2 * g - 2 + n <= 0:
        raise ValueError("inadmissible (g, n) = (%d, %d)" % (g, n))
    if n <= 2:
        return oracle_mod.a_gn_oracle(g, n).change_basis(basis)
    if dtable is None:
        dtable = DTable()
    if a_provider is None:
        a_provider = lambda gg: oracle_mod.a_gn_oracle(gg, n)
    top = min(g, r_max(n))
    dtable.ensure_upto(top, n, a_provider)
    hop = HContext(n)
    acc = SymPoly.zero(n, MONOMIAL)
    for r in range(top + 1):
        term = dtable.p_rn(r, n)
        for _ in range(g - r):
            term = power_sum_times_schur(term, 3)
        c = Rat(12 ** r, math.factorial(g - r))
        acc = acc + hop.apply_inverse(term).scale(c)
    return acc.scale(Rat(1, 24 ** g)).change_basis(basis)


# ---------------------------------------------------------------------------
# Correlators
# ---------------------------------------------------------------------------


class Correlator:
    """W_{g,n} as its finite coefficient table: the differential form is

        (-1)^n dx / (2^(n+1) x^(3/2)) * sum_mu c_mu s_mu(1/x)

    with c_mu stored in ``coeffs``.
    """

    __slots__ = ("g", "n", "coeffs")

    def __init__(self, g, n, coeffs):
        self.g = g
        self.n = n
        self.coeffs = {ptrim(k): Rat(v) for k, v in coeffs.items() if Rat(v)}

    def intersection_numbers(self):
        """Recover the plain tau coefficients from the Schur packaging:
        expanding s_mu(1/x) monomially and matching the defining form gives
        tau(lam) = [m_lam] * 2^(2g+n-3) / prod (2 lam_i + 1)!!."""
        spoly = SymPoly(self.n, SCHUR, self.coeffs).change_basis(MONOMIAL)
        out = {}
        scale = Rat(1 << (2 * self.g + self.n - 3))
        for lam, c in spoly.terms.items():
            dd = 1
            for x in lam:
                dd *= double_factorial_odd_int(2 * x + 1)
            out[lam] = c * scale / dd
        return out

    def text(self):
        lines = ["W g=%d n=%d" % (self.g, self.n)]
        for mu in sorted(self.coeffs, reverse=True):
            lines.append("%s %s" % (format_partition(mu), self.coeffs[mu]))
        return "\n".join(lines)

    def __eq__(self, other):
        return (
            isinstance(other, Correlator)
            and (self.g, self.n) == (other.g, other.n)
            and self.coeffs == other.coeffs
        )


def w_gn(g, n, dtable=None, a_provider=None):
    """Correlator coefficients straight from the tables: the Kostka numbers
    cancel, leaving c_mu = sum_r 12^(r-g) GammaRatio(mu) sum_nu D Q."""
    if n < 3 or 2 * g - 2 + n <= 0:
        raise ValueError("correlator tables start at n = 3")
    if dtable is None:
        dtable = DTable()
    if a_provider is None:
        a_provider = lambda gg: oracle_mod.a_gn_oracle(gg, n)
    top = min(g, r_max(n))
    dtable.ensure_upto(top, n, a_provider)
    coeffs = {}
    for mu in partition_class(degree_rn(g, n), n):
        gam = RAT_ONE
        for i, m_i in enumerate(mu + (0,) * (n - len(mu)), start=1):
            gam *= gamma_half_ratio(5 - 2 * i, m_i)
        total = RAT_ZERO
        for r in range(top + 1):
            sub = RAT_ZERO
            for nu, dv in dtable.get(r, n).items():
                q = q_coeff(nu, mu, n)
                if q:
                    sub += dv * q
            if sub:
                total += sub * Rat(12) ** (r - g)
        if total:
            coeffs[mu] = gam * total
    return Correlator(g, n, coeffs)


def wn_det_truncated(n, g_max, dtable=None, a_provider=None):
    """All correlators of genus <= g_max from the determinant of the matrix

        F_ij(nu) = sum_k GammaRatio_i(nu, k) / (k! 12^k) h_{L_i(nu)-(n-j)+3k}

    split by homogeneous degree.  Each entry's k-sum is truncated exactly
    where contributions stop reaching degree <= 3 g_max - 3 + n."""
    if n < 3:
        raise ValueError("correlator tables start at n = 3")
    if dtable is None:
        dtable = DTable()
    if a_provider is None:
        a_provider = lambda gg: oracle_mod.a_gn_oracle(gg, n)
    top = min(g_max, r_max(n))
    dtable.ensure_upto(top, n, a_provider)
    acc = SymPoly.zero(n, MONOMIAL)
    for r in range(top + 1):
        block = dtable.get(r, n)
        if not block:
            continue
        kcap = g_max - r
        for nu, dv in block.items():
            lnu = hook_numbers(nu, n)
            rows = []
            for i in range(1, n + 1):
                li = lnu[i - 1]
                row = []
                for j in range(1, n + 1):
                    entry = SymPoly.zero(n, MONOMIAL)
                    for k in range(kcap + 1):
                        deg = li - (n - j) + 3 * k
                        if deg < 0:
                            continue
                        gam = gamma_half_ratio(5 - 2 * i, li - n + 3 * k + i)
                        c = gam / (math.factorial(k) * Rat(12) ** k)
                        entry = entry + SymPoly.complete_homogeneous(deg, n).scale(c)
                    row.append(entry)
                rows.append(row)
            acc = acc + _poly_laplace_det(rows).scale(dv)
    out = {}
    comps = acc.homogeneous_components()
    for g in range(g_max + 1):
        piece = comps.get(degree_rn(g, n), SymPoly.zero(n, MONOMIAL))
        out[g] = Correlator(g, n, piece.change_basis(SCHUR).terms)
    return out


def _poly_laplace_det(rows):
    """Determinant of a matrix of SymPolys, expanding along rows with the
    column-subset minors memoized."""
    n = len(rows)
    nvars = rows[0][0].n
    memo = {}

    def rec(cols):
        if not cols:
            return SymPoly.one(nvars)
        got = memo.get(cols)
        if got is not None:
            return got
        i = n - len(cols)
        total = SymPoly.zero(nvars, MONOMIAL)
        for idx, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero():
                continue
            term = entry * rec(cols[:idx] + cols[idx + 1 :])
            total = total + (term if idx % 2 == 0 else -term)
        memo[cols] = total
        return total

    return rec(tuple(range(n)))
