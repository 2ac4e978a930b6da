"""The genus-independent coefficient tables and the two independent ways
of producing them.

``bootstrap_p`` assembles the degree-(3r-3+n) component of the master
polynomial from oracle-supplied generating polynomials:

    P_{r,n} = sum_{g<=r} 2^g (-1)^(r-g) p_3^(r-g) / (12^(r-g) (r-g)!) H(A_{g,n})

``direct_p`` evaluates the determinantal realization instead: the trace
of a product of explicit 2x2 Laurent matrices, dressed with truncated
cubic exponentials, hit with a reduced grid of derivative differences,
antisymmetrized and divided by the Vandermonde.  The two routes share
no code beyond exact arithmetic, which is the point: their agreement
validates both.

``DTable`` is the persistent store for the Schur coefficients of the
P_{r,n}; its line-oriented ASCII format is canonical (identical tables
serialize to identical bytes).
"""

import math

from .rational import RAT_ONE, RAT_ZERO, Rat, rat_from_str
from .partitions import format_partition, parse_partition, ptrim
from . import laurent
from .hop import HContext, barnes_constant
from .sympoly import SCHUR, SymPoly, power_sum_times_schur

FILE_HEADER = "# dtable v1"


def r_max(n):
    """Largest homogeneous index: (n-1)(n-2)/2."""
    return (n - 1) * (n - 2) // 2


def degree_rn(r, n):
    return 3 * r - 3 + n


# ---------------------------------------------------------------------------
# Bootstrap route
# ---------------------------------------------------------------------------


def bootstrap_p(r, n, a_provider):
    """P_{r,n} in the Schur basis from generating polynomials of genus <= r.

    ``a_provider(g)`` must return the exact A_{g,n} as a SymPoly.
    """
    return bootstrap_all(r, n, a_provider)[r]


def bootstrap_all(r_top, n, a_provider):
    """All components P_{0,n} .. P_{r_top,n} at once, sharing one H image
    and one incremental p_3-ribbon chain per genus."""
    if not 0 <= r_top <= r_max(n):
        raise ValueError("component index %d out of range for n=%d" % (r_top, n))
    hop = HContext(n)
    acc = {r: SymPoly.zero(n, SCHUR) for r in range(r_top + 1)}
    for g in range(r_top + 1):
        term = hop.apply(a_provider(g))
        for r in range(g, r_top + 1):
            k = r - g
            c = Rat((-1) ** k * (1 << g), 12 ** k * math.factorial(k))
            acc[r] = acc[r] + term.scale(c)
            if r < r_top:
                term = power_sum_times_schur(term, 3)
    for r, p in acc.items():
        want = degree_rn(r, n)
        if any(sum(k) != want for k in p.terms):
            raise AssertionError("inhomogeneous bootstrap output at (r=%d, n=%d)" % (r, n))
    return acc


# ---------------------------------------------------------------------------
# Direct determinantal route
# ---------------------------------------------------------------------------


def _mtilde(n, i):
    """The 2x2 Laurent matrix [[-u/2, -1], [u^2/4 + 1/(2u), u/2]] in slot i."""
    lp = laurent.LaurentPoly
    a = lp.variable_power(n, i, 2, Rat(-1, 2))
    b = lp.constant(n, -1)
    c = lp.variable_power(n, i, 4, Rat(1, 4)) + lp.variable_power(n, i, -2, Rat(1, 2))
    d = lp.variable_power(n, i, 2, Rat(1, 2))
    return ((a, b), (c, d))


def trace_mtilde_product(n):
    """Tr prod_i Mtilde(u_i) as a LaurentPoly in n variables."""
    m = _mtilde(n, 0)
    for i in range(1, n):
        mi = _mtilde(n, i)
        m = (
            (m[0][0] * mi[0][0] + m[0][1] * mi[1][0], m[0][0] * mi[0][1] + m[0][1] * mi[1][1]),
            (m[1][0] * mi[0][0] + m[1][1] * mi[1][0], m[1][0] * mi[0][1] + m[1][1] * mi[1][1]),
        )
    return m[0][0] + m[1][1]


def _exp_p3_terms(n, sign, cap_doubled):
    """Term dict of exp(sign * p_3 / 12) truncated at the doubled-degree cap."""
    p3 = laurent.LaurentPoly(
        n, {tuple(6 if j == i else 0 for j in range(n)): RAT_ONE for i in range(n)}
    )
    acc = laurent.LaurentPoly.constant(n, 1)
    term = laurent.LaurentPoly.constant(n, 1)
    k = 0
    while 6 * (k + 1) <= cap_doubled:
        k += 1
        term = term.mul(p3, cap_doubled).scale(Rat(sign, 12 * k))
        if term.is_zero():
            break
        acc = acc + term
    return acc.terms


def direct_p(n, extra_truncation=0, n_limit=5):
    """Full P_n (all homogeneous components) by the determinantal route.

    The derivative grid runs over the cyclically non-adjacent index pairs:
    the Vandermonde divided by the cyclic-denominator product leaves
    - prod_{j >= i+2, (i,j) != (1,n)} (x_i - x_j), whose factors turn into
    derivative differences under the Laplace transform.  (Including the
    wrap-around pair (1, n) would make the whole antisymmetrization vanish
    by reversal symmetry of the trace.)

    Exact up to the nominal maximum degree; raising ``extra_truncation``
    by multiples of 3 widens every internal series truncation, which must
    not change the result.  Cost grows like n! — guarded by ``n_limit``.
    """
    if n < 3:
        raise ValueError("the determinantal route starts at n = 3")
    if n > n_limit:
        raise ValueError("n = %d beyond the configured direct-route limit %d" % (n, n_limit))
    dmax = 3 * r_max(n) - 3 + n + 3 * extra_truncation
    # a working term of doubled degree D lands at final doubled degree
    # >= D + n, so the working polynomial may be capped tightly
    work_cap = 2 * dmax - n
    series_cap = work_cap + 3 * n

    work = trace_mtilde_product(n).shift_all(-1)  # divide by sqrt(e_n)
    work = work.mul(
        laurent.LaurentPoly(n, _exp_p3_terms(n, +1, series_cap)), work_cap
    )
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            work = work.diff(i) - work.diff(j)
    classes = laurent.antisym_classes(work)
    classes = laurent.class_mul_symmetric(classes, _exp_p3_terms(n, -1, series_cap))
    classes = laurent.class_shift(classes, 2 * n - 3)  # e_n^(n - 3/2)

    norm = RAT_ONE / (barnes_constant(n) * n * (1 << (n - 1)))
    terms = {}
    for ex, c in classes.items():
        c = c * norm
        if not c:
            continue
        if sum(ex) > 2 * (dmax + n * (n - 1) // 2):
            continue  # truncation artifacts live above the exact window
        if any(e % 2 for e in ex):
            raise AssertionError("half-integer exponent in direct route output")
        if ex[-1] < 0:
            raise AssertionError("uncancelled pole in direct route output")
        mu = ptrim(ex[i] // 2 - (n - i - 1) for i in range(n))
        d = sum(mu)
        if (d - (n - 3)) % 3:
            raise AssertionError("off-lattice degree %d in direct route output" % d)
        terms[mu] = terms.get(mu, RAT_ZERO) + c
    return SymPoly(n, SCHUR, {k: v for k, v in terms.items() if v})


# ---------------------------------------------------------------------------
# Trace-over-cyclic-permutations shift invariance
# ---------------------------------------------------------------------------


def _mat_mul(a, b):
    return (
        (
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ),
        (
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ),
    )


def _cyclic_sum(matrices, xs):
    n = len(matrices)
    from itertools import permutations

    total = RAT_ZERO
    for tail in permutations(range(1, n)):
        # the cyclic permutation sending 0 -> tail[0] -> ... -> tail[-1] -> 0
        sigma = {}
        chain = (0,) + tail
        for a, b in zip(chain, chain[1:] + (0,)):
            sigma[a] = b
        prod = matrices[0]
        k = sigma[0]
        order = [0]
        while k != 0:
            order.append(k)
            prod = _mat_mul(prod, matrices[k])
            k = sigma[k]
        tr = prod[0][0] + prod[1][1]
        den = RAT_ONE
        for i in range(n):
            den = den * (xs[i] - xs[sigma[i]])
        total += tr / den
    return total


def trace_shift_invariance(matrices, xs, shifts):
    """Whether the cyclic-permutation trace sum is unchanged when each
    matrix M_i is shifted by alpha_i * Id.  (It always is; this evaluates
    both sides exactly and reports equality.)"""
    n = len(matrices)
    if not (len(xs) == len(shifts) == n) or n < 3:
        raise ValueError("need n >= 3 matrices, points and shifts")
    if len(set(xs)) != n:
        raise ValueError("evaluation points must be pairwise distinct")
    mats = tuple(
        tuple(tuple(Rat(x) for x in row) for row in m) for m in matrices
    )
    xs = tuple(Rat(x) for x in xs)
    before = _cyclic_sum(mats, xs)
    shifted = []
    for m, al in zip(mats, shifts):
        al = Rat(al)
        shifted.append(((m[0][0] + al, m[0][1]), (m[1][0], m[1][1] + al)))
    after = _cyclic_sum(tuple(shifted), xs)
    return before == after


# ---------------------------------------------------------------------------
# Persistent coefficient tables
# ---------------------------------------------------------------------------


class DTable:
    """Map (r, n) -> {nu: coefficient} with a canonical ASCII file form."""

    def __init__(self):
        self.blocks = {}

    def has(self, r, n):
        return (r, n) in self.blocks

    def get(self, r, n):
        return self.blocks[(r, n)]

    def put(self, r, n, coeffs):
        if not 0 <= r <= r_max(n):
            raise ValueError("component index %d out of range for n=%d" % (r, n))
        want = degree_rn(r, n)
        clean = {}
        for k, v in coeffs.items():
            k = ptrim(k)
            v = Rat(v)
            if sum(k) != want:
                raise ValueError("coefficient at weight %d in block (r=%d, n=%d)" % (sum(k), r, n))
            if v:
                clean[k] = v
        self.blocks[(r, n)] = clean

    def ensure(self, r, n, a_provider):
        """Compute and store the (r, n) block if missing; returns it."""
        if not self.has(r, n):
            self.ensure_upto(r, n, a_provider)
        return self.blocks[(r, n)]

    def ensure_upto(self, r_top, n, a_provider):
        if all(self.has(r, n) for r in range(r_top + 1)):
            return
        for r, p in bootstrap_all(r_top, n, a_provider).items():
            if not self.has(r, n):
                self.put(r, n, p.terms)

    def p_rn(self, r, n):
        return SymPoly(n, SCHUR, dict(self.blocks[(r, n)]))

    def support_count(self, r, n):
        return len(self.blocks[(r, n)])

    # -- serialization --------------------------------------------------

    def dumps(self):
        lines = [FILE_HEADER]
        first = True
        for (r, n) in sorted(self.blocks, key=lambda rn: (rn[1], rn[0])):
            if not first:
                lines.append("")
            first = False
            lines.append("n=%d r=%d" % (n, r))
            block = self.blocks[(r, n)]
            for nu in sorted(block, reverse=True):
                lines.append("%s %s" % (format_partition(nu), block[nu]))
        return "\n".join(lines) + "\n"

    def save(self, path):
        data = self.dumps()
        with open(path, "w", encoding="ascii") as fh:
            fh.write(data)

    @classmethod
    def loads(cls, data):
        lines = data.splitlines()
        if not lines or lines[0] != FILE_HEADER:
            raise ValueError("unrecognized table header")
        table = cls()
        cur = None
        coeffs = {}

        def flush():
            if cur is not None:
                table.put(cur[0], cur[1], coeffs)

        for line in lines[1:]:
            line = line.strip()
            if not line:
                continue
            if line.startswith("n="):
                flush()
                ntok, rtok = line.split()
                cur = (int(rtok[2:]), int(ntok[2:]))
                coeffs = {}
            else:
                ptok, vtok = line.split()
                coeffs[parse_partition(ptok)] = rat_from_str(vtok)
        flush()
        return table

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="ascii") as fh:
            return cls.loads(fh.read())

    def __eq__(self, other):
        return isinstance(other, DTable) and self.blocks == other.blocks
