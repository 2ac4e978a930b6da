"""Symmetric polynomials in n variables over exact rationals.

Three bases are supported, tagged by a single letter:

* ``m`` monomial symmetric polynomials, indexed by partitions with at
  most n rows;
* ``e`` products of elementary symmetric polynomials, indexed by
  partitions whose parts are at most n (any number of rows);
* ``s`` Schur polynomials, indexed like ``m``.

Base changes go through the Kostka matrix K (s -> m) and its inverse
(m -> s), and through the transposed-shape Kostka numbers for the
elementary basis.  Kostka data is produced column-wise by iterated
Pieri growth (adding horizontal strips) and, for the dual transitions,
by vertical-strip growth; triangular systems against those columns
replace any explicit matrix inversion, which keeps the large weight
classes tractable.

All class-level caches are populated once per key and then only read,
so concurrent readers are safe under the usual single-writer rule.
"""

from itertools import permutations

from .rational import RAT_ONE, RAT_ZERO, Rat, rat_from_str
from .partitions import (
    format_partition,
    hook_numbers,
    parse_partition,
    partition_class,
    ptrim,
    transpose,
)

MONOMIAL = "m"
ELEMENTARY = "e"
SCHUR = "s"
BASES = (MONOMIAL, ELEMENTARY, SCHUR)


# ---------------------------------------------------------------------------
# Kostka machinery
# ---------------------------------------------------------------------------

_KOSTKA_COLUMNS = {}       # (content, nrows) -> {shape: int}
_DUAL_COLUMNS = {}         # (content, nrows) -> {shape: K_{shape^T, content}}
_INV_KOSTKA_ROWS = {}      # (lam, nrows) -> {mu: int}


def _hstrip_additions(shape, k, nrows):
    """Shapes obtained from ``shape`` by adding a horizontal k-strip."""
    L = len(shape)
    maxrow = min(L + 1, nrows)
    out = []
    acc = []

    def rec(i, rem):
        if i == maxrow:
            if rem == 0:
                out.append(tuple(x for x in acc if x))
            return
        lo = shape[i] if i < L else 0
        # at most one new box per column: row i may not pass the OLD row above
        hi = min(shape[i - 1] if i else lo + rem, lo + rem)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            rec(i + 1, rem - (v - lo))
            acc.pop()

    rec(0, k)
    return out


def _vstrip_additions(shape, k, nrows):
    """Shapes obtained from ``shape`` by adding a vertical k-strip."""
    L = len(shape)
    maxrow = min(L + k, nrows)
    out = []
    acc = []

    def rec(i, rem):
        if rem == 0:
            out.append(ptrim(tuple(acc) + shape[i:]))
            return
        if i == maxrow:
            return
        base = shape[i] if i < L else 0
        for b in (1, 0):
            if b > rem:
                continue
            v = base + b
            if i > 0 and v > acc[i - 1]:
                continue
            if v == 0 and rem > b:
                # all later rows are empty as well; no room left
                continue
            acc.append(v)
            rec(i + 1, rem - b)
            acc.pop()

    rec(0, k)
    return out


def kostka_column(content, nrows):
    """All Kostka numbers K_{mu, content} at once: {mu: K} over shapes with
    at most nrows rows.  Iterated Pieri growth, one horizontal strip per
    part of the content."""
    key = (content, nrows)
    col = _KOSTKA_COLUMNS.get(key)
    if col is None:
        cur = {(): 1}
        for part in content:
            nxt = {}
            for shape, c in cur.items():
                for t in _hstrip_additions(shape, part, nrows):
                    nxt[t] = nxt.get(t, 0) + c
            cur = nxt
        col = _KOSTKA_COLUMNS[key] = cur
    return col


def dual_kostka_column(content, nrows):
    """{mu: K_{mu^T, content}} over shapes mu with at most nrows rows,
    grown by vertical strips (one per part of the content)."""
    key = (content, nrows)
    col = _DUAL_COLUMNS.get(key)
    if col is None:
        cur = {(): 1}
        for part in content:
            nxt = {}
            for shape, c in cur.items():
                for t in _vstrip_additions(shape, part, nrows):
                    nxt[t] = nxt.get(t, 0) + c
            cur = nxt
        col = _DUAL_COLUMNS[key] = cur
    return col


def kostka(mu, lam):
    """Kostka number K_{mu,lam}: semistandard tableaux of shape mu and
    weight lam.  Zero unless mu >= lam in dominance; K_{mu,mu} = 1."""
    mu = ptrim(mu)
    lam = ptrim(lam)
    if sum(mu) != sum(lam):
        raise ValueError("Kostka number needs equal weights: %r vs %r" % (mu, lam))
    if len(mu) > max(len(lam), 1):
        return 0
    return kostka_column(lam, max(len(lam), 1)).get(mu, 0)


def inverse_kostka_row(lam, nrows):
    """Row lam of K^{-1}: the coefficients S_{lam,mu} with m_lam =
    sum_mu S_{lam,mu} s_mu, solved against Kostka columns."""
    key = (lam, nrows)
    row = _INV_KOSTKA_ROWS.get(key)
    if row is None:
        cls = partition_class(sum(lam), nrows)
        start = cls.index(lam)
        row = {}
        for p in range(start, len(cls)):
            lamp = cls[p]
            col = kostka_column(lamp, nrows)
            acc = 1 if lamp == lam else 0
            for mu, x in row.items():
                k = col.get(mu)
                if k:
                    acc -= x * k
            if acc:
                row[lamp] = acc
        _INV_KOSTKA_ROWS[key] = row
    return row


def inverse_kostka(lam, mu):
    """Entry S_{lam,mu} of the inverse Kostka matrix (integer)."""
    lam = ptrim(lam)
    mu = ptrim(mu)
    if sum(lam) != sum(mu):
        raise ValueError("inverse Kostka needs equal weights: %r vs %r" % (lam, mu))
    nrows = max(sum(lam), 1)
    return inverse_kostka_row(lam, nrows).get(mu, 0)


def solve_kostka_transpose(degree, nrows, b):
    """Solve b_lam = sum_{mu >= lam} K_{mu,lam} Z_mu for Z on a weight class.

    K is unitriangular for the dominance order, which any descending
    lexicographic listing refines, so a single forward pass suffices.
    """
    cls = partition_class(degree, nrows)
    z = {}
    for lam in cls:
        col = kostka_column(lam, nrows)
        acc = b.get(lam, 0)
        if len(col) < len(z):
            for mu, k in col.items():
                if mu != lam:
                    zm = z.get(mu)
                    if zm is not None:
                        acc -= k * zm
        else:
            for mu, zm in z.items():
                k = col.get(mu)
                if k:
                    acc -= k * zm
        if acc:
            z[lam] = acc
    return z


def clear_caches():
    """Drop all memoized Kostka/class data (used by benchmarks and tests)."""
    _KOSTKA_COLUMNS.clear()
    _DUAL_COLUMNS.clear()
    _INV_KOSTKA_ROWS.clear()
    partition_class.cache_clear()


# ---------------------------------------------------------------------------
# Dense exponent-vector polynomials (expansion backend)
# ---------------------------------------------------------------------------


class ExponentPoly:
    """Sparse polynomial keyed by full exponent vectors of length n.

    This is the concrete expansion target used for products, evaluation
    and brute-force cross-checks; no zero coefficients are stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {} if terms is None else terms

    @classmethod
    def constant(cls, n, value):
        value = Rat(value)
        return cls(n, {(0,) * n: value} if value else {})

    def copy(self):
        return ExponentPoly(self.n, dict(self.terms))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            w = terms.get(k, RAT_ZERO) + v
            if w:
                terms[k] = w
            elif k in terms:
                del terms[k]
        return ExponentPoly(self.n, terms)

    def __neg__(self):
        return ExponentPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Rat(c)
        if not c:
            return ExponentPoly(self.n)
        return ExponentPoly(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                w = out.get(k, RAT_ZERO) + va * vb
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        return ExponentPoly(self.n, out)

    def evaluate(self, point):
        if len(point) != self.n:
            raise ValueError("point length %d != %d variables" % (len(point), self.n))
        point = [Rat(x) for x in point]
        total = RAT_ZERO
        for k, v in self.terms.items():
            w = v
            for x, e in zip(point, k):
                if e:
                    w *= x ** e
            total += w
        return total

    def divide_exact(self, divisor):
        """Exact division by another ExponentPoly (lex-ordered elimination);
        raises ValueError when the division leaves a remainder."""
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        dlead = max(divisor.terms)
        dval = divisor.terms[dlead]
        rem = dict(self.terms)
        out = {}
        while rem:
            lead = max(rem)
            if any(l < d for l, d in zip(lead, dlead)):
                raise ValueError("inexact polynomial division")
            q = tuple(l - d for l, d in zip(lead, dlead))
            c = rem[lead] / dval
            out[q] = out.get(q, RAT_ZERO) + c
            for k, v in divisor.terms.items():
                kk = tuple(x + y for x, y in zip(q, k))
                w = rem.get(kk, RAT_ZERO) - c * v
                if w:
                    rem[kk] = w
                elif kk in rem:
                    del rem[kk]
        return ExponentPoly(self.n, {k: v for k, v in out.items() if v})

    def to_monomial_sympoly(self):
        """Collect a symmetric ExponentPoly into the monomial basis.

        Verifies symmetry: every orbit must be fully present with one
        common coefficient.
        """
        import math

        reps = {}
        seen = {}
        for k, v in self.terms.items():
            srt = ptrim(sorted(k, reverse=True))
            seen[srt] = seen.get(srt, 0) + 1
            if reps.setdefault(srt, v) != v:
                raise ValueError("polynomial is not symmetric")
        for srt, count in seen.items():
            orbit = math.factorial(self.n)
            run = 1
            padded = srt + (0,) * (self.n - len(srt))
            for i in range(1, self.n + 1):
                if i < self.n and padded[i] == padded[i - 1]:
                    run += 1
                else:
                    orbit //= math.factorial(run)
                    run = 1
            if count != orbit:
                raise ValueError("polynomial is not symmetric")
        return SymPoly(self.n, MONOMIAL, reps)


def _distinct_permutations(padded):
    return set(permutations(padded))


def monomial_exponent_poly(lam, n):
    if len(lam) > n:
        raise ValueError("partition %r too long for %d variables" % (lam, n))
    padded = lam + (0,) * (n - len(lam))
    return ExponentPoly(n, {k: RAT_ONE for k in _distinct_permutations(padded)})


def elementary_exponent_poly(k, n):
    if k < 0 or k > n:
        return ExponentPoly(n)
    out = {}
    # all 0/1 exponent vectors with k ones
    for subset in _distinct_permutations((1,) * k + (0,) * (n - k)):
        out[subset] = RAT_ONE
    return ExponentPoly(n, out)


# ---------------------------------------------------------------------------
# SymPoly
# ---------------------------------------------------------------------------


class SymPoly:
    """Basis-tagged sparse linear combination of symmetric basis elements."""

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n, basis, terms=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.basis = basis
        clean = {}
        for k, v in (terms or {}).items():
            k = ptrim(k)
            v = Rat(v)
            if not v:
                continue
            if basis == ELEMENTARY:
                if k and k[0] > n:
                    raise ValueError("elementary index %r exceeds %d variables" % (k, n))
            elif len(k) > n:
                raise ValueError("partition %r too long for %d variables" % (k, n))
            clean[k] = clean.get(k, RAT_ZERO) + v
        self.terms = {k: v for k, v in clean.items() if v}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n, basis=MONOMIAL):
        return cls(n, basis, {})

    @classmethod
    def one(cls, n, basis=MONOMIAL):
        return cls(n, basis, {(): RAT_ONE})

    @classmethod
    def basis_element(cls, basis, lam, n):
        return cls(n, basis, {ptrim(lam): RAT_ONE})

    @classmethod
    def power_sum(cls, k, n):
        """p_k as a monomial-basis SymPoly."""
        return cls(n, MONOMIAL, {(k,): RAT_ONE}) if k else cls.one(n)

    @classmethod
    def complete_homogeneous(cls, k, n):
        """h_k = sum of all monomials of degree k."""
        if k < 0:
            return cls.zero(n)
        return cls(n, MONOMIAL, {lam: RAT_ONE for lam in partition_class(k, n)})

    # -- ring-ish operations -------------------------------------------

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        if self.basis != other.basis:
            raise ValueError("basis mismatch (%s vs %s)" % (self.basis, other.basis))
        terms = dict(self.terms)
        for k, v in other.terms.items():
            w = terms.get(k, RAT_ZERO) + v
            if w:
                terms[k] = w
            elif k in terms:
                del terms[k]
        return SymPoly(self.n, self.basis, terms)

    def __neg__(self):
        return SymPoly(self.n, self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Rat(c)
        if not c:
            return SymPoly.zero(self.n, self.basis)
        return SymPoly(self.n, self.basis, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Exact product, returned in the monomial basis."""
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        prod = self.to_exponent_poly() * other.to_exponent_poly()
        return prod.to_monomial_sympoly()

    def __eq__(self, other):
        return (
            isinstance(other, SymPoly)
            and self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.basis, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "SymPoly(%d, %r, 0)" % (self.n, self.basis)
        return "SymPoly(%d, %r, {%s})" % (
            self.n,
            self.basis,
            ", ".join(
                "%s: %s" % (format_partition(k), v) for k, v in sorted(self.terms.items(), reverse=True)
            ),
        )

    # -- structure ------------------------------------------------------

    def degree_of_key(self, k):
        return sum(k)

    def homogeneous_components(self):
        """Split into {degree: SymPoly}; exact for every basis."""
        out = {}
        for k, v in self.terms.items():
            out.setdefault(sum(k), {})[k] = v
        return {d: SymPoly(self.n, self.basis, t) for d, t in sorted(out.items())}

    def degree(self):
        return max((sum(k) for k in self.terms), default=0)

    # -- expansions ------------------------------------------------------

    def to_exponent_poly(self):
        if self.basis == SCHUR:
            return self.change_basis(MONOMIAL).to_exponent_poly()
        out = ExponentPoly(self.n)
        if self.basis == MONOMIAL:
            for lam, c in self.terms.items():
                out = out + monomial_exponent_poly(lam, self.n).scale(c)
            return out
        ecache = {}
        for lam, c in self.terms.items():
            acc = ExponentPoly.constant(self.n, 1)
            for part in lam:
                ek = ecache.get(part)
                if ek is None:
                    ek = ecache[part] = elementary_exponent_poly(part, self.n)
                acc = acc * ek
            out = out + acc.scale(c)
        return out

    def evaluate(self, point):
        return self.to_exponent_poly().evaluate(point)

    def specialize_last_to_zero(self):
        """Set the last variable to zero, landing in n-1 variables."""
        if self.n < 2:
            raise ValueError("need at least two variables to drop one")
        m = self.n - 1
        if self.basis == MONOMIAL:
            return SymPoly(m, MONOMIAL, {k: v for k, v in self.terms.items() if len(k) <= m})
        if self.basis == ELEMENTARY:
            return SymPoly(m, ELEMENTARY, {k: v for k, v in self.terms.items() if not k or k[0] <= m})
        return self.change_basis(MONOMIAL).specialize_last_to_zero()

    # -- base change ------------------------------------------------------

    def change_basis(self, target):
        if target not in BASES:
            raise ValueError("unknown basis %r" % (target,))
        if target == self.basis:
            return SymPoly(self.n, self.basis, dict(self.terms))
        key = (self.basis, target)
        if key == (SCHUR, MONOMIAL):
            return self._schur_to_monomial()
        if key == (MONOMIAL, SCHUR):
            return self._monomial_to_schur()
        if key == (ELEMENTARY, SCHUR):
            return self._elementary_to_schur()
        if key == (SCHUR, ELEMENTARY):
            return self._schur_to_elementary()
        # the remaining pairs compose through the Schur basis
        return self.change_basis(SCHUR).change_basis(target)

    def _schur_to_monomial(self):
        out = {}
        for d, comp in self.homogeneous_components().items():
            for lam in partition_class(d, self.n):
                col = kostka_column(lam, self.n)
                acc = RAT_ZERO
                for mu, c in comp.terms.items():
                    k = col.get(mu)
                    if k:
                        acc += k * c
                if acc:
                    out[lam] = acc
        return SymPoly(self.n, MONOMIAL, out)

    def _monomial_to_schur(self):
        out = {}
        for lam, c in self.terms.items():
            for mu, s in inverse_kostka_row(lam, self.n).items():
                w = out.get(mu, RAT_ZERO) + c * s
                if w:
                    out[mu] = w
                elif mu in out:
                    del out[mu]
        return SymPoly(self.n, SCHUR, out)

    def _elementary_to_schur(self):
        out = {}
        for lam, c in self.terms.items():
            for mu, k in dual_kostka_column(lam, self.n).items():
                w = out.get(mu, RAT_ZERO) + c * k
                if w:
                    out[mu] = w
                elif mu in out:
                    del out[mu]
        return SymPoly(self.n, SCHUR, out)

    def _schur_to_elementary(self):
        """Triangular elimination against vertical-strip Kostka columns.

        e_{rho^T} = sum_{mu <= rho} K_{mu^T, rho^T} s_mu with unit diagonal,
        so walking the class in reverse-lex order and subtracting one dual
        column per emitted coefficient inverts the relation; only columns
        for coefficients that actually appear are ever built.
        """
        out = {}
        for d, comp in self.homogeneous_components().items():
            residual = dict(comp.terms)
            for rho in partition_class(d, self.n):
                c = residual.get(rho)
                if not c:
                    continue
                rho_t = transpose(rho)
                for mu, k in dual_kostka_column(rho_t, self.n).items():
                    w = residual.get(mu, RAT_ZERO) - c * k
                    if w:
                        residual[mu] = w
                    elif mu in residual:
                        del residual[mu]
                out[rho_t] = out.get(rho_t, RAT_ZERO) + c
            if residual:
                raise AssertionError("Schur-to-elementary elimination left a residual")
        return SymPoly(self.n, ELEMENTARY, {k: v for k, v in out.items() if v})

    # -- inner product ----------------------------------------------------

    def schur_inner(self, other):
        """Schur scalar product <p, q>; Schur polynomials are orthonormal."""
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        a = self.change_basis(SCHUR).terms
        b = other.change_basis(SCHUR).terms
        if len(a) > len(b):
            a, b = b, a
        total = RAT_ZERO
        for k, v in a.items():
            w = b.get(k)
            if w:
                total += v * w
        return total

    # -- textual form ------------------------------------------------------

    def text(self):
        """Canonical textual form: one term per line, reverse-lex order."""
        lines = []
        for k in sorted(self.terms, reverse=True):
            lines.append("%s[%s] %s" % (self.basis, format_partition(k), self.terms[k]))
        return "\n".join(lines)

    @classmethod
    def parse(cls, text, n):
        terms = {}
        basis = None
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            head, val = line.rsplit(None, 1)
            b, rest = head[0], head[1:]
            if basis is None:
                basis = b
            elif basis != b:
                raise ValueError("mixed bases in textual form")
            if not (rest.startswith("[") and rest.endswith("]")):
                raise ValueError("malformed term %r" % (line,))
            terms[parse_partition(rest[1:-1])] = rat_from_str(val)
        return cls(n, basis or MONOMIAL, terms)


# ---------------------------------------------------------------------------
# Power-sum multiplication in the Schur basis (ribbon rule)
# ---------------------------------------------------------------------------


def power_sum_times_schur(poly, r=3):
    """Multiply a Schur-basis SymPoly by the power sum p_r.

    On shifted rows (beta numbers) the product p_r * s_nu is the signed
    sum over ways of raising one shifted row by r, the sign counting the
    rows jumped over while re-sorting; collisions vanish.
    """
    if poly.basis != SCHUR:
        raise ValueError("ribbon multiplication expects the Schur basis")
    n = poly.n
    out = {}
    for nu, c in poly.terms.items():
        L = hook_numbers(nu, n)
        lset = set(L)
        for i in range(n):
            top = L[i] + r
            if top in lset:
                continue
            jumps = sum(1 for x in L if L[i] < x < top)
            sign = -1 if jumps & 1 else 1
            newL = sorted(lset - {L[i]} | {top}, reverse=True)
            mu = ptrim(x - (n - j - 1) for j, x in enumerate(newL))
            w = out.get(mu, RAT_ZERO) + (c if sign > 0 else -c)
            if w:
                out[mu] = w
            elif mu in out:
                del out[mu]
    return SymPoly(n, SCHUR, out)
