"""The degree-preserving operator that trades monomial symmetric
polynomials for Schur combinations, together with its inverse.

On basis elements the two directions are

    H(m_lam)      = sum_{mu <= lam}  S_{lam,mu} / N_{mu,lam} * s_mu
    H^{-1}(s_mu)  = sum_{lam <= mu}  N_{mu,lam} * K_{mu,lam} * m_lam

with the combinatorial weight

    N_{mu,lam} = 2^{|lam|} prod_i [prod_{j<=mu_i} (j - i + 3/2)] / (2 lam_i + 1)!!

which reduces to the ratio of two integers, one depending on each
partition.  A raw differential realization (Vandermonde of derivatives
acting on sqrt(e_n) times the input) is kept for low-degree
cross-checks; the matrix route is the production path, implemented as
triangular solves against Kostka columns so no weight-class matrix is
ever inverted.
"""

import math

from .rational import RAT_ONE, RAT_ZERO, Rat, double_factorial_odd_int
from .partitions import partition_class, ptrim, transpose
from . import laurent
from .sympoly import (
    MONOMIAL,
    SCHUR,
    SymPoly,
    dual_kostka_column,
    kostka_column,
    solve_kostka_transpose,
)

_GNUM = {}   # mu -> prod_i prod_{j<=mu_i} (2(j-i)+3), an integer
_DDEN = {}   # lam -> prod_i (2 lam_i + 1)!!


def _gnum(mu):
    v = _GNUM.get(mu)
    if v is None:
        v = 1
        for i, row in enumerate(mu, start=1):
            for j in range(1, row + 1):
                v *= 2 * (j - i) + 3
        _GNUM[mu] = v
    return v


def _dden(lam):
    v = _DDEN.get(lam)
    if v is None:
        v = 1
        for row in lam:
            v *= double_factorial_odd_int(2 * row + 1)
        _DDEN[lam] = v
    return v


def n_factor(mu, lam):
    """The weight N_{mu,lam}, from its telescoped product form (exact,
    independent of the ambient number of rows)."""
    mu = ptrim(mu)
    lam = ptrim(lam)
    if sum(mu) != sum(lam):
        raise ValueError("N factor needs equal weights: %r vs %r" % (mu, lam))
    return Rat(_gnum(mu), _dden(lam))


def barnes_constant(n):
    """The normalization D_n = (-1)^(n-1) 2^(-n(n-1)/2) prod_{k<=n-2} (2k-1)!!."""
    p = 1
    for k in range(1, n - 1):
        p *= double_factorial_odd_int(2 * k - 1)
    sign = -1 if (n - 1) & 1 else 1
    return Rat(sign * p, 1 << (n * (n - 1) // 2))


class HContext:
    """Applies the operator and its inverse for a fixed variable count."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n

    def d_constant(self):
        return barnes_constant(self.n)

    def apply(self, poly):
        """H(poly), returned in the Schur basis.

        With X the Schur coefficients of the image and a the monomial
        coefficients of the input, H^{-1} gives a_lam = sum K~_{mu,lam} X_mu;
        scaling by the integer split of N turns this into a unitriangular
        Kostka system solved class by class.
        """
        if poly.n != self.n:
            raise ValueError("variable count mismatch")
        a = poly.change_basis(MONOMIAL)
        out = {}
        for d, comp in a.homogeneous_components().items():
            b = {lam: c * _dden(lam) for lam, c in comp.terms.items()}
            z = solve_kostka_transpose(d, self.n, b)
            for mu, v in z.items():
                out[mu] = v / _gnum(mu)
        return SymPoly(self.n, SCHUR, out)

    def apply_inverse(self, poly):
        """H^{-1}(poly), returned in the monomial basis."""
        if poly.n != self.n:
            raise ValueError("variable count mismatch")
        y = poly.change_basis(SCHUR)
        out = {}
        for d, comp in y.homogeneous_components().items():
            z = {mu: c * _gnum(mu) for mu, c in comp.terms.items()}
            for lam in partition_class(d, self.n):
                col = kostka_column(lam, self.n)
                acc = RAT_ZERO
                for mu, zv in (z if len(z) < len(col) else col).items():
                    other = col.get(mu) if len(z) < len(col) else z.get(mu)
                    if other:
                        acc += zv * other
                if acc:
                    out[lam] = acc / _dden(lam)
        return SymPoly(self.n, MONOMIAL, out)

    def apply_inverse_elementary(self, lam):
        """H^{-1}(e_lam) through the double Kostka sum
        sum_{nu <= mu <= lam^T} K_{mu^T,lam} K~_{mu,nu} m_nu."""
        lam = ptrim(lam)
        if lam and lam[0] > self.n:
            raise ValueError("elementary index %r exceeds %d variables" % (lam, self.n))
        out = {}
        for mu, kdual in dual_kostka_column(lam, self.n).items():
            gm = kdual * _gnum(mu)
            for nu, k in kostka_row_restricted(mu, self.n).items():
                w = out.get(nu, RAT_ZERO) + Rat(gm * k, _dden(nu))
                if w:
                    out[nu] = w
                elif nu in out:
                    del out[nu]
        return SymPoly(self.n, MONOMIAL, out)

    def apply_raw(self, poly, assert_polynomial=True):
        """H via its differential realization: antisymmetrized derivatives of
        sqrt(e_n) times the input, then Vandermonde division.  Exponential in
        n; meant for low-degree cross-checks of :meth:`apply`."""
        if poly.n != self.n:
            raise ValueError("variable count mismatch")
        n = self.n
        expo = poly.to_exponent_poly()
        work = laurent.LaurentPoly(
            n, {tuple(2 * e for e in k): v for k, v in expo.terms.items()}
        )
        work = work.shift_all(1)  # multiply by sqrt(e_n)
        for i in range(n):
            for j in range(i + 1, n):
                work = work.diff(i) - work.diff(j)
        # the result is antisymmetric, so collecting over the symmetric group
        # overcounts each alternant by n!
        classes = laurent.antisym_classes(work)
        classes = laurent.class_shift(classes, 2 * n - 3)  # e_n^(n - 3/2)
        scale = RAT_ONE / (barnes_constant(n) * math.factorial(n))
        out = {}
        for ex, c in classes.items():
            c = c * scale
            if not c:
                continue
            if any(e % 2 for e in ex):
                raise AssertionError("half-integer exponent survived")
            if ex[-1] < 0:
                if assert_polynomial:
                    raise AssertionError("negative exponent survived")
                continue
            mu = ptrim(ex[i] // 2 - (n - i - 1) for i in range(n))
            out[mu] = out.get(mu, RAT_ZERO) + c
        return SymPoly(n, SCHUR, {k: v for k, v in out.items() if v})


_KOSTKA_ROWS = {}


def kostka_row_restricted(mu, nrows):
    """Row of the Kostka matrix: {lam: K_{mu,lam}} over contents with at
    most nrows rows (the monomial expansion of s_mu in n variables)."""
    key = (mu, nrows)
    row = _KOSTKA_ROWS.get(key)
    if row is None:
        row = {}
        for lam in partition_class(sum(mu), nrows):
            k = kostka_column(lam, nrows).get(mu)
            if k:
                row[lam] = k
        _KOSTKA_ROWS[key] = row
    return row
