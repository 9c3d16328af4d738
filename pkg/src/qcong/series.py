"""Exact truncated Laurent series over ZZ and ZZ/m.

A series stores a dense coefficient window [low, prec).  Coefficients below
low are zero by construction (low is a support bound, not the valuation);
coefficients at prec and beyond are unknown, never assumed zero.  Every
operation returns the window its inputs actually determine:

  add/sub   the overlap of the two windows
  mul       [f.low + g.low, min(f.low + g.prec, g.low + f.prec))
  equality  compared on the overlap only; an empty overlap is an error

Out-of-window coefficient access raises.  All values are immutable; share
them freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernel


class SeriesError(ValueError):
    pass


class WindowError(SeriesError):
    """Empty or incompatible coefficient windows."""


class RingMismatchError(SeriesError):
    pass


class NonUnitError(SeriesError):
    pass


@dataclass(frozen=True)
class Ring:
    """ZZ when modulus is None, else ZZ/modulus with canonical reps 0..m-1."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    def normalize(self, c):
        return c if self.modulus is None else c % self.modulus

    def is_unit(self, c):
        if self.modulus is None:
            return c in (1, -1)
        return math.gcd(c, self.modulus) == 1

    def unit_inverse(self, c):
        if self.modulus is None:
            if c in (1, -1):
                return c
            raise NonUnitError(f"{c} is not a unit over ZZ")
        try:
            return pow(c, -1, self.modulus)
        except ValueError:
            raise NonUnitError(f"{c} is not a unit mod {self.modulus}") from None

    def __repr__(self):
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"


ZZ = Ring()


def Zmod(m):
    return Ring(m)


class LaurentSeries:
    __slots__ = ("ring", "low", "coeffs")

    def __init__(self, ring, low, coeffs):
        if ring.modulus is None:
            cs = tuple(coeffs)
        else:
            m = ring.modulus
            cs = tuple(c % m for c in coeffs)
        if not cs:
            raise WindowError("series window must be non-empty")
        self.ring = ring
        self.low = low
        self.coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, ring, low, prec):
        if prec <= low:
            raise WindowError(f"window [{low},{prec}) is empty")
        return cls(ring, low, (0,) * (prec - low))

    @classmethod
    def one(cls, ring, prec):
        return cls.monomial(ring, 1, 0, prec)

    @classmethod
    def monomial(cls, ring, coeff, exponent, prec):
        if prec <= exponent:
            raise WindowError(f"prec {prec} does not cover exponent {exponent}")
        return cls(ring, exponent, (coeff,) + (0,) * (prec - exponent - 1))

    @classmethod
    def from_terms(cls, ring, terms, low, prec):
        """Dense series on [low, prec) from {exponent: coeff}; terms outside
        the window must not exist (that would silently lose support)."""
        if prec <= low:
            raise WindowError(f"window [{low},{prec}) is empty")
        cs = [0] * (prec - low)
        for e, c in terms.items():
            if not low <= e < prec:
                raise WindowError(f"term q^{e} outside window [{low},{prec})")
            cs[e - low] = c
        return cls(ring, low, cs)

    # -- inspection --------------------------------------------------------

    @property
    def prec(self):
        return self.low + len(self.coeffs)

    def coeff(self, n):
        if not self.low <= n < self.prec:
            raise WindowError(
                f"coefficient of q^{n} outside window [{self.low},{self.prec})")
        return self.coeffs[n - self.low]

    def valuation(self):
        """Exponent of the first nonzero coefficient, or None if the whole
        window is zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.low + i
        return None

    def is_zero(self):
        return not any(self.coeffs)

    def max_abs(self):
        return _kernel.max_abs(self.coeffs)

    def overlap(self, other):
        lo = max(self.low, other.low)
        hi = min(self.prec, other.prec)
        return lo, hi

    def first_difference(self, other):
        """First (exponent, self coeff, other coeff) differing on the
        overlap, or None.  Raises on disjoint windows or ring mismatch."""
        self._want_ring(other)
        lo, hi = self.overlap(other)
        if hi <= lo:
            raise WindowError(
                f"windows [{self.low},{self.prec}) and "
                f"[{other.low},{other.prec}) do not overlap")
        for n in range(lo, hi):
            a = self.coeffs[n - self.low]
            b = other.coeffs[n - other.low]
            if a != b:
                return n, a, b
        return None

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.low + i
                terms.append(f"{c}*q^{e}" if e else f"{c}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"<{self.ring} series [{self.low},{self.prec}): {body}>"

    # -- arithmetic --------------------------------------------------------

    def _want_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _overlap_op(self, other, op):
        self._want_ring(other)
        lo, hi = self.overlap(other)
        if hi <= lo:
            raise WindowError("empty overlap window")
        a, b = self.coeffs, other.coeffs
        cs = [op(a[n - self.low], b[n - other.low]) for n in range(lo, hi)]
        return LaurentSeries(self.ring, lo, cs)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._overlap_op(other, lambda x, y: x + y)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._overlap_op(other, lambda x, y: x - y)

    def __neg__(self):
        return LaurentSeries(self.ring, self.low, tuple(-c for c in self.coeffs))

    def scale(self, c):
        return LaurentSeries(self.ring, self.low, tuple(c * x for x in self.coeffs))

    def shift(self, s):
        """Multiply by q^s: window moves to [low+s, prec+s)."""
        return LaurentSeries(self.ring, self.low + s, self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._want_ring(other)
        out_len = min(len(self.coeffs), len(other.coeffs))
        cs = _kernel.convolve(self.coeffs, other.coeffs, out_len,
                              self.ring.modulus)
        return LaurentSeries(self.ring, self.low + other.low, cs)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be nonnegative integers")
        if k == 0:
            return LaurentSeries.one(self.ring, len(self.coeffs))
        out = self
        for bit in bin(k)[3:]:
            out = out * out
            if bit == "1":
                out = out * self
        return out

    def invert(self):
        """Inverse; the first nonzero coefficient must be a ring unit.
        Window: [-v, -v + L) where v is the valuation and L the number of
        stored coefficients from v up."""
        idx = None
        for i, c in enumerate(self.coeffs):
            if c:
                idx = i
                break
        if idx is None:
            raise NonUnitError("cannot invert a series with all-zero window")
        lead = self.coeffs[idx]
        if not self.ring.is_unit(lead):
            raise NonUnitError(f"leading coefficient {lead} not a unit in {self.ring}")
        unit = list(self.coeffs[idx:])
        inv = _kernel.newton_invert(unit, self.ring.unit_inverse(lead),
                                    self.ring.modulus)
        return LaurentSeries(self.ring, -(self.low + idx), inv)

    def divide_exact(self, k):
        """Divide every coefficient by k over ZZ; any remainder is an error."""
        if self.ring.modulus is not None:
            raise RingMismatchError("divide_exact is a ZZ operation")
        out = []
        for i, c in enumerate(self.coeffs):
            d, r = divmod(c, k)
            if r:
                raise ValueError(
                    f"coefficient {c} of q^{self.low + i} not divisible by {k}")
            out.append(d)
        return LaurentSeries(self.ring, self.low, out)

    def subst_pow(self, k):
        """q -> q^k; window scales to [k*low, k*(prec-1)+1)."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1:
            return self
        cs = [0] * (k * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            cs[k * i] = c
        return LaurentSeries(self.ring, k * self.low, cs)

    def reduce_mod(self, m):
        if self.ring.modulus is not None:
            raise RingMismatchError("reduce_mod expects a ZZ series")
        return LaurentSeries(Ring(m), self.low, self.coeffs)

    def dissect(self, ell):
        """Split into ell series f_j with f(q) = sum_j q^j f_j(q^ell).
        Exponent residues use mathematical mod, so q^-8 lands in class 5
        mod 13."""
        if ell < 1:
            raise ValueError("dissection modulus must be >= 1")
        out = []
        for j in range(ell):
            cprec = (self.prec - 1 - j) // ell + 1
            clow = -((j - self.low) // ell)
            clow = min(clow, cprec - 1)
            cs = []
            for t in range(clow, cprec):
                e = ell * t + j
                cs.append(self.coeffs[e - self.low] if e >= self.low else 0)
            out.append(LaurentSeries(self.ring, clow, cs))
        return out

    def truncate(self, new_prec):
        """Shrink the top of the window."""
        if not self.low < new_prec <= self.prec:
            raise WindowError(
                f"cannot truncate [{self.low},{self.prec}) to prec {new_prec}")
        return LaurentSeries(self.ring, self.low,
                             self.coeffs[:new_prec - self.low])

    def with_low(self, new_low):
        """Extend the window downward with explicit zeros (sound: low is a
        support bound)."""
        if new_low > self.low:
            raise WindowError(f"with_low({new_low}) would raise low {self.low}")
        return LaurentSeries(self.ring, new_low,
                             (0,) * (self.low - new_low) + self.coeffs)


class EpsPoly:
    """R[eps]/(eps^3) with R = LaurentSeries; holds x near a point x0 for
    second-derivative extraction: f(x0 + eps) carries f''(x0)/2 in its eps^2
    part."""

    __slots__ = ("e0", "e1", "e2")

    def __init__(self, e0, e1, e2):
        if not (e0.ring == e1.ring == e2.ring):
            raise RingMismatchError("EpsPoly parts must share one ring")
        self.e0 = e0
        self.e1 = e1
        self.e2 = e2

    @classmethod
    def constant(cls, s):
        z = LaurentSeries.zeros(s.ring, s.low, s.prec)
        return cls(s, z, z)

    @classmethod
    def variable(cls, x0):
        """x0 + eps."""
        one = LaurentSeries.one(x0.ring, x0.prec)
        zero = LaurentSeries.zeros(x0.ring, x0.low, x0.prec)
        return cls(x0, one, zero)

    def __add__(self, other):
        return EpsPoly(self.e0 + other.e0, self.e1 + other.e1, self.e2 + other.e2)

    def __sub__(self, other):
        return EpsPoly(self.e0 - other.e0, self.e1 - other.e1, self.e2 - other.e2)

    def __neg__(self):
        return EpsPoly(-self.e0, -self.e1, -self.e2)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentSeries)):
            return EpsPoly(self.e0 * other, self.e1 * other, self.e2 * other)
        a0, a1, a2 = self.e0, self.e1, self.e2
        b0, b1, b2 = other.e0, other.e1, other.e2
        return EpsPoly(a0 * b0,
                       a0 * b1 + a1 * b0,
                       a0 * b2 + a1 * b1 + a2 * b0)

    __rmul__ = __mul__

    def invert(self):
        """Unit inverse; needs an invertible eps^0 part."""
        c0 = self.e0.invert()
        c0sq = c0 * c0
        p1 = -(self.e1 * c0sq)
        p2 = (self.e1 * self.e1 * c0sq - self.e2 * c0) * c0
        return EpsPoly(c0, p1, p2)

    def second_derivative(self):
        """2 * eps^2 part = d^2/dx^2 at the expansion point."""
        return self.e2.scale(2)

    def __eq__(self, other):
        if not isinstance(other, EpsPoly):
            return NotImplemented
        return self.e0 == other.e0 and self.e1 == other.e1 and self.e2 == other.e2

    __hash__ = None

    def __repr__(self):
        return f"EpsPoly({self.e0!r}, {self.e1!r}, {self.e2!r})"
