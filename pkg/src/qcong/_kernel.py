"""Packed big-integer kernels for dense polynomial arithmetic.

Coefficient vectors are packed into a single Python int (little-endian, a
fixed slot width in whole bytes), combined with native big-int ops, and
decoded back.  Negative values ride in two's-complement style slots and are
recovered with a borrow chain, valid whenever every decoded coefficient
satisfies |c| < 2**(bits-1).  Slot widths always come from exact bounds at
the call site, so nothing here approximates.  CPython's Karatsuba does the
heavy lifting for multiplication; there is deliberately no FFT.
"""

from __future__ import annotations

import math

# below this many coefficient products, plain loops beat packing overhead
_SCHOOLBOOK_AREA = 4096


def max_abs(coeffs):
    return max((abs(c) for c in coeffs), default=0)


def pack(coeffs, nbytes):
    """Return the exact integer sum c_i * 2**(8*nbytes*i)."""
    n = len(coeffs)
    pos = bytearray(nbytes * n)
    neg = None
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * nbytes:(i + 1) * nbytes] = c.to_bytes(nbytes, "little")
        elif c < 0:
            if neg is None:
                neg = bytearray(nbytes * n)
            neg[i * nbytes:(i + 1) * nbytes] = (-c).to_bytes(nbytes, "little")
    value = int.from_bytes(bytes(pos), "little")
    if neg is not None:
        value -= int.from_bytes(bytes(neg), "little")
    return value


def unpack_signed(value, count, nbytes):
    """Decode count slots; requires |true coefficient| < 2**(8*nbytes-1)."""
    bits = 8 * nbytes
    half = 1 << (bits - 1)
    full = 1 << bits
    value %= 1 << (bits * count)
    raw = value.to_bytes(nbytes * count, "little")
    out = [0] * count
    carry = 0
    for i in range(count):
        s = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        if s >= half:
            out[i] = s - full
            carry = 1
        else:
            out[i] = s
            carry = 0
    return out


def _unpack_unsigned(value, count, nbytes):
    raw = value.to_bytes(nbytes * count, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
            for i in range(count)]


def convolve(a, b, out_len, modulus=None):
    """Exact truncated product: out[k] = sum_i a[i]*b[k-i] for k < out_len.

    Entries of a and b beyond out_len cannot contribute and are ignored.
    With a modulus, inputs must already be canonical and the output is
    reduced.
    """
    if out_len <= 0:
        return []
    a = list(a[:out_len])
    b = list(b[:out_len])
    if len(a) > len(b):
        a, b = b, a
    while a and a[-1] == 0:
        a.pop()
    if not a or not any(b):
        return [0] * out_len
    nonzero = sum(1 for c in a if c)
    if nonzero * len(b) <= _SCHOOLBOOK_AREA:
        out = [0] * out_len
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b[:out_len - i]):
                    if bj:
                        out[i + j] += ai * bj
        if modulus is not None:
            out = [c % modulus for c in out]
        return out

    terms = min(len(a), len(b))
    if modulus is not None:
        # products are < modulus^2 * terms, all nonnegative
        bits = 2 * (modulus - 1).bit_length() + terms.bit_length() + 1
        nbytes = (bits + 7) // 8
        p = pack(a, nbytes) * pack(b, nbytes)
        p %= 1 << (8 * nbytes * out_len)
        return [c % modulus for c in _unpack_unsigned(p, out_len, nbytes)]

    bits = (max_abs(a).bit_length() + max_abs(b).bit_length()
            + terms.bit_length() + 2)
    nbytes = (bits + 7) // 8
    return unpack_signed(pack(a, nbytes) * pack(b, nbytes), out_len, nbytes)


def newton_invert(coeffs, lead_inverse, modulus=None):
    """Invert a power series with unit constant term; output length matches.

    lead_inverse must satisfy coeffs[0] * lead_inverse == 1 in the ring.
    Classic quadratic Newton iteration g <- g*(2 - f*g).
    """
    total = len(coeffs)
    g = [lead_inverse]
    done = 1
    while done < total:
        done = min(2 * done, total)
        t = convolve(coeffs[:done], g, done, modulus)
        w = [-c for c in t]
        w[0] += 2
        if modulus is not None:
            w = [c % modulus for c in w]
        g = convolve(g, w, done, modulus)
    return g


class PackedSeries:
    """Mutable packed window [0, length) used by the bulk product builders.

    Only linear operations are provided; they are exact mod q**length for
    any slot width.  The width only matters at decode time (to_coeffs) and
    must then dominate every true coefficient, plus the transient headroom
    that div_one_minus's doubling steps need (see callers for bounds).
    """

    __slots__ = ("length", "nbytes", "slot_bits", "mask", "value")

    def __init__(self, length, slot_bits, value=0):
        self.length = length
        self.nbytes = (slot_bits + 7) // 8
        self.slot_bits = 8 * self.nbytes
        self.mask = (1 << (self.slot_bits * length)) - 1
        self.value = value

    def mul_one_minus(self, k):
        """*= (1 - q^k); no-op for k >= length."""
        if 0 < k < self.length:
            self.value = (self.value - (self.value << (k * self.slot_bits))) & self.mask

    def mul_one_plus(self, k):
        if 0 < k < self.length:
            self.value = (self.value + (self.value << (k * self.slot_bits))) & self.mask

    def div_one_minus(self, k):
        """*= 1/(1 - q^k) mod q^length, by the doubling product
        (1+q^k)(1+q^2k)(1+q^4k)... which telescopes to the geometric series."""
        j = k
        v = self.value
        sb = self.slot_bits
        while j < self.length:
            v = (v + (v << (j * sb))) & self.mask
            j *= 2
        self.value = v

    def add_shifted(self, other, k):
        """+= q^k * other (same geometry required)."""
        self.value = (self.value + (other.value << (k * self.slot_bits))) & self.mask

    def to_coeffs(self):
        return unpack_signed(self.value, self.length, self.nbytes)


def binomial_product(exponents, length, slot_bits):
    """Coefficients of prod (1 - q^e) on [0, length) for positive e."""
    ps = PackedSeries(length, slot_bits, 1)
    for e in exponents:
        ps.mul_one_minus(e)
    return ps.to_coeffs()


def partition_bound_bits(n):
    """Overestimate of bits(p(n)) via p(n) < exp(pi*sqrt(2n/3)), integer-only.

    pi/ln2 * sqrt(2/3) = 1.51078...; 15108/10000 with a ceiling sqrt keeps
    the bound safe without floats.
    """
    if n <= 1:
        return 2
    root = math.isqrt(6 * n) + 1
    return (15108 * root) // 10000 + 2
