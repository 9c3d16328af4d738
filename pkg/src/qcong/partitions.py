"""Counting functions for the partition quadruples and their series.

u(n) counts quadruples (pi1, pi2, pi3, sigma) where, for some m >= 1,
pi1..pi3 are partitions with all parts >= m, sigma is a partition with
parts in [m, 2m], and the weights plus m sum to n.  v(n) is the same
with 2m in place of the marker m.  Their generating functions are

    U(q) = sum_{n>=1} q^n  / ((q^n;q)_inf^3 (q^n;q)_{n+1}),
    V(q) = sum_{n>=1} q^2n / ((q^n;q)_inf^3 (q^n;q)_{n+1}).

Two independent series routes are provided: the defining sum above and
the double-pole Lambert representation.  Tests and the verify checks
compare them; nothing in here assumes they agree.
"""

from typing import NamedTuple

from ._kernel import PackedSeries, convolve, partition_bound_bits
from .lambert import double_pole_sum
from .products import euler_E
from .series import LaurentSeries, ZZ

_pent = [1]


def p_count(n):
    """Ordinary partition count, by the pentagonal recurrence."""
    if n < 0:
        return 0
    while len(_pent) <= n:
        m = len(_pent)
        total = 0
        k = 1
        while k * (3 * k - 1) // 2 <= m:
            sign = 1 if k % 2 else -1
            total += sign * _pent[m - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= m:
                total += sign * _pent[m - k * (3 * k + 1) // 2]
            k += 1
        _pent.append(total)
    return _pent[n]


def _restricted_counts(min_part, max_part, width):
    """Partitions of 0..width-1 with parts in [min_part, max_part]."""
    dp = [0] * width
    dp[0] = 1
    for part in range(min_part, min(max_part, width - 1) + 1):
        for w in range(part, width):
            dp[w] += dp[w - part]
    return dp


def _quad_counts(m, width):
    """Weight counts of (pi1, pi2, pi3, sigma) for a fixed marker m."""
    a = _restricted_counts(m, width - 1, width)
    triple = convolve(convolve(a, a, width), a, width)
    return convolve(triple, _restricted_counts(m, 2 * m, width), width)


_counts_store = {"u": [0], "v": [0]}


def _counts_upto(kind, n_max):
    vals = _counts_store[kind]
    if len(vals) > n_max:
        return vals
    vals = [0] * (n_max + 1)
    for m in range(1, n_max + 1):
        off = m if kind == "u" else 2 * m
        if off > n_max:
            break
        for w, c in enumerate(_quad_counts(m, n_max - off + 1)):
            vals[off + w] += c
    _counts_store[kind] = vals
    return vals


def u_count(n):
    if n < 0:
        return 0
    return _counts_upto("u", n)[n]


def v_count(n):
    if n < 0:
        return 0
    return _counts_upto("v", n)[n]


class UVPair(NamedTuple):
    u: LaurentSeries
    v: LaurentSeries


_def_cache = {"prec": 0, "pair": None}


def uv_series_def(prec):
    """U(q) and V(q) on [0, prec), straight from the defining sums.

    One downward pass keeps core_n = 1/((q^n;q)_inf^3 (q^n;q)_{n+1})
    up to date through

        core_n = core_{n+1} (1-q^{2n+1})(1-q^{2n+2}) / (1-q^n)^4,

    which starts from core_prec = 1 + O(q^prec) and costs a handful of
    packed linear passes per n instead of a fresh inversion.
    """
    if _def_cache["prec"] >= prec:
        u, v = _def_cache["pair"]
        return UVPair(u.truncate(prec), v.truncate(prec))
    bits = 4 * partition_bound_bits(prec) + 24
    core = PackedSeries(prec, bits, 1)
    upk = PackedSeries(prec, bits)
    vpk = PackedSeries(prec, bits)
    for n in range(prec - 1, 0, -1):
        core.mul_one_minus(2 * n + 1)
        core.mul_one_minus(2 * n + 2)
        for _ in range(4):
            core.div_one_minus(n)
        upk.add_shifted(core, n)
        if 2 * n < prec:
            vpk.add_shifted(core, 2 * n)
    pair = UVPair(LaurentSeries(ZZ, 0, upk.to_coeffs()),
                  LaurentSeries(ZZ, 0, vpk.to_coeffs()))
    _def_cache.update(prec=prec, pair=pair)
    return pair


def uv_series_lambert(prec):
    """U(q) and V(q) via the double-pole sums over 2 E(1)^3."""
    inv_cube = (euler_E(1, prec) ** 3).invert()
    u = double_pole_sum("u", prec).divide_exact(-2) * inv_cube
    v = double_pole_sum("v", prec).divide_exact(-2) * inv_cube
    return UVPair(u, v)


def f_series_smallest_part(prec):
    """F(q) = 1 + sum_{n>=1} q^n / (q^n;q)_inf.

    Classifying partitions by smallest part shows F also generates all
    partitions, i.e. F = 1/E(1); the identity is a test target, not an
    assumption here.
    """
    bits = partition_bound_bits(prec) + 16
    core = PackedSeries(prec, bits, 1)
    total = PackedSeries(prec, bits, 1)
    for n in range(prec - 1, 0, -1):
        core.div_one_minus(n)
        total.add_shifted(core, n)
    return LaurentSeries(ZZ, 0, total.to_coeffs())


def sequence_lines(name, values, origin):
    """Export format: '# <name> <n_max> <origin>', then one value per line."""
    head = f"# {name} {len(values) - 1} {origin}"
    return "\n".join([head] + [str(v) for v in values]) + "\n"
