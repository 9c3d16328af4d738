import random

import pytest
from hypothesis import given, settings, strategies as st

from qcong import _kernel
from qcong.series import (
    EpsPoly,
    LaurentSeries,
    NonUnitError,
    Ring,
    RingMismatchError,
    WindowError,
    Zmod,
    ZZ,
)


# independent oracles ------------------------------------------------------

def pentagonal_coeffs(prec):
    """(q;q)_inf by the pentagonal number theorem: sum (-1)^k q^{k(3k-1)/2}."""
    cs = [0] * prec
    k = 0
    while k * (3 * k - 1) // 2 < prec:
        sign = -1 if k % 2 else 1
        for e in {k * (3 * k - 1) // 2, k * (3 * k + 1) // 2}:
            if e < prec:
                cs[e] += sign
        k += 1
    return cs


def partition_counts(prec, parts=None):
    """Coin-change DP; default counts ordinary partitions."""
    dp = [0] * prec
    dp[0] = 1
    for part in parts or range(1, prec):
        for w in range(part, prec):
            dp[w] += dp[w - part]
    return dp


def euler(prec):
    return LaurentSeries(ZZ, 0, pentagonal_coeffs(prec))


def naive_convolve(a, b, out_len):
    out = [0] * out_len
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < out_len:
                out[i + j] += x * y
    return out


# windows and element access ----------------------------------------------

def test_add_on_overlap_window():
    f = LaurentSeries(ZZ, 0, [0, 1, 1])
    g = LaurentSeries(ZZ, 0, [0, 0, 1])
    assert (f + g).coeffs == (0, 1, 2)


def test_add_takes_overlap_of_mismatched_windows():
    f = LaurentSeries(ZZ, -2, [5, 5, 5, 5, 5])   # [-2, 3)
    g = LaurentSeries(ZZ, 0, [1, 1, 1, 1, 1])    # [0, 5)
    h = f + g
    assert (h.low, h.prec) == (0, 3)
    assert h.coeffs == (6, 6, 6)


def test_add_empty_overlap_is_an_error():
    f = LaurentSeries(ZZ, 0, [1, 2])
    g = LaurentSeries(ZZ, 5, [1])
    with pytest.raises(WindowError):
        f + g


def test_ring_mismatch_is_an_error():
    f = LaurentSeries(ZZ, 0, [1])
    g = LaurentSeries(Zmod(5), 0, [1])
    with pytest.raises(RingMismatchError):
        f + g


def test_shift_moves_window():
    f = LaurentSeries.one(ZZ, 10).shift(-8)
    assert (f.low, f.prec) == (-8, 2)
    assert f.coeff(-8) == 1


def test_scale_negates_euler_head():
    f = euler(5).scale(-1)
    assert f.coeffs == (-1, 1, 1, 0, 0)


def test_coeff_out_of_window_raises_both_sides():
    f = LaurentSeries(ZZ, 0, [1, 2])
    assert f.coeff(1) == 2
    with pytest.raises(WindowError):
        f.coeff(f.prec)
    with pytest.raises(WindowError):
        f.coeff(-1)


def test_empty_window_rejected():
    with pytest.raises(WindowError):
        LaurentSeries(ZZ, 0, [])
    with pytest.raises(WindowError):
        LaurentSeries.zeros(ZZ, 3, 3)


def test_mod_ring_canonicalizes():
    f = LaurentSeries(Zmod(5), 0, [5, -3, 7])
    assert f.coeffs == (0, 2, 2)
    with pytest.raises(ValueError):
        Ring(1)


# multiplication -----------------------------------------------------------

def test_mul_geometric_inverse():
    f = LaurentSeries(ZZ, 0, [1, -1])
    g = LaurentSeries(ZZ, 0, [1] * 10)
    h = f * g
    assert h.coeffs == (1, 0)  # window = min(0+2, 0+10) = 2
    assert h.low == 0


def test_mul_window_rule():
    f = LaurentSeries(ZZ, -1, [1, 0, 0])   # q^-1, window [-1, 2)
    g = LaurentSeries(ZZ, 1, [1, 0])       # q, window [1, 3)
    h = f * g
    assert (h.low, h.prec) == (0, 2)
    assert h.coeff(0) == 1


def test_mul_prec_is_min_of_cross_bounds():
    f = LaurentSeries(ZZ, 2, [1] * 7)    # [2, 9)
    g = LaurentSeries(ZZ, -3, [1] * 4)   # [-3, 1)
    h = f * g
    assert (h.low, h.prec) == (-1, 3)    # min(2+1, -3+9) = 3


def test_euler_cube_is_jacobi_sum():
    cube = euler(8) ** 3
    # sum over n >= 0 of (-1)^n (2n+1) q^{n(n+1)/2}
    want = [0] * 8
    n = 0
    while n * (n + 1) // 2 < 8:
        want[n * (n + 1) // 2] = (2 * n + 1) * (-1 if n % 2 else 1)
        n += 1
    assert cube.coeffs == tuple(want)
    assert want[:7] == [1, -3, 0, 5, 0, 0, -7]


def test_scalar_mul():
    f = LaurentSeries(ZZ, 0, [1, 2])
    assert (3 * f).coeffs == (3, 6)
    assert (f * 3).coeffs == (3, 6)


def test_pow_zero_is_one():
    f = LaurentSeries(ZZ, 1, [2, 3, 4])
    assert (f ** 0).coeffs == (1, 0, 0)


# inversion ----------------------------------------------------------------

def test_invert_one_minus_q():
    f = LaurentSeries(ZZ, 0, [1, -1, 0, 0, 0])
    assert f.invert().coeffs == (1, 1, 1, 1, 1)


def test_invert_with_valuation():
    f = LaurentSeries(ZZ, 1, [1, -1, 0, 0])  # q(1-q) on [1, 5)
    g = f.invert()
    assert g.low == -1
    assert g.coeffs == (1, 1, 1, 1)


def test_invert_euler_sub5_counts_multiples_of_5_partitions():
    e5 = euler(12).subst_pow(5).truncate(12)
    inv = e5.invert()
    assert list(inv.coeffs) == partition_counts(12, parts=[5, 10])


def test_invert_requires_unit_lead():
    with pytest.raises(NonUnitError):
        LaurentSeries(ZZ, 0, [2, 1]).invert()
    with pytest.raises(NonUnitError):
        LaurentSeries(ZZ, 0, [0, 0, 0]).invert()
    # 2 is a unit mod 5 though
    f = LaurentSeries(Zmod(5), 0, [2, 1, 0, 0])
    assert (f * f.invert()).coeff(0) == 1


def test_invert_random_units_two_sided():
    rng = random.Random(7)
    for trial in range(200):
        ring = ZZ if trial % 2 else Zmod(rng.choice([3, 5, 13, 9]))
        low = rng.randrange(-4, 5)
        length = rng.randrange(2, 12)
        lead = rng.choice([1, -1]) if ring.modulus is None else 1 + rng.randrange(ring.modulus - 1)
        while ring.modulus is not None and not ring.is_unit(lead):
            lead = 1 + rng.randrange(ring.modulus - 1)
        cs = [lead] + [rng.randrange(-9, 10) for _ in range(length - 1)]
        f = LaurentSeries(ring, low, cs)
        g = f.invert()
        left = f * g
        right = g * f
        expected = LaurentSeries.one(ring, left.prec).with_low(left.low)
        assert left == expected
        assert right == expected


def test_divide_exact():
    f = LaurentSeries(ZZ, 0, [2, -4, 6])
    assert f.divide_exact(2).coeffs == (1, -2, 3)
    with pytest.raises(ValueError):
        LaurentSeries(ZZ, 0, [3]).divide_exact(2)
    with pytest.raises(RingMismatchError):
        LaurentSeries(Zmod(5), 0, [2]).divide_exact(2)


# substitution, reduction, dissection ---------------------------------------

def test_subst_pow_examples():
    f = LaurentSeries(ZZ, 0, [1, 1])
    g = f.subst_pow(3)
    assert (g.low, g.prec) == (0, 4)
    assert g.coeffs == (1, 0, 0, 1)

    e = euler(4).subst_pow(13)
    assert (e.low, e.prec) == (0, 40)
    assert e.coeff(13) == -1 and e.coeff(26) == -1 and e.coeff(14) == 0

    h = LaurentSeries(ZZ, -1, [1, 1]).subst_pow(2)
    assert (h.low, h.prec) == (-2, 1)
    assert h.coeffs == (1, 0, 1)


def test_reduce_mod_examples():
    f = LaurentSeries(ZZ, 0, [5, -3])
    r = f.reduce_mod(5)
    assert r.coeffs == (0, 2)
    assert LaurentSeries(ZZ, 0, [-1]).reduce_mod(13).coeff(0) == 12
    with pytest.raises(RingMismatchError):
        r.reduce_mod(5)


def test_euler_cube_mod3_equals_dilated_euler():
    cube = (euler(8) ** 3).reduce_mod(3)
    e3 = euler(3).subst_pow(3).reduce_mod(3)  # window [0, 7), compared on overlap
    assert cube == e3


def test_dissect_examples():
    f = LaurentSeries(ZZ, 0, [1, 1, 1])
    f0, f1 = f.dissect(2)
    assert f0.coeffs == (1, 1) and f1.coeffs == (1,)

    g = LaurentSeries.from_terms(ZZ, {-8: 1, 5: 1}, -8, 6)
    comps = g.dissect(13)
    assert comps[5].valuation() == -1
    assert comps[5].coeff(-1) == 1 and comps[5].coeff(0) == 1
    for j, c in enumerate(comps):
        if j != 5:
            assert c.is_zero()


def test_truncate_and_with_low():
    f = LaurentSeries(ZZ, 0, [1, 2, 3, 4])
    assert f.truncate(2).coeffs == (1, 2)
    g = f.with_low(-2)
    assert (g.low, g.prec) == (-2, 4)
    assert g.coeff(-1) == 0
    with pytest.raises(WindowError):
        f.truncate(5)
    with pytest.raises(WindowError):
        f.with_low(1)


def test_valuation_skips_stored_zeros():
    f = LaurentSeries(ZZ, -3, [0, 0, 7, 1])
    assert f.valuation() == -1
    assert LaurentSeries.zeros(ZZ, 0, 4).valuation() is None


# eps ring ------------------------------------------------------------------

def _eps_const(c, prec=8):
    return EpsPoly.constant(LaurentSeries.monomial(ZZ, c, 0, prec))


def test_eps_product():
    one_plus = EpsPoly.variable(LaurentSeries.one(ZZ, 8))
    one_minus = _eps_const(2) - one_plus
    prod = one_plus * one_minus  # (1+eps)(1-eps) = 1 - eps^2
    assert prod.e0.coeff(0) == 1
    assert prod.e1.is_zero()
    assert prod.e2.coeff(0) == -1


def test_eps_invert():
    x = EpsPoly.variable(LaurentSeries.one(ZZ, 8))  # 1 + eps
    inv = x.invert()
    assert inv.e0.coeff(0) == 1
    assert inv.e1.coeff(0) == -1
    assert inv.e2.coeff(0) == 1
    ident = x * inv
    assert ident.e0.coeff(0) == 1 and ident.e1.is_zero() and ident.e2.is_zero()


def test_eps_second_derivative_of_cube():
    x = EpsPoly.variable(LaurentSeries.one(ZZ, 8))
    cube = x * x * x
    d2 = cube.second_derivative()
    assert d2.coeff(0) == 6  # (x^3)'' at 1


def test_eps_invert_needs_unit_part():
    z = EpsPoly.constant(LaurentSeries.zeros(ZZ, 0, 4))
    with pytest.raises(NonUnitError):
        z.invert()


# kernel crosschecks ---------------------------------------------------------

def test_convolve_matches_naive_across_cutoff():
    rng = random.Random(11)
    for n, lo, hi in [(8, -9, 9), (40, -999, 999), (90, -10 ** 9, 10 ** 9), (130, 0, 3)]:
        a = [rng.randrange(lo, hi + 1) for _ in range(n)]
        b = [rng.randrange(lo, hi + 1) for _ in range(n + 7)]
        for out_len in (1, n // 2, n + 5):
            assert _kernel.convolve(a, b, out_len) == naive_convolve(a, b, out_len)


def test_convolve_mod_path():
    rng = random.Random(13)
    m = 13
    a = [rng.randrange(m) for _ in range(120)]
    b = [rng.randrange(m) for _ in range(120)]
    want = [c % m for c in naive_convolve(a, b, 100)]
    assert _kernel.convolve(a, b, 100, modulus=m) == want


def test_packed_series_roundtrip():
    rng = random.Random(17)
    cs = [rng.randrange(-50, 51) for _ in range(40)]
    ps = _kernel.PackedSeries(40, 16, _kernel.pack(cs, 2))
    ps.mul_one_minus(3)
    ps.div_one_minus(3)
    assert ps.to_coeffs() == cs


def test_binomial_product_small():
    # (1-q)(1-q^2) = 1 - q - q^2 + q^3
    assert _kernel.binomial_product([1, 2], 6, 16) == [1, -1, -1, 1, 0, 0]


def test_partition_bound_bits_dominates_known_values():
    p100 = 190569292           # 28 bits
    p1000 = 24061467864032622473692149727991  # 104 bits
    assert _kernel.partition_bound_bits(100) >= p100.bit_length()
    assert _kernel.partition_bound_bits(1000) >= p1000.bit_length()
    assert _kernel.partition_bound_bits(1000) < 140


# algebraic laws -------------------------------------------------------------

rings = st.sampled_from([ZZ, Zmod(2), Zmod(3), Zmod(13)])


@st.composite
def series(draw, ring=None, min_len=1, max_len=12):
    r = draw(rings) if ring is None else ring
    low = draw(st.integers(-5, 5))
    n = draw(st.integers(min_len, max_len))
    cs = draw(st.lists(st.integers(-50, 50), min_size=n, max_size=n))
    return LaurentSeries(r, low, cs)


@st.composite
def series_triple(draw):
    r = draw(rings)
    low = draw(st.integers(-4, 4))
    n = draw(st.integers(2, 10))
    mk = lambda: LaurentSeries(
        r, low, draw(st.lists(st.integers(-50, 50), min_size=n, max_size=n)))
    return mk(), mk(), mk()


@given(series_triple())
def test_ring_laws(fgh):
    f, g, h = fgh
    assert (f + g) == (g + f)
    assert ((f + g) + h) == (f + (g + h))
    assert (f * g) == (g * f)
    assert ((f * g) * h) == (f * (g * h))
    assert (f * (g + h)) == (f * g + f * h)


@given(series(), st.integers(1, 4), st.integers(1, 4))
def test_subst_pow_composes(f, a, b):
    assert f.subst_pow(a * b) == f.subst_pow(a).subst_pow(b)


@given(series_triple(), st.sampled_from([2, 3, 5, 13]), st.integers(-6, 6),
       st.integers(1, 4), st.integers(1, 5))
def test_reduce_mod_commutes(fgh, m, s, k, ell):
    f, g, h = fgh
    if f.ring.modulus is not None:
        return
    assert (f + g).reduce_mod(m) == (f.reduce_mod(m) + g.reduce_mod(m))
    assert (f * g).reduce_mod(m) == (f.reduce_mod(m) * g.reduce_mod(m))
    assert f.shift(s).reduce_mod(m) == f.reduce_mod(m).shift(s)
    assert f.subst_pow(k).reduce_mod(m) == f.reduce_mod(m).subst_pow(k)
    for a, b in zip(f.dissect(ell), f.reduce_mod(m).dissect(ell)):
        assert a.reduce_mod(m) == b


@settings(max_examples=60)
@given(series(min_len=11, max_len=18), st.integers(1, 4))
def test_dissect_reassembles(f, ell):
    parts = f.dissect(ell)
    total = None
    for j, fj in enumerate(parts):
        piece = fj.subst_pow(ell).shift(j)
        total = piece if total is None else total + piece
    assert total == f


@given(series(min_len=11, max_len=18), st.integers(1, 4))
def test_dissect_component_windows_sound(f, ell):
    for j, fj in enumerate(f.dissect(ell)):
        for t in range(fj.low, fj.prec):
            e = ell * t + j
            want = f.coeff(e) if f.low <= e < f.prec else 0
            assert fj.coeff(t) == want
