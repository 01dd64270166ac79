import pytest
from hypothesis import given, settings, strategies as st

from lcseq.gf2poly import (
    DegreeCapExceeded,
    Poly2,
    UnsupportedPeriod,
    add,
    divrem,
    exponent,
    factor_xn_minus_1,
    gcd,
    is_irreducible,
    is_primitive,
    mul,
    x_pow_n_minus_1,
)

P = Poly2.from_bits_str


polys = st.integers(min_value=0, max_value=(1 << 257) - 1).map(Poly2)
nonzero_polys = st.integers(min_value=1, max_value=(1 << 257) - 1).map(Poly2)


def test_add_examples():
    assert add(P("11"), P("11")) == Poly2(0)
    assert add(P("111"), P("11")) == P("001")  # x^2
    assert add(P("1101"), Poly2(0)) == P("1101")


def test_mul_examples():
    assert mul(P("11"), P("11")) == P("101")  # x^2+1
    assert mul(P("11"), P("111")) == P("1001")  # x^3+1
    assert mul(P("111"), P("111")) == P("10101")  # x^4+x^2+1


def test_divrem_examples():
    # x^6+x^4+x^3+1 / (x+1): remainder 0, verified by round-trip below
    a = Poly2.from_exponents([6, 4, 3, 0])
    q, r = divrem(a, P("11"))
    assert r == Poly2(0)
    assert q == Poly2.from_exponents([5, 4, 2, 1, 0])
    assert q * P("11") + r == a

    q, r = divrem(P("001"), P("111"))
    assert (q, r) == (Poly2(1), P("11"))

    q, r = divrem(P("11"), P("111"))
    assert (q, r) == (Poly2(0), P("11"))


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(P("11"), Poly2(0))


def test_gcd_examples():
    assert gcd(P("101"), P("11")) == P("11")
    assert gcd(P("1001"), P("111")) == P("111")
    assert gcd(P("001"), Poly2.from_exponents([9, 0])) == Poly2(1)
    with pytest.raises(ValueError):
        gcd(Poly2(0), Poly2(0))


def _exponent_brute(f: Poly2, cap: int) -> int:
    for e in range(1, cap + 1):
        if (x_pow_n_minus_1(e) % f).is_zero():
            return e
    raise AssertionError("no exponent found below cap")


def test_exponent_examples():
    assert exponent(P("111")) == 3
    assert exponent(P("11111")) == 5
    assert _exponent_brute(P("11111"), 5) == 5
    assert exponent(P("11001")) == 15
    assert _exponent_brute(P("11001"), 15) == 15


def test_exponent_errors():
    with pytest.raises(ValueError):
        exponent(Poly2(0))
    with pytest.raises(ValueError):
        exponent(P("01"))  # x: constant term zero


def test_irreducible_examples():
    assert is_irreducible(P("111"))
    assert not is_irreducible(P("101"))  # (x+1)^2
    assert is_irreducible(P("11111"))
    with pytest.raises(DegreeCapExceeded):
        is_irreducible(Poly2(1 << 30))


def test_primitive_examples():
    assert is_primitive(P("111"))
    assert not is_primitive(P("11111"))  # exponent 5 != 15
    assert is_primitive(P("1101"))


def test_factor_12():
    fac = factor_xn_minus_1(12)
    got = {(f.poly.to_human(), f.multiplicity, f.gamma) for f in fac.factors}
    assert got == {("x+1", 4, 2), ("x^2+x+1", 4, 2)}


def test_factor_9():
    fac = factor_xn_minus_1(9)
    got = {(f.poly.to_human(), f.multiplicity) for f in fac.factors}
    assert got == {("x+1", 1), ("x^2+x+1", 1), ("x^6+x^3+1", 1)}


def test_factor_8():
    fac = factor_xn_minus_1(8)
    assert [(f.poly.to_human(), f.multiplicity) for f in fac.factors] == [("x+1", 8)]


def test_factor_unsupported():
    with pytest.raises(UnsupportedPeriod):
        factor_xn_minus_1(7)  # 2 has order 3 mod 7
    with pytest.raises(UnsupportedPeriod):
        factor_xn_minus_1(21)


def test_factor_product_check_all_supported_lengths():
    # multiplying out reproduces x^N - 1 exactly for every supported N <= 4096
    supported = 0
    for n in range(1, 4097):
        try:
            fac = factor_xn_minus_1(n)
        except UnsupportedPeriod:
            continue
        supported += 1
        prod = Poly2(1)
        for f in fac.factors:
            prod = prod * (f.poly ** f.multiplicity)
        assert prod == x_pow_n_minus_1(n), n
    assert supported > 100  # the families are not trivially empty


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=150)
@given(polys, nonzero_polys)
def test_divrem_round_trip(a, b):
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=100)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides_and_is_greatest(a, b, g):
    ag, bg = a * g, b * g
    h = gcd(ag, bg)
    assert (ag % h).is_zero()
    assert (bg % h).is_zero()
    # any common divisor (g among them) divides the gcd
    assert (h % g).is_zero()


@settings(max_examples=150)
@given(polys)
def test_frobenius_squaring(f):
    sq = f * f
    manual = Poly2.from_exponents(2 * j for j in range(300) if (f.bits >> j) & 1)
    assert sq == manual


def test_exponent_divides_group_order_all_small_irreducibles():
    for deg in range(1, 13):
        for low in range(1 << (deg - 1)) if deg > 1 else [0]:
            bits = (1 << deg) | (low << 1) | 1
            f = Poly2(bits)
            if not is_irreducible(f):
                continue
            assert ((1 << deg) - 1) % exponent(f) == 0, f
