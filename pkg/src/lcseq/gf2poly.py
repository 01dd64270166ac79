"""Bit-packed polynomial arithmetic over GF(2).

A polynomial is stored as a Python integer: bit j holds the coefficient of
x^j, so the constant term is the least significant bit and an integer shift
is a multiplication by a power of x.  The zero polynomial is the integer 0;
its degree is reported with the sentinel -1.

Besides ring arithmetic the module provides exponent (multiplicative order
of x in the quotient ring), irreducibility and primitivity tests, and the
construction of the full irreducible factorization of x^N - 1 for the
period families the fast algorithms support.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

__all__ = [
    "Poly2",
    "FactorPower",
    "Factorization",
    "UnsupportedPeriod",
    "DegreeCapExceeded",
    "add",
    "mul",
    "divrem",
    "gcd",
    "exponent",
    "is_irreducible",
    "is_primitive",
    "factor_xn_minus_1",
]

# Trial-division irreducibility is quadratic in the candidate count; the
# algorithms here never need factors above this degree.
DEGREE_CAP = 24

# Degree cap for enumerating the equal-degree factors of a cross-cyclotomic
# level (composite odd periods such as 15 = 3*5).
_ENUM_CAP = 16


class UnsupportedPeriod(ValueError):
    """Raised when x^N - 1 has no factorization in the supported families."""

    def __init__(self, n: int, why: str = ""):
        self.n = n
        super().__init__(f"period {n} is not in a supported family" + (f": {why}" if why else ""))


class DegreeCapExceeded(ValueError):
    """Raised when a brute-force test is asked for a degree above the cap."""


# ---------------------------------------------------------------------------
# raw integer kernels (shared with the sequence algorithms for speed)


def _mul_int(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


_SPREAD = [sum(((byte >> i) & 1) << (2 * i) for i in range(8)) for byte in range(256)]


def _sqr_int(a: int) -> int:
    """Square over GF(2): coefficient of x^j moves to x^(2j)."""
    if a < 256:
        return _SPREAD[a]
    raw = a.to_bytes((a.bit_length() + 7) // 8, "little")
    out = bytearray(2 * len(raw))
    for i, byte in enumerate(raw):
        v = _SPREAD[byte]
        out[2 * i] = v & 0xFF
        out[2 * i + 1] = v >> 8
    return int.from_bytes(out, "little")


def _divrem_int(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        sh = a.bit_length() - db
        q |= 1 << sh
        a ^= b << sh
    return q, a


def _mod_int(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, _mod_int(a, b)
    return a


def _pow_int(base: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _mul_int(r, base)
        e >>= 1
        if e:
            base = _sqr_int(base)
    return r


def _powmod_int(base: int, e: int, mod: int) -> int:
    r = 1
    base = _mod_int(base, mod)
    while e:
        if e & 1:
            r = _mod_int(_mul_int(r, base), mod)
        e >>= 1
        if e:
            base = _mod_int(_sqr_int(base), mod)
    return r


# ---------------------------------------------------------------------------
# integer number theory (small moduli only)


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _mult_order(a: int, m: int) -> int:
    """Multiplicative order of a modulo m (requires gcd(a, m) = 1)."""
    t = 1
    for p, e in _factorize(m).items():
        t *= (p - 1) * p ** (e - 1)
    for q in _factorize(t):
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    return t


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in _factorize(m).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# the polynomial value type


@dataclass(frozen=True, order=True)
class Poly2:
    """A polynomial over GF(2), bit-packed least-significant-first."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("polynomial bits must be nonnegative")

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    # -- construction / text forms ------------------------------------------

    @classmethod
    def from_bits_str(cls, text: str) -> "Poly2":
        """Parse the canonical binary form, constant term first ("111" = 1+x+x^2)."""
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary coefficient string: {text!r}")
        return cls(int(text[::-1], 2))

    @classmethod
    def from_exponents(cls, exps) -> "Poly2":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    def to_bits_str(self) -> str:
        """Canonical binary form, constant term first."""
        if self.bits == 0:
            return "0"
        return format(self.bits, "b")[::-1]

    def to_human(self) -> str:
        """Display form such as "x^2+x+1" (descending powers)."""
        if self.bits == 0:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            if (self.bits >> j) & 1:
                terms.append("1" if j == 0 else ("x" if j == 1 else f"x^{j}"))
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Poly2({self.to_human()})"

    # -- ring operators ------------------------------------------------------

    def __add__(self, other: "Poly2") -> "Poly2":
        return Poly2(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Poly2") -> "Poly2":
        return Poly2(_mul_int(self.bits, other.bits))

    def __pow__(self, e: int) -> "Poly2":
        if e < 0:
            raise ValueError("negative exponent")
        return Poly2(_pow_int(self.bits, e))

    def __divmod__(self, other: "Poly2") -> tuple["Poly2", "Poly2"]:
        q, r = _divrem_int(self.bits, other.bits)
        return Poly2(q), Poly2(r)

    def __floordiv__(self, other: "Poly2") -> "Poly2":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly2") -> "Poly2":
        return Poly2(_mod_int(self.bits, other.bits))

    def divides(self, other: "Poly2") -> bool:
        return _mod_int(other.bits, self.bits) == 0


ZERO = Poly2(0)
ONE = Poly2(1)
X = Poly2(2)
X_PLUS_1 = Poly2(3)


def x_pow_n_minus_1(n: int) -> Poly2:
    """x^n - 1 (== x^n + 1 over GF(2))."""
    if n < 1:
        raise ValueError("n must be positive")
    return Poly2((1 << n) | 1)


def all_ones(p: int) -> Poly2:
    """1 + x + ... + x^(p-1)."""
    return Poly2((1 << p) - 1)


# ---------------------------------------------------------------------------
# spec operations


def add(a: Poly2, b: Poly2) -> Poly2:
    return a + b


def mul(a: Poly2, b: Poly2) -> Poly2:
    return a * b


def divrem(a: Poly2, b: Poly2) -> tuple[Poly2, Poly2]:
    return divmod(a, b)


def gcd(a: Poly2, b: Poly2) -> Poly2:
    """Monic greatest common divisor (monic is automatic over GF(2))."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Poly2(_gcd_int(a.bits, b.bits))


@lru_cache(maxsize=None)
def _exponent_int(fbits: int) -> int:
    f = Poly2(fbits)
    k = f.degree
    if _is_irreducible_int(fbits):
        # the order of x divides 2^k - 1; peel prime factors off
        e = (1 << k) - 1
        for q in _factorize(e):
            while e % q == 0 and _powmod_int(2, e // q, fbits) == 1:
                e //= q
        return e
    # reducible: step x, x^2, ... until 1 (small inputs only)
    cur = _mod_int(2, fbits)
    e = 1
    cap = 1 << 20
    while cur != 1:
        cur = _mod_int(cur << 1, fbits)
        e += 1
        if e > cap:
            raise DegreeCapExceeded(f"exponent of {f!r} exceeds stepping cap")
    return e


def exponent(f: Poly2) -> int:
    """The smallest e with f(x) | x^e - 1 (the order of x modulo f)."""
    if f.is_zero():
        raise ValueError("zero polynomial has no exponent")
    if not (f.bits & 1):
        raise ValueError("constant term is zero: x divides f, no exponent exists")
    if f.degree < 1:
        raise ValueError("constant polynomial has no exponent")
    return _exponent_int(f.bits)


@lru_cache(maxsize=None)
def _is_irreducible_int(fbits: int) -> bool:
    deg = fbits.bit_length() - 1
    if deg > DEGREE_CAP:
        raise DegreeCapExceeded(f"irreducibility cap is degree {DEGREE_CAP}, got {deg}")
    for d in range(1, deg // 2 + 1):
        for div in range(1 << d, 1 << (d + 1)):
            if _mod_int(fbits, div) == 0:
                return False
    return True


def is_irreducible(f: Poly2) -> bool:
    """Trial division by every smaller-degree polynomial up to degree deg/2."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    return _is_irreducible_int(f.bits)


def is_primitive(f: Poly2) -> bool:
    """Irreducible with exponent 2^deg - 1 (nonzero roots generate the field)."""
    if f.degree < 1:
        raise ValueError("primitivity needs degree >= 1")
    return _is_irreducible_int(f.bits) and _exponent_int(f.bits) == (1 << f.degree) - 1


# ---------------------------------------------------------------------------
# factorization of x^N - 1


@dataclass(frozen=True)
class FactorPower:
    poly: Poly2
    multiplicity: int  # alpha_i
    gamma: int  # smallest g with multiplicity <= 2^g

    def __iter__(self):
        return iter((self.poly, self.multiplicity, self.gamma))


@dataclass(frozen=True)
class Factorization:
    """x^N - 1 = prod q_i^alpha_i with 2^ceil powers recorded per factor."""

    modulus_degree: int
    factors: tuple[FactorPower, ...]

    def validate(self) -> None:
        n = self.modulus_degree
        seen = set()
        prod = 1
        for q, alpha, gamma in self.factors:
            if q.bits in seen:
                raise ValueError("repeated irreducible factor")
            seen.add(q.bits)
            if alpha < 1:
                raise ValueError("multiplicity must be >= 1")
            if alpha == 1:
                ok = gamma == 0
            else:
                ok = (1 << (gamma - 1)) < alpha <= (1 << gamma)
            if not ok:
                raise ValueError("gamma is not the ceiling exponent of alpha")
            prod = _mul_int(prod, _pow_int(q.bits, alpha))
        if prod != (1 << n) | 1:
            raise ValueError("factor product does not reproduce x^N - 1")

    def sorted_by_degree_desc(self) -> list[int]:
        """Indices of factors ordered by descending degree."""
        return sorted(range(len(self.factors)), key=lambda i: -self.factors[i].poly.degree)


def _prime_power_level_poly(p: int, j: int) -> int:
    """Phi_{p^j} = sum of x^(i * p^(j-1)) for i < p, as raw bits."""
    step = p ** (j - 1)
    bits = 0
    for i in range(p):
        bits |= 1 << (i * step)
    return bits


def _check_two_generates(p: int, j: int, n_for_error: int) -> None:
    m = p**j
    if _mult_order(2, m) != (p - 1) * p ** (j - 1):
        raise UnsupportedPeriod(n_for_error, f"2 is not a primitive root mod {p}^{j}")


def _cyclotomic_cross_factors(d: int, below: dict[int, list[int]], n_for_error: int) -> list[int]:
    """Split Phi_d (d with several prime divisors) into its irreducible parts.

    All parts share the degree k = ord_d(2); they are found by enumerating
    monic degree-k candidates with constant term 1 whose root x has
    multiplicative order exactly d.
    """
    k = _mult_order(2, d)
    phi = 1
    for p, e in _factorize(d).items():
        phi *= (p - 1) * p ** (e - 1)
    count = phi // k
    phi_d = (1 << d) | 1
    for dd, polys in below.items():
        if dd < d and d % dd == 0:
            for q in polys:
                phi_d, rem = _divrem_int(phi_d, q)
                if rem:
                    raise UnsupportedPeriod(n_for_error, "cyclotomic division failed")
    if count == 1:
        return [phi_d]
    if k > _ENUM_CAP:
        raise UnsupportedPeriod(n_for_error, f"cross-cyclotomic degree {k} above enumeration cap")
    proper = [d // p for p in _factorize(d)]
    found: list[int] = []
    for c in range(1 << (k - 1)):
        cand = (1 << k) | (c << 1) | 1
        if _powmod_int(2, d, cand) != 1:
            continue
        if any(_powmod_int(2, dp, cand) == 1 for dp in proper):
            continue
        if not _is_irreducible_int(cand):
            continue
        found.append(cand)
        if len(found) == count:
            break
    prod = reduce(_mul_int, found, 1)
    if len(found) != count or prod != phi_d:
        raise UnsupportedPeriod(n_for_error, f"could not split level-{d} cyclotomic factor")
    return found


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int) -> Factorization:
    """Factor x^N - 1 for the supported period families.

    Supported: N = 2^a, prime powers p^k with 2 a primitive root mod every
    p^j (j <= k), products of such odd prime powers, and any of these times
    a power of two.  Raises UnsupportedPeriod otherwise; callers fall back
    to the oracle module.
    """
    if n < 1:
        raise ValueError("period must be positive")
    if n >= 1 << 32:
        raise UnsupportedPeriod(n, "periods beyond 2^32 are out of scope")
    two_part = (n & -n).bit_length() - 1
    m = n >> two_part
    alpha = 1 << two_part
    per_level: dict[int, list[int]] = {}
    for d in _divisors(m):
        if d == 1:
            per_level[1] = [0b11]
            continue
        fac_d = _factorize(d)
        if len(fac_d) == 1:
            (p, j), = fac_d.items()
            if p >= 1 << 16:
                raise UnsupportedPeriod(n, f"prime {p} above the 2^16 validation cap")
            _check_two_generates(p, j, n)
            g = _prime_power_level_poly(p, j)
            if g.bit_length() - 1 <= DEGREE_CAP and not _is_irreducible_int(g):
                raise UnsupportedPeriod(n, f"level {d} polynomial unexpectedly reducible")
            per_level[d] = [g]
        else:
            per_level[d] = _cyclotomic_cross_factors(d, per_level, n)
    factors = tuple(
        FactorPower(Poly2(q), alpha, two_part)
        for d in sorted(per_level)
        for q in per_level[d]
    )
    fac = Factorization(n, factors)
    fac.validate()
    return fac
