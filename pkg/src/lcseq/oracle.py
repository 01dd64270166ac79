"""Reference implementations used to validate the fast algorithms.

Two independent oracles compute the linear complexity and minimal
polynomial of a cyclic sequence: the generating-function gcd method and
LFSR synthesis (Berlekamp-Massey) run over two concatenated periods.  The
module also provides the generators the property suites need: m-sequences,
the family S(q) of sequences annihilated by an irreducible q, and the
brute-force period census of sequences generated by a power of a primitive
polynomial.
"""

from __future__ import annotations

from functools import reduce

from .cyclicseq import CyclicSeq, OpMeter
from .gf2poly import (
    Poly2,
    _divrem_int,
    _gcd_int,
    _mul_int,
    _pow_int,
    exponent,
    is_irreducible,
    is_primitive,
)

__all__ = [
    "LcResult",
    "InfeasibleSize",
    "gcd_method",
    "berlekamp_massey",
    "msequence",
    "sequence_family",
    "enumerate_by_period",
]


class InfeasibleSize(ValueError):
    """Raised when a brute-force enumeration would be too large."""


class LcResult:
    """Linear complexity plus the minimal polynomial and meter snapshot.

    The minimal polynomial is assembled lazily from the per-factor
    exponents when an algorithm reports those instead of the product.
    """

    __slots__ = ("complexity", "algorithm", "meter", "deltas", "_min_poly")

    def __init__(
        self,
        complexity: int,
        algorithm: str,
        meter: OpMeter,
        deltas: tuple[tuple[Poly2, int], ...] | None = None,
        min_poly: Poly2 | None = None,
    ):
        if min_poly is None and deltas is None:
            raise ValueError("need the minimal polynomial or its factor exponents")
        self.complexity = complexity
        self.algorithm = algorithm
        self.meter = meter
        self.deltas = deltas
        self._min_poly = min_poly

    @property
    def min_poly(self) -> Poly2:
        if self._min_poly is None:
            bits = reduce(
                _mul_int, (_pow_int(q.bits, d) for q, d in self.deltas if d), 1
            )
            self._min_poly = Poly2(bits)
        return self._min_poly

    def key(self) -> tuple[int, int]:
        """(complexity, min_poly bits) for cross-oracle comparison."""
        return self.complexity, self.min_poly.bits

    def __repr__(self) -> str:
        return (
            f"LcResult(c={self.complexity}, f={self.min_poly.to_human()}, "
            f"algorithm={self.algorithm})"
        )


def gcd_method(s: CyclicSeq) -> LcResult:
    """Minimal polynomial via gcd(s^N(x), x^N - 1); complexity = its codegree.

    x^N - 1 over the gcd is the denominator of the generating function; the
    polynomial annihilating the sequence under the shift operator (the taps
    of the recurrence, reindexed c_{m-j} = a_j) is its reversal.  The two
    coincide exactly when the factor set involved is self-reciprocal.
    """
    meter = OpMeter()
    xn1 = (1 << s.n) | 1
    if s.bits == 0:
        return LcResult(0, "GcdMethod", meter, min_poly=Poly2(1))
    g = _gcd_int(s.bits, xn1)
    f, rem = _divrem_int(xn1, g)
    assert rem == 0
    deg = f.bit_length() - 1
    fbits = 0
    for j in range(deg + 1):
        if (f >> j) & 1:
            fbits |= 1 << (deg - j)
    return LcResult(deg, "GcdMethod", meter, min_poly=Poly2(fbits))


def berlekamp_massey(s: CyclicSeq) -> LcResult:
    """Classical LFSR synthesis over two concatenated periods.

    Two periods (2N bits) guarantee the synthesized register is the
    periodic minimal one, since 2c bits always suffice and c <= N.  The
    register taps come out in recurrence order; they are re-emitted
    reversed so the connection polynomial is the same monic minimal
    polynomial the gcd method produces.
    """
    meter = OpMeter()
    n = s.n
    if s.bits == 0:
        return LcResult(0, "BerlekampMassey", meter, min_poly=Poly2(1))
    length = 2 * n
    stream = s.bits | (s.bits << n)
    # C tracks the connection polynomial, SC the carry-less product
    # stream(x) * C(x); the discrepancy at step i is bit i of SC.
    c_poly, b_poly = 1, 1
    sc, sb = stream, stream
    deg, last = 0, -1
    for i in range(length):
        if (sc >> i) & 1:
            shift = i - last
            if 2 * deg <= i:
                c_poly, b_poly = c_poly ^ (b_poly << shift), c_poly
                sc, sb = sc ^ (sb << shift), sc
                deg, last = i + 1 - deg, i
            else:
                c_poly ^= b_poly << shift
                sc ^= sb << shift
    # reverse the register taps into a monic degree-`deg` polynomial
    fbits = 0
    for j in range(deg + 1):
        if (c_poly >> j) & 1:
            fbits |= 1 << (deg - j)
    return LcResult(deg, "BerlekampMassey", meter, min_poly=Poly2(fbits))


def msequence(f: Poly2) -> CyclicSeq:
    """The m-sequence of the primitive polynomial f, seeded 0..01."""
    if not is_primitive(f):
        raise ValueError(f"{f!r} is not primitive")
    k = f.degree
    length = (1 << k) - 1
    taps = f.bits & ((1 << k) - 1)
    bits = 1 << (k - 1)  # s_0 .. s_{k-2} = 0, s_{k-1} = 1
    for i in range(length - k):
        nxt = (((bits >> i) & taps).bit_count() & 1) << (k + i)
        bits |= nxt
    return CyclicSeq(bits & ((1 << length) - 1), length)


def _canonical_rotation(bits: int, n: int) -> int:
    """Representative whose s_0-first bit string is lexicographically least."""
    mask = (1 << n) - 1
    best_bits = bits
    best_str = format(bits, f"0{n}b")[::-1]
    cur = bits
    for _ in range(n - 1):
        cur = ((cur >> 1) | (cur << (n - 1))) & mask
        cand = format(cur, f"0{n}b")[::-1]
        if cand < best_str:
            best_str, best_bits = cand, cur
    return best_bits


def sequence_family(q: Poly2, max_len: int = 1 << 16) -> set[CyclicSeq]:
    """All nonzero cyclic sequences generated by the irreducible q.

    One representative per cyclic class (lexicographically least rotation),
    each of length exponent(q).
    """
    if not is_irreducible(q):
        raise ValueError(f"{q!r} is reducible")
    if q.degree > 16:
        raise InfeasibleSize("sequence_family caps the degree at 16")
    e = exponent(q)
    if e > max_len:
        raise InfeasibleSize(f"family period {e} exceeds max_len={max_len}")
    k = q.degree
    taps = q.bits & ((1 << k) - 1)
    out: set[CyclicSeq] = set()
    visited = bytearray(1 << k)
    for state0 in range(1, 1 << k):
        if visited[state0]:
            continue
        # generate e bits from this state, marking the state orbit
        state = state0
        bits = 0
        for i in range(e):
            visited[state] = 1
            bits |= (state & 1) << i
            state = (state >> 1) | (((state & taps).bit_count() & 1) << (k - 1))
        out.add(CyclicSeq(_canonical_rotation(bits, e), e))
    return out


def enumerate_by_period(f: Poly2, m: int) -> dict[int, int]:
    """Census of the cyclic sequences generated by f^m, grouped by period.

    Walks every state of the degree-k*m register with connection
    polynomial f^m (the map is a bijection, so orbits are pure cycles whose
    length is the sequence period).  The all-zero sequence lands under
    period 1.
    """
    if not is_primitive(f):
        raise ValueError(f"{f!r} is not primitive")
    if m < 1:
        raise ValueError("power must be >= 1")
    k = f.degree
    km = k * m
    if km > 20:
        raise InfeasibleSize("enumerate_by_period caps degree * power at 20")
    taps = _pow_int(f.bits, m) & ((1 << km) - 1)
    top = km - 1
    counts: dict[int, int] = {}
    visited = bytearray(1 << km)
    for state0 in range(1 << km):
        if visited[state0]:
            continue
        state = state0
        length = 0
        while True:
            visited[state] = 1
            length += 1
            state = (state >> 1) | (((state & taps).bit_count() & 1) << top)
            if state == state0:
                break
        counts[length] = counts.get(length, 0) + 1
    return counts
