"""The fast linear-complexity algorithm family and its dispatcher.

Every algorithm here returns both the linear complexity and the minimal
connection polynomial of a cyclic binary sequence, while charging a
machine-independent bit-operation meter:

* ``games_chan``            N = 2^n, at most N + n operations
* ``ppp``                   powers of an irreducible polynomial
* ``find_delta`` /
  ``min_poly_general``      any supported factorization of x^N - 1
* ``lc_3x2n``               N = 3 * 2^n, at most 7 * 2^n + 2n
* ``lc_px2n``               N = p * 2^n, p = 1 (mod 4), 2 primitive mod p,
                            at most (p^2+7p+7)/4 * 2^n + 2n
* ``lc_odd_prime_power``    N = p^n, 2 primitive mod p^n, 2N plus counters
* ``lc_odd_composite``      odd products of such prime powers
* ``solve``                 shape dispatcher with oracle fallback

The p * 2^n engine runs the two-phase search (first the exponent of the
all-ones factor with the halving descent, then Games-Chan for the x+1
exponent) on a compact state: a sequence st of length p * 2^l standing for
the current value (E+1)^(2^l) st.  One halving of st advances the descent
one level; the zero test reads only the first (p-1) * 2^(l-1) bits of the
next difference, which determines the rest through the linear recurrence.
Phase B reuses the first level's intermediates, so the whole run stays
inside the advertised budget on every input, including the degenerate
branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclicseq import CyclicSeq, OpMeter, apply_poly_pow2, is_zero
from .gf2poly import (
    Factorization,
    Poly2,
    UnsupportedPeriod,
    X_PLUS_1,
    _factorize,
    _mult_order,
    _powmod_int,
    all_ones,
    exponent,
    factor_xn_minus_1,
    is_irreducible,
)
from .oracle import LcResult, gcd_method

__all__ = [
    "AlgorithmChoice",
    "NotGeneratedBy",
    "TAG_GAMES_CHAN",
    "TAG_PPP",
    "TAG_GENERAL",
    "TAG_FAST_3X2N",
    "TAG_FAST_PX2N",
    "TAG_ODD_PRIME_POWER",
    "TAG_ODD_COMPOSITE",
    "TAG_ORACLE_FALLBACK",
    "games_chan",
    "ppp",
    "find_delta",
    "min_poly_general",
    "lc_3x2n",
    "lc_px2n",
    "lc_odd_prime_power",
    "lc_odd_composite",
    "choose_algorithm",
    "solve",
]

TAG_GAMES_CHAN = "GamesChan"
TAG_PPP = "PPP"
TAG_GENERAL = "General"
TAG_FAST_3X2N = "Fast3x2n"
TAG_FAST_PX2N = "FastPx2n"
TAG_ODD_PRIME_POWER = "OddPrimePower"
TAG_ODD_COMPOSITE = "OddComposite"
TAG_ORACLE_FALLBACK = "OracleFallback"


class NotGeneratedBy(ValueError):
    """Input sequence is not generated by the required polynomial power."""


# ---------------------------------------------------------------------------
# Games-Chan


def _gc_int(bits: int, length: int, meter: OpMeter, fresh: bool) -> int:
    """Games-Chan halving on a power-of-two length, metered.

    ``fresh`` marks bits that were just produced by charged XORs, whose one
    deferred zero-test is free.  Each halving charges its output length;
    the final bit costs one stored-bit read unless it is the product of a
    nonzero branch.
    """
    c = 0
    iterations = 0
    last_nonzero = False
    while length > 1:
        h = length >> 1
        b = ((bits >> h) ^ bits) & ((1 << h) - 1)
        meter.xor_ops += h
        iterations += 1
        if b:
            bits = b
            c += h
            meter.counter_ops += 1
            last_nonzero = True
        else:
            bits &= (1 << h) - 1
            last_nonzero = False
        length = h
    if iterations == 0:
        if not fresh:
            meter.cmp_ops += 1
    elif not last_nonzero:
        meter.cmp_ops += 1
    if bits:
        c += 1
    return c


def games_chan(s: CyclicSeq, meter: OpMeter | None = None) -> LcResult:
    """Recursive halving for N = 2^n; minimal polynomial (x+1)^c."""
    if s.n & (s.n - 1):
        raise UnsupportedPeriod(s.n, "Games-Chan needs a power-of-two length")
    meter = meter if meter is not None else OpMeter()
    c = _gc_int(s.bits, s.n, meter, fresh=False)
    return LcResult(c, TAG_GAMES_CHAN, meter, deltas=((X_PLUS_1, c),))


# ---------------------------------------------------------------------------
# powers of an irreducible polynomial


def ppp(f: Poly2, s: CyclicSeq, meter: OpMeter | None = None) -> tuple[int, LcResult]:
    """Minimal m with f(E)^m s = 0 for irreducible f, by binary halving.

    The input length must be exponent(f) * 2^n; the sequence must be
    generated by f^(2^n), which is checked up front.
    """
    if not is_irreducible(f):
        raise ValueError(f"{f!r} is reducible")
    meter = meter if meter is not None else OpMeter()
    e = exponent(f)
    k = f.degree
    if s.n % e:
        raise UnsupportedPeriod(s.n, f"length is not exponent({f.to_human()}) * 2^n")
    q = s.n // e
    if q & (q - 1):
        raise UnsupportedPeriod(s.n, f"length / exponent({f.to_human()}) is not a power of two")
    n = q.bit_length() - 1
    if s.bits == 0:
        return 0, LcResult(0, TAG_PPP, meter, deltas=((f, 0),))
    if not is_zero(apply_poly_pow2(f, n, s, meter), meter, fused=True):
        raise NotGeneratedBy(f"sequence is not generated by ({f.to_human()})^{1 << n}")
    cur = s
    m_acc = 0
    for j in range(1, n + 1):
        img = apply_poly_pow2(f, n - j, cur, meter)
        half = cur.n >> 1
        if is_zero(img, meter, fused=True):
            cur = CyclicSeq(cur.bits & ((1 << half) - 1), half)
        else:
            # the image is generated by f^(2^(n-j)), so its period divides half
            cur = CyclicSeq(img.bits & ((1 << half) - 1), half)
            m_acc += 1 << (n - j)
            meter.counter_ops += 1
    m = m_acc + 1
    return m, LcResult(k * m, TAG_PPP, meter, deltas=((f, m),))


# ---------------------------------------------------------------------------
# the general method: per-factor exponent extraction


def _find_delta_only(
    s: CyclicSeq, fac: Factorization, target_index: int, meter: OpMeter
) -> int:
    q_t, _, gamma_t = fac.factors[target_index]
    r = s
    for i, (q, _, gamma) in enumerate(fac.factors):
        if i != target_index:
            r = apply_poly_pow2(q, gamma, r, meter)
    if is_zero(r, meter, fused=True):
        return 0
    delta = 0
    for j in range(1, gamma_t + 1):
        a = apply_poly_pow2(q_t, gamma_t - j, r, meter)
        if not is_zero(a, meter, fused=True):
            r = a
            delta += 1 << (gamma_t - j)
            meter.counter_ops += 1
    return delta + 1


def find_delta(
    s: CyclicSeq,
    fac: Factorization,
    target_index: int,
    meter: OpMeter | None = None,
) -> tuple[int, CyclicSeq]:
    """Exact exponent of one irreducible factor in the minimal polynomial.

    All other factors are first saturated to their power-of-two ceilings,
    which leaves a sequence in the target factor's family; a binary descent
    on the target exponent then locates delta.  Returns the exponent and
    the target-annihilated image of the input for reuse.
    """
    meter = meter if meter is not None else OpMeter()
    delta = _find_delta_only(s, fac, target_index, meter)
    if delta == 0:
        return 0, s
    q_t = fac.factors[target_index].poly
    residual = s
    rem = delta
    power = 0
    while rem:
        if rem & 1:
            residual = apply_poly_pow2(q_t, power, residual, meter)
        rem >>= 1
        power += 1
    return delta, residual


def _general_engine(
    s: CyclicSeq,
    fac: Factorization,
    meter: OpMeter,
    order: list[int],
    tag: str,
) -> LcResult:
    deltas_by_index: dict[int, int] = {}
    for idx in order:
        deltas_by_index[idx] = _find_delta_only(s, fac, idx, meter)
    deltas = tuple(
        (fp.poly, deltas_by_index[i]) for i, fp in enumerate(fac.factors)
    )
    complexity = sum(fp.poly.degree * deltas_by_index[i] for i, fp in enumerate(fac.factors))
    return LcResult(complexity, tag, meter, deltas=deltas)


def min_poly_general(
    s: CyclicSeq, fac: Factorization, meter: OpMeter | None = None
) -> LcResult:
    """Assemble the full minimal polynomial factor by factor.

    Factors are processed in descending degree, re-saturating the others
    for each target per the power-of-two ceiling argument.
    """
    if fac.modulus_degree != s.n:
        raise ValueError("factorization does not match the sequence length")
    meter = meter if meter is not None else OpMeter()
    return _general_engine(s, fac, meter, fac.sorted_by_degree_desc(), TAG_GENERAL)


# ---------------------------------------------------------------------------
# N = p * 2^n two-phase engine


def _px2n_engine(p: int, bits: int, n: int, meter: OpMeter) -> tuple[int, int]:
    """Return (i, j): the exponents of 1+x+..+x^(p-1) and of x+1.

    Phase A descends the all-ones factor with one halving of the state per
    level; the zero branch rebuilds the next state from adjacent blocks
    (for p = 3 a pure relabeling does it).  Phase B runs Games-Chan on the
    blockwise total of the input, reassembled from phase-A intermediates.
    """
    # fold away fully repeated halves: both exponents are preserved
    s_prime = 0
    while n > 0:
        half_len = p << (n - 1)
        s_prime = ((bits >> half_len) ^ bits) & ((1 << half_len) - 1)
        meter.xor_ops += half_len
        if s_prime:
            break
        bits &= (1 << half_len) - 1
        n -= 1
    if n == 0:
        # base: one odd period. i = 1 unless all bits agree; j = overall parity.
        w = ((bits >> 1) ^ bits) & ((1 << (p - 1)) - 1)
        meter.xor_ops += p - 1
        i = 1 if w else 0
        t = bits.bit_count() & 1
        meter.xor_ops += p - 1
        return i, t

    # ---- phase A ----
    st = bits
    acc = 0
    any_nonzero = False
    branch1_zero = False
    sp_top = 0
    u_top = 0
    for level in range(n, 0, -1):
        blk = 1 << (level - 1)
        half_len = p * blk
        if level == n:
            s_new = s_prime  # computed (and charged) by the folding loop
        else:
            s_new = ((st >> half_len) ^ st) & ((1 << half_len) - 1)
            meter.xor_ops += half_len
        if s_new == 0:
            # the test would read all-zero bits of a zero image: skip it
            st = _zero_branch_state(p, st, blk, half_len, meter)
            continue
        w = ((s_new >> blk) ^ s_new) & ((1 << ((p - 1) * blk)) - 1)
        meter.xor_ops += (p - 1) * blk
        if level == n:
            sp_top, u_top, branch1_zero = s_new, w, (w == 0)
        if w:
            st = s_new
            acc += blk
            meter.counter_ops += 1
            any_nonzero = True
        else:
            st = _zero_branch_state(p, st, blk, half_len, meter)
    if any_nonzero:
        i = acc + 1
    else:
        w_fin = ((st >> 1) ^ st) & ((1 << (p - 1)) - 1)
        meter.xor_ops += p - 1
        i = acc + 1 if w_fin else 0

    # ---- phase B: Games-Chan on the blockwise total ----
    blk = 1 << (n - 1)
    if branch1_zero:
        # the first test proved all p blocks of sp_top equal; their total is
        # that common block, nonzero because sp_top is. No bits are touched.
        kappa = sp_top & ((1 << blk) - 1)
        meter.counter_ops += 1
        j = blk + _gc_int(kappa, blk, meter, fresh=False)
    else:
        h = sp_top >> ((p - 1) * blk)
        for t in range(0, p - 1, 2):
            h ^= u_top >> (t * blk)
        h &= (1 << blk) - 1
        meter.xor_ops += ((p - 1) // 2) * blk
        if h:
            meter.counter_ops += 1
            j = blk + _gc_int(h, blk, meter, fresh=True)
        else:
            left = 0
            for piece in range(p):
                left ^= bits >> (piece << n)
            left &= (1 << blk) - 1
            meter.xor_ops += (p - 1) * blk
            j = _gc_int(left, blk, meter, fresh=True)
    return i, j


def _zero_branch_state(p: int, st: int, blk: int, half_len: int, meter: OpMeter) -> int:
    """Next descent state after a zero test, at half the length.

    The zero test shows the opposite blocks of st differ by one common
    block, so adjacent-block sums represent the halved value.  For p = 3
    the representative can be relabeled from existing blocks for free.
    """
    if p == 3:
        mask = (1 << blk) - 1
        b0 = st & mask
        b2 = (st >> (2 * blk)) & mask
        b4 = (st >> (4 * blk)) & mask
        return b2 | (b0 << blk) | (b4 << (2 * blk))
    tau = ((st >> blk) ^ st) & ((1 << half_len) - 1)
    meter.xor_ops += half_len
    return tau


def _px2n_result(p: int, s: CyclicSeq, meter: OpMeter, tag: str) -> LcResult:
    n = (s.n // p).bit_length() - 1
    i, j = _px2n_engine(p, s.bits, n, meter)
    complexity = (p - 1) * i + j
    return LcResult(
        complexity, tag, meter, deltas=((all_ones(p), i), (X_PLUS_1, j))
    )


def lc_3x2n(s: CyclicSeq, meter: OpMeter | None = None) -> LcResult:
    """Two-phase procedure for N = 3 * 2^n within 7 * 2^n + 2n operations."""
    n_odd, n2 = _split_period(s.n)
    if n_odd != 3:
        raise UnsupportedPeriod(s.n, "length is not 3 * 2^n")
    meter = meter if meter is not None else OpMeter()
    return _px2n_result(3, s, meter, TAG_FAST_3X2N)


def _is_prime(p: int) -> bool:
    return p >= 2 and _factorize(p) == {p: 1}


def lc_px2n(p: int, s: CyclicSeq, meter: OpMeter | None = None) -> LcResult:
    """Two-phase procedure for N = p * 2^n, p = 1 (mod 4), 2 primitive mod p."""
    if p != 3:
        if not _is_prime(p) or p >= 1 << 16:
            raise UnsupportedPeriod(s.n, f"p={p} is not a prime below 2^16")
        if p % 4 != 1:
            raise UnsupportedPeriod(s.n, f"p={p} is not 1 mod 4")
        if _mult_order(2, p) != p - 1:
            raise UnsupportedPeriod(s.n, f"2 is not a primitive root mod {p}")
    n_odd, n2 = _split_period(s.n)
    if n_odd != p:
        raise UnsupportedPeriod(s.n, f"length is not {p} * 2^n")
    meter = meter if meter is not None else OpMeter()
    return _px2n_result(p, s, meter, TAG_FAST_PX2N if p != 3 else TAG_FAST_3X2N)


def _split_period(n: int) -> tuple[int, int]:
    two_part = (n & -n).bit_length() - 1
    return n >> two_part, two_part


# ---------------------------------------------------------------------------
# odd periods


def _prime_power_supported(m: int) -> tuple[int, int] | None:
    fac = _factorize(m)
    if len(fac) != 1:
        return None
    (p, k), = fac.items()
    if p == 2 or p >= 1 << 16:
        return None
    for j in range(1, k + 1):
        if _mult_order(2, p**j) != (p - 1) * p ** (j - 1):
            return None
    return p, k


def lc_odd_prime_power(
    p: int, n: int, s: CyclicSeq, meter: OpMeter | None = None
) -> LcResult:
    """Level-by-level descent for N = p^n; 2N data operations plus counters.

    Each iteration checks whether the current period drops by a factor p
    (reading (p-1) * p^(n-m) freshly formed difference bits suffices) and,
    if not, strips the corresponding level polynomial.
    """
    if _prime_power_supported(p**n) != (p, n):
        raise UnsupportedPeriod(s.n, f"2 is not a primitive root mod {p}^{{1..{n}}}")
    if s.n != p**n:
        raise UnsupportedPeriod(s.n, f"length is not {p}^{n}")
    meter = meter if meter is not None else OpMeter()
    bits = s.bits
    c = 0
    deltas: list[tuple[Poly2, int]] = []
    last_fresh = False
    for m in range(1, n + 1):
        step = p ** (n - m)
        test_mask = (1 << ((p - 1) * step)) - 1
        r = ((bits >> step) ^ bits) & test_mask
        meter.xor_ops += (p - 1) * step
        level_poly = Poly2(_level_bits(p, step))
        if r == 0:
            bits &= (1 << step) - 1
            deltas.append((level_poly, 0))
            last_fresh = False
        else:
            c += (p - 1) * step
            meter.counter_ops += 1
            acc = 0
            for jj in range(p):
                acc ^= bits >> (jj * step)
            bits = acc & ((1 << step) - 1)
            meter.xor_ops += (p - 1) * step
            deltas.append((level_poly, 1))
            last_fresh = True
    if not last_fresh:
        meter.cmp_ops += 1
    if bits:
        c += 1
        deltas.append((X_PLUS_1, 1))
    else:
        deltas.append((X_PLUS_1, 0))
    return LcResult(c, TAG_ODD_PRIME_POWER, meter, deltas=tuple(reversed(deltas)))


def _level_bits(p: int, step: int) -> int:
    bits = 0
    for i in range(p):
        bits |= 1 << (i * step)
    return bits


def lc_odd_composite(
    primes: list[tuple[int, int]], s: CyclicSeq, meter: OpMeter | None = None
) -> LcResult:
    """Odd N = prod p_i^(n_i): factor-by-factor extraction, one prime group
    at a time (cyclotomic levels descending)."""
    n_val = 1
    seen = set()
    for p, k in primes:
        if p in seen or p == 2 or k < 1:
            raise UnsupportedPeriod(s.n, "invalid prime list")
        seen.add(p)
        n_val *= p**k
    if n_val != s.n or s.n % 2 == 0:
        raise UnsupportedPeriod(s.n, "prime list does not match an odd length")
    fac = factor_xn_minus_1(s.n)
    meter = meter if meter is not None else OpMeter()
    return _general_engine(s, fac, meter, list(_composite_order(s.n)), TAG_ODD_COMPOSITE)


def _factor_level(q: Poly2, n: int) -> int:
    """Smallest divisor d of n with q | x^d - 1 (q's cyclotomic level)."""
    divs = sorted(d for d in range(1, n + 1) if n % d == 0)
    for d in divs:
        if _powmod_int(2, d, q.bits) == 1:
            return d
    raise ValueError(f"{q!r} does not divide x^{n} - 1")


@lru_cache(maxsize=None)
def _composite_order(n: int) -> tuple[int, ...]:
    fac = factor_xn_minus_1(n)
    return tuple(
        sorted(
            range(len(fac.factors)),
            key=lambda i: (
                -_factor_level(fac.factors[i].poly, n),
                -fac.factors[i].poly.degree,
            ),
        )
    )


# ---------------------------------------------------------------------------
# dispatcher


@dataclass(frozen=True)
class AlgorithmChoice:
    tag: str
    p: int | None = None
    n: int | None = None
    primes: tuple[tuple[int, int], ...] | None = None


@lru_cache(maxsize=None)
def choose_algorithm(n: int) -> AlgorithmChoice:
    """Most specific applicable algorithm for a cycle length."""
    if n < 1:
        raise ValueError("length must be >= 1")
    odd, two_part = _split_period(n)
    if odd == 1:
        return AlgorithmChoice(TAG_GAMES_CHAN, n=two_part)
    if odd == 3:
        return AlgorithmChoice(TAG_FAST_3X2N, p=3, n=two_part)
    fac_odd = _factorize(odd)
    if (
        fac_odd.get(odd) == 1
        and odd % 4 == 1
        and odd < 1 << 16
        and _mult_order(2, odd) == odd - 1
    ):
        return AlgorithmChoice(TAG_FAST_PX2N, p=odd, n=two_part)
    if two_part == 0:
        pp = _prime_power_supported(odd)
        if pp is not None:
            return AlgorithmChoice(TAG_ODD_PRIME_POWER, p=pp[0], n=pp[1])
        if len(fac_odd) > 1 and _factorization_supported(n):
            return AlgorithmChoice(
                TAG_ODD_COMPOSITE, primes=tuple(sorted(fac_odd.items()))
            )
    if _factorization_supported(n):
        return AlgorithmChoice(TAG_GENERAL)
    return AlgorithmChoice(TAG_ORACLE_FALLBACK)


def _factorization_supported(n: int) -> bool:
    try:
        factor_xn_minus_1(n)
        return True
    except UnsupportedPeriod:
        return False


def solve(s: CyclicSeq, meter: OpMeter | None = None) -> LcResult:
    """Dispatch by the shape of the length; total (never errors)."""
    meter = meter if meter is not None else OpMeter()
    choice = choose_algorithm(s.n)
    if choice.tag == TAG_GAMES_CHAN:
        return games_chan(s, meter)
    if choice.tag == TAG_FAST_3X2N:
        return lc_3x2n(s, meter)
    if choice.tag == TAG_FAST_PX2N:
        return lc_px2n(choice.p, s, meter)
    if choice.tag == TAG_ODD_PRIME_POWER:
        return lc_odd_prime_power(choice.p, choice.n, s, meter)
    if choice.tag == TAG_ODD_COMPOSITE:
        return lc_odd_composite(list(choice.primes), s, meter)
    if choice.tag == TAG_GENERAL:
        return min_poly_general(s, factor_xn_minus_1(s.n), meter)
    res = gcd_method(s)
    return LcResult(
        res.complexity, TAG_ORACLE_FALLBACK, meter, min_poly=res.min_poly
    )
