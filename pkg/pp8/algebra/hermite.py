"""
Hermite's criterion for degree-8 polynomials over GF(2^r).

For f = x^8 + a7*x^7 + ... + a1*x, Lucas' theorem says the monomial
a1^j1 ... a7^j7 * x^m appears in f^k exactly when the binary digits of k
are split among j0 (the x^8 bucket) and j1..j7. Labelling each digit of k
with its bucket 0..7 gives base-8 numbers u in [0, 8^n), n = |beta(k)|; the
HC sum collects the monomials whose m = 8*j0 + sum(i*ji) is a positive
multiple of q - 1.
"""

from functools import lru_cache
from math import factorial
from typing import Optional, Sequence, Tuple, TypeVar

from pp8.algebra.field import FieldCtx, FieldElement
from pp8.algebra.octic import DEGREE, Octic, poly_mul
from pp8.algebra.symring import CoeffDomain
from pp8.core.config import get_settings
from pp8.core.errors import FieldRangeError, ShapeError

T = TypeVar('T')

BetaSet = Tuple[int, ...]
ExponentVector = Tuple[int, int, int, int, int, int, int]

ALL_NONZERO: int = 0b1111111


def beta(n: int) -> BetaSet:
    """Ascending positions of the 1-bits of n."""
    if n < 1:
        raise FieldRangeError(f"beta is defined for n >= 1, got {n}")
    return tuple(s for s in range(n.bit_length()) if (n >> s) & 1)


def multinomial_parity(k: int, js: Sequence[int]) -> int:
    """Multinomial coefficient (k; j1, ..., jt) mod 2 by Lucas' theorem."""
    if k < 0 or any(j < 0 for j in js):
        raise FieldRangeError("multinomial arguments must be nonnegative")
    if sum(js) != k:
        return 0
    seen = 0
    for j in js:
        if seen & j:
            return 0
        seen |= j
    return 1


def multinomial_exact(k: int, js: Sequence[int]) -> int:
    """k! / (j1! ... jt!) with big integers; zero when the parts do not sum to k."""
    if sum(js) != k:
        return 0
    value = factorial(k)
    for j in js:
        value //= factorial(j)
    return value


def digit_decomposition(k: int, u: int) -> Tuple[int, ...]:
    """
    Bucket sizes (j0, j1, ..., j7) of the base-8 label u.

    Args:
        k (int): Exponent whose binary digits are distributed
        u (int): Label in [0, 8^n), digit v assigns bit s_v of k to bucket u_v

    Returns:
        Tuple[int, ...]: j0..j7, summing to k
    """
    positions = beta(k)
    if not 0 <= u < 8 ** len(positions):
        raise FieldRangeError(f"label {u} outside [0, 8^{len(positions)})")
    js = [0] * DEGREE
    for s in positions:
        js[u % 8] += 1 << s
        u //= 8
    return tuple(js)


def _mask_of(values: Sequence[T], domain: CoeffDomain[T]) -> int:
    """Bit i-1 set when a_i (values given a7..a1) is nonzero."""
    mask = 0
    for i, value in zip(range(7, 0, -1), values):
        if not domain.is_zero(value):
            mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=4096)
def hc_terms(r: int, k: int, mask: int = ALL_NONZERO) -> Tuple[ExponentVector, ...]:
    """
    Exponent vectors (j1..j7) of the monomials summed by HC(r, k, .).

    Depth-first over the base-8 digits of k, highest bit first, skipping
    buckets whose coefficient is zero (``mask``) and subtrees whose reachable
    range of m holds no multiple of q - 1.

    Args:
        r (int): Extension degree, at least 2
        k (int): Power of f, at least 1
        mask (int): Bit i-1 set when a_i may be nonzero

    Returns:
        Tuple[ExponentVector, ...]: Surviving exponent vectors
    """
    if r < 2:
        raise FieldRangeError(f"HC needs q >= 4, got r = {r}")
    n = (1 << r) - 1
    top = DEGREE * k
    positions = sorted(beta(k), reverse=True)
    bits = [1 << s for s in positions]
    digits = [0] + [i for i in range(1, DEGREE) if (mask >> (i - 1)) & 1]
    weights = [DEGREE if d == 0 else d for d in digits]
    wmin = min(weights)
    wmax = max(weights)
    remaining = [sum(bits[v:]) for v in range(len(bits) + 1)]

    terms = []
    js = [0] * DEGREE

    def walk(v: int, m: int) -> None:
        if v == len(bits):
            if m % n == 0:
                terms.append(tuple(js[1:]))  # type: ignore[arg-type]
            return
        lo = max(m + wmin * remaining[v], n)
        hi = min(m + wmax * remaining[v], top)
        if lo > hi or (hi // n) * n < lo:
            return
        bit = bits[v]
        for d, w in zip(digits, weights):
            js[d] += bit
            walk(v + 1, m + w * bit)
            js[d] -= bit

    walk(0, 0)
    return tuple(terms)


def hc(r: int, k: int, values: Sequence[T], domain: CoeffDomain[T]) -> T:
    """
    HC(r, k, a7, ..., a1): sum of the coefficients of x^(t(q-1)) in f^k.

    Args:
        r (int): Extension degree
        k (int): Power of f
        values (Sequence[T]): a7, ..., a1 as members of ``domain``
        domain (CoeffDomain[T]): Field context or polynomial ring

    Returns:
        T: The HC sum in ``domain``
    """
    if len(values) != DEGREE - 1:
        raise ShapeError(f"expected 7 values a7..a1, got {len(values)}")
    if k < 1:
        raise FieldRangeError(f"k must be positive, got {k}")
    terms = hc_terms(r, k, _mask_of(values, domain))
    low_first = list(reversed(values))

    if isinstance(domain, FieldCtx):
        if domain.r != r:
            raise ShapeError(f"HC over r = {r} evaluated in GF(2^{domain.r})")
        return _hc_concrete(domain, terms, low_first)

    powers = {}
    summands = []
    for js in terms:
        term = None
        for i, j in enumerate(js):
            if not j:
                continue
            key = (i, j)
            if key not in powers:
                powers[key] = domain.pow(low_first[i], j)
            term = powers[key] if term is None else domain.mul(term, powers[key])
        summands.append(domain.one() if term is None else term)
    return domain.sum(summands)


def _hc_concrete(ctx: FieldCtx, terms: Sequence[ExponentVector], low_first: Sequence[FieldElement]) -> FieldElement:
    order = ctx.order
    logs = [ctx.log_table[a] if a else 0 for a in low_first]
    exp_table = ctx.exp_table
    acc = 0
    for js in terms:
        total = 0
        for lg, j in zip(logs, js):
            total += lg * j
        acc ^= exp_table[total % order]
    return acc


def hc_octic(f: Octic, k: int) -> FieldElement:
    """Concrete HC for a normalized octic."""
    if not f.is_normalized:
        raise ShapeError("HC is defined for normalized octics")
    return hc(f.ctx.r, k, f.tail, f.ctx)


def hermite_full_check(f: Octic, odd_k_only: Optional[bool] = None) -> bool:
    """
    Decide PP-ness of a normalized octic by Hermite's criterion.

    Args:
        f (Octic): Normalized octic
        odd_k_only (Optional[bool]): Test only odd k below q - 1; settings default when None

    Returns:
        bool: True iff HC vanishes for 1 <= k <= q-2 and not for k = q-1.
            With ``odd_k_only`` only odd k are evaluated; even k follow from
            hc(2k) = hc(k)^2.
    """
    if odd_k_only is None:
        odd_k_only = get_settings().hc_odd_k_only
    q = f.ctx.q
    step = 2 if odd_k_only else 1
    for k in range(1, q - 1, step):
        if hc_octic(f, k) != 0:
            return False
    return hc_octic(f, q - 1) != 0


@lru_cache(maxsize=1024)
def power_coefficients(f: Octic, k: int) -> Tuple[FieldElement, ...]:
    """Dense coefficients of f^k, low to high, by repeated multiplication."""
    if k < 1:
        raise FieldRangeError(f"k must be positive, got {k}")
    if k == 1:
        return f.coeffs
    return tuple(poly_mul(f.ctx, power_coefficients(f, k - 1), f.coeffs))


def coeff_of_power_oracle(f: Octic, k: int, m: int) -> FieldElement:
    """Coefficient of x^m in f^k."""
    coeffs = power_coefficients(f, k)
    return coeffs[m] if 0 <= m < len(coeffs) else 0


def hc_by_expansion(f: Octic, k: int) -> FieldElement:
    """HC computed from the expanded power, independent of the digit enumeration."""
    n = f.ctx.order
    acc = 0
    for t in range(1, DEGREE * k // n + 1):
        acc ^= coeff_of_power_oracle(f, k, t * n)
    return acc
