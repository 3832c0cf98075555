"""
Arithmetic in GF(2^r) for 1 <= r <= 16.

Elements are plain ints holding the polynomial-basis bit vector. Each
``FieldCtx`` owns exp/log tables built from a primitive modulus read from
the moduli constants file, so multiplication, inversion and powers are table
lookups.
"""

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import isqrt
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from pp8.core.config import get_settings
from pp8.core.errors import (
    CoefficientSyntaxError,
    FieldDomainError,
    FieldRangeError,
    ModuliFileError,
)
from pp8.core.logger import logger

FieldElement = int

MAX_R: int = 16
DEFAULT_MODULI_FILE: Path = Path(__file__).resolve().parent.parent / 'data' / 'moduli.txt'

_ELEMENT_RE = re.compile(r'^\s*(?:(?P<zero>0)|(?P<one>1)|e(?:\^(?P<exp>-?\d+))?)\s*$')


def load_moduli(path: Optional[Path] = None) -> Dict[int, int]:
    """
    Read the moduli constants file.

    Args:
        path (Optional[Path]): File to read; defaults to the configured or packaged table

    Returns:
        Dict[int, int]: Mapping r -> modulus bit vector

    Raises:
        ModuliFileError: On unreadable files, malformed lines or a degree mismatch
    """
    if path is None:
        path = get_settings().moduli_file or DEFAULT_MODULI_FILE
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ModuliFileError(f"cannot read moduli file {path}: {e}") from e

    moduli = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.replace(',', ' ').split()
        try:
            r, modulus = int(parts[0]), int(parts[1], 16)
        except (IndexError, ValueError) as e:
            raise ModuliFileError(f"{path}:{lineno}: expected 'r hex-modulus', got {raw!r}") from e
        if modulus.bit_length() - 1 != r:
            raise ModuliFileError(f"{path}:{lineno}: modulus {modulus:#x} does not have degree {r}")
        moduli[r] = modulus
    return moduli


def is_irreducible(modulus: int) -> bool:
    """Irreducibility of a bit-vector polynomial over F2, decided by sympy."""
    coeffs = [int(b) for b in bin(modulus)[2:]]
    return bool(gf_irreducible_p(coeffs, 2, ZZ))


def wan_iterations(q: int) -> int:
    """Exact floor(q - (q-1)/8) + 1, the number of distinct values forcing a degree-8 PP."""
    return q - (q - 1 + 7) // 8 + 1


def nonexceptional_bound(n: int) -> int:
    """
    Weil-type constant C_n below which non-exceptional degree-n PPs can exist.

    Computes floor(((A + sqrt(A^2 + 8n - 12)) / 2)^2) with A = (n-2)(n-3)
    without floating point: the square expands to (A^2 + D + 2A*sqrt(D))/4
    with D = A^2 + 8n - 12, and floor((x + sqrt(y))/4) only needs isqrt(y).

    Args:
        n (int): Polynomial degree, at least 4

    Returns:
        int = 8
    """
    if n < 4:
        raise FieldRangeError(f"degree {n} is below 4")
    a = (n - 2) * (n - 3)
    d = a * a + 8 * n - 12
    return (a * a + d + isqrt(4 * a * a * d)) // 4


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """
    Immutable context of GF(2^r).

    Attributes:
        r (int): Extension degree
        modulus (int): Primitive defining polynomial as a bit vector
        exp_table (Tuple[int, ...]): e^i for 0 <= i < 2(q-1), doubled to skip reductions
        log_table (Tuple[int, ...]): Discrete log of every nonzero element, -1 at 0
        wan_iterations (int): Number of points probed by the early-exit PP test
    """
    r: int
    modulus: int
    exp_table: Tuple[int, ...] = field(repr=False)
    log_table: Tuple[int, ...] = field(repr=False)
    wan_iterations: int = 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.r == other.r and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.r, self.modulus))

    @property
    def q(self) -> int:
        return 1 << self.r

    @property
    def order(self) -> int:
        """Order q - 1 of the multiplicative group."""
        return (1 << self.r) - 1

    @property
    def generator(self) -> FieldElement:
        return self.exp_table[1]

    # domain contract

    def zero(self) -> FieldElement:
        return 0

    def one(self) -> FieldElement:
        return 1

    def is_zero(self, a: FieldElement) -> bool:
        return a == 0

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a ^ b

    def sum(self, items: Iterable[FieldElement]) -> FieldElement:
        acc = 0
        for item in items:
            acc ^= item
        return acc

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise FieldDomainError("inverse of 0")
        return self.exp_table[(self.order - self.log_table[a]) % self.order]

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def pow(self, a: FieldElement, n: int) -> FieldElement:
        """a^n; pow(0, 0) = 1, negative n needs a != 0."""
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise FieldDomainError("negative power of 0")
            return 0
        return self.exp_table[(self.log_table[a] * n) % self.order]

    def frob(self, a: FieldElement, j: int) -> FieldElement:
        """a^(2^j), j taken mod r."""
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] << (j % self.r)) % self.order]

    def sqrt(self, a: FieldElement) -> FieldElement:
        return self.frob(a, self.r - 1)

    def trace(self, a: FieldElement) -> int:
        acc = 0
        for j in range(self.r):
            acc ^= self.frob(a, j)
        return acc

    def monomial(self, values: Sequence[FieldElement], exps: Sequence[int]) -> FieldElement:
        """Product of values[i]^exps[i]."""
        total = 0
        for a, j in zip(values, exps):
            if j:
                if a == 0:
                    return 0
                total += self.log_table[a] * j
        return self.exp_table[total % self.order]

    # representations

    def element(self, i: int) -> FieldElement:
        """e^i for any integer i."""
        return self.exp_table[i % self.order]

    def dlog(self, a: FieldElement) -> int:
        """Discrete log in 0..q-2."""
        if a == 0:
            raise FieldDomainError("log of 0")
        return self.log_table[a]

    def from_log(self, i: int) -> FieldElement:
        """Display convention: 0 -> zero, i in 1..q-1 -> e^i."""
        if not 0 <= i <= self.order:
            raise FieldRangeError(f"log index {i} outside 0..{self.order}")
        return 0 if i == 0 else self.exp_table[i % self.order]

    def to_log(self, a: FieldElement) -> int:
        self.check(a)
        if a == 0:
            return 0
        return self.log_table[a] or self.order

    def check(self, a: FieldElement) -> FieldElement:
        if not 0 <= a < self.q:
            raise FieldRangeError(f"{a} is not an element of GF(2^{self.r})")
        return a

    def render(self, a: FieldElement, basis: bool = False) -> str:
        self.check(a)
        if basis:
            return f"{a:#x}"
        if a <= 1:
            return str(a)
        i = self.log_table[a]
        return "e" if i == 1 else f"e^{i}"

    def parse(self, text: str) -> FieldElement:
        """
        Parse ``0``, ``1``, ``e`` or ``e^k``.

        Raises:
            CoefficientSyntaxError: If the text has another form
        """
        match = _ELEMENT_RE.match(text)
        if match is None:
            raise CoefficientSyntaxError(f"bad coefficient {text!r}: expected 0, 1, e or e^k")
        if match.group('zero'):
            return 0
        if match.group('one'):
            return 1
        exp = match.group('exp')
        return self.element(1 if exp is None else int(exp))

    def elements(self) -> range:
        return range(self.q)

    def nonzero_by_exponent(self) -> Iterator[Tuple[int, FieldElement]]:
        """Pairs (i, e^i) for i = 1..q-1, the unit last."""
        for i in range(1, self.q):
            yield i, self.exp_table[i % self.order]

    @cached_property
    def mul_table(self) -> List[List[FieldElement]]:
        """Full multiplication table; only sensible for small q."""
        return [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)]


def _build_tables(r: int, modulus: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    q = 1 << r
    order = q - 1
    generator = 2 if r > 1 else 1
    exp_table = [0] * (2 * order)
    log_table = [-1] * q
    x = 1
    for i in range(order):
        if log_table[x] != -1:
            raise ModuliFileError(f"modulus {modulus:#x} is not primitive: e^{i} repeats e^{log_table[x]}")
        exp_table[i] = exp_table[i + order] = x
        log_table[x] = i
        # multiply by the generator
        if r == 1:
            continue
        x <<= 1
        if x & q:
            x ^= modulus
    return tuple(exp_table), tuple(log_table)


@lru_cache(maxsize=None)
def make_ctx(r: int, modulus: Optional[int] = None) -> FieldCtx:
    """
    Build (once per process) the context of GF(2^r).

    Args:
        r (int): Extension degree, 1..16
        modulus (Optional[int]): Explicit defining polynomial; the moduli file entry otherwise

    Returns:
        FieldCtx: Context with verified irreducible primitive modulus

    Raises:
        FieldRangeError: If r is unsupported
        ModuliFileError: If the modulus is missing, reducible or not primitive
    """
    if not 1 <= r <= MAX_R:
        raise FieldRangeError(f"r = {r} outside 1..{MAX_R}")
    if modulus is None:
        moduli = load_moduli()
        if r not in moduli:
            raise ModuliFileError(f"no modulus listed for r = {r}")
        modulus = moduli[r]
    if modulus.bit_length() - 1 != r:
        raise ModuliFileError(f"modulus {modulus:#x} does not have degree {r}")
    if not is_irreducible(modulus):
        raise ModuliFileError(f"modulus {modulus:#x} is reducible over F2")

    exp_table, log_table = _build_tables(r, modulus)
    q = 1 << r
    wan = wan_iterations(q)
    if r >= 4:
        # early-exit PP test probes e^0..e^(wan-1), all distinct inputs
        assert wan <= q - 1, f"Wan threshold {wan} exceeds q - 1 for r = {r}"
    logger.info(f"Built GF(2^{r}) context with modulus {modulus:#x}")
    return FieldCtx(r=r, modulus=modulus, exp_table=exp_table, log_table=log_table, wan_iterations=wan)

