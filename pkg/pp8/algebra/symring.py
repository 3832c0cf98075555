"""
Sparse multivariate polynomials in the variables a1..a7.

``SparsePoly7`` works over F2 and stores a frozenset of packed monomials: the
exponent of a_i lives in bits 16(i-1)..16i-1 of a Python int, so a product
of monomials is an integer addition and a sum of polynomials is a symmetric
difference. ``FieldPoly7`` carries GF(2^r) coefficients.

Both kinds are wrapped by ring objects implementing ``CoeffDomain``, the
contract the Hermite engine evaluates over.
"""

from functools import reduce
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Protocol,
    Sequence,
    Tuple,
    TypeVar,
    Union,
    runtime_checkable,
)

from pp8.algebra.field import FieldCtx, FieldElement
from pp8.core.errors import CoefficientSyntaxError, ContextMismatchError, ExponentOverflowError

NVARS: int = 7
WIDTH: int = 16
FIELD_MASK: int = (1 << WIDTH) - 1
MAX_EXPONENT: int = FIELD_MASK

# lowest bit of every slot above the first, plus the bit past a7
_CARRY_MASK: int = sum(1 << (WIDTH * i) for i in range(1, NVARS + 1))

T = TypeVar('T')


@runtime_checkable
class CoeffDomain(Protocol[T]):
    """Commutative ring of characteristic 2 the HC engine can sum over."""

    def zero(self) -> T: ...

    def one(self) -> T: ...

    def add(self, a: T, b: T) -> T: ...

    def sum(self, items: Iterable[T]) -> T: ...

    def mul(self, a: T, b: T) -> T: ...

    def pow(self, a: T, n: int) -> T: ...

    def is_zero(self, a: T) -> bool: ...


# packed monomials

def pack(exps: Sequence[int]) -> int:
    """Pack (j1, ..., j7) into one int."""
    if len(exps) != NVARS:
        raise ValueError(f"expected {NVARS} exponents, got {len(exps)}")
    m = 0
    for i, j in enumerate(exps):
        if not 0 <= j <= MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {j} of a{i + 1} does not fit {WIDTH} bits")
        m |= j << (WIDTH * i)
    return m


def unpack(m: int) -> Tuple[int, ...]:
    """(j1, ..., j7) of a packed monomial."""
    return tuple((m >> (WIDTH * i)) & FIELD_MASK for i in range(NVARS))


def _mono_mul(a: int, b: int) -> int:
    s = a + b
    if (a ^ b ^ s) & _CARRY_MASK:
        raise ExponentOverflowError(f"exponent overflow multiplying {unpack(a)} by {unpack(b)}")
    return s


def _mono_scale(m: int, n: int) -> int:
    if m and max(unpack(m)) * n > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent overflow raising {unpack(m)} to the {n}")
    return m * n


def _reduce_exponent(j: int, q: int) -> int:
    return j if j < q else ((j - 1) % (q - 1)) + 1


def _reduce_mono(m: int, q: int) -> int:
    return pack([_reduce_exponent(j, q) for j in unpack(m)])


def _toggle(acc: set, m: int) -> None:
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


def _mono_sort_key(m: int) -> Tuple[int, ...]:
    exps = unpack(m)
    # total degree descending, then ascending in (j7, ..., j1)
    return (-sum(exps),) + tuple(reversed(exps))


def _render_mono(m: int) -> str:
    factors = []
    for i, j in enumerate(unpack(m), start=1):
        if j == 1:
            factors.append(f"a{i}")
        elif j > 1:
            factors.append(f"a{i}^{j}")
    return "*".join(factors) if factors else "1"


def _parse_mono(text: str) -> int:
    exps = [0] * NVARS
    for factor in text.split('*'):
        factor = factor.strip()
        if factor == '1':
            continue
        name, _, power = factor.partition('^')
        name = name.strip()
        if len(name) != 2 or name[0] != 'a' or name[1] not in '1234567':
            raise CoefficientSyntaxError(f"bad factor {factor!r}: expected a1..a7, optionally ^n")
        try:
            j = int(power) if power else 1
        except ValueError as e:
            raise CoefficientSyntaxError(f"bad exponent in {factor!r}") from e
        exps[int(name[1]) - 1] += j
    return pack(exps)


class SparsePoly7:
    """
    Polynomial over F2 in a1..a7, immutable.

    Supports ``+``, ``*`` and ``**`` with other polynomials and the ints 0, 1.
    """

    __slots__ = ('monomials',)

    def __init__(self, monomials: Iterable[int] = ()) -> None:
        object.__setattr__(self, 'monomials', frozenset(monomials))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SparsePoly7 is immutable")

    def __reduce__(self) -> Tuple[type, Tuple[FrozenSet[int]]]:
        return SparsePoly7, (self.monomials,)

    @classmethod
    def zero(cls) -> "SparsePoly7":
        return cls()

    @classmethod
    def one(cls) -> "SparsePoly7":
        return cls((0,))

    @classmethod
    def var(cls, i: int) -> "SparsePoly7":
        if not 1 <= i <= NVARS:
            raise ValueError(f"no variable a{i}")
        return cls((1 << (WIDTH * (i - 1)),))

    @classmethod
    def monomial(cls, exps: Sequence[int]) -> "SparsePoly7":
        return cls((pack(exps),))

    @staticmethod
    def coerce(value: Union["SparsePoly7", int]) -> "SparsePoly7":
        if isinstance(value, SparsePoly7):
            return value
        if isinstance(value, int):
            return SparsePoly7.one() if value & 1 else SparsePoly7.zero()
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial over F2")

    def __add__(self, other: Union["SparsePoly7", int]) -> "SparsePoly7":
        return SparsePoly7(self.monomials ^ SparsePoly7.coerce(other).monomials)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other: Union["SparsePoly7", int]) -> "SparsePoly7":
        other = SparsePoly7.coerce(other)
        if len(self.monomials) > len(other.monomials):
            small, big = other.monomials, self.monomials
        else:
            small, big = self.monomials, other.monomials
        acc = set()
        for a in small:
            for b in big:
                _toggle(acc, _mono_mul(a, b))
        return SparsePoly7(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SparsePoly7":
        return sp_pow(self, n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SparsePoly7.coerce(other)
        if not isinstance(other, SparsePoly7):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        for m in sorted(self.monomials, key=_mono_sort_key):
            yield unpack(m)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(_render_mono(m) for m in sorted(self.monomials, key=_mono_sort_key))

    def __repr__(self) -> str:
        return f"SparsePoly7({str(self)!r})"

    @property
    def is_constant(self) -> bool:
        return self.monomials <= {0}

    def max_exponent(self) -> int:
        return max((max(unpack(m)) for m in self.monomials), default=0)


VARS: Tuple[SparsePoly7, ...] = tuple(SparsePoly7.var(i) for i in range(1, NVARS + 1))


def sp_add(p: SparsePoly7, q: SparsePoly7) -> SparsePoly7:
    return p + q


def sp_mul(p: SparsePoly7, q: SparsePoly7) -> SparsePoly7:
    return p * q


def sp_frobenius(p: SparsePoly7, s: int) -> SparsePoly7:
    """p^(2^s): every exponent vector scaled by 2^s."""
    factor = 1 << s
    return SparsePoly7(_mono_scale(m, factor) for m in p.monomials)


def sp_pow(p: SparsePoly7, n: int) -> SparsePoly7:
    """p^n as the product of the p^(2^s) over the binary digits s of n."""
    if n < 0:
        raise ValueError("negative power of a polynomial")
    if n == 0:
        return SparsePoly7.one()
    if len(p.monomials) == 1:
        (m,) = p.monomials
        return SparsePoly7((_mono_scale(m, n),))
    result = None
    s = 0
    while n:
        if n & 1:
            square = sp_frobenius(p, s)
            result = square if result is None else result * square
        n >>= 1
        s += 1
    return result  # type: ignore[return-value]


def sp_reduce_exponents(p: SparsePoly7, q: int) -> SparsePoly7:
    """
    Reduce exponents with a^q = a, i.e. modulo a_i^q - a_i.

    Args:
        p (SparsePoly7): Polynomial to reduce
        q (int): Field order, at least 2

    Returns:
        SparsePoly7: Polynomial agreeing with ``p`` on every point of GF(q)^7
    """
    if q < 2:
        raise ValueError(f"field order {q} is below 2")
    acc = set()
    for m in p.monomials:
        _toggle(acc, _reduce_mono(m, q))
    return SparsePoly7(acc)


def sp_parse(text: str) -> SparsePoly7:
    """
    Parse ``a5^3 + a3*a6^2 + 1``-style text.

    Raises:
        CoefficientSyntaxError: On malformed terms
    """
    text = text.strip()
    if not text:
        raise CoefficientSyntaxError("empty polynomial text")
    if text == '0':
        return SparsePoly7.zero()
    acc = set()
    for term in text.split('+'):
        _toggle(acc, _parse_mono(term))
    return SparsePoly7(acc)


def sp_eval(p: SparsePoly7, assignment: Sequence[T], domain: CoeffDomain[T]) -> T:
    """
    Evaluate ``p`` at a1 = assignment[0], ..., a7 = assignment[6] in ``domain``.

    Args:
        p (SparsePoly7): Polynomial over F2
        assignment (Sequence[T]): Values of a1..a7
        domain (CoeffDomain[T]): Ring the values live in

    Returns:
        T: Value of ``p``
    """
    if len(assignment) != NVARS:
        raise ValueError(f"expected {NVARS} values, got {len(assignment)}")
    monomial = getattr(domain, 'monomial', None)
    terms = []
    powers = {}
    for m in p.monomials:
        exps = unpack(m)
        if monomial is not None:
            terms.append(monomial(assignment, exps))
            continue
        term = domain.one()
        for i, j in enumerate(exps):
            if j:
                key = (i, j)
                if key not in powers:
                    powers[key] = domain.pow(assignment[i], j)
                term = domain.mul(term, powers[key])
        terms.append(term)
    return domain.sum(terms)


class FieldPoly7:
    """
    Polynomial in a1..a7 with GF(2^r) coefficients, immutable.

    Attributes:
        ctx (FieldCtx): Coefficient field
        terms (Dict[int, int]): Packed monomial -> nonzero coefficient
    """

    __slots__ = ('ctx', 'terms')

    def __init__(self, ctx: FieldCtx, terms: Mapping[int, FieldElement]) -> None:
        object.__setattr__(self, 'ctx', ctx)
        object.__setattr__(self, 'terms', {m: c for m, c in terms.items() if c})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldPoly7 is immutable")

    def __reduce__(self) -> Tuple[type, Tuple[FieldCtx, Dict[int, FieldElement]]]:
        return FieldPoly7, (self.ctx, self.terms)

    @classmethod
    def constant(cls, ctx: FieldCtx, c: FieldElement) -> "FieldPoly7":
        return cls(ctx, {0: c})

    @classmethod
    def var(cls, ctx: FieldCtx, i: int) -> "FieldPoly7":
        if not 1 <= i <= NVARS:
            raise ValueError(f"no variable a{i}")
        return cls(ctx, {1 << (WIDTH * (i - 1)): 1})

    @classmethod
    def from_sparse(cls, ctx: FieldCtx, p: SparsePoly7) -> "FieldPoly7":
        return cls(ctx, {m: 1 for m in p.monomials})

    def _check(self, other: "FieldPoly7") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"GF(2^{self.ctx.r}) polynomial combined with GF(2^{other.ctx.r}) one")

    def __add__(self, other: "FieldPoly7") -> "FieldPoly7":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) ^ c
        return FieldPoly7(self.ctx, terms)

    def __mul__(self, other: "FieldPoly7") -> "FieldPoly7":
        self._check(other)
        mul = self.ctx.mul
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                terms[m] = terms.get(m, 0) ^ mul(ca, cb)
        return FieldPoly7(self.ctx, terms)

    def frobenius(self, s: int) -> "FieldPoly7":
        """self^(2^s)."""
        factor = 1 << s
        return FieldPoly7(self.ctx, {_mono_scale(m, factor): self.ctx.frob(c, s) for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "FieldPoly7":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = FieldPoly7.constant(self.ctx, 1)
        s = 0
        while n:
            if n & 1:
                result = result * self.frobenius(s)
            n >>= 1
            s += 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldPoly7):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_constant(self) -> bool:
        return set(self.terms) <= {0}

    @property
    def constant_term(self) -> FieldElement:
        return self.terms.get(0, 0)

    def reduce(self, q: int) -> "FieldPoly7":
        terms = {}
        for m, c in self.terms.items():
            key = _reduce_mono(m, q)
            terms[key] = terms.get(key, 0) ^ c
        return FieldPoly7(self.ctx, terms)

    def substitute(self, values: Mapping[int, FieldElement]) -> "FieldPoly7":
        """Fix the variables a_i (i -> value) and keep the others symbolic."""
        ctx = self.ctx
        terms = {}
        for m, c in self.terms.items():
            exps = list(unpack(m))
            for i, value in values.items():
                j = exps[i - 1]
                if j:
                    c = ctx.mul(c, ctx.pow(value, j))
                    exps[i - 1] = 0
            if c:
                key = pack(exps)
                terms[key] = terms.get(key, 0) ^ c
        return FieldPoly7(ctx, terms)

    def eval(self, assignment: Sequence[FieldElement]) -> FieldElement:
        """Value at a1 = assignment[0], ..., a7 = assignment[6]."""
        ctx = self.ctx
        acc = 0
        for m, c in self.terms.items():
            acc ^= ctx.mul(c, ctx.monomial(assignment, unpack(m)))
        return acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_sort_key):
            c = self.terms[m]
            mono = _render_mono(m)
            if m == 0:
                parts.append(self.ctx.render(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{self.ctx.render(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FieldPoly7({str(self)!r})"


class SparsePolyRing:
    """
    ``CoeffDomain`` of SparsePoly7 values.

    Args:
        reduce_q (Optional[int]): When set, exponents are reduced modulo a^q = a after each product
    """

    def __init__(self, reduce_q: Optional[int] = None) -> None:
        self.reduce_q: Optional[int] = reduce_q

    def _reduce(self, p: SparsePoly7) -> SparsePoly7:
        return p if self.reduce_q is None else sp_reduce_exponents(p, self.reduce_q)

    def zero(self) -> SparsePoly7:
        return SparsePoly7.zero()

    def one(self) -> SparsePoly7:
        return SparsePoly7.one()

    def add(self, a: SparsePoly7, b: SparsePoly7) -> SparsePoly7:
        return a + b

    def sum(self, items: Iterable[SparsePoly7]) -> SparsePoly7:
        acc = set()
        for item in items:
            acc ^= item.monomials
        return SparsePoly7(acc)

    def mul(self, a: SparsePoly7, b: SparsePoly7) -> SparsePoly7:
        return self._reduce(a * b)

    def pow(self, a: SparsePoly7, n: int) -> SparsePoly7:
        if self.reduce_q is None:
            return sp_pow(a, n)
        # square-and-multiply keeps exponents below q at every step
        result = SparsePoly7.one()
        base = self._reduce(a)
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self._reduce(sp_frobenius(base, 1))
        return result

    def is_zero(self, a: SparsePoly7) -> bool:
        return not a


class FieldPolyRing:
    """
    ``CoeffDomain`` of FieldPoly7 values over ``ctx``.

    Args:
        ctx (FieldCtx): Coefficient field
        reduce_q (Optional[int]): When set, exponents are reduced modulo a^q = a after each product
    """

    def __init__(self, ctx: FieldCtx, reduce_q: Optional[int] = None) -> None:
        self.ctx: FieldCtx = ctx
        self.reduce_q: Optional[int] = reduce_q

    def _reduce(self, p: FieldPoly7) -> FieldPoly7:
        return p if self.reduce_q is None else p.reduce(self.reduce_q)

    def lift(self, value: Union[FieldPoly7, SparsePoly7, int]) -> FieldPoly7:
        """Field elements and F2 polynomials as members of this ring."""
        if isinstance(value, FieldPoly7):
            return value
        if isinstance(value, SparsePoly7):
            return FieldPoly7.from_sparse(self.ctx, value)
        return FieldPoly7.constant(self.ctx, self.ctx.check(value))

    def zero(self) -> FieldPoly7:
        return FieldPoly7(self.ctx, {})

    def one(self) -> FieldPoly7:
        return FieldPoly7.constant(self.ctx, 1)

    def add(self, a: FieldPoly7, b: FieldPoly7) -> FieldPoly7:
        return a + b

    def sum(self, items: Iterable[FieldPoly7]) -> FieldPoly7:
        return reduce(lambda a, b: a + b, items, self.zero())

    def mul(self, a: FieldPoly7, b: FieldPoly7) -> FieldPoly7:
        return self._reduce(a * b)

    def pow(self, a: FieldPoly7, n: int) -> FieldPoly7:
        result = self.one()
        base = self._reduce(a)
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self._reduce(base.frobenius(1))
        return result

    def is_zero(self, a: FieldPoly7) -> bool:
        return not a
