"""
Degree-8 polynomials over GF(2^r) and the linear substitutions acting on them.

An ``Octic`` keeps its coefficients low-to-high (a0..a8). The tuple
(a7, a6, a5, a4, a3, a2, a1) in log form is the text representation used in
classification tables.
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pp8.algebra.field import FieldCtx, FieldElement
from pp8.core.errors import CoefficientSyntaxError, ShapeError

DEGREE: int = 8
LogTuple = Tuple[int, int, int, int, int, int, int]


@dataclass(frozen=True)
class LinearWitness:
    """
    Quadruple (s, t, u, v) standing for g(x) = s*f(t*x + u) + v.

    Attributes:
        s (int): Nonzero outer scale
        t (int): Nonzero inner scale
        u (int): Inner shift
        v (int): Outer shift
    """
    s: FieldElement
    t: FieldElement
    u: FieldElement = 0
    v: FieldElement = 0

    def __post_init__(self) -> None:
        if self.s == 0 or self.t == 0:
            raise ShapeError(f"witness needs s, t != 0, got s={self.s}, t={self.t}")

    @classmethod
    def identity(cls) -> "LinearWitness":
        return cls(1, 1, 0, 0)

    def render(self, ctx: FieldCtx, basis: bool = False) -> str:
        return "(" + ", ".join(ctx.render(c, basis) for c in (self.s, self.t, self.u, self.v)) + ")"


@dataclass(frozen=True)
class Octic:
    """
    Polynomial a8*x^8 + ... + a0 over ``ctx`` with a8 != 0.

    Attributes:
        ctx (FieldCtx): Field of the coefficients
        coeffs (Tuple[int, ...]): a0..a8
    """
    ctx: FieldCtx
    coeffs: Tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != DEGREE + 1:
            raise ShapeError(f"an octic has 9 coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            self.ctx.check(c)
        if self.coeffs[DEGREE] == 0:
            raise ShapeError("leading coefficient a8 is zero")

    @classmethod
    def normalized(cls, ctx: FieldCtx, tail: Sequence[FieldElement]) -> "Octic":
        """x^8 + a7*x^7 + ... + a1*x from (a7, ..., a1)."""
        if len(tail) != DEGREE - 1:
            raise ShapeError(f"expected 7 coefficients a7..a1, got {len(tail)}")
        return cls(ctx, (0,) + tuple(reversed(tail)) + (1,))

    @classmethod
    def from_log_tuple(cls, ctx: FieldCtx, logs: Sequence[int]) -> "Octic":
        return cls.normalized(ctx, [ctx.from_log(i) for i in logs])

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "Octic":
        """
        Parse ``a7,...,a1`` (normalized) or ``a8,...,a0`` coefficient lists.

        Raises:
            CoefficientSyntaxError: On a wrong item count or bad element text
        """
        items = [ctx.parse(item) for item in text.split(',')]
        if len(items) == DEGREE - 1:
            return cls.normalized(ctx, items)
        if len(items) == DEGREE + 1:
            try:
                return cls(ctx, tuple(reversed(items)))
            except ShapeError as e:
                raise CoefficientSyntaxError(str(e)) from e
        raise CoefficientSyntaxError(f"expected 7 (a7..a1) or 9 (a8..a0) coefficients, got {len(items)}")

    def a(self, i: int) -> FieldElement:
        return self.coeffs[i]

    @property
    def tail(self) -> Tuple[FieldElement, ...]:
        """(a7, ..., a1)."""
        return tuple(self.coeffs[DEGREE - 1:0:-1])

    @property
    def is_normalized(self) -> bool:
        return self.coeffs[DEGREE] == 1 and self.coeffs[0] == 0

    def to_log_tuple(self) -> LogTuple:
        return tuple(self.ctx.to_log(c) for c in self.tail)  # type: ignore[return-value]

    def eval(self, x: FieldElement) -> FieldElement:
        ctx = self.ctx
        ctx.check(x)
        if x == 0:
            return self.coeffs[0]
        exp_table, log_table = ctx.exp_table, ctx.log_table
        lx = log_table[x]
        acc = 0
        for c in reversed(self.coeffs):
            # acc = acc * x + c
            if acc:
                acc = exp_table[log_table[acc] + lx]
            acc ^= c
        return acc

    __call__ = eval

    def render(self, basis: bool = False) -> str:
        terms = []
        for i in range(DEGREE, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not power:
                terms.append(self.ctx.render(c, basis))
            elif c == 1:
                terms.append(power)
            else:
                terms.append(f"{self.ctx.render(c, basis)}*{power}")
        return " + ".join(terms)


def poly_mul(ctx: FieldCtx, p: Sequence[FieldElement], r: Sequence[FieldElement]) -> List[FieldElement]:
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                if b:
                    out[i + j] ^= ctx.mul(a, b)
    return out


def linear_sub(f: Octic, w: LinearWitness) -> Octic:
    """
    Expand g(x) = s*f(t*x + u) + v by Horner composition.

    Args:
        f (Octic): Polynomial to transform
        w (LinearWitness): Substitution

    Returns:
        Octic: The transformed polynomial, again of degree 8
    """
    ctx = f.ctx
    inner = [w.u, w.t]
    acc = [0]
    for c in reversed(f.coeffs):
        acc = poly_mul(ctx, acc, inner) if any(acc) else [0]
        acc[0] ^= c
    acc = [ctx.mul(w.s, c) for c in acc] + [0] * (DEGREE + 1 - len(acc))
    acc[0] ^= w.v
    return Octic(ctx, tuple(acc[:DEGREE + 1]))


def compose_witness(ctx: FieldCtx, w1: LinearWitness, w2: LinearWitness) -> LinearWitness:
    """Witness of applying ``w1`` then ``w2``."""
    return LinearWitness(
        s=ctx.mul(w1.s, w2.s),
        t=ctx.mul(w1.t, w2.t),
        u=ctx.mul(w1.t, w2.u) ^ w1.u,
        v=ctx.mul(w2.s, w1.v) ^ w2.v,
    )


def monic_shift(h: Octic) -> LinearWitness:
    """Witness turning ``h`` monic with zero constant term."""
    ctx = h.ctx
    s = ctx.inv(h.a(DEGREE))
    return LinearWitness(s=s, t=1, u=0, v=ctx.mul(s, h.a(0)))


def value_multiset(f: Octic) -> Counter:
    """Counts of every value taken by f on GF(2^r)."""
    return Counter(f.eval(x) for x in f.ctx.elements())


def frobenius_lift(f: Octic, j: int) -> Octic:
    """Apply a -> a^(2^j) to every coefficient."""
    ctx = f.ctx
    return Octic(ctx, tuple(ctx.frob(c, j) for c in f.coeffs))

