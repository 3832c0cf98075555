"""
Linear equivalence of octics.

Covers the normal form (R1)-(R3) every class has a representative in, the
residual identifications between normal forms, the exceptionality test for
linearized octics, and the reduction of a5 to a Frobenius-orbit
representative.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from pp8.algebra.field import FieldCtx, FieldElement
from pp8.algebra.octic import (
    DEGREE,
    LinearWitness,
    Octic,
    compose_witness,
    frobenius_lift,
    linear_sub,
    monic_shift,
)
from pp8.core.errors import ContextMismatchError, FieldDomainError, ShapeError


@dataclass(frozen=True)
class NormalForm:
    """
    Normalized octic satisfying (R1)-(R3) with the witness leading to it.

    Attributes:
        octic (Octic): The normal form
        witness (LinearWitness): linear_sub(input, witness) == octic
    """
    octic: Octic
    witness: LinearWitness


class OrbitRep(NamedTuple):
    """Normal form with a5 in the orbit transversal, and the Frobenius power j relating it to the input."""
    form: NormalForm
    j: int


@lru_cache(maxsize=None)
def _image_of_u2_au(ctx: FieldCtx, a: FieldElement) -> FrozenSet[FieldElement]:
    return frozenset(ctx.mul(u, u) ^ ctx.mul(a, u) for u in ctx.elements())


@lru_cache(maxsize=None)
def omega(ctx: FieldCtx, a: FieldElement) -> FieldElement:
    """
    Element outside {u^2 + a*u}, the one of least exponent with the unit counted as e^(q-1).

    Raises:
        FieldDomainError = 0, where u -> u^2 is onto
    """
    if a == 0:
        raise FieldDomainError("omega(0) does not exist: u -> u^2 is onto")
    image = _image_of_u2_au(ctx, a)
    for _, w in ctx.nonzero_by_exponent():
        if w not in image:
            return w
    raise FieldDomainError(f"u^2 + a*u is onto for a = {ctx.render(a)}")


def lambda_set(ctx: FieldCtx) -> Tuple[FieldElement, ...]:
    """Representatives e^i, 0 <= i < gcd(3, q-1), of F_q* modulo cubes."""
    return tuple(ctx.element(i) for i in range(gcd(3, ctx.order)))


@lru_cache(maxsize=None)
def gamma(ctx: FieldCtx) -> Tuple[FieldElement, ...]:
    """Least-exponent member of every Frobenius orbit of F_q*, by exponent."""
    covered = set()
    reps = []
    for _, a in ctx.nonzero_by_exponent():
        if a in covered:
            continue
        reps.append(a)
        covered.update(ctx.frob(a, j) for j in range(ctx.r))
    return tuple(reps)


def satisfies_requirements(f: Octic) -> bool:
    """Whether a normalized octic meets (R1)-(R3)."""
    if not f.is_normalized:
        return False
    ctx = f.ctx
    a7, a6, a5, a4 = f.a(7), f.a(6), f.a(5), f.a(4)
    if (a7, a6) not in ((1, 0), (0, 1), (0, 0)):
        return False
    if (a7, a6) == (0, 1):
        return a4 in ((0, omega(ctx, a5)) if a5 else (0,))
    if (a7, a6) == (0, 0) and a5:
        return a4 == 0 and a5 in lambda_set(ctx)
    return True


def _apply(f: Octic, witness: LinearWitness, step: LinearWitness) -> Tuple[Octic, LinearWitness]:
    return linear_sub(f, step), compose_witness(f.ctx, witness, step)


def _shift(f: Octic, u: FieldElement) -> LinearWitness:
    """Witness of f(x + u) - f(u)."""
    return LinearWitness(1, 1, u, f.eval(u))


def normalize(h: Octic) -> NormalForm:
    """
    Bring an octic to the normal form of its linear-equivalence class.

    Args:
        h (Octic): Any octic over GF(2^r)

    Returns:
        NormalForm: Normal form and witness with linear_sub(h, witness) == normal form
    """
    ctx = h.ctx
    witness = monic_shift(h)
    f = linear_sub(h, witness)

    # (R1)
    c7, c6 = f.a(7), f.a(6)
    if c7:
        u = ctx.div(c6, c7)
        s = ctx.pow(c7, -8)
        f, witness = _apply(f, witness, LinearWitness(s, c7, u, ctx.mul(s, f.eval(u))))
    elif c6:
        f, witness = _apply(f, witness, LinearWitness(ctx.pow(c6, -4), ctx.sqrt(c6)))

    a7, a6, a5, a4 = f.a(7), f.a(6), f.a(5), f.a(4)
    # (R2)
    if (a7, a6) == (0, 1) and a4:
        if a5 == 0:
            f, witness = _apply(f, witness, _shift(f, ctx.sqrt(a4)))
        else:
            targets = (a4, a4 ^ omega(ctx, a5))
            for u in ctx.elements():
                if ctx.mul(u, u) ^ ctx.mul(a5, u) in targets:
                    break
            if u:
                f, witness = _apply(f, witness, _shift(f, u))

    # (R3)
    if (a7, a6) == (0, 0) and a5:
        if a4:
            f, witness = _apply(f, witness, _shift(f, ctx.div(a4, a5)))
        log_a5 = ctx.dlog(a5)
        if gcd(3, ctx.order) == 1:
            m = log_a5 * pow(3, -1, ctx.order) % ctx.order
        else:
            m = (log_a5 - log_a5 % 3) // 3
        t = ctx.element(m)
        if t != 1:
            f, witness = _apply(f, witness, LinearWitness(ctx.pow(t, -8), t))

    return NormalForm(octic=f, witness=witness)


def case_ii_partner(f: Octic) -> Optional[Octic]:
    """f(x + a5) - f(a5) for normal forms x^8 + x^6 + ... with a5(a3 + a5^3) != 0."""
    ctx = f.ctx
    a5 = f.a(5)
    if not f.is_normalized or (f.a(7), f.a(6)) != (0, 1) or a5 == 0:
        return None
    if f.a(3) == ctx.pow(a5, 3):
        return None
    return linear_sub(f, _shift(f, a5))


def case_iii_witnesses(f: Octic) -> Tuple[LinearWitness, ...]:
    """Scalings t^-8 f(tx) by nontrivial cube roots of unity, for even r and a7 = a6 = a4 = 0 != a5."""
    ctx = f.ctx
    if ctx.r % 2 or (f.a(7), f.a(6), f.a(4)) != (0, 0, 0) or f.a(5) == 0:
        return ()
    third = ctx.order // 3
    return tuple(LinearWitness(ctx.pow(t, -8), t) for t in (ctx.element(third), ctx.element(2 * third)))


def linearly_related(f: Octic, g: Octic) -> Optional[LinearWitness]:
    """
    Decide linear relatedness of two normal forms.

    Args:
        f (Octic): Normal form with (a7, a6, a5) != (0, 0, 0)
        g (Octic): Normal form with (a7, a6, a5) != (0, 0, 0)

    Returns:
        Optional[LinearWitness]: w with linear_sub(f, w) == g, or None when unrelated

    Raises:
        ContextMismatchError: If f and g live over different fields
        ShapeError: If either is not such a normal form
    """
    if f.ctx != g.ctx:
        raise ContextMismatchError("octics over different fields")
    for p in (f, g):
        if not satisfies_requirements(p) or (p.a(7), p.a(6), p.a(5)) == (0, 0, 0):
            raise ShapeError(f"{p.render()} is not a normal form with (a7, a6, a5) != 0")
    if f == g:
        return LinearWitness.identity()
    if case_ii_partner(f) == g:
        return _shift(f, f.a(5))
    for w in case_iii_witnesses(f):
        if linear_sub(f, w) == g:
            return w
    return None


def find_witness_brute(f: Octic, g: Octic) -> Optional[LinearWitness]:
    """Search every (t, u); s and v are then forced by the x^8 and constant coefficients."""
    ctx = f.ctx
    if ctx != g.ctx:
        raise ContextMismatchError("octics over different fields")
    ratio = ctx.div(g.a(DEGREE), f.a(DEGREE))
    for t in range(1, ctx.q):
        s = ctx.mul(ratio, ctx.pow(t, -8))
        for u in ctx.elements():
            w = LinearWitness(s, t, u, ctx.mul(s, f.eval(u)) ^ g.a(0))
            if linear_sub(f, w) == g:
                return w
    return None


def is_linearized(f: Octic) -> bool:
    """Whether f - f(0) only has the exponents 1, 2, 4, 8."""
    return f.a(7) == f.a(6) == f.a(5) == f.a(3) == 0


def determinant(ctx: FieldCtx, matrix: Sequence[Sequence[FieldElement]]) -> FieldElement:
    """Determinant over GF(2^r) by Gaussian elimination; row swaps are free in characteristic 2."""
    rows = [list(row) for row in matrix]
    size = len(rows)
    det = 1
    for col in range(size):
        pivot = next((i for i in range(col, size) if rows[i][col]), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        det = ctx.mul(det, p)
        p_inv = ctx.inv(p)
        for i in range(col + 1, size):
            if rows[i][col]:
                factor = ctx.mul(rows[i][col], p_inv)
                rows[i] = [x ^ ctx.mul(factor, y) for x, y in zip(rows[i], rows[col])]
    return det


def dickson_matrix(f: Octic) -> List[List[FieldElement]]:
    """D[i][j] = c_{(i-j) mod r}^(2^j) with (c0, c1, c2, c3) = (a1, a2, a4, a8)."""
    ctx = f.ctx
    r = ctx.r
    c = [f.a(1), f.a(2), f.a(4), f.a(8)] + [0] * (r - 4)
    return [[ctx.frob(c[(i - j) % r], j) for j in range(r)] for i in range(r)]


def is_exceptional_deg8(f: Octic) -> bool:
    """
    Exceptionality of a degree-8 octic over GF(2^r), r > 3.

    Raises:
        ShapeError: For r <= 3
    """
    if f.ctx.r <= 3:
        raise ShapeError(f"exceptionality test needs r > 3, got r = {f.ctx.r}")
    if not is_linearized(f):
        return False
    return determinant(f.ctx, dickson_matrix(f)) != 0


def linearized_root_free(f: Octic) -> bool:
    """Whether a1*x + a2*x^2 + a4*x^4 + a8*x^8 has no root in F_q*, by enumeration."""
    ctx = f.ctx
    for x in range(1, ctx.q):
        value = 0
        for i in (1, 2, 4, 8):
            value ^= ctx.mul(f.a(i), ctx.pow(x, i))
        if value == 0:
            return False
    return True


def frobenius_reduce(f: Octic) -> OrbitRep:
    """
    Move a5 of an (a7, a6) = (0, 1) normal form into the orbit transversal.

    Args:
        f (Octic): Normalized octic with a7 = 0, a6 = 1, a5 != 0

    Returns:
        OrbitRep: Normal form g with a5 in gamma and j such that
            frobenius_lift(g, j) is linearly related to f

    Raises:
        ShapeError: On other shapes
    """
    ctx = f.ctx
    if not f.is_normalized or (f.a(7), f.a(6)) != (0, 1) or f.a(5) == 0:
        raise ShapeError("frobenius_reduce needs x^8 + x^6 + a5*x^5 + ... with a5 != 0")
    reps = gamma(ctx)
    for j in range(ctx.r):
        if ctx.frob(f.a(5), ctx.r - j) in reps:
            return OrbitRep(form=normalize(frobenius_lift(f, ctx.r - j)), j=j)
    raise ShapeError(f"a5 = {ctx.render(f.a(5))} misses every orbit representative")
