"""
Replay of the nonexistence proofs of non-exceptional degree-8 PPs over GF(2^r), r = 7, 8, 9.

Each proof is a chain of Hermite-criterion identities, factorizations,
non-PP families and finite searches. Every link becomes a ``ProofStep`` whose
check recomputes it: symbolic identities in F2[a1..a7] (compared after
exponent reduction modulo a^q = a once compound values are substituted),
family and search steps by exhaustive evaluation over the field.
"""

from functools import lru_cache
from math import gcd
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from pp8.algebra.field import make_ctx
from pp8.algebra.hermite import hc, hc_octic
from pp8.algebra.octic import Octic
from pp8.algebra.pptest import is_pp_brute
from pp8.algebra.symring import VARS, SparsePoly7, SparsePolyRing, sp_eval, sp_parse, sp_reduce_exponents
from pp8.core.errors import PP8Error, ProofStepFailed
from pp8.core.logger import logger
from pp8.models.records import ProofReport, ProofStepResult

a1, a2, a3, a4, a5, a6, a7 = VARS

Value = Union[int, SparsePoly7]
Check = Callable[[], Tuple[bool, str]]


class ProofStep(NamedTuple):
    """A named claim and the computation deciding it."""
    name: str
    kind: str
    check: Check


def _sym(value: Value) -> SparsePoly7:
    return SparsePoly7.coerce(value)


@lru_cache(maxsize=256)
def _hc_cached(r: int, k: int, values: Tuple[SparsePoly7, ...], reduce_q: Optional[int]) -> SparsePoly7:
    return hc(r, k, list(values), SparsePolyRing(reduce_q))


def _hc(r: int, k: int, *values: Value, reduce_q: Optional[int] = None) -> SparsePoly7:
    """Symbolic HC(r, k, a7, ..., a1) over F2[a1..a7]."""
    return _hc_cached(r, k, tuple(_sym(v) for v in values), reduce_q)


def _hc_label(r: int, k: int, values: Sequence[Value]) -> str:
    return f"HC({r},{k}," + ",".join(str(_sym(v)) for v in values) + ")"


def _poly(value: Union[str, SparsePoly7, Callable[[], SparsePoly7]]) -> SparsePoly7:
    if isinstance(value, str):
        return sp_parse(value)
    if isinstance(value, SparsePoly7):
        return value
    return value()


def hc_identity(r: int, k: int, values: Sequence[Value], expected: str) -> ProofStep:
    """HC(r, k, values) equals ``expected`` exactly."""
    def check() -> Tuple[bool, str]:
        computed = _hc(r, k, *values)
        return computed == sp_parse(expected), str(computed)

    return ProofStep(f"{_hc_label(r, k, values)} = {expected}", 'identity', check)


def equation(
        name: str,
        lhs: Callable[[], SparsePoly7],
        rhs: Union[str, SparsePoly7, Callable[[], SparsePoly7]],
        q: Optional[int] = None,
        kind: str = 'factorization',
) -> ProofStep:
    """
    lhs == rhs, as polynomials or, with ``q``, as functions on GF(q)^7.

    Args:
        name (str): Rendered claim
        lhs (Callable[[], SparsePoly7]): Left side, computed lazily
        rhs (Union[str, SparsePoly7, Callable[[], SparsePoly7]]): Right side, text or computed
        q (Optional[int]): Compare after reducing exponents modulo a^q = a
        kind (str): Report category
    """
    def check() -> Tuple[bool, str]:
        left = lhs()
        right = _poly(rhs)
        if q is not None:
            left, right = sp_reduce_exponents(left, q), sp_reduce_exponents(right, q)
        return left == right, str(left)

    return ProofStep(name, kind, check)


def not_pp(r: int, tail: Tuple[int, ...], text: str) -> ProofStep:
    """The octic x^8 + ... with coefficients a7..a1 ``tail`` (0/1 only) is not a PP."""
    def check() -> Tuple[bool, str]:
        f = Octic.normalized(make_ctx(r), tail)
        counts = len({f(x) for x in f.ctx.elements()})
        return not is_pp_brute(f), f"{counts} distinct values on {f.ctx.q} points"

    return ProofStep(f"{text} is not a PP over F_{1 << r}", 'family', check)


def t_family(r: int, ks: Tuple[int, int]) -> ProofStep:
    """x^8 + x^6 + t^2*x^3 + (t^4 + t^3)*x^2 + t^4*x takes t^8 + t^5 at t and t + 1, and zeroes the two HC sums."""
    def check() -> Tuple[bool, str]:
        ctx = make_ctx(r)
        for t in range(1, ctx.q):
            t2 = ctx.mul(t, t)
            t3 = ctx.mul(t2, t)
            t4 = ctx.mul(t2, t2)
            f = Octic.normalized(ctx, (0, 1, 0, 0, t2, t4 ^ t3, t4))
            value = ctx.pow(t, 8) ^ ctx.pow(t, 5)
            if f(t) != value or f(t ^ 1) != value:
                return False, f"f(t) != f(t + 1) at t = {ctx.render(t)}"
            for k in ks:
                if hc_octic(f, k):
                    return False, f"HC({r},{k}) != 0 at t = {ctx.render(t)}"
        return True, f"checked all {ctx.order} values of t"

    name = (f"f = x^8 + x^6 + t^2*x^3 + (t^4 + t^3)*x^2 + t^4*x has HC({r},{ks[0]}) = HC({r},{ks[1]}) = 0 "
                 f"and f(t + 1) = t^8 + t^5 = f(t) for t in F_{1 << r}*")
    return ProofStep(name, 'family', check)


def a5_family(r: int) -> ProofStep:
    """x^8 + x^6 + a5*x^5 + a4*x^4 + a5^3*x^3 + a2*x^2 + (a5^7 + a5^5 + a4*a5^3 + a2*a5)*x vanishes at a5."""
    def check() -> Tuple[bool, str]:
        tail = (
            a5, a4, a5 ** 3, a2, a5 ** 7 + a5 ** 5 + a4 * a5 ** 3 + a2 * a5,
        )
        symbolic = a5 ** 8 + a5 ** 6
        for c, i in zip(tail, (5, 4, 3, 2, 1)):
            symbolic = symbolic + c * a5 ** i
        if symbolic:
            return False, f"f(a5) = {symbolic}"
        # f(a5) is additive in (a4, a2): sweep each part on its own
        ctx = make_ctx(r)
        for c in range(1, ctx.q):
            c3 = ctx.pow(c, 3)
            base1 = ctx.pow(c, 7) ^ ctx.pow(c, 5)
            for b in ctx.elements():
                f4 = Octic.normalized(ctx, (0, 1, c, b, c3, 0, base1 ^ ctx.mul(b, c3)))
                f2 = Octic.normalized(ctx, (0, 1, c, 0, c3, b, base1 ^ ctx.mul(b, c)))
                if f4(c) or f2(c):
                    return False, f"f(a5) != 0 at a5 = {ctx.render(c)}, value {ctx.render(b)}"
        return True, f"f(a5) = 0 symbolically and at all {ctx.order} values of a5"

    name = ("f = x^8 + x^6 + a5*x^5 + a4*x^4 + a5^3*x^3 + a2*x^2 + (a5^7 + a5^5 + a4*a5^3 + a2*a5)*x "
                 f"has f(a5) = 0 = f(0) for a5 in F_{1 << r}*")
    return ProofStep(name, 'family', check)


def run_suite(r: int, steps: Sequence[ProofStep]) -> ProofReport:
    """
    Check every step in order.

    Args:
        r (int): Extension degree
        steps (Sequence[ProofStep]): Proof chain

    Returns:
        ProofReport: All steps passed, with the verdict

    Raises:
        ProofStepFailed: At the first failing step, carrying the partial report
    """
    report = ProofReport(r=r)
    for step in steps:
        try:
            ok, detail = step.check()
        except PP8Error as e:
            ok, detail = False, f"{type(e).__name__}: {str(e)}"
        status = 'PASS' if ok else 'FAIL'
        report.steps.append(ProofStepResult(name=step.name, kind=step.kind, status=status, detail=detail))
        if not ok:
            logger.error(f"r = {r}: FAIL {step.name}: {detail}")
            report.verdict = f"FAIL: {step.name}"
            raise ProofStepFailed(step.name, detail, report)
        logger.info(f"r = {r}: PASS {step.name}")
    report.verdict = f"no non-exceptional degree-8 PP over F_{{2^{r}}}"
    return report


# r = 7

A4_R7: SparsePoly7 = a2 ** 64 + a2 ** 32 * a5 + a5 ** 10 + a5 ** 6 + a5 ** 4
A1_R7: SparsePoly7 = a5 ** 21 + a2 * a5


def _r7_a3_zero_equation() -> SparsePoly7:
    hc27 = _hc(7, 27, 0, 1, a5, a4, 0, a2, a1, reduce_q=128)
    hc43 = _hc(7, 43, 0, 1, a5, a4, 0, a2, a1, reduce_q=128)
    return hc27 + hc43 ** 8 * a5 ** 3


def _r7_hc23_a1_solved() -> SparsePoly7:
    return _hc(7, 23, 0, 1, a5, a4, 0, a2, A1_R7, reduce_q=128)


def _r7_a4_substituted() -> SparsePoly7:
    reduced = sp_reduce_exponents(_r7_hc23_a1_solved(), 128)
    return sp_eval(reduced, [a1, a2, a3, A4_R7, a5, a6, a7], SparsePolyRing(128))


def _r7_a5_roots() -> Tuple[bool, str]:
    ctx = make_ctx(7)
    zeros = [c for c in range(1, ctx.q) if ctx.pow(c, 32) ^ ctx.pow(c, 16) ^ c == 0]
    roots = [c for c in range(1, ctx.q) if ctx.pow(c, 7) ^ c ^ 1 == 0]
    detail = "zeros " + ", ".join(ctx.render(c) for c in zeros)
    return zeros == roots and len(roots) == 7, detail


def _r7_constant_check() -> Tuple[bool, str]:
    """
    HC(7,31,0,1,e,A4,0,a2,e^21 + a2*e) reduced modulo a2^128 - a2 is e^2 + e.

    A polynomial in a2 with exponents at most 127 is fixed by its values on
    F_128, so the reduced polynomial is that constant exactly when HC takes
    the value e^2 + e at every a2.
    """
    ctx = make_ctx(7)
    roots = [c for c in range(1, ctx.q) if ctx.pow(c, 7) ^ c ^ 1 == 0]
    for eps in roots:
        constant = ctx.mul(eps, eps) ^ eps
        if constant == 0:
            return False, f"e^2 + e = 0 at e = {ctx.render(eps)}"
        tail = ctx.pow(eps, 10) ^ ctx.pow(eps, 6) ^ ctx.pow(eps, 4)
        for b in ctx.elements():
            a4_value = ctx.pow(b, 64) ^ ctx.mul(ctx.pow(b, 32), eps) ^ tail
            a1_value = ctx.pow(eps, 21) ^ ctx.mul(b, eps)
            value = hc(7, 31, (0, 1, eps, a4_value, 0, b, a1_value), ctx)
            if value != constant:
                return False, f"HC = {ctx.render(value)} at e = {ctx.render(eps)}, a2 = {ctx.render(b)}"
    return True, f"HC = e^2 + e != 0 at every a2 for each of the {len(roots)} roots e"


def _r7_case_10_solution() -> Tuple[bool, str]:
    ctx = make_ctx(7)
    for c in range(1, ctx.q):
        for b in ctx.elements():
            a4_value = ctx.mul(ctx.pow(b, 64), ctx.pow(c, 64)) ^ ctx.mul(b, ctx.pow(c, 63))
            if ctx.mul(ctx.mul(a4_value, a4_value), c) ^ ctx.mul(b, ctx.mul(c, c)) ^ ctx.mul(b, b):
                return False, f"a4 misses the equation at a3 = {ctx.render(b)}, a5 = {ctx.render(c)}"
            a1_value = ctx.pow(c, 3) ^ ctx.mul(b, c) ^ ctx.mul(ctx.mul(b, b), ctx.pow(c, 126))
            if a1_value != ctx.pow(c, 3) ^ ctx.mul(a4_value, a4_value):
                return False, f"a1 != a5^3 + a4^2 at a3 = {ctx.render(b)}, a5 = {ctx.render(c)}"
    return True, f"checked {ctx.q * ctx.order} pairs (a3, a5)"


def _r7_case_10_search() -> Tuple[bool, str]:
    ctx = make_ctx(7)
    common = []
    h23_zeros = 0
    for c in range(1, ctx.q):
        c3 = ctx.pow(c, 3)
        for b in ctx.elements():
            a4_value = ctx.mul(ctx.pow(b, 64), ctx.pow(c, 64)) ^ ctx.mul(b, ctx.pow(c, 63))
            a1_value = c3 ^ ctx.mul(b, c) ^ ctx.mul(ctx.mul(b, b), ctx.pow(c, 126))
            values = (1, 0, c, a4_value, b, ctx.pow(b, 33), a1_value)
            if hc(7, 23, values, ctx):
                continue
            h23_zeros += 1
            if hc(7, 29, values, ctx) == 0 and hc(7, 31, values, ctx) == 0:
                common.append((b, c))
    if common:
        b, c = common[0]
        return False, f"common zero a3 = {ctx.render(b)}, a5 = {ctx.render(c)} among {len(common)}"
    return True, f"no common zero; h23 vanishes at {h23_zeros} of {ctx.q * ctx.order} pairs"


def r7_steps() -> List[ProofStep]:
    q = 128
    return [
        hc_identity(7, 23, (0, 0, a5, a4, a3, a2, a1), "a5^19"),
        hc_identity(7, 29, (0, 0, 0, a4, a3, a2, a1), "a3^21"),
        # (a7, a6, a5) = (0, 1, 0)
        hc_identity(7, 43, (0, 1, 0, 0, 0, a2, a1), "a2"),
        hc_identity(7, 55, (0, 1, 0, 0, 0, 0, a1), "a1^16"),
        not_pp(7, (0, 1, 0, 0, 0, 0, 0), "x^8 + x^6"),
        hc_identity(7, 23, (0, 1, 0, 0, a3, a2, a1), "a3^5 + a2^2*a3 + a1*a3^2"),
        hc_identity(7, 27, (0, 1, 0, 0, a3, a2, a1), "a3^17 + a2^2*a3^9 + a1*a3^10 + a2^8*a3"),
        equation(
            "HC(7,23,0,1,0,0,a3,a2,a1)*a3^8 + HC(7,27,0,1,0,0,a3,a2,a1) = a3^17 + a3^13 + a2^8*a3",
            lambda: _hc(7, 23, 0, 1, 0, 0, a3, a2, a1) * a3 ** 8 + _hc(7, 27, 0, 1, 0, 0, a3, a2, a1),
            "a3^17 + a3^13 + a2^8*a3",
        ),
        equation("a3^17 + a3^13 + a2^8*a3 = a3*(a3^4 + a3^3 + a2^2)^4",
                 lambda: a3 * (a3 ** 4 + a3 ** 3 + a2 ** 2) ** 4, "a3^17 + a3^13 + a2^8*a3"),
        t_family(7, (23, 27)),
        # (a7, a6) = (0, 1), a5 != 0
        equation(
            "HC(7,23,0,1,a5,a4,a3,a2,a1)^4*a3 + HC(7,29,0,1,a5,a4,a3,a2,a1) = a3*a5^76 + a3^5*a5^64",
            lambda: _hc(7, 23, 0, 1, a5, a4, a3, a2, a1) ** 4 * a3 + _hc(7, 29, 0, 1, a5, a4, a3, a2, a1),
            "a3*a5^76 + a3^5*a5^64",
            q=q,
        ),
        equation("a3*a5^76 + a3^5*a5^64 = a3*a5^64*(a5^3 + a3)^4",
                 lambda: a3 * a5 ** 64 * (a5 ** 3 + a3) ** 4, "a3*a5^76 + a3^5*a5^64"),
        # a3 = 0
        equation(
            "HC(7,27,0,1,a5,a4,0,a2,a1) + HC(7,43,0,1,a5,a4,0,a2,a1)^8*a5^3 = a2^2*a5^27 + a5^67 + a1^2*a5^25",
            _r7_a3_zero_equation,
            "a2^2*a5^27 + a5^67 + a1^2*a5^25",
            q=q,
        ),
        equation("a2^2*a5^27 + a5^67 + a1^2*a5^25 = a5^25*(a1 + a5^21 + a2*a5)^2",
                 lambda: a5 ** 25 * (a1 + A1_R7) ** 2, "a2^2*a5^27 + a5^67 + a1^2*a5^25"),
        equation(
            f"HC(7,23,0,1,a5,a4,0,a2,{A1_R7}) = a5^43 + a5^27 + a5^19 + a2*a5^7 + a4^4*a5^3 + a2^2*a5^3",
            _r7_hc23_a1_solved,
            "a5^43 + a5^27 + a5^19 + a2*a5^7 + a4^4*a5^3 + a2^2*a5^3",
            q=q,
        ),
        equation(f"a4 = {A4_R7} is a zero of the previous polynomial",
                 _r7_a4_substituted, SparsePoly7.zero(), q=q, kind='chain'),
        equation(
            f"HC(7,27,0,1,a5,{A4_R7},0,a2,{A1_R7}) = a5^67 + a5^51 + a5^36",
            lambda: _hc(7, 27, 0, 1, a5, A4_R7, 0, a2, A1_R7, reduce_q=q),
            "a5^67 + a5^51 + a5^36",
            q=q,
        ),
        equation("a5^67 + a5^51 + a5^36 = a5^35*(a5^32 + a5^16 + a5)",
                 lambda: a5 ** 35 * (a5 ** 32 + a5 ** 16 + a5), "a5^67 + a5^51 + a5^36"),
        equation("(a5^32 + a5^16 + a5)^8 = a5^8 + a5^2 + a5",
                 lambda: (a5 ** 32 + a5 ** 16 + a5) ** 8, "a5^8 + a5^2 + a5", q=q),
        ProofStep("the zeros of a5^32 + a5^16 + a5 in F_128* are the roots of x^7 + x + 1", 'search', _r7_a5_roots),
        ProofStep(f"HC(7,31,0,1,e,{A4_R7},0,a2,{A1_R7}) with a5 = e is the nonzero constant e^2 + e "
                  "modulo a2^128 - a2 for every root e of x^7 + x + 1", 'search', _r7_constant_check),
        # a3 = a5^3
        equation(
            "HC(7,23,0,1,a5,a4,a5^3,a2,a1) = a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5",
            lambda: _hc(7, 23, 0, 1, a5, a4, a5 ** 3, a2, a1, reduce_q=q),
            "a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5",
            q=q,
        ),
        equation("a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5 = a5*(a5^7 + a5^5 + a4*a5^3 + a2*a5 + a1)^2",
                 lambda: a5 * (a5 ** 7 + a5 ** 5 + a4 * a5 ** 3 + a2 * a5 + a1) ** 2,
                 "a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5"),
        a5_family(7),
        # (a7, a6) = (1, 0)
        hc_identity(7, 19, (1, 0, a5, a4, a3, a2, a1), "a5^3 + a4^2 + a1"),
        hc_identity(7, 37, (1, 0, a5, a4, a3, a2, a1), "a3^33 + a2"),
        equation(
            "HC(7,27,1,0,a5,a4,a3,a3^33,a5^3 + a4^2) = a4^16*a5^8 + a3^8*a5^16 + a3^16",
            lambda: _hc(7, 27, 1, 0, a5, a4, a3, a3 ** 33, a5 ** 3 + a4 ** 2, reduce_q=q),
            "a4^16*a5^8 + a3^8*a5^16 + a3^16",
            q=q,
        ),
        equation("a4^16*a5^8 + a3^8*a5^16 + a3^16 = (a4^2*a5 + a3*a5^2 + a3^2)^8",
                 lambda: (a4 ** 2 * a5 + a3 * a5 ** 2 + a3 ** 2) ** 8, "a4^16*a5^8 + a3^8*a5^16 + a3^16"),
        ProofStep("a4 = a3^64*a5^64 + a3*a5^63 solves a4^2*a5 + a3*a5^2 + a3^2 = 0 "
                  "and a1 = a5^3 + a3*a5 + a3^2*a5^126 equals a5^3 + a4^2", 'chain', _r7_case_10_solution),
        ProofStep("HC(7,23), HC(7,29), HC(7,31) at (1,0,a5,a3^64*a5^64 + a3*a5^63,a3,a3^33,"
                  "a5^3 + a3*a5 + a3^2*a5^126) have no common zero in F_128 x F_128*", 'search', _r7_case_10_search),
    ]


def verify_r7() -> ProofReport:
    return run_suite(7, r7_steps())


# r = 8

def _r8_a4_forced() -> Tuple[bool, str]:
    ctx = make_ctx(8)
    for b in range(1, ctx.q):
        a5_value = ctx.pow(b, 96)
        if ctx.sqrt(ctx.pow(a5_value, 3)) != ctx.pow(b, 144):
            return False, f"sqrt(a5^3) != a2^144 at a2 = {ctx.render(b)}"
    return True, f"checked all {ctx.order} values of a2"


def _r8_a2_forced() -> Tuple[bool, str]:
    ctx = make_ctx(8)
    solutions = [b for b in range(1, ctx.q) if ctx.pow(b, 382) == 1]
    ok = gcd(382, ctx.order) == 1 and solutions == [1]
    return ok, f"gcd(382, 255) = {gcd(382, ctx.order)}, solutions {[ctx.render(b) for b in solutions]}"


def _r8_final_value() -> Tuple[bool, str]:
    ctx = make_ctx(8)
    value = hc(8, 55, (1, 0, 1, 1, 0, 1, 0), ctx)
    return value == 1, ctx.render(value)


def r8_steps() -> List[ProofStep]:
    q = 256
    return [
        hc_identity(8, 51, (0, 0, a5, a4, a3, a2, a1), "a5^51"),
        hc_identity(8, 55, (0, 0, 0, a4, a3, a2, a1), "a3^37"),
        # (a7, a6) = (0, 1)
        hc_identity(8, 43, (0, 1, a5, a4, a3, a2, a1), "a5^3 + a3"),
        hc_identity(8, 85, (0, 1, a5, a4, a3, a2, a1), "a3^85 + 1"),
        equation(
            "HC(8,47,0,1,a5,a4,a5^3,a2,a1)^4*a5^3 + HC(8,61,0,1,a5,a4,a5^3,a2,a1) "
            "= a5^191 + a5^175 + a4^8*a5^159 + a2^8*a5^143 + a1^8*a5^135",
            lambda: (_hc(8, 47, 0, 1, a5, a4, a5 ** 3, a2, a1, reduce_q=q) ** 4 * a5 ** 3
                     + _hc(8, 61, 0, 1, a5, a4, a5 ** 3, a2, a1, reduce_q=q)),
            "a5^191 + a5^175 + a4^8*a5^159 + a2^8*a5^143 + a1^8*a5^135",
            q=q,
        ),
        equation("a5^191 + a5^175 + a4^8*a5^159 + a2^8*a5^143 + a1^8*a5^135 "
                 "= a5^135*(a5^7 + a5^5 + a4*a5^3 + a2*a5 + a1)^8",
                 lambda: a5 ** 135 * (a5 ** 7 + a5 ** 5 + a4 * a5 ** 3 + a2 * a5 + a1) ** 8,
                 "a5^191 + a5^175 + a4^8*a5^159 + a2^8*a5^143 + a1^8*a5^135"),
        a5_family(8),
        # (a7, a6) = (1, 0)
        hc_identity(8, 37, (1, 0, a5, a4, a3, a2, a1), "a3"),
        hc_identity(8, 53, (1, 0, a5, a4, 0, a2, a1), "a2^4*a5^48 + a2^4*a4^32 + a1^16*a2^4"),
        equation("a2^4*a5^48 + a2^4*a4^32 + a1^16*a2^4 = a2^4*(a5^3 + a4^2 + a1)^16",
                 lambda: a2 ** 4 * (a5 ** 3 + a4 ** 2 + a1) ** 16, "a2^4*a5^48 + a2^4*a4^32 + a1^16*a2^4"),
        hc_identity(8, 43, (1, 0, a5, a4, 0, a2, a1), "a2^8*a5^3 + a2^8*a4^2 + a1*a2^8 + a1^8"),
        equation("a2^8*a5^3 + a2^8*a4^2 + a1*a2^8 + a1^8 = a2^8*(a5^3 + a4^2 + a1) + a1^8",
                 lambda: a2 ** 8 * (a5 ** 3 + a4 ** 2 + a1) + a1 ** 8, "a2^8*a5^3 + a2^8*a4^2 + a1*a2^8 + a1^8"),
        equation("HC(8,43,1,0,a5,a4,0,0,a1) = a1^8",
                 lambda: _hc(8, 43, 1, 0, a5, a4, 0, 0, a1), "a1^8", kind='chain'),
        equation("HC(8,43,1,0,a5,a4,0,a2,a5^3 + a4^2) = (a5^3 + a4^2)^8",
                 lambda: _hc(8, 43, 1, 0, a5, a4, 0, a2, a5 ** 3 + a4 ** 2, reduce_q=q),
                 lambda: (a5 ** 3 + a4 ** 2) ** 8, q=q, kind='chain'),
        hc_identity(8, 45, (1, 0, a5, a4, 0, a2, 0), "a5^32 + a2^12"),
        equation("(a5^32 + a2^12)^8 = a5 + a2^96", lambda: (a5 ** 32 + a2 ** 12) ** 8, "a5 + a2^96", q=q),
        hc_identity(8, 39, (1, 0, 0, a4, 0, 0, 0), "a4^6"),
        not_pp(8, (1, 0, 0, 0, 0, 0, 0), "x^8 + x^7"),
        ProofStep("a4^2 = a5^3 with a5 = a2^96 gives a4 = a2^144", 'chain', _r8_a4_forced),
        equation(
            "HC(8,39,1,0,a2^96,a2^144,0,a2,0) = a2^386 + a2^4",
            lambda: _hc(8, 39, 1, 0, a2 ** 96, a2 ** 144, 0, a2, 0, reduce_q=q),
            "a2^386 + a2^4",
            q=q,
        ),
        ProofStep("a2^382 = 1 forces a2 = 1 as gcd(382, 255) = 1", 'chain', _r8_a2_forced),
        ProofStep("HC(8,55,1,0,1,1,0,1,0) = 1 in F_256", 'chain', _r8_final_value),
    ]


def verify_r8() -> ProofReport:
    return run_suite(8, r8_steps())


# r = 9

def r9_steps() -> List[ProofStep]:
    q = 512
    return [
        hc_identity(9, 73, (a7, a6, a5, a4, a3, a2, a1), "a7^73"),
        hc_identity(9, 117, (0, 0, 0, a4, a3, a2, a1), "a3^85"),
        # a7 = a6 = 0 != a5
        hc_identity(9, 93, (0, 0, 1, 0, a3, a2, a1), "a3"),
        hc_identity(9, 103, (0, 0, 1, 0, 0, a2, a1), "a1"),
        hc_identity(9, 107, (0, 0, 1, 0, 0, a2, 0), "a2^8"),
        not_pp(9, (0, 0, 1, 0, 0, 0, 0), "x^8 + x^5"),
        # (a7, a6, a5) = (0, 1, 0)
        hc_identity(9, 171, (0, 1, 0, 0, 0, a2, a1), "a2"),
        hc_identity(9, 183, (0, 1, 0, 0, 0, 0, a1), "a1^16"),
        not_pp(9, (0, 1, 0, 0, 0, 0, 0), "x^8 + x^6"),
        hc_identity(9, 87, (0, 1, 0, 0, a3, a2, a1), "a3^5 + a2^2*a3 + a1*a3^2"),
        hc_identity(9, 91, (0, 1, 0, 0, a3, a2, a1), "a3^17 + a2^2*a3^9 + a1*a3^10 + a2^8*a3"),
        equation(
            "HC(9,87,0,1,0,0,a3,a2,a1)*a3^8 + HC(9,91,0,1,0,0,a3,a2,a1) = a3^17 + a3^13 + a2^8*a3",
            lambda: _hc(9, 87, 0, 1, 0, 0, a3, a2, a1) * a3 ** 8 + _hc(9, 91, 0, 1, 0, 0, a3, a2, a1),
            "a3^17 + a3^13 + a2^8*a3",
        ),
        equation("a3^17 + a3^13 + a2^8*a3 = a3*(a3^4 + a3^3 + a2^2)^4",
                 lambda: a3 * (a3 ** 4 + a3 ** 3 + a2 ** 2) ** 4, "a3^17 + a3^13 + a2^8*a3"),
        t_family(9, (87, 91)),
        # (a7, a6) = (0, 1), a5 != 0
        equation(
            "HC(9,87,0,1,a5,a4,a3,a2,a1)*(a5^96 + a3^32) + HC(9,103,0,1,a5,a4,a3,a2,a1) "
            "= a5^115 + a3*a5^112 + a3^32*a5^19 + a3^33*a5^16",
            lambda: (_hc(9, 87, 0, 1, a5, a4, a3, a2, a1) * (a5 ** 96 + a3 ** 32)
                     + _hc(9, 103, 0, 1, a5, a4, a3, a2, a1)),
            "a5^115 + a3*a5^112 + a3^32*a5^19 + a3^33*a5^16",
            q=q,
        ),
        equation("a5^115 + a3*a5^112 + a3^32*a5^19 + a3^33*a5^16 = a5^16*(a5^3 + a3)^33",
                 lambda: a5 ** 16 * (a5 ** 3 + a3) ** 33, "a5^115 + a3*a5^112 + a3^32*a5^19 + a3^33*a5^16"),
        equation(
            "HC(9,87,0,1,a5,a4,a5^3,a2,a1) = a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5",
            lambda: _hc(9, 87, 0, 1, a5, a4, a5 ** 3, a2, a1, reduce_q=q),
            "a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5",
            q=q,
        ),
        equation("a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5 = a5*(a5^7 + a5^5 + a4*a5^3 + a2*a5 + a1)^2",
                 lambda: a5 * (a5 ** 7 + a5 ** 5 + a4 * a5 ** 3 + a2 * a5 + a1) ** 2,
                 "a5^15 + a5^11 + a4^2*a5^7 + a2^2*a5^3 + a1^2*a5"),
        a5_family(9),
    ]


def verify_r9() -> ProofReport:
    return run_suite(9, r9_steps())


VERIFIERS: Dict[int, Callable[[], ProofReport]] = {7: verify_r7, 8: verify_r8, 9: verify_r9}
STEPS: Dict[int, Callable[[], List[ProofStep]]] = {7: r7_steps, 8: r8_steps, 9: r9_steps}


def verify(r: int) -> ProofReport:
    """
    Replay the proof for r = 7, 8 or 9.

    Raises:
        KeyError: For other r
        ProofStepFailed: At the first failing step
    """
    return VERIFIERS[r]()
