"""
Permutation tests for octics: the Wan-bound early exit and the brute-force oracle.
"""

from pp8.algebra.field import wan_iterations
from pp8.algebra.octic import Octic
from pp8.core.errors import ShapeError

__all__ = ['is_pp_wan', 'is_pp_brute', 'wan_iterations']


def is_pp_wan(f: Octic) -> bool:
    """
    Probe f at e^0, e^1, ... and stop at the first repeated value.

    A degree-8 polynomial taking more than q - (q-1)/8 distinct values is a
    permutation, so ``ctx.wan_iterations`` distinct values settle the question.

    Args:
        f (Octic): Polynomial over GF(2^r), r >= 4

    Returns:
        bool: Whether f permutes GF(2^r)

    Raises:
        ShapeError: If the field is too small for the bound
    """
    ctx = f.ctx
    if ctx.r < 4:
        raise ShapeError(f"the early-exit test needs q >= 16, got q = {ctx.q}")
    exp_table = ctx.exp_table
    seen = bytearray(ctx.q)
    for j in range(ctx.wan_iterations):
        value = f.eval(exp_table[j])
        if seen[value]:
            return False
        seen[value] = 1
    return True


def is_pp_brute(f: Octic) -> bool:
    """Whether x -> f(x) is a bijection, checked on every element."""
    values = [f.eval(x) for x in f.ctx.elements()]
    return len(set(values)) == f.ctx.q
