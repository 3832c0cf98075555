"""
Shared fixtures and published reference tuples for the test suite.

Reference tuples are (a7, ..., a1) in log form: 0 is the zero element and
i in 1..q-1 stands for e^i, so the unit is q - 1.
"""

from typing import List, Tuple

import pytest

from pp8.algebra.field import FieldCtx, make_ctx

LogTuple = Tuple[int, int, int, int, int, int, int]


def _r4(a5: int, a4: int, a3: int, a2: int, a1: int) -> LogTuple:
    return (0, 15, a5, a4, a3, a2, a1)


# x^8 + x^6 + a5*x^5 + ... over GF(16) with a5 in {e, e^3, e^5, e^7, 1}
R4_THEOREM: List[LogTuple] = [
    _r4(1, 0, 3, 5, 1), _r4(1, 0, 3, 9, 10), _r4(1, 1, 3, 8, 11), _r4(1, 1, 3, 9, 12),
    _r4(1, 1, 3, 11, 4), _r4(1, 1, 3, 12, 9), _r4(1, 1, 3, 13, 4), _r4(3, 0, 9, 5, 15),
    _r4(3, 0, 9, 8, 8), _r4(3, 2, 9, 0, 12), _r4(3, 2, 9, 7, 12), _r4(3, 2, 9, 15, 11),
    _r4(5, 0, 15, 3, 15), _r4(5, 0, 15, 10, 1), _r4(5, 0, 15, 10, 4), _r4(5, 0, 15, 12, 15),
    _r4(5, 1, 15, 0, 13), _r4(5, 1, 15, 0, 14), _r4(5, 1, 15, 5, 3), _r4(5, 1, 15, 5, 13),
    _r4(5, 1, 15, 7, 7), _r4(5, 1, 15, 9, 6), _r4(5, 1, 15, 9, 7), _r4(7, 0, 6, 1, 7),
    _r4(7, 0, 6, 2, 5), _r4(7, 0, 6, 9, 7), _r4(7, 0, 6, 9, 14), _r4(7, 0, 6, 11, 6),
    _r4(7, 0, 6, 12, 2), _r4(7, 2, 6, 1, 9), _r4(7, 2, 6, 5, 1), _r4(7, 2, 6, 12, 10),
    _r4(15, 0, 15, 1, 15), _r4(15, 3, 15, 1, 13), _r4(15, 3, 15, 2, 13),
]

# outputs with a5 in the orbit transversal that are Frobenius images of listed ones
R4_FROBENIUS_EXTRA: List[LogTuple] = [
    _r4(15, 0, 15, 2, 15), _r4(15, 0, 15, 4, 15), _r4(15, 0, 15, 8, 15), _r4(15, 3, 15, 4, 13),
]

R5_THEOREM: List[LogTuple] = [
    (0, 31, 1, 0, 26, 25, 0),
    (0, 31, 11, 1, 29, 0, 27),
]

R6_THEOREM: List[LogTuple] = [
    (0, 0, 1, 0, 0, 2, 0),
    (0, 0, 2, 0, 0, 4, 0),
    (0, 63, 63, 3, 63, 14, 6),
]


@pytest.fixture
def gf16() -> FieldCtx:
    return make_ctx(4)


@pytest.fixture
def gf32() -> FieldCtx:
    return make_ctx(5)


@pytest.fixture
def gf64() -> FieldCtx:
    return make_ctx(6)
