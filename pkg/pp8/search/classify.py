"""
Classification of non-exceptional degree-8 permutation polynomials over GF(2^r).

For r = 4, 5, 6 every linear-equivalence class has a normal form meeting
(R1)-(R3), and the Hermite criterion cuts the coefficient space of those
normal forms down to a few small branches. Each branch is a module-level
function of (r, outer value) searched with the early-exit permutation test;
the pruning constraints it relies on are re-derived symbolically before any
search starts. For r = 7, 8, 9 the dispatcher replays the nonexistence
proofs instead.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pp8.algebra.equiv import (
    case_ii_partner,
    case_iii_witnesses,
    gamma,
    is_exceptional_deg8,
    lambda_set,
    linearly_related,
    omega,
)
from pp8.algebra.field import FieldCtx, FieldElement, make_ctx, nonexceptional_bound
from pp8.algebra.hermite import hc
from pp8.algebra.octic import DEGREE, LogTuple, Octic, linear_sub
from pp8.algebra.symring import VARS, SparsePoly7, SparsePolyRing, sp_parse
from pp8.core.config import get_settings
from pp8.core.errors import ConstraintMismatchError, FieldRangeError
from pp8.core.logger import logger
from pp8.models.records import ClassificationResult, ClassRecord
from pp8.search.proofs import VERIFIERS
from pp8.search.workers import Hit, run_partitioned

MIN_R: int = 4

# Symbolic slot: the variable a_i itself
SYM = None

ConstraintValues = Tuple[Optional[int], ...]

# (k, (a7, ..., a1) with SYM for a free variable, expected HC)
CONSTRAINTS: Dict[int, Tuple[Tuple[int, ConstraintValues, str], ...]] = {
    4: (
        (3, (SYM,) * 7, "a5^3 + a3*a6^2 + a4^2*a7 + a1*a7^2"),
        (5, (SYM,) * 7, "a3^5 + a6^5 + a2^4*a7 + a2*a7^4"),
        (3, (1, 0, SYM, SYM, SYM, SYM, SYM), "a5^3 + a4^2 + a1"),
        (5, (1, 0, SYM, SYM, SYM, SYM, SYM), "a3^5 + a2^4 + a2"),
        (3, (0, 1, SYM, SYM, SYM, SYM, SYM), "a5^3 + a3"),
        (5, (0, 1, SYM, SYM, SYM, SYM, SYM), "a3^5 + 1"),
        (3, (0, 0, SYM, SYM, SYM, SYM, SYM), "a5^3"),
        (5, (0, 0, SYM, SYM, SYM, SYM, SYM), "a3^5"),
    ),
    5: (
        (5, (1, 0, SYM, SYM, SYM, SYM, SYM), "a3"),
        (7, (0, 0, 1, 0, SYM, SYM, SYM), "a3^5 + a3^2 + a1"),
        (7, (0, 0, 0, SYM, SYM, SYM, SYM), "a3^5"),
    ),
    6: (
        (9, (SYM,) * 7, "a7^9"),
        (11, (0, SYM, SYM, SYM, SYM, SYM, SYM), "a5^3*a6^8 + a3*a6^10"),
        (21, (0, SYM, SYM, SYM, SYM, SYM, SYM), "a3^21 + a6^21"),
    ),
}


def _symbolic(values: ConstraintValues) -> List[SparsePoly7]:
    return [
        VARS[6 - pos] if value is SYM else SparsePoly7.coerce(value)
        for pos, value in enumerate(values)
    ]


def check_constraints(r: int) -> None:
    """
    Re-derive the HC identities the r-branches prune with.

    Raises:
        ConstraintMismatchError: If a computed HC differs from the constraint
    """
    ring = SparsePolyRing()
    for k, values, expected in CONSTRAINTS.get(r, ()):
        computed = hc(r, k, _symbolic(values), ring)
        label = ",".join("a" + str(7 - pos) if v is SYM else str(v) for pos, v in enumerate(values))
        if computed != sp_parse(expected):
            raise ConstraintMismatchError(f"HC({r},{k},{label}) = {computed}, expected {expected}")
        logger.debug(f"Constraint HC({r},{k},{label}) = {expected} re-derived")


class CandidateScanner:
    """
    Early-exit permutation test over a fixed head x^8 + a7*x^7 + ... + a3*x^3.

    The probe points are e^0, ..., e^(w-1) with w the Wan threshold. ``base``
    evaluates the head at every probe point; ``scan`` then runs through
    (a2, a1) pairs with multiplication-table rows and a stamped mark array.

    Attributes:
        ctx (FieldCtx): Field context
        powers (List[Tuple[int, ...]]): powers[i][j] = (e^j)^i for 0 <= i <= 8
    """

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx: FieldCtx = ctx
        points = ctx.exp_table[:ctx.wan_iterations]
        self.powers: List[Tuple[int, ...]] = [tuple(ctx.pow(x, i) for x in points) for i in range(DEGREE + 1)]
        self._table: List[List[FieldElement]] = ctx.mul_table
        self._marks: List[int] = [0] * ctx.q
        self._stamp: int = 0

    def base(self, a7: int, a6: int, a5: int, a4: int, a3: int) -> List[FieldElement]:
        values = list(self.powers[DEGREE])
        for i, a in zip((7, 6, 5, 4, 3), (a7, a6, a5, a4, a3)):
            if a:
                row = self._table[a]
                values = [v ^ row[p] for v, p in zip(values, self.powers[i])]
        return values

    def scan(
            self,
            base: Sequence[FieldElement],
            a2_values: Sequence[FieldElement],
            a1_values: Sequence[FieldElement],
    ) -> List[Tuple[FieldElement, FieldElement]]:
        """
        Pairs (a2, a1) completing ``base`` to a permutation polynomial.

        Args:
            base (Sequence[FieldElement]): Head values at the probe points
            a2_values (Sequence[FieldElement]): Candidates for a2
            a1_values (Sequence[FieldElement]): Candidates for a1

        Returns:
            List[Tuple[FieldElement, FieldElement]]: Surviving pairs
        """
        table = self._table
        x1 = self.powers[1]
        x2 = self.powers[2]
        marks = self._marks
        found = []
        for a2 in a2_values:
            row2 = table[a2]
            partial = [b ^ row2[p] for b, p in zip(base, x2)]
            for a1 in a1_values:
                row1 = table[a1]
                self._stamp += 1
                stamp = self._stamp
                for v, p in zip(partial, x1):
                    w = v ^ row1[p]
                    if marks[w] == stamp:
                        break
                    marks[w] = stamp
                else:
                    found.append((a2, a1))
        return found


@lru_cache(maxsize=None)
def scanner_for(r: int) -> CandidateScanner:
    return CandidateScanner(make_ctx(r))


@lru_cache(maxsize=None)
def _artin_schreier_roots(r: int) -> Dict[FieldElement, Tuple[FieldElement, ...]]:
    """value -> all a2 with a2^4 + a2 = value."""
    ctx = make_ctx(r)
    roots = {}
    for a2 in ctx.elements():
        roots.setdefault(ctx.pow(a2, 4) ^ a2, []).append(a2)
    return {value: tuple(found) for value, found in roots.items()}


def _a4_options(ctx: FieldCtx, a5: FieldElement) -> Tuple[FieldElement, ...]:
    return (0, omega(ctx, a5)) if a5 else (0,)


def _full_tail(
        scanner: CandidateScanner,
        head: Tuple[int, int, int, int, int],
        a2_values: Sequence[FieldElement],
        a1_values: Sequence[FieldElement],
) -> List[Hit]:
    base = scanner.base(*head)
    return [head + pair for pair in scanner.scan(base, a2_values, a1_values)]


# r = 4

def _r4_case_10(r: int, a5: FieldElement) -> List[Hit]:
    """(a7, a6) = (1, 0): a1 = a5^3 + a4^2 and a2^4 + a2 = a3^5."""
    ctx = make_ctx(r)
    scanner = scanner_for(r)
    roots = _artin_schreier_roots(r)
    cube = ctx.pow(a5, 3)
    hits = []
    for a4 in ctx.elements():
        a1 = cube ^ ctx.mul(a4, a4)
        for a3 in ctx.elements():
            a2_values = roots.get(ctx.pow(a3, 5), ())
            if a2_values:
                hits.extend(_full_tail(scanner, (1, 0, a5, a4, a3), a2_values, (a1,)))
    return hits


def _cube_case_01(r: int, a5: FieldElement) -> List[Hit]:
    """(a7, a6) = (0, 1): a3 = a5^3 != 0, the r = 4 and r = 6 branch."""
    ctx = make_ctx(r)
    scanner = scanner_for(r)
    everything = ctx.elements()
    hits = []
    for a4 in _a4_options(ctx, a5):
        hits.extend(_full_tail(scanner, (0, 1, a5, a4, ctx.pow(a5, 3)), everything, everything))
    return hits


# r = 5

def _r5_case_00(r: int, a3: FieldElement) -> List[Hit]:
    """a7 = a6 = 0 != a5: (a5, a4) = (1, 0) and a1 = a3^5 + a3^2."""
    ctx = make_ctx(r)
    a1 = ctx.pow(a3, 5) ^ ctx.pow(a3, 2)
    return _full_tail(scanner_for(r), (0, 0, 1, 0, a3), ctx.elements(), (a1,))


def _r5_case_10(r: int, a5: FieldElement) -> List[Hit]:
    """(a7, a6) = (1, 0): a3 = 0."""
    ctx = make_ctx(r)
    scanner = scanner_for(r)
    everything = ctx.elements()
    hits = []
    for a4 in everything:
        hits.extend(_full_tail(scanner, (1, 0, a5, a4, 0), everything, everything))
    return hits


def _r5_case_01(r: int, a5: FieldElement) -> List[Hit]:
    """(a7, a6) = (0, 1) with a4 in {0, omega(a5)}."""
    ctx = make_ctx(r)
    scanner = scanner_for(r)
    everything = ctx.elements()
    hits = []
    for a4 in _a4_options(ctx, a5):
        for a3 in everything:
            hits.extend(_full_tail(scanner, (0, 1, a5, a4, a3), everything, everything))
    return hits


# r = 6

def _r6_case_00(r: int, a5: FieldElement) -> List[Hit]:
    """a7 = a6 = 0: a3 = 0, a4 = 0 and a5 in Lambda."""
    ctx = make_ctx(r)
    everything = ctx.elements()
    return _full_tail(scanner_for(r), (0, 0, a5, 0, 0), everything, everything)


# every (R1)-(R3) shape, for the completeness cross-check

def _any_shape(r: int, a5: FieldElement) -> List[Hit]:
    ctx = make_ctx(r)
    scanner = scanner_for(r)
    everything = ctx.elements()
    hits = []
    for a4 in everything:
        for a3 in everything:
            hits.extend(_full_tail(scanner, (1, 0, a5, a4, a3), everything, everything))
    for a4 in _a4_options(ctx, a5):
        for a3 in everything:
            hits.extend(_full_tail(scanner, (0, 1, a5, a4, a3), everything, everything))
    if a5 == 0 or a5 in lambda_set(ctx):
        for a4 in (everything if a5 == 0 else (0,)):
            for a3 in everything:
                hits.extend(_full_tail(scanner, (0, 0, a5, a4, a3), everything, everything))
    return hits


def _all(ctx: FieldCtx) -> Sequence[FieldElement]:
    return list(ctx.elements())


def _nonzero(ctx: FieldCtx) -> Sequence[FieldElement]:
    return list(range(1, ctx.q))


def _lambda(ctx: FieldCtx) -> Sequence[FieldElement]:
    return list(lambda_set(ctx))


Branch = Tuple[Callable[[int, int], List[Hit]], Callable[[FieldCtx], Sequence[FieldElement]]]

BRANCHES: Dict[int, Tuple[Branch, ...]] = {
    4: ((_r4_case_10, _all), (_cube_case_01, _nonzero)),
    5: ((_r5_case_00, _all), (_r5_case_10, _all), (_r5_case_01, _all)),
    6: ((_r6_case_00, _lambda), (_cube_case_01, _nonzero)),
}


def _resolve_threads(threads: Optional[int]) -> int:
    return threads if threads is not None else get_settings().threads


def _run_branches(r: int, branches: Sequence[Branch], threads: int) -> List[Octic]:
    ctx = make_ctx(r)
    hits = set()
    for fn, outer in branches:
        values = outer(ctx)
        logger.info(f"r = {r}: searching {fn.__name__} over {len(values)} outer values")
        found = run_partitioned(fn, r, values, threads)
        logger.info(f"r = {r}: {fn.__name__} passed {len(found)} candidates")
        hits.update(found)
    octics = [Octic.normalized(ctx, hit) for hit in hits]
    return [f for f in octics if not is_exceptional_deg8(f)]


def _order_key(f: Octic) -> LogTuple:
    logs = f.to_log_tuple()
    return logs[2:] + logs[:2]  # type: ignore[return-value]


def _records(ctx: FieldCtx, octics: Sequence[Octic]) -> List[ClassRecord]:
    listed = {f.to_log_tuple() for f in octics}
    reps = set(gamma(ctx))
    records = []
    for f in sorted(octics, key=_order_key):
        link = None
        partner = case_ii_partner(f)
        if partner is not None:
            link = partner.to_log_tuple()
            if link not in listed:
                logger.warning(f"r = {ctx.r}: partner {link} of {f.to_log_tuple()} is missing from the output")
                link = None
        in_orbit_shape = (f.a(7), f.a(6)) == (0, 1) and f.a(5) != 0
        records.append(ClassRecord(
            r=ctx.r,
            coeffs=f.to_log_tuple(),
            frobenius_rep=f.a(5) in reps if in_orbit_shape else True,
            pair_link=link,
        ))
    return records


def classify_small(r: int, threads: Optional[int] = None) -> List[ClassRecord]:
    """
    Search every normal form of a non-exceptional degree-8 PP over GF(2^r).

    Args:
        r (int): 4, 5 or 6
        threads (Optional[int]): Worker processes; settings default when None

    Returns:
        List[ClassRecord]: All normal forms found, ordered by (a5, a4, a3, a2, a1) logs

    Raises:
        FieldRangeError: For r without a search
        ConstraintMismatchError: If a pruning constraint fails re-derivation
    """
    if r not in BRANCHES:
        raise FieldRangeError(f"no classification search for r = {r}")
    check_constraints(r)
    ctx = make_ctx(r)
    octics = _run_branches(r, BRANCHES[r], _resolve_threads(threads))
    records = _records(ctx, octics)
    logger.info(f"r = {r}: {len(records)} normal forms in {count_classes(records)} classes")
    return records


def classify_r4(threads: Optional[int] = None) -> List[ClassRecord]:
    return classify_small(4, threads)


def classify_r5(threads: Optional[int] = None) -> List[ClassRecord]:
    return classify_small(5, threads)


def classify_r6(threads: Optional[int] = None) -> List[ClassRecord]:
    return classify_small(6, threads)


def frobenius_filter(records: Sequence[ClassRecord]) -> List[ClassRecord]:
    """Records whose a5 lies in the orbit transversal."""
    return [record for record in records if record.frobenius_rep]


def _class_count(octics: Sequence[Octic]) -> int:
    """Number of classes among normal forms, joining the pairs linearly_related confirms."""
    index = {f.tail: i for i, f in enumerate(octics)}
    parent = list(range(len(octics)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, f in enumerate(octics):
        if (f.a(7), f.a(6), f.a(5)) == (0, 0, 0):
            logger.warning(f"{f.render()} has a7 = a6 = a5 = 0; counted as its own class")
            continue
        images = [case_ii_partner(f)]
        images.extend(linear_sub(f, w) for w in case_iii_witnesses(f))
        for g in images:
            j = None if g is None else index.get(g.tail)
            if j is None or linearly_related(f, octics[j]) is None:
                continue
            parent[find(i)] = find(j)
    return sum(1 for i in range(len(octics)) if find(i) == i)


def count_classes(records: Sequence[ClassRecord]) -> int:
    """Linear-equivalence classes among classification records of one field."""
    if not records:
        return 0
    ctx = make_ctx(records[0].r)
    return _class_count([Octic.from_log_tuple(ctx, record.coeffs) for record in records])


def complete_r4_crosscheck(threads: Optional[int] = None) -> int:
    """
    Count the classes over GF(16) from every (R1)-(R3) shape, without HC pruning.

    Args:
        threads (Optional[int]): Worker processes; settings default when None

    Returns:
        int: Number of linear-equivalence classes of non-exceptional PPs
    """
    r = 4
    octics = _run_branches(r, ((_any_shape, _all),), _resolve_threads(threads))
    count = _class_count(octics)
    logger.info(f"r = {r}: unpruned enumeration found {len(octics)} normal forms in {count} classes")
    return count


def validate_r(r: int) -> None:
    """
    Check 4 <= r and 2^r <= C_8, the range where non-exceptional octic PPs may exist.

    Raises:
        FieldRangeError: Outside that range
    """
    bound = nonexceptional_bound(DEGREE)
    if r < MIN_R or (1 << r) > bound:
        raise FieldRangeError(f"classification needs {MIN_R} <= r and 2^r <= {bound}, got r = {r}")


def classify(
        r: int,
        threads: Optional[int] = None,
        frobenius_reduce: bool = False,
) -> ClassificationResult:
    """
    Classify degree-8 non-exceptional PPs over GF(2^r), or replay their nonexistence proof.

    Args:
        r (int): Extension degree, 4..9
        threads (Optional[int]): Worker processes for the searches
        frobenius_reduce (bool): Keep only records with a5 in the orbit transversal

    Returns:
        ClassificationResult: Records for r <= 6, proof steps for r >= 7

    Raises:
        FieldRangeError: If r is outside 4..9
        ProofStepFailed: If a proof step does not hold
    """
    validate_r(r)
    ctx = make_ctx(r)
    result = ClassificationResult(
        r=r,
        modulus=f"{ctx.modulus:#x}",
        frobenius_reduced=frobenius_reduce,
    )
    if r in BRANCHES:
        records = classify_small(r, threads)
        result.classes = frobenius_filter(records) if frobenius_reduce else records
    else:
        result.proof_steps = VERIFIERS[r]().steps
    return result


def render_record(record: ClassRecord, basis: bool = False) -> str:
    """``(0, 1, 1, 0, 3, 5, 1) | x^8 + x^6 + e*x^5 + ...`` for text output."""
    ctx = make_ctx(record.r)
    f = Octic.from_log_tuple(ctx, record.coeffs)
    return f"{record.coeffs} | {f.render(basis)}"


def render_records(records: Sequence[ClassRecord], basis: bool = False) -> str:
    return "\n".join(render_record(record, basis) for record in records)


__all__: List[str] = [
    'CandidateScanner',
    'check_constraints',
    'classify',
    'classify_r4',
    'classify_r5',
    'classify_r6',
    'classify_small',
    'complete_r4_crosscheck',
    'count_classes',
    'frobenius_filter',
    'render_record',
    'render_records',
    'scanner_for',
    'validate_r',
]
