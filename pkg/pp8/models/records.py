"""
Result records of the degree-8 permutation polynomial classifier.

This module defines the pydantic models returned by the search drivers and
printed or persisted by the command line: class representatives, proof-replay
steps and reports, and the combined classification result.
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

LogTuple = Tuple[int, int, int, int, int, int, int]


class ClassRecord(BaseModel):
    """
    One representative of a linear-equivalence class of non-exceptional PPs.

    Attributes:
        r (int): Extension degree of the field
        coeffs (LogTuple): (a7, ..., a1) in log form, 0 for zero and i for e^i, 1 <= i <= q-1
        frobenius_rep (bool): a5 is the orbit representative (always true outside the a6 = 1 shape)
        pair_link (Optional[LogTuple]): Log tuple of the partner f(x + a5) - f(a5), when listed
    """
    r: int
    coeffs: LogTuple
    frobenius_rep: bool = False
    pair_link: Optional[LogTuple] = None


class ProofStepResult(BaseModel):
    """
    Outcome of one proof-replay step.

    Attributes:
        name (str): The identity or claim checked
        kind (str): identity, factorization, family, search or chain
        status (str): PASS or FAIL
        detail (str): Computed value or counter-evidence
    """
    name: str
    kind: Literal['identity', 'factorization', 'family', 'search', 'chain']
    status: Literal['PASS', 'FAIL']
    detail: str = ''


class ProofReport(BaseModel):
    """
    Proof replay of the nonexistence of non-exceptional degree-8 PPs over one field.

    Attributes:
        r (int): Extension degree
        steps (List[ProofStepResult]): Steps in replay order
        verdict (str): Conclusion, or the failing step
    """
    r: int
    steps: List[ProofStepResult] = Field(default_factory=list)
    verdict: str = ''

    @property
    def passed(self) -> bool:
        return bool(self.steps) and all(step.status == 'PASS' for step in self.steps)


class ClassificationResult(BaseModel):
    """
    Everything ``classify`` reports for one field.

    Attributes:
        r (int): Extension degree
        modulus (str): Defining polynomial as hex bits
        classes (List[ClassRecord]): Representatives, empty for r >= 7
        proof_steps (List[ProofStepResult]): Proof replay, empty for r <= 6
        frobenius_reduced (bool): Whether classes were filtered to orbit representatives
    """
    r: int
    modulus: str
    classes: List[ClassRecord] = Field(default_factory=list)
    proof_steps: List[ProofStepResult] = Field(default_factory=list)
    frobenius_reduced: bool = False
