"""
Dataset Verifier
Checks the Ehrhart tuple conditions and bounds over a classification dataset
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from polygrow.core.bounds import classify_tuple
from polygrow.core.ehrhart import EhrhartTuple, ehrhart_tuple
from polygrow.core.geometry import RationalPolygon
from polygrow.core.normal_form import CanonicalKey, canonical_form, key_to_string
from polygrow.utils.errors import ContractError
from polygrow.utils.logger import Logger

HORIZONTAL_BOUND = 'b2>=max(3,2b1)'
VERTICAL_BOUND = 'i2>=b1+2i1-1'
DIAGONAL_BOUND = 'b2+i2<=2b1+6i1+7'
ZERO_INTERIOR = 'i1=0'


@dataclass
class VerificationReport:
    total: int = 0
    zero_interior: bool = False
    verdict_counts: Dict[str, int] = field(default_factory=lambda: {c: 0 for c in ('a', 'b', 'c', 'd', 'exception')})
    exceptions: List[Tuple[str, EhrhartTuple]] = field(default_factory=list)
    violations: Dict[str, List[Tuple[str, EhrhartTuple]]] = field(
        default_factory=lambda: {HORIZONTAL_BOUND: [], VERTICAL_BOUND: [], DIAGONAL_BOUND: [], ZERO_INTERIOR: []}
    )
    tuples: List[EhrhartTuple] = field(default_factory=list)

    @property
    def exception_count(self) -> int:
        return self.verdict_counts['exception']

    @property
    def unconditional_violations(self) -> int:
        """Violations of the bounds that hold for every denominator-2 polygon"""
        return len(self.violations[HORIZONTAL_BOUND]) + len(self.violations[VERTICAL_BOUND])

    def distinct_tuples(self) -> List[EhrhartTuple]:
        return sorted(set(self.tuples))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Fold another report into this one and return self"""
        self.zero_interior = self.zero_interior or other.zero_interior
        self.total += other.total
        for verdict, count in other.verdict_counts.items():
            self.verdict_counts[verdict] += count
        self.exceptions.extend(other.exceptions)
        for name, found in other.violations.items():
            self.violations[name].extend(found)
        self.tuples.extend(other.tuples)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'total': self.total,
            'zero_interior': self.zero_interior,
            'verdict_counts': dict(self.verdict_counts),
            'exceptions': [{'key': key, 'tuple': list(t)} for key, t in self.exceptions],
            'violations': {name: [{'key': key, 'tuple': list(t)} for key, t in found]
                           for name, found in self.violations.items()},
            'unconditional_violations': self.unconditional_violations,
            'distinct_tuples': [list(t) for t in self.distinct_tuples()],
        }


class DatasetVerifier:
    def __init__(self, zero_interior: bool = False):
        """Initialize the verifier; zero_interior also asserts i(P) = 0"""
        self.zero_interior = zero_interior
        self.logger = Logger()

    def check_polygon(self, polygon: RationalPolygon, key: Optional[CanonicalKey] = None) -> VerificationReport:
        """Verify one polygon into a single-member report"""
        report = VerificationReport(zero_interior=self.zero_interior)
        label = key_to_string(key if key is not None else canonical_form(polygon))
        t = ehrhart_tuple(polygon)
        verdict = classify_tuple(t)
        b1, i1, b2, i2 = t

        report.total = 1
        report.tuples.append(t)
        report.verdict_counts[verdict.condition] += 1
        if verdict.is_exception:
            report.exceptions.append((label, t))
            self.logger.log_verdict(label, verdict.condition, ", ".join(verdict.violated_inequalities))

        if b2 < max(3, 2 * b1):
            report.violations[HORIZONTAL_BOUND].append((label, t))
        if i1 > 0 and i2 < b1 + 2 * i1 - 1:
            report.violations[VERTICAL_BOUND].append((label, t))
        if i1 > 0 and b2 + i2 > 2 * b1 + 6 * i1 + 7:
            report.violations[DIAGONAL_BOUND].append((label, t))
        if self.zero_interior and i1 != 0:
            report.violations[ZERO_INTERIOR].append((label, t))
        return report

    def verify(self, polygons: Iterable[Tuple[CanonicalKey, RationalPolygon]]) -> VerificationReport:
        report = VerificationReport(zero_interior=self.zero_interior)
        for key, polygon in polygons:
            if polygon.denominator != 2:
                raise ContractError(f"verification needs denominator 2, got {polygon.denominator}")
            report.merge(self.check_polygon(polygon, key))
        report.exceptions.sort()
        self.logger.info(
            f"Verified {report.total} polygons: {report.verdict_counts}, "
            f"unconditional violations: {report.unconditional_violations}"
        )
        return report


def verify_dataset(dataset, zero_interior: bool = False) -> VerificationReport:
    """Verify every member of a ClassificationDataset"""
    if dataset.r != 2:
        raise ContractError(f"verification needs denominator 2, got {dataset.r}")
    flag = zero_interior or getattr(dataset, 'zero_interior', False)
    return DatasetVerifier(zero_interior=flag).verify((entry.key, entry.polygon) for entry in dataset.entries)
