"""Canonical counterexample fixtures and their verification reports.

Each fixture bundles a published matrix with the claims made about it.
``run_report`` recomputes every claim against the live modules (nothing is
cached) and reports expected vs computed per assertion. Assertions flagged
``claim_check`` record a quoted claim that our own computation may refute;
they are reported honestly and excluded from the overall verdict.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .additive import AdditiveMatrix, additive_is_consistent, additive_is_reciprocal, exp_map, log_map
from .errors import NotOrderable, NotPositive, StrictModeViolation, UnknownFixture
from .groups import NONZERO_COMPLEX, NONZERO_REALS, POSITIVE_REALS
from .matrix import Mode, PcMatrix
from .scalars import format_scalar
from .weights import (
    eigen_full_symmetric,
    eigen_weights,
    geometric_mean_weights,
    gm_branch_vectors,
    rank_entities,
    reconstruct,
)

FIXTURE_NAMES = ("M1", "M2", "M3", "M4_additive", "EXAM")

EXAM_WEIGHTS = (30.0, 20.0, 10.0, 40.0)

Matrix = Union[PcMatrix, AdditiveMatrix]


@dataclass(frozen=True)
class Finding:
    name: str
    expected: str
    computed: str
    passed: bool
    claim_check: bool = False
    note: Optional[str] = None


@dataclass(frozen=True)
class Fixture:
    name: str
    matrix: Matrix
    expected_findings: tuple[str, ...]


@dataclass(frozen=True)
class FindingsReport:
    fixture: str
    findings: tuple[Finding, ...]
    passed: bool  # claim-check rows do not count against this

    def to_json(self) -> dict:
        return {
            "fixture": self.fixture,
            "passed": self.passed,
            "findings": [
                {
                    "name": f.name,
                    "expected": f.expected,
                    "computed": f.computed,
                    "passed": f.passed,
                    "claim_check": f.claim_check,
                    **({"note": f.note} if f.note else {}),
                }
                for f in self.findings
            ],
        }

    def to_text(self) -> str:
        lines = [f"fixture {self.fixture}: {'PASS' if self.passed else 'FAIL'}"]
        for f in self.findings:
            verdict = "PASS" if f.passed else "FAIL"
            tag = " [claim check]" if f.claim_check else ""
            line = f"  {f.name}: expected {f.expected}; computed {f.computed}; {verdict}{tag}"
            if f.note:
                line += f" ({f.note})"
            lines.append(line)
        return "\n".join(lines)


def _fmt_vec(values) -> str:
    return "[" + ", ".join(format_scalar(complex(v)) for v in values) + "]"


def _fmt_set(values) -> str:
    ordered = sorted(values, key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    return "{" + ", ".join(format_scalar(complex(v)) for v in ordered) + "}"


def _multiset_close(computed, expected, tol: float = 1e-9) -> bool:
    if len(computed) != len(expected):
        return False
    remaining = list(expected)
    for c in computed:
        for idx, e in enumerate(remaining):
            if abs(complex(c) - complex(e)) <= tol:
                del remaining[idx]
                break
        else:
            return False
    return True


def _build_m1() -> PcMatrix:
    return PcMatrix.from_entries(
        [[1, -1, 1], [-1, 1, -1], [1, -1, 1]],
        NONZERO_REALS,
        Mode.RESEARCH,
        labels=("A", "B", "C"),
    )


def _build_m2() -> PcMatrix:
    i = 1j
    return PcMatrix.from_entries(
        [[1, i, 1], [-i, 1, -i], [1, i, 1]],
        NONZERO_COMPLEX,
        Mode.RESEARCH,
    )


def _build_m3() -> PcMatrix:
    return PcMatrix.from_entries(
        [[1, -1, -1, -1], [-1, 1, 1, 1], [-1, 1, 1, 1], [-1, 1, 1, 1]],
        NONZERO_COMPLEX,
        Mode.RESEARCH,
    )


def _build_m4() -> AdditiveMatrix:
    ip = complex(0.0, math.pi)
    return AdditiveMatrix.from_entries(
        [[0, ip, 0], [ip, 0, ip], [0, ip, 0]],
        labels=("A", "B", "C"),
        source="principal-branch log image of the 3x3 alternating-sign matrix",
    )


def _build_exam() -> PcMatrix:
    return reconstruct(EXAM_WEIGHTS, labels=("A", "B", "C", "D"))


_BUILDERS: dict[str, Callable[[], Matrix]] = {
    "M1": _build_m1,
    "M2": _build_m2,
    "M3": _build_m3,
    "M4_additive": _build_m4,
    "EXAM": _build_exam,
}


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _consistency_finding(m: PcMatrix) -> Finding:
    ok = m.is_consistent()
    return Finding("consistent", "true", _bool(ok), ok)


def _refused_rankings(vectors) -> tuple[int, int]:
    refused = 0
    for vec in vectors:
        try:
            rank_entities(vec)
        except NotOrderable:
            refused += 1
    return refused, len(vectors)


def _findings_m1(m: PcMatrix) -> list[Finding]:
    out = [_consistency_finding(m)]

    gm = geometric_mean_weights(m)
    expected = np.array([-1.0, 1.0, -1.0])
    ok = bool(np.array_equal(gm.values, expected.astype(np.complex128)))
    out.append(Finding("geometric-mean vector", "[-1, 1, -1]", _fmt_vec(gm.values), ok))

    target = (complex(-1), complex(1), complex(-1))
    count = 0
    for i, k, j in itertools.permutations(range(m.n), 3):
        if (m.entries[i, k], m.entries[i, j], m.entries[k, j]) == target:
            count += 1
    out.append(Finding("triads of form (-1, 1, -1)", "2", str(count), count == 2))

    try:
        PcMatrix.from_entries(m.entries, POSITIVE_REALS, Mode.STRICT)
        computed = "accepted"
    except StrictModeViolation:
        computed = "StrictModeViolation"
    out.append(
        Finding("strict gate rejects", "StrictModeViolation", computed,
                computed == "StrictModeViolation")
    )

    image = log_map(m)
    ok = bool(np.array_equal(image.entries, _build_m4().entries))
    out.append(
        Finding("log image equals additive fixture (exact)", "true", _bool(ok), ok)
    )
    return out


_M2_ROW1_ROOTS = (
    complex(math.sqrt(3.0) / 2.0, 0.5),
    complex(-math.sqrt(3.0) / 2.0, 0.5),
    complex(0.0, -1.0),
)
_M2_ROW2_ROOTS = (
    complex(0.5, math.sqrt(3.0) / 2.0),
    complex(-1.0, 0.0),
    complex(0.5, -math.sqrt(3.0) / 2.0),
)


def _findings_m2(m: PcMatrix) -> list[Finding]:
    out = [_consistency_finding(m)]
    branches = gm_branch_vectors(m)
    out.append(Finding("branch vector count", "27", str(branches.count), branches.count == 27))

    row1 = branches.per_row_roots[0]
    out.append(
        Finding(
            "row 1 cube roots",
            _fmt_set(_M2_ROW1_ROOTS),
            _fmt_set(row1),
            _multiset_close(row1, _M2_ROW1_ROOTS),
        )
    )
    row2 = branches.per_row_roots[1]
    out.append(
        Finding(
            "row 2 cube roots",
            _fmt_set(_M2_ROW2_ROOTS),
            _fmt_set(row2),
            _multiset_close(row2, _M2_ROW2_ROOTS),
        )
    )

    refused, total = _refused_rankings(branches.vectors)
    out.append(
        Finding("ranking refused for every branch vector", "27 of 27",
                f"{refused} of {total}", refused == total == 27)
    )

    image = log_map(m)
    reciprocal = additive_is_reciprocal(image)
    out.append(Finding("additive image reciprocal", "true", _bool(reciprocal), reciprocal))

    consistent = additive_is_consistent(image)
    out.append(
        Finding(
            "claimed: additive image inconsistent",
            "false",
            _bool(consistent),
            not consistent,
            claim_check=True,
            note=(
                "quoted claim says the additive image is inconsistent; direct "
                "evaluation of every index triple says otherwise"
                if consistent
                else None
            ),
        )
    )
    return out


_M3_ROOTS = (
    complex(math.sqrt(2.0) / 2.0, math.sqrt(2.0) / 2.0),
    complex(-math.sqrt(2.0) / 2.0, math.sqrt(2.0) / 2.0),
    complex(-math.sqrt(2.0) / 2.0, -math.sqrt(2.0) / 2.0),
    complex(math.sqrt(2.0) / 2.0, -math.sqrt(2.0) / 2.0),
)


def _findings_m3(m: PcMatrix) -> list[Finding]:
    out = [_consistency_finding(m)]

    recip_residual = float(
        np.max(np.abs(m.entries * m.entries.T - 1.0))
    )
    out.append(
        Finding("reciprocal", "true", _bool(recip_residual <= 1e-12),
                recip_residual <= 1e-12)
    )

    products = np.prod(m.entries, axis=1)
    ok = bool(np.all(products == complex(-1.0)))
    out.append(
        Finding("row products", "all -1", _fmt_vec(products), ok)
    )

    branches = gm_branch_vectors(m)
    roots_ok = all(
        _multiset_close(row, _M3_ROOTS) for row in branches.per_row_roots
    )
    out.append(
        Finding("fourth roots per row", _fmt_set(_M3_ROOTS),
                _fmt_set(branches.per_row_roots[0]), roots_ok)
    )
    out.append(
        Finding("branch vector count", "256", str(branches.count), branches.count == 256)
    )

    def all_distinct(vec) -> bool:
        return all(
            abs(a - b) > 1e-9 for a, b in itertools.combinations(vec, 2)
        )

    exists = any(all_distinct(vec) for vec in branches.vectors)
    out.append(
        Finding("some branch vector has four distinct coordinates", "true",
                _bool(exists), exists)
    )

    evals, evecs = eigen_full_symmetric(m.entries.real)
    expected = np.array([4.0, 0.0, 0.0, 0.0])
    evals_ok = bool(np.max(np.abs(evals - expected)) <= 1e-9)
    out.append(
        Finding("eigenvalues", "[4, 0, 0, 0]", _fmt_vec(evals), evals_ok)
    )

    a = m.entries.real
    residual = max(
        float(np.max(np.abs(a @ evecs[:, idx] - evals[idx] * evecs[:, idx])))
        for idx in range(m.n)
    )
    out.append(
        Finding("eigen residual max", "< 1e-09", f"{residual:.3e}", residual < 1e-9)
    )

    try:
        eigen_weights(m)
        computed = "accepted"
    except NotPositive:
        computed = "NotPositive"
    out.append(
        Finding("dominant-eigenvector method refused", "NotPositive", computed,
                computed == "NotPositive")
    )

    refused, total = _refused_rankings(branches.vectors)
    out.append(
        Finding("ranking refused for every branch vector", "256 of 256",
                f"{refused} of {total}", refused == total == 256)
    )
    return out


def _findings_m4(a: AdditiveMatrix) -> list[Finding]:
    ip = complex(0.0, math.pi)
    expected = np.array(
        [[0, ip, 0], [ip, 0, ip], [0, ip, 0]], dtype=np.complex128
    )
    out = [
        Finding(
            "entries are exactly 0 and i*pi",
            _fmt_vec(expected.flatten()),
            _fmt_vec(a.entries.flatten()),
            bool(np.array_equal(a.entries, expected)),
        )
    ]
    consistent = additive_is_consistent(a)
    out.append(Finding("additive consistency", "false", _bool(consistent), not consistent))
    reciprocal = additive_is_reciprocal(a)
    out.append(Finding("additive reciprocity", "false", _bool(reciprocal), not reciprocal))

    back = exp_map(a, NONZERO_REALS, Mode.RESEARCH)
    ok = bool(np.array_equal(back.entries, _build_m1().entries))
    out.append(
        Finding("exponential image equals multiplicative fixture (exact)", "true",
                _bool(ok), ok)
    )
    return out


def _findings_exam(m: PcMatrix) -> list[Finding]:
    out = [_consistency_finding(m)]

    report = m.kii()
    out.append(
        Finding("inconsistency indicator", "0", format_scalar(complex(report.kii)),
                report.kii <= 1e-12)
    )

    target = np.array(EXAM_WEIGHTS) / sum(EXAM_WEIGHTS)
    gm = geometric_mean_weights(m)
    gm_ok = bool(np.max(np.abs(gm.values.real - target)) <= 1e-9)
    out.append(
        Finding("geometric-mean weights", _fmt_vec(target), _fmt_vec(gm.values), gm_ok)
    )

    ev, eigenvalue = eigen_weights(m)
    ev_ok = bool(np.max(np.abs(ev.values.real - target)) <= 1e-9)
    out.append(
        Finding("eigenvector weights", _fmt_vec(target), _fmt_vec(ev.values), ev_ok)
    )
    out.append(
        Finding("dominant eigenvalue", "4", format_scalar(complex(eigenvalue)),
                abs(eigenvalue - 4.0) <= 1e-9)
    )

    dc = complex(m.entries[3, 2])
    out.append(
        Finding("entry D/C", "4", format_scalar(dc), dc == complex(4.0))
    )

    ranking = rank_entities(gm)
    order = ", ".join(label for label, _ in ranking)
    out.append(Finding("ranking", "D, A, B, C", order, order == "D, A, B, C"))
    return out


_FINDERS: dict[str, Callable] = {
    "M1": _findings_m1,
    "M2": _findings_m2,
    "M3": _findings_m3,
    "M4_additive": _findings_m4,
    "EXAM": _findings_exam,
}


_FINDING_NAMES: dict[str, tuple[str, ...]] = {
    "M1": (
        "consistent",
        "geometric-mean vector",
        "triads of form (-1, 1, -1)",
        "strict gate rejects",
        "log image equals additive fixture (exact)",
    ),
    "M2": (
        "consistent",
        "branch vector count",
        "row 1 cube roots",
        "row 2 cube roots",
        "ranking refused for every branch vector",
        "additive image reciprocal",
        "claimed: additive image inconsistent",
    ),
    "M3": (
        "consistent",
        "reciprocal",
        "row products",
        "fourth roots per row",
        "branch vector count",
        "some branch vector has four distinct coordinates",
        "eigenvalues",
        "eigen residual max",
        "dominant-eigenvector method refused",
        "ranking refused for every branch vector",
    ),
    "M4_additive": (
        "entries are exactly 0 and i*pi",
        "additive consistency",
        "additive reciprocity",
        "exponential image equals multiplicative fixture (exact)",
    ),
    "EXAM": (
        "consistent",
        "inconsistency indicator",
        "geometric-mean weights",
        "eigenvector weights",
        "dominant eigenvalue",
        "entry D/C",
        "ranking",
    ),
}


def fixture(name: str) -> Fixture:
    """Build the named fixture with its list of expected findings."""
    if name not in _BUILDERS:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    matrix = _BUILDERS[name]()
    return Fixture(name=name, matrix=matrix, expected_findings=_FINDING_NAMES[name])


def run_report(name: str) -> FindingsReport:
    """Execute every assertion of the named fixture against the live modules."""
    if name not in _BUILDERS:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    matrix = _BUILDERS[name]()
    findings = tuple(_FINDERS[name](matrix))
    passed = all(f.passed for f in findings if not f.claim_check)
    return FindingsReport(fixture=name, findings=findings, passed=passed)


def run_all_reports() -> list[FindingsReport]:
    return [run_report(name) for name in FIXTURE_NAMES]
