"""Priority-vector derivation and matrix reconstruction.

Two routes to weights exist: geometric means of rows (the default, with a
full complex branch enumeration for research material) and the dominant
eigenvector via power iteration (positive matrices only). A small Jacobi
diagonalizer covers the real symmetric counterexample analysis.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ComplexEntries,
    NoConvergence,
    NoRealRoot,
    NotOrderable,
    NotPositive,
    NotSymmetric,
    ZeroWeight,
)
from .groups import NONZERO_COMPLEX, NONZERO_REALS, POSITIVE_REALS, GroupDescriptor
from .matrix import Mode, PcMatrix
from .scalars import format_scalar, nth_roots


class Normalization(enum.Enum):
    NONE = "none"
    SUM_TO_ONE = "sum_to_one"
    MAX_TO_ONE = "max_to_one"


@dataclass(frozen=True, eq=False)
class WeightVector:
    values: np.ndarray = field(repr=False)
    normalization: Normalization = Normalization.NONE
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.complex128)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def is_real_valued(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))

    def normalized(self, normalization: Normalization) -> "WeightVector":
        if normalization is Normalization.NONE:
            return WeightVector(self.values, Normalization.NONE, self.labels)
        if not self.is_real_valued:
            raise NotOrderable("cannot normalize complex weights")
        v = self.values.real
        if normalization is Normalization.SUM_TO_ONE:
            v = v / v.sum()
        else:
            v = v / np.max(np.abs(v))
        return WeightVector(v, normalization, self.labels)


@dataclass(frozen=True)
class BranchSet:
    """Every geometric-mean vector a complex matrix admits.

    ``per_row_roots`` holds, for each row, the distinct n-th roots of that
    row's product (root index k = 0..n-1 over the principal argument,
    deduplicated). ``vectors`` is their full cross product in lexicographic
    root-index order.
    """

    per_row_roots: list[list[complex]]
    vectors: list[tuple[complex, ...]]

    @property
    def count(self) -> int:
        return len(self.vectors)


def _row_products(m: PcMatrix) -> np.ndarray:
    return np.prod(m.entries, axis=1)


def geometric_mean_weights(m: PcMatrix) -> WeightVector:
    """Real-branch geometric mean of each row.

    Positive row products take the positive n-th root; negative products
    take the real root -|p|^(1/n), which exists only for odd n. Strict
    matrices come back normalized to sum 1, research matrices unnormalized.
    """
    if not m.is_real_valued:
        raise ComplexEntries(
            "matrix has complex entries; use gm_branch_vectors for all branches"
        )
    products = _row_products(m).real
    n = m.n
    values = np.empty(n, dtype=np.complex128)
    for i, p in enumerate(products):
        if p > 0:
            values[i] = p ** (1.0 / n)
        else:
            if n % 2 == 0:
                raise NoRealRoot(
                    f"row {i} product {format_scalar(complex(p))} has no real "
                    f"{n}-th root; use gm_branch_vectors for the complex branches"
                )
            values[i] = -((-p) ** (1.0 / n))
    w = WeightVector(values, Normalization.NONE, m.labels)
    if m.mode is Mode.STRICT:
        return w.normalized(Normalization.SUM_TO_ONE)
    return w


def gm_branch_vectors(m: PcMatrix) -> BranchSet:
    """All complex geometric-mean vectors: every n-th root of every row product."""
    products = _row_products(m)
    per_row: list[list[complex]] = []
    for p in products:
        roots = nth_roots(complex(p), m.n)
        distinct: list[complex] = []
        for r in roots:
            if all(abs(r - d) > 1e-9 for d in distinct):
                distinct.append(r)
        per_row.append(distinct)
    vectors = [tuple(v) for v in itertools.product(*per_row)]
    return BranchSet(per_row_roots=per_row, vectors=vectors)


def eigen_weights(
    m: PcMatrix, tol: float = 1e-12, max_iter: int = 10_000
) -> tuple[WeightVector, float]:
    """Perron vector by power iteration from the all-ones start.

    Iterates x <- Mx normalized to sum 1 until successive iterates differ by
    less than ``tol`` in max norm; the eigenvalue is the Rayleigh quotient of
    the converged vector. Requires strictly positive real entries.
    """
    if not m.is_real_valued or bool(np.any(m.entries.real <= 0.0)):
        raise NotPositive("eigenvector method needs strictly positive real entries")
    a = m.entries.real
    x = np.full(m.n, 1.0 / m.n)
    for _ in range(max_iter):
        y = a @ x
        x_new = y / y.sum()
        if np.max(np.abs(x_new - x)) < tol:
            x = x_new
            break
        x = x_new
    else:
        raise NoConvergence(max_iter)
    eigenvalue = float(x @ (a @ x) / (x @ x))
    return (
        WeightVector(x, Normalization.SUM_TO_ONE, m.labels),
        eigenvalue,
    )


def eigen_full_symmetric(
    matrix: Sequence | np.ndarray, tol: float = 1e-12
) -> tuple[np.ndarray, np.ndarray]:
    """Jacobi rotation diagonalization of a real symmetric matrix (n <= 16).

    Returns eigenvalues sorted descending and the matching orthonormal
    eigenvectors as columns, each column signed so its first nonzero
    coordinate is positive.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > 16:
        raise ValueError("Jacobi diagonalizer is limited to n <= 16")
    if np.max(np.abs(a - a.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")

    v = np.eye(n)

    def off_norm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off * off)))

    for _ in range(100 * n * n):
        if off_norm() < tol:
            break
        # classical pivot: largest off-diagonal element
        abs_off = np.abs(a - np.diag(np.diag(a)))
        p, q = np.unravel_index(np.argmax(abs_off), abs_off.shape)
        if p > q:
            p, q = q, p
        apq = a[p, q]
        if apq == 0.0:
            break
        diff = a[q, q] - a[p, p]
        if abs(apq) < abs(diff) * 1e-36:
            t = apq / diff
        else:
            phi = diff / (2.0 * apq)
            t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
            if phi < 0.0:
                t = -t
        c = 1.0 / math.sqrt(t * t + 1.0)
        s = t * c
        rot = np.eye(n)
        rot[p, p] = rot[q, q] = c
        rot[p, q] = s
        rot[q, p] = -s
        a = rot.T @ a @ rot
        a = (a + a.T) / 2.0
        v = v @ rot
    else:
        raise NoConvergence(100 * n * n)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = v[:, order]
    for col in range(n):
        nz = np.nonzero(np.abs(vectors[:, col]) > 1e-12)[0]
        if nz.size and vectors[nz[0], col] < 0:
            vectors[:, col] = -vectors[:, col]
    return eigenvalues, vectors


def _infer_group(values: np.ndarray) -> tuple[GroupDescriptor, Mode]:
    if np.all(values.imag == 0.0):
        if np.all(values.real > 0.0):
            return POSITIVE_REALS, Mode.STRICT
        return NONZERO_REALS, Mode.RESEARCH
    return NONZERO_COMPLEX, Mode.RESEARCH


def reconstruct(
    w: WeightVector | Sequence,
    group: Optional[GroupDescriptor] = None,
    mode: Optional[Mode] = None,
    labels: Optional[Iterable[str]] = None,
) -> PcMatrix:
    """The matrix a weight vector induces: entry (i,j) = w[i] / w[j].

    Consistent and reciprocal by construction. Group and mode default to
    the smallest carrier that admits the weights.
    """
    if isinstance(w, WeightVector):
        values = np.array(w.values, dtype=np.complex128)
        labels = labels if labels is not None else w.labels
    else:
        values = np.array(list(w), dtype=np.complex128)
    if values.ndim != 1 or values.shape[0] < 2:
        raise ValueError("need at least 2 weights")
    if np.any(values == 0):
        raise ZeroWeight("weights must be nonzero to form ratios")
    inferred_group, inferred_mode = _infer_group(values)
    entries = np.outer(values, 1.0 / values)
    return PcMatrix.from_entries(
        entries,
        group if group is not None else inferred_group,
        mode if mode is not None else inferred_mode,
        labels=labels,
    )


def rank_entities(
    w: WeightVector | Sequence,
    labels: Optional[Sequence[str]] = None,
) -> list[tuple[str, float]]:
    """Entities by descending weight; ties keep label order.

    Refuses anything outside the positive reals: complex or non-positive
    weights admit no linear order.
    """
    if isinstance(w, WeightVector):
        values = w.values
        labels = list(labels) if labels is not None else (
            list(w.labels) if w.labels is not None else None
        )
    else:
        values = np.array(list(w), dtype=np.complex128)
        labels = list(labels) if labels is not None else None
    if labels is None:
        labels = [str(i + 1) for i in range(values.shape[0])]
    if len(labels) != values.shape[0]:
        raise ValueError(f"{len(labels)} labels for {values.shape[0]} weights")
    if not np.all(values.imag == 0.0):
        raise NotOrderable("complex weights admit no linear order")
    reals = values.real
    if np.any(reals <= 0.0):
        raise NotOrderable("ranking is defined for positive real weights only")
    order = sorted(range(len(labels)), key=lambda idx: (-reals[idx], idx))
    return [(labels[idx], float(reals[idx])) for idx in order]
