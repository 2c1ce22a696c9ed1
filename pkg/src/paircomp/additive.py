"""Logarithmic mapping between multiplicative and additive matrices.

Over positive reals the map is a clean isomorphism: products become sums,
reciprocals become negations, and both consistency and reciprocity carry
over exactly. Off the positive reals the principal branch cuts in, and an
additive image can lose reciprocity or consistency; these functions check
rather than assume, and record provenance so a report can say where a
verdict came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ZeroEntry
from .groups import GroupDescriptor
from .matrix import Mode, PcMatrix
from .scalars import principal_log

#: Additive checks compare against 0, so tolerances are absolute.
ADDITIVE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class AdditiveMatrix:
    """Square matrix of additive comparisons with zero diagonal.

    Unlike PcMatrix, additive reciprocity (a[j,i] = -a[i,j]) is a property
    to test, not a construction invariant: principal-branch logarithms of
    valid multiplicative matrices can break it.
    """

    n: int
    entries: np.ndarray = field(repr=False)
    labels: Optional[tuple[str, ...]] = None
    source: Optional[str] = None

    @classmethod
    def from_entries(
        cls,
        entries: Sequence | np.ndarray,
        labels: Optional[Iterable[str]] = None,
        source: Optional[str] = None,
        tol: float = ADDITIVE_TOL,
    ) -> "AdditiveMatrix":
        arr = np.array(entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"entries must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("entries must be finite")
        diag = np.abs(np.diag(arr))
        if np.any(diag > tol):
            bad = int(np.argmax(diag))
            raise ValueError(f"diagonal entry ({bad},{bad}) = {arr[bad, bad]} is not 0")
        np.fill_diagonal(arr, 0.0)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} entities")
        arr.setflags(write=False)
        return cls(n=n, entries=arr, labels=labels, source=source)

    def allclose(self, other: "AdditiveMatrix", tol: float = 1e-12) -> bool:
        return self.n == other.n and bool(
            np.all(np.abs(self.entries - other.entries) <= tol)
        )


def log_map(m: PcMatrix) -> AdditiveMatrix:
    """Entrywise principal-branch logarithm; the diagonal is forced to 0.

    Arg lands in (-pi, pi], so log(-1) = i*pi. The source field records the
    input carrier and the branch choice.
    """
    if bool(np.any(m.entries == 0)):
        raise ZeroEntry("cannot take the logarithm of a zero entry")
    out = np.empty_like(m.entries)
    for i in range(m.n):
        for j in range(m.n):
            out[i, j] = 0.0 if i == j else principal_log(complex(m.entries[i, j]))
    return AdditiveMatrix.from_entries(
        out,
        labels=m.labels,
        source=f"log of {m.group.name} matrix ({m.mode.value} mode), principal branch",
    )


def exp_map(
    a: AdditiveMatrix,
    group: GroupDescriptor,
    mode: Mode = Mode.STRICT,
) -> PcMatrix:
    """Entrywise exponential, validated as a PcMatrix over ``group``.

    Validation failures propagate; an additive matrix that exponentiates to
    something non-reciprocal is itself a diagnostic result.
    """
    entries = np.exp(a.entries)
    return PcMatrix.from_entries(entries, group, mode, labels=a.labels)


def additive_is_consistent(a: AdditiveMatrix, tol: float = ADDITIVE_TOL) -> bool:
    """True iff a[i,k] + a[k,j] = a[i,j] for every index triple (absolute tol).

    All ordered triples are checked; additive matrices need not be
    reciprocal, so the i < k < j shortcut is unsound here.
    """
    e = a.entries
    residual = e[:, :, None] + e[None, :, :] - e[:, None, :]
    return bool(np.max(np.abs(residual)) <= tol)


def additive_is_reciprocal(a: AdditiveMatrix, tol: float = ADDITIVE_TOL) -> bool:
    """True iff a[j,i] = -a[i,j] within absolute ``tol``."""
    return bool(np.max(np.abs(a.entries + a.entries.T)) <= tol)
