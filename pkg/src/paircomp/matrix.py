"""Reciprocal pairwise-comparison matrices.

A PcMatrix is an n x n array of ratios over one catalog group: identity on
the diagonal, m[j,i] the group inverse of m[i,j]. Strict mode is the
default gate and admits only positive reals; Research mode exists to
reproduce negative/complex counterexample material and must be requested
explicitly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ComplexEntries,
    DiagonalNotIdentity,
    DuplicateEdge,
    NonMember,
    NonPositiveValue,
    NotATree,
    ReciprocityViolation,
    SelfComparison,
    StrictModeViolation,
    UndefinedForGroup,
    ZeroEntry,
)
from .groups import POSITIVE_REALS, GroupDescriptor
from .scalars import close_abs, close_rel, format_scalar, is_finite

#: Validation tolerance for diagonal and reciprocity checks.
VALIDATION_TOL = 1e-9

#: Default tolerance for triad consistency.
CONSISTENCY_TOL = 1e-9

_REAL_CARRIERS = {"PositiveReals", "NonzeroReals", "AdditiveReals"}


class Mode(enum.Enum):
    STRICT = "strict"
    RESEARCH = "research"


@dataclass(frozen=True)
class Judgment:
    """One elicited ratio: entity i compared to entity j."""

    i: int
    j: int
    value: complex


@dataclass(frozen=True)
class Triad:
    """The cycle over entities i < k < j: x = m[i,k], y = m[i,j], z = m[k,j].

    Consistent when x (op) z equals y.
    """

    i: int
    k: int
    j: int
    x: complex
    y: complex
    z: complex

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.k, self.j)

    @property
    def values(self) -> tuple[complex, complex, complex]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class InconsistencyReport:
    """Triad-based inconsistency: the worst local indicator and all of them."""

    kii: float
    worst_triad: Optional[Triad]
    per_triad: list[tuple[Triad, float]]


def _as_entry_array(entries: Sequence | np.ndarray) -> np.ndarray:
    arr = np.array(entries, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"entries must be square, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class PcMatrix:
    n: int
    entries: np.ndarray = field(repr=False)
    group: GroupDescriptor
    mode: Mode
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_entries(
        cls,
        entries: Sequence | np.ndarray,
        group: GroupDescriptor,
        mode: Mode = Mode.STRICT,
        labels: Optional[Iterable[str]] = None,
        tol: float = VALIDATION_TOL,
    ) -> "PcMatrix":
        """Validate and build. Raises on any invariant violation; never repairs.

        Checks, in order: shape and size, finiteness, identity diagonal, the
        strict-mode gate, membership, reciprocity. Entries of real carriers
        are stored with the (membership-tolerated) imaginary dust dropped,
        so downstream real-only operations see exact reals.
        """
        arr = _as_entry_array(entries)
        n = arr.shape[0]
        if n < 2:
            raise ValueError(f"need at least 2 entities, got {n}")

        for i, j in itertools.product(range(n), repeat=2):
            if not is_finite(arr[i, j]):
                raise ValueError(f"entry ({i},{j}) is not finite")

        for i in range(n):
            if not close_abs(arr[i, i], group.identity, tol):
                raise DiagonalNotIdentity(
                    f"entry ({i},{i}) = {format_scalar(arr[i, i])}, "
                    f"expected {format_scalar(group.identity)}"
                )

        if mode is Mode.STRICT:
            if group.name != "PositiveReals":
                raise StrictModeViolation(
                    f"strict mode admits only PositiveReals, got {group.name}"
                )
            for i, j in itertools.product(range(n), repeat=2):
                z = arr[i, j]
                if not (group.contains(z) and z.real > 0.0):
                    raise StrictModeViolation(
                        f"entry ({i},{j}) = {format_scalar(z)} is not a positive real"
                    )

        for i, j in itertools.product(range(n), repeat=2):
            if not group.contains(arr[i, j]):
                raise NonMember(
                    f"entry ({i},{j}) = {format_scalar(arr[i, j])} "
                    f"is not a member of {group.name}"
                )

        if group.name in _REAL_CARRIERS:
            arr = arr.real.astype(np.complex128)

        for i in range(n):
            for j in range(i + 1, n):
                expected = group.inverse(arr[i, j])
                actual = arr[j, i]
                ok = (
                    close_abs(actual, expected, tol)
                    if group.additive
                    else close_rel(actual, expected, tol)
                )
                if not ok:
                    raise ReciprocityViolation(i, j)

        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} entities")

        arr.setflags(write=False)
        return cls(n=n, entries=arr, group=group, mode=mode, labels=labels)

    # -- views ---------------------------------------------------------------

    @property
    def is_real_valued(self) -> bool:
        return bool(np.all(self.entries.imag == 0.0))

    @property
    def real_entries(self) -> np.ndarray:
        if not self.is_real_valued:
            raise ComplexEntries("matrix has non-real entries")
        return self.entries.real

    def allclose(self, other: "PcMatrix", tol: float = 1e-12) -> bool:
        return self.n == other.n and bool(
            np.all(np.abs(self.entries - other.entries) <= tol)
        )

    # -- triads and consistency -----------------------------------------------

    def triads(self) -> list[Triad]:
        """All C(n,3) triads in lexicographic (i,k,j) order; empty for n < 3."""
        out = []
        m = self.entries
        for i, k, j in itertools.combinations(range(self.n), 3):
            out.append(
                Triad(i=i, k=k, j=j,
                      x=complex(m[i, k]), y=complex(m[i, j]), z=complex(m[k, j]))
            )
        return out

    def triad_residual(self, t: Triad) -> float:
        """Deviation of x (op) z from y, scaled per the group's tolerance style."""
        combined = self.group.op(t.x, t.z)
        if self.group.additive:
            return abs(combined - t.y)
        denom = max(abs(t.y), abs(combined))
        return abs(combined - t.y) / denom if denom > 0 else abs(combined - t.y)

    def is_consistent(self, tol: float = CONSISTENCY_TOL) -> bool:
        """True iff every triad satisfies x (op) z = y within ``tol``.

        Only i < k < j is checked; reciprocity makes the remaining index
        orders redundant.
        """
        return all(self.triad_residual(t) <= tol for t in self.triads())

    def kii(self) -> InconsistencyReport:
        """Worst-triad inconsistency over positive real entries.

        Per triad: min(|1 - y/(x*z)|, |1 - (x*z)/y|); the matrix indicator is
        the maximum, with ties resolved to the lexicographically first triad.
        Undefined (error) for negative or complex entries.
        """
        if not self.is_real_valued or bool(np.any(self.entries.real <= 0.0)):
            raise UndefinedForGroup(
                "inconsistency indicator is defined over positive reals only"
            )
        per: list[tuple[Triad, float]] = []
        worst: Optional[Triad] = None
        worst_value = 0.0
        for t in self.triads():
            x, y, z = t.x.real, t.y.real, t.z.real
            xz = x * z
            local = float(min(abs(1.0 - y / xz), abs(1.0 - xz / y)))
            per.append((t, local))
            if worst is None or local > worst_value:
                worst, worst_value = t, local
        return InconsistencyReport(kii=worst_value, worst_triad=worst, per_triad=per)


def _check_judgment(j: Judgment, n: int, mode: Mode) -> None:
    if not (0 <= j.i < n and 0 <= j.j < n):
        raise ValueError(f"judgment indices ({j.i},{j.j}) out of range for n={n}")
    if j.i == j.j:
        raise SelfComparison(f"judgment compares entity {j.i} with itself")
    v = complex(j.value)
    if v == 0:
        raise ZeroEntry(f"judgment ({j.i},{j.j}) has value 0")
    if mode is Mode.STRICT and not (v.imag == 0.0 and v.real > 0.0):
        raise NonPositiveValue(
            f"judgment ({j.i},{j.j}) = {format_scalar(v)} must be a positive real"
        )


def complete_from_tree(
    n: int,
    judgments: Sequence[Judgment],
    group: GroupDescriptor = POSITIVE_REALS,
    mode: Mode = Mode.STRICT,
    labels: Optional[Iterable[str]] = None,
) -> PcMatrix:
    """The unique consistent completion of a spanning tree of judgments.

    The n-1 judgments must form a spanning tree over the n entities. Each
    entry m[i,j] is the group product of judgment values (or inverses)
    along the tree path from i to j, so the result is consistent and
    reciprocal by construction.
    """
    if n < 2:
        raise ValueError("need at least 2 entities")
    seen: set[tuple[int, int]] = set()
    adj: dict[int, list[tuple[int, complex]]] = {i: [] for i in range(n)}
    for j in judgments:
        _check_judgment(j, n, mode)
        key = (min(j.i, j.j), max(j.i, j.j))
        if key in seen:
            raise DuplicateEdge(f"pair ({key[0]},{key[1]}) judged more than once")
        seen.add(key)
        v = complex(j.value)
        adj[j.i].append((j.j, v))
        adj[j.j].append((j.i, group.inverse(v)))
    if len(judgments) != n - 1:
        raise NotATree(f"expected {n - 1} judgments for {n} entities, got {len(judgments)}")

    # BFS from entity 0 assigns a potential w[i] with m[i,j] = w[i] (op) w[j]^-1
    w: dict[int, complex] = {0: group.identity}
    frontier = [0]
    while frontier:
        fresh = []
        for i in frontier:
            for k, v in adj[i]:
                if k not in w:
                    # m[i,k] = v means w[k] = w[i] (op) v^-1
                    w[k] = group.op(w[i], group.inverse(v))
                    fresh.append(k)
        frontier = fresh
    if len(w) != n:
        missing = sorted(set(range(n)) - set(w))
        raise NotATree(f"judgment graph is disconnected; unreached entities {missing}")

    entries = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            entries[i, j] = group.op(w[i], group.inverse(w[j]))
    return PcMatrix.from_entries(entries, group, mode, labels=labels)


def superfluous_count(n: int, judgments: Sequence[Judgment]) -> int:
    """How many judgments exceed the n-1 a spanning tree needs."""
    seen: set[tuple[int, int]] = set()
    for j in judgments:
        key = (min(j.i, j.j), max(j.i, j.j))
        if key in seen:
            raise DuplicateEdge(f"pair ({key[0]},{key[1]}) judged more than once")
        seen.add(key)
    return max(0, len(judgments) - (n - 1))
