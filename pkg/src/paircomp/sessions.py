"""Live judgment-elicitation sessions.

A session collects pairwise ratio judgments for a labelled entity set and
tracks how far the judgment graph is from a spanning tree: short of one
(NeedsJudgments), exactly one (TreeComplete), or past one (Overdetermined,
where inconsistency feedback kicks in). Sessions are strict-mode only;
values must be positive reals.

Judgments are set-valued: resubmitting a pair replaces the old value (the
raw submission history is kept). State is persisted through an append-only
event log and rebuilt on startup.
"""

from __future__ import annotations

import enum
import heapq
import json
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import (
    BadSize,
    DuplicateLabels,
    NonPositiveValue,
    SelfComparison,
    UnknownSession,
)
from .groups import POSITIVE_REALS
from .matrix import Mode, PcMatrix
from .scalars import round_sig
from .weights import geometric_mean_weights, rank_entities

MAX_ENTITIES = 64


class SessionStatus(enum.Enum):
    NEEDS_JUDGMENTS = "needs_judgments"
    TREE_COMPLETE = "tree_complete"
    OVERDETERMINED = "overdetermined"


@dataclass
class Session:
    id: str
    labels: tuple[str, ...]
    # canonical key (a, b) with a < b, value = ratio entity_a / entity_b
    judgments: dict[tuple[int, int], float] = field(default_factory=dict)
    history: list[tuple[int, int, float]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)


def _components(n: int, edges: set[tuple[int, int]]) -> int:
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[int] = set()
    count = 0
    for start in range(n):
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return count


def session_status(session: Session) -> tuple[SessionStatus, int]:
    """Current status plus the number of judgments still needed for a tree."""
    n = session.n
    edges = set(session.judgments)
    components = _components(n, edges)
    if components == 1:
        if len(edges) == n - 1:
            return SessionStatus.TREE_COMPLETE, 0
        return SessionStatus.OVERDETERMINED, 0
    return SessionStatus.NEEDS_JUDGMENTS, components - 1


def _best_paths(n: int, judgments: dict[tuple[int, int], float], src: int) -> dict[int, tuple[int, ...]]:
    """Shortest paths from src; ties resolved to the lexicographically smallest."""
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in judgments:
        adj[a].append(b)
        adj[b].append(a)
    for neighbours in adj.values():
        neighbours.sort()
    best: dict[int, tuple[int, ...]] = {}
    heap: list[tuple[int, tuple[int, ...]]] = [(0, (src,))]
    while heap:
        dist, path = heapq.heappop(heap)
        node = path[-1]
        if node in best:
            continue
        best[node] = path
        for nb in adj[node]:
            if nb not in best:
                heapq.heappush(heap, (dist + 1, path + (nb,)))
    return best


def _path_value(path: tuple[int, ...], judgments: dict[tuple[int, int], float]) -> float:
    value = 1.0
    for a, b in zip(path, path[1:]):
        if a < b:
            value *= judgments[(a, b)]
        else:
            value /= judgments[(b, a)]
    return value


def effective_matrix(session: Session) -> PcMatrix:
    """Directly judged entries, plus shortest-path fill for the rest.

    Requires a connected judgment graph. Direct judgments always win (a
    single edge is the unique shortest path for its own pair).
    """
    n = session.n
    entries = np.ones((n, n), dtype=np.complex128)
    for i in range(n):
        paths = _best_paths(n, session.judgments, i)
        if len(paths) != n:
            raise ValueError("judgment graph is not connected")
        for j in range(i + 1, n):
            v = _path_value(paths[j], session.judgments)
            entries[i, j] = v
            entries[j, i] = 1.0 / v
    return PcMatrix.from_entries(entries, POSITIVE_REALS, Mode.STRICT, labels=session.labels)


def partial_entries(session: Session) -> list[list[Optional[float]]]:
    """Grid of known entries only: diagonal, direct pairs, and reciprocals."""
    n = session.n
    grid: list[list[Optional[float]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = 1.0
    for (a, b), v in session.judgments.items():
        grid[a][b] = v
        grid[b][a] = 1.0 / v
    return grid


def session_report(session: Session) -> dict:
    """Full JSON-able report; floats carry 12 significant digits."""
    status, remaining = session_status(session)
    n = session.n
    report: dict = {
        "id": session.id,
        "labels": list(session.labels),
        "n": n,
        "status": status.value,
        "remaining": remaining,
        "superfluous": max(0, len(session.judgments) - (n - 1)),
        "judgments": [
            {"i": a, "j": b, "value": round_sig(v)}
            for (a, b), v in sorted(session.judgments.items())
        ],
        "kii": None,
        "worst_triad": None,
        "weights": None,
        "ranking": None,
    }

    if status is SessionStatus.NEEDS_JUDGMENTS:
        report["matrix"] = {"complete": False, "entries": [
            [round_sig(v) if v is not None else None for v in row]
            for row in partial_entries(session)
        ]}
        return report

    matrix = effective_matrix(session)
    report["matrix"] = {
        "complete": True,
        "entries": [[round_sig(float(x.real)) for x in row] for row in matrix.entries],
    }
    weights = geometric_mean_weights(matrix)
    report["weights"] = [round_sig(float(w.real)) for w in weights.values]
    report["ranking"] = [
        {"label": label, "weight": round_sig(weight)}
        for label, weight in rank_entities(weights)
    ]
    if status is SessionStatus.OVERDETERMINED:
        inconsistency = matrix.kii()
        report["kii"] = round_sig(inconsistency.kii)
        worst = inconsistency.worst_triad
        report["worst_triad"] = {
            "i": worst.i,
            "k": worst.k,
            "j": worst.j,
            "x": round_sig(float(worst.x.real)),
            "y": round_sig(float(worst.y.real)),
            "z": round_sig(float(worst.z.real)),
            "indicator": round_sig(
                dict((t.indices, local) for t, local in inconsistency.per_triad)[worst.indices]
            ),
        }
    return report


class SessionStore:
    """Thread-safe session registry with append-only persistence.

    Requests touching the same session serialize on the session lock;
    different sessions proceed independently. When ``log_path`` is given,
    every mutation is appended as one JSON line and the whole store is
    rebuilt by replay on construction.
    """

    def __init__(self, log_path: str | Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.RLock()
        self._log_path = Path(log_path) if log_path is not None else None
        if self._log_path is not None and self._log_path.exists():
            self._replay()

    def _replay(self) -> None:
        for line in self._log_path.read_text().splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            kind = event["event"]
            if kind == "create":
                session = Session(id=event["id"], labels=tuple(event["labels"]))
                self._sessions[session.id] = session
            elif kind == "judgment":
                session = self._sessions[event["id"]]
                self._apply_judgment(session, event["i"], event["j"], event["value"])
            elif kind == "delete":
                self._sessions.pop(event["id"], None)

    def _append(self, event: dict) -> None:
        if self._log_path is None:
            return
        with self._log_path.open("a") as fh:
            fh.write(json.dumps(event) + "\n")

    @staticmethod
    def _apply_judgment(session: Session, i: int, j: int, value: float) -> None:
        key = (min(i, j), max(i, j))
        canonical = value if i < j else 1.0 / value
        session.judgments[key] = canonical
        session.history.append((i, j, value))

    # -- public API ------------------------------------------------------------

    def create(self, labels: list[str]) -> Session:
        labels = [str(x) for x in labels]
        if not (2 <= len(labels) <= MAX_ENTITIES):
            raise BadSize(f"need between 2 and {MAX_ENTITIES} entities, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise DuplicateLabels("entity labels must be distinct")
        with self._lock:
            session = Session(id=secrets.token_urlsafe(16), labels=tuple(labels))
            self._sessions[session.id] = session
            self._append({"event": "create", "id": session.id, "labels": labels})
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session {session_id!r}")
        return session

    def add_judgment(self, session_id: str, i: int, j: int, value: float) -> dict:
        session = self.get(session_id)
        with session.lock:
            if not (0 <= i < session.n and 0 <= j < session.n):
                raise ValueError(f"indices ({i},{j}) out of range for n={session.n}")
            if i == j:
                raise SelfComparison(f"cannot compare entity {i} with itself")
            if not (value > 0):
                raise NonPositiveValue(f"judgment value must be positive, got {value}")
            self._apply_judgment(session, i, j, float(value))
            self._append(
                {"event": "judgment", "id": session.id, "i": i, "j": j, "value": float(value)}
            )
            return session_report(session)

    def report(self, session_id: str) -> dict:
        session = self.get(session_id)
        with session.lock:
            return session_report(session)

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise UnknownSession(f"no session {session_id!r}")
            del self._sessions[session_id]
            self._append({"event": "delete", "id": session_id})
