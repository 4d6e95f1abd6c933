"""Vertex labelings f: V -> {0,...,k+1} and the two domination verifiers.

A labeling is a [k]-Roman dominating function ([k]-RDF) when every vertex v
with f(v) < k satisfies f(N[v]) >= k + |AN(v)|, where AN(v) is the set of
neighbors of v with positive label.  It is an independent [k]-RDF ([k]-IRDF)
when additionally the positively labeled vertices form an independent set.
Verification never raises on an invalid labeling; it returns a report that
lists every violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import BadParameters, FormatError
from .graph import Graph, VertexId


@dataclass(frozen=True)
class KLabeling:
    """A value of k plus a total label mapping.

    Labels must lie in ``[0, k+1]``; totality with respect to a particular
    graph is checked by the verifiers, not at construction.
    """

    k: int
    labels: Mapping[VertexId, int]

    def __post_init__(self):
        if self.k < 1:
            raise BadParameters(f"k must be >= 1, got {self.k}")
        for v, x in self.labels.items():
            if not isinstance(x, int) or not 0 <= x <= self.k + 1:
                raise BadParameters(f"label {x!r} at {v!r} outside [0, {self.k + 1}]")

    def __getitem__(self, v: VertexId) -> int:
        return self.labels[v]

    def partition(self) -> dict[int, set[VertexId]]:
        """The ordered partition view: label value -> set of vertices."""
        out: dict[int, set[VertexId]] = {p: set() for p in range(self.k + 2)}
        for v, x in self.labels.items():
            out[x].add(v)
        return out

    def active_set(self) -> set[VertexId]:
        return {v for v, x in self.labels.items() if x > 0}


def weight(f: KLabeling) -> int:
    """Total weight, computed both as a plain sum and via the partition."""
    direct = sum(f.labels.values())
    by_part = sum(p * len(vs) for p, vs in f.partition().items())
    assert direct == by_part
    return direct


def active_neighborhood(g: Graph, f: KLabeling, v: VertexId) -> set[VertexId]:
    """AN(v): neighbors of v that carry a positive label."""
    g.index_of(v)
    return {w for w in g.neighbors(v) if f.labels.get(w, 0) >= 1}


@dataclass(frozen=True)
class Violation:
    vertex: VertexId | None
    kind: str  # "coverage" | "independence" | "label-range"
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[Violation, ...]
    notes: tuple[str, ...] = field(default=())


def _totality_violations(g: Graph, f: KLabeling) -> list[Violation]:
    out = []
    for v in g.vertices:
        if v not in f.labels:
            out.append(Violation(v, "label-range", "vertex has no label"))
    for v in f.labels:
        if v not in g:
            out.append(Violation(v, "label-range", "labeled vertex not in graph"))
    return out


def verify_krdf(g: Graph, f: KLabeling) -> VerifyReport:
    """Check the [k]-RDF condition at every vertex, reporting all failures."""
    violations = _totality_violations(g, f)
    if violations:
        return VerifyReport(False, tuple(violations))
    k = f.k
    for v in g.vertices:
        fv = f.labels[v]
        if fv >= k:
            continue
        closed = fv + sum(f.labels[w] for w in g.neighbors(v))
        an = sum(1 for w in g.neighbors(v) if f.labels[w] >= 1)
        if closed < k + an:
            violations.append(
                Violation(v, "coverage", f"f(N[v])={closed} < k+|AN(v)|={k + an}")
            )
    return VerifyReport(not violations, tuple(violations))


def verify_kirdf(g: Graph, f: KLabeling) -> VerifyReport:
    """Check the [k]-IRDF condition: [k]-RDF plus an independent active set.

    A non-fatal note is emitted when any label lies strictly between 0 and k;
    such labels cannot occur in a valid function of this kind, but they are
    rejected through the concrete coverage/independence failures they cause,
    not pre-emptively.
    """
    base = verify_krdf(g, f)
    violations = list(base.violations)
    if not any(v.kind == "label-range" for v in violations):
        for u, w in g.edges():
            if f.labels[u] >= 1 and f.labels[w] >= 1:
                violations.append(
                    Violation(u, "independence", f"active vertices {u} and {w} are adjacent")
                )
    notes = []
    stray = sorted(v for v, x in f.labels.items() if 1 <= x <= f.k - 1)
    if stray:
        notes.append(
            "labels in 1..k-1 present at: " + ", ".join(stray)
        )
    return VerifyReport(not violations, tuple(violations), tuple(notes))


# -- serialization ----------------------------------------------------------
#
# Labeling JSON: {"k": int, "labels": {vertex-id: int}}.  Round-trips
# bit-exactly (integers only, keys emitted in sorted order).


def labeling_to_json_dict(f: KLabeling) -> dict:
    return {"k": f.k, "labels": {v: f.labels[v] for v in sorted(f.labels)}}


def labeling_from_json_dict(obj: dict) -> KLabeling:
    try:
        k = obj["k"]
        labels = {str(v): int(x) for v, x in obj["labels"].items()}
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise FormatError(f"bad labeling JSON: {exc}") from exc
    return KLabeling(k=k, labels=labels)
