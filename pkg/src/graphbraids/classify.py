"""Which graph braid groups are classical braid groups.

Only five families qualify: intervals (trivial group), trees with one strand,
one-cycle graphs with one strand, the 3-star with two strands, and circles.
The decision is purely combinatorial (homeomorphism type, cycle rank, strand
count); `betti_cross_check` verifies every verdict against the integer
homology of the discretized space, which distinguishes the abelianizations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import build_complex
from .errors import CrossCheckError, DisconnectedGraphError, GraphBraidError
from .graphs import (
    Graph,
    HomeoTag,
    count_distinct_paths,
    homeomorphism_type,
    is_sufficiently_subdivided,
    sufficiently_subdivide,
)
from .homology import HomologySummary, homology


@dataclass(frozen=True)
class ClassificationResult:
    is_braid_group: bool
    braid_strands: int | None = None  # n' with B_n(G) isomorphic to B_{n'}
    case: int | None = None  # which of the five clauses applied
    reason: str | None = None  # advisory text for negatives
    evidence: HomologySummary | None = None

    def to_dict(self) -> dict:
        if self.is_braid_group:
            out: dict = {
                "is_braid_group": True,
                "braid_strands": self.braid_strands,
                "case": self.case,
            }
        else:
            out = {"is_braid_group": False, "reason": self.reason}
        if self.evidence is not None:
            out["evidence"] = self.evidence.to_dict()
        return out


def classify(g: Graph, n: int) -> ClassificationResult:
    """Decide whether the n-strand braid group of g is a classical braid group.

    When several clauses apply the smallest case number wins, except that a
    circle always reports case 5: its one-strand group is already covered by
    the circle clause, so case 3 is reserved for one-cycle graphs that are
    not circles. Both give n' = 2.
    """
    if n < 1:
        raise GraphBraidError(f"strand count must be at least 1, got {n}")
    if not g.is_connected():
        raise DisconnectedGraphError("classification needs a connected graph")
    if n >= 2 and g.vertex_count < n:
        raise GraphBraidError(
            f"{n} strands do not fit on {g.vertex_count} vertices"
        )
    ht = homeomorphism_type(g)
    applicable: list[tuple[int, int]] = []
    if ht.tag == HomeoTag.INTERVAL:
        applicable.append((1, 1))
    if n == 1 and ht.cycle_rank == 0:
        applicable.append((2, 1))
    if n == 1 and ht.cycle_rank == 1 and ht.tag != HomeoTag.CIRCLE:
        applicable.append((3, 2))
    if n == 2 and ht.tag == HomeoTag.STAR3:
        applicable.append((4, 2))
    if ht.tag == HomeoTag.CIRCLE:
        applicable.append((5, 2))
    if applicable:
        case, n_prime = min(applicable)
        return ClassificationResult(True, n_prime, case)
    return ClassificationResult(False, reason=_negative_reason(g, n, ht))


def _negative_reason(g: Graph, n: int, ht) -> str:
    if n == 1:
        return f"free of rank {ht.cycle_rank} >= 2"
    if ht.cycle_rank == 0:
        if n == 2:
            return (
                f"tree with {count_distinct_paths(g)} >= 4 distinct paths: b_1 > 1"
            )
        return "tree with at least 3 strands and a branch vertex: b_1 > 1"
    return "graph with cycles: abelianization has rank > 1 or torsion"


def betti_cross_check(g: Graph, n: int) -> dict:
    """Verify a classification verdict against the homology oracle.

    The graph is subdivided as needed, the n-strand complex built, and H_1
    compared with what the verdict demands: trivial for n' = 1, infinite
    cyclic for n' = 2, anything bigger for a negative verdict. A mismatch is
    an implementation bug and raises.
    """
    verdict = classify(g, n)
    work = g
    if n >= 2 and not is_sufficiently_subdivided(work, n)[0]:
        work = sufficiently_subdivide(work, n)
    complex_ = build_complex(work, n)
    h1 = homology(complex_, 1)
    if verdict.is_braid_group:
        if verdict.braid_strands == 1:
            consistent = h1.betti == 0 and not h1.torsion
        else:
            consistent = h1.betti == 1 and not h1.torsion
    else:
        consistent = h1.betti >= 2 or bool(h1.torsion)
    if not consistent:
        raise CrossCheckError(
            f"verdict {verdict.to_dict()} disagrees with H_1 = {h1.to_dict()}"
        )
    return {
        "verdict": verdict.to_dict(),
        "homology": h1.to_dict(),
        "consistent": True,
    }
