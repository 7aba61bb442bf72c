"""Homomorphisms from braid groups into right-angled Artin groups.

With five or more strands every such homomorphism sends all the Artin
generators to one common word, so the image is cyclic. This module checks
candidate generator images against the braid relations, tabulates their
exponent-sum profiles, and sweeps bounded candidate families exhaustively
looking for a counterexample (finding one would mean a word-problem bug,
not a discovery).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import raag
from .errors import GraphBraidError
from .graphs import Graph, nonisomorphic_graphs
from .raag import RaagWord


@dataclass(frozen=True)
class HomCandidate:
    strands: int  # braid group B_n as the source
    gamma: Graph
    images: tuple[RaagWord, ...]  # candidate images of s1..s(n-1)

    def __post_init__(self):
        if self.strands < 2:
            raise GraphBraidError("a braid group source needs at least 2 strands")
        if len(self.images) != self.strands - 1:
            raise GraphBraidError(
                f"expected {self.strands - 1} images, got {len(self.images)}"
            )
        for w in self.images:
            if w.graph != self.gamma:
                raise GraphBraidError("images must live over the candidate's graph")


def check_relations(h: HomCandidate) -> tuple[bool, str | None]:
    """Do the images satisfy the braid relations in the Artin group?

    Checks every s<i> s<i+1> s<i> = s<i+1> s<i> s<i+1> and every far
    commutation; returns (ok, first failing relation or None).
    """
    imgs = h.images
    for i in range(len(imgs) - 1):
        lhs = raag.concat(imgs[i], imgs[i + 1], imgs[i])
        rhs = raag.concat(imgs[i + 1], imgs[i], imgs[i + 1])
        if not raag.words_equal(lhs, rhs):
            return False, f"s{i + 1} s{i + 2} s{i + 1} = s{i + 2} s{i + 1} s{i + 2}"
    for i, j in itertools.combinations(range(len(imgs)), 2):
        if j - i < 2:
            continue
        if not raag.words_equal(
            raag.concat(imgs[i], imgs[j]), raag.concat(imgs[j], imgs[i])
        ):
            return False, f"s{i + 1} s{j + 1} = s{j + 1} s{i + 1}"
    return True, None


def exponent_profile(h: HomCandidate) -> tuple[list[list[int]], bool]:
    """Matrix of exponent sums, one row per generator of the Artin group.

    Entry [k][i] is the exponent sum of generator k in the image of s<i+1>.
    The flag reports whether all columns agree, which must hold whenever the
    candidate is an actual homomorphism.
    """
    matrix = [
        [raag.exponent_sum(img, k) for img in h.images]
        for k in range(h.gamma.vertex_count)
    ]
    columns_equal = all(len(set(row)) <= 1 for row in matrix)
    return matrix, columns_equal


def conclusion_check(h: HomCandidate) -> dict:
    """For a five-plus-strand candidate, test the all-images-equal conclusion.

    Vacuous when the braid relations fail. When they hold, all images must
    share one normal form (so the image subgroup is cyclic); a candidate
    contradicting that is reported as a counterexample, which would indicate
    a defect in the word-problem engine.
    """
    if h.strands <= 4:
        raise GraphBraidError("the conclusion needs more than 4 strands")
    ok, failing = check_relations(h)
    if not ok:
        return {
            "relations_hold": False,
            "failing_relation": failing,
            "vacuous": True,
        }
    forms = [raag.normal_form(img) for img in h.images]
    all_equal = all(f.letters == forms[0].letters for f in forms)
    matrix, columns_equal = exponent_profile(h)
    report = {
        "relations_hold": True,
        "images_all_equal": all_equal,
        "image_cyclic": all_equal,
        "exponent_columns_equal": columns_equal,
        "counterexample": None,
    }
    if not (all_equal and columns_equal):
        report["counterexample"] = {
            "gamma": h.gamma.to_json(),
            "strands": h.strands,
            "images": [raag.word_to_text(w) for w in h.images],
        }
    return report


def _word_classes(gamma: Graph, max_len: int) -> list[RaagWord]:
    """Normal forms of all words up to the given length, one per group element."""
    alphabet = [
        (g, s) for g in range(gamma.vertex_count) for s in (1, -1)
    ]
    seen: set[tuple] = set()
    classes: list[RaagWord] = []
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            nf = raag.normal_form(RaagWord(gamma, combo))
            if nf.letters not in seen:
                seen.add(nf.letters)
                classes.append(nf)
    return classes


def _braid_pairs(classes: list[RaagWord]) -> list[tuple[int, int]]:
    """Unordered pairs of distinct classes satisfying u v u = v u v."""
    out = []
    for a, b in itertools.combinations(range(len(classes)), 2):
        u, v = classes[a], classes[b]
        if raag.words_equal(raag.concat(u, v, u), raag.concat(v, u, v)):
            out.append((a, b))
    return out


def sweep(gamma: Graph, strands: int = 5, max_len: int = 3) -> dict:
    """Exhaustive counterexample search over bounded images.

    A candidate tuple passes iff every consecutive pair satisfies the braid
    relation and every far pair commutes, so the search factors through
    pairs: enumerate all unequal braid-relation pairs first, then extend only
    those to full tuples. No unequal pairs means every passing tuple has all
    images equal, with nothing left to enumerate.
    """
    if strands <= 4:
        raise GraphBraidError("the conclusion needs more than 4 strands")
    classes = _word_classes(gamma, max_len)
    pairs = _braid_pairs(classes)
    counterexamples = []
    tuples_checked = 0
    if pairs:
        succ: dict[int, set[int]] = {i: {i} for i in range(len(classes))}
        for a, b in pairs:
            succ[a].add(b)
            succ[b].add(a)
        for first in range(len(classes)):
            for tup in _extend([first], succ, strands - 1):
                if len(set(tup)) == 1:
                    continue
                tuples_checked += 1
                cand = HomCandidate(
                    strands, gamma, tuple(classes[i] for i in tup)
                )
                ok, _ = check_relations(cand)
                if ok:
                    counterexamples.append(
                        [raag.word_to_text(classes[i]) for i in tup]
                    )
    return {
        "gamma": gamma.to_json(),
        "strands": strands,
        "max_len": max_len,
        "classes": len(classes),
        "braid_pairs_unequal": len(pairs),
        "nonconstant_tuples_checked": tuples_checked,
        "counterexamples": counterexamples,
    }


def _extend(prefix: list[int], succ: dict[int, set[int]], width: int):
    if len(prefix) == width:
        yield tuple(prefix)
        return
    for nxt in sorted(succ[prefix[-1]]):
        prefix.append(nxt)
        yield from _extend(prefix, succ, width)
        prefix.pop()


def sweep_all(max_vertices: int = 3, strands: int = 5, max_len: int = 3) -> dict:
    """Run the sweep on every isomorphism class of defining graphs."""
    reports = []
    for v in range(1, max_vertices + 1):
        for gamma in nonisomorphic_graphs(v):
            reports.append(sweep(gamma, strands, max_len))
    return {
        "graphs": len(reports),
        "counterexamples": [ce for r in reports for ce in r["counterexamples"]],
        "reports": reports,
    }
