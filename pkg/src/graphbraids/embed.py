"""Embedding a right-angled Artin group into a classical pure braid group.

Every generator starts as a squared Artin generator psi_(2i-1) = s(2i-1)^2;
these all commute. For each non-edge of the defining graph a fresh free pair
psi_(k+2), psi_(k+3) is appended to the two images, killing exactly that
commutation (the appended pair generates a free group commuting with
everything built so far). The verification sweep certifies the resulting
relation pattern pair by pair with exact Garside normal forms.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import braids
from .braids import BraidWord
from .errors import EmbeddingVerificationError, GraphBraidError
from .graphs import Graph, line_graph, opposite_graph


@dataclass(frozen=True)
class EmbeddingMap:
    gamma: Graph
    strands: int
    images: tuple[BraidWord, ...]  # one pure-braid word per generator of gamma
    psi_indices: tuple[tuple[int, ...], ...]  # the psi letters making up each image
    allocation: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    pure: bool = True

    def image_of(self, generator: int) -> BraidWord:
        return self.images[generator]


def strand_bound(gamma: Graph) -> int:
    """Strands needed: 2V + 3 (non-edge count) = 2V + 3(C(V,2) - E)."""
    v = gamma.vertex_count
    return 2 * v + 3 * (v * (v - 1) // 2 - gamma.edge_count)


def build_embedding(gamma: Graph, pure: bool = True) -> EmbeddingMap:
    """Generator images for the embedding, with the per-non-edge allocation log.

    With pure=False the squared generators are replaced by the two-letter
    words s<j> s<j+1>; they leave the pure braid group, need wider spacing
    (initial indices 3i-2, couplings consuming k+3 and k+4), and come with no
    strand-count guarantee.
    """
    v = gamma.vertex_count
    if v < 1:
        raise GraphBraidError("the defining graph needs at least one generator")
    if pure:
        psi_idx = [[2 * i - 1] for i in range(1, v + 1)]
        k = 2 * v - 1
        step = (2, 3)
    else:
        psi_idx = [[3 * i - 2] for i in range(1, v + 1)]
        k = 3 * v - 2
        step = (3, 4)
    allocation = []
    for u, w in opposite_graph(gamma).edges:
        ju, jw = k + step[0], k + step[1]
        psi_idx[u].append(ju)
        psi_idx[w].append(jw)
        allocation.append(((u, w), (ju, jw)))
        k = jw
    highest = max(max(idx) for idx in psi_idx)
    strands = highest + 1 if pure else highest + 2
    if pure:
        assert strands <= strand_bound(gamma), "allocation exceeded the strand bound"
        images = tuple(
            BraidWord(strands, tuple(x for j in idx for x in (j, j)))
            for idx in psi_idx
        )
    else:
        images = tuple(
            BraidWord(strands, tuple(x for j in idx for x in (j, j + 1)))
            for idx in psi_idx
        )
    return EmbeddingMap(
        gamma,
        strands,
        images,
        tuple(tuple(idx) for idx in psi_idx),
        tuple(allocation),
        pure,
    )


def _check_pair(m: EmbeddingMap, i: int, j: int) -> dict:
    should_commute = m.gamma.has_edge(i, j)
    nf = braids.normal_form(braids.commutator(m.images[i], m.images[j]))
    return {
        "pair": [i + 1, j + 1],
        "edge": should_commute,
        "commutes": nf.is_identity(),
        "ok": nf.is_identity() == should_commute,
    }


def verify_embedding(m: EmbeddingMap, workers: int | None = None) -> dict:
    """Certify the relation pattern of the images, pair by pair.

    Generators joined by an edge must have commuting images (identity
    commutator); generators not joined must not (nontrivial normal form).
    With the pure convention every image must also be a pure braid. This
    checks the homomorphism property and all pairwise non-commutations; the
    injectivity of the full map is the content of the construction itself.
    Raises when any check fails, which would mean a construction bug.
    """
    if workers is None:
        workers = int(os.environ.get("GBW_THREADS", "1") or "1")
    pairs = [
        (i, j)
        for i in range(m.gamma.vertex_count)
        for j in range(i + 1, m.gamma.vertex_count)
    ]
    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(lambda p: _check_pair(m, *p), pairs))
    else:
        checks = [_check_pair(m, i, j) for i, j in pairs]
    purity = [braids.is_pure(img) for img in m.images] if m.pure else []
    ok = all(ch["ok"] for ch in checks) and all(purity)
    report = {
        "strands": m.strands,
        "within_bound": (not m.pure) or m.strands <= strand_bound(m.gamma),
        "images_pure": purity,
        "pairs": checks,
        "ok": ok,
    }
    if not ok:
        raise EmbeddingVerificationError("embedding verification failed", report)
    return report


def gbg_chain_target(g: Graph, n: int) -> tuple[Graph, int]:
    """Target data for embedding the n-strand braid group of g.

    The group embeds into the right-angled Artin group on the complement of
    the line graph of g, and from there into a classical pure braid group on
    strand_bound many strands. Only the target graph and the strand count are
    produced; n does not affect them.
    """
    gamma = opposite_graph(line_graph(g))
    return gamma, strand_bound(gamma)
