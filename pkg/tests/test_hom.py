import random

import pytest

from graphbraids import (
    Graph,
    GraphBraidError,
    HomCandidate,
    check_relations,
    conclusion_check,
    exponent_profile,
    parse_raag_word,
)
from graphbraids.hom import sweep, sweep_all
from graphbraids.raag import RaagWord, concat, inverse, normal_form

EDGE = Graph(2, [(0, 1)])
FREE2 = Graph(2, [])
P3 = Graph(3, [(0, 1), (1, 2)])


def words(graph, *texts):
    return tuple(parse_raag_word(t, graph) for t in texts)


class TestCheckRelations:
    def test_constant_images_always_pass(self):
        for graph, text in [(EDGE, "g1 g2"), (FREE2, "g1 g2 g1^-1"), (P3, "g2")]:
            images = words(graph, *([text] * 4))
            ok, failing = check_relations(HomCandidate(5, graph, images))
            assert ok and failing is None

    def test_commuting_pair_fails_braid_relation(self):
        # a b a = b a b would need a^2 b = a b^2 in the abelian direction
        ok, failing = check_relations(
            HomCandidate(3, EDGE, words(EDGE, "g1", "g2"))
        )
        assert not ok and "s1 s2 s1" in failing

    def test_alternating_distinct_free_words_fail(self):
        images = words(FREE2, "g1", "g2", "g1", "g2")
        ok, _ = check_relations(HomCandidate(5, FREE2, images))
        assert not ok

    def test_far_commutation_checked(self):
        # braid-adjacent pairs equal, but s1 and s3 get non-commuting images
        images = words(FREE2, "g1", "g1", "g2", "g2")
        ok, failing = check_relations(HomCandidate(5, FREE2, images))
        assert not ok

    def test_conjugation_invariance(self):
        rng = random.Random(3)
        for _ in range(20):
            length = rng.randint(0, 3)
            base = RaagWord(
                P3,
                tuple(
                    (rng.randrange(3), rng.choice((1, -1))) for _ in range(length)
                ),
            )
            conj = RaagWord(
                P3, tuple((rng.randrange(3), rng.choice((1, -1))) for _ in range(2))
            )
            images = tuple([base] * 4)
            conjugated = tuple(concat(conj, w, inverse(conj)) for w in images)
            assert check_relations(HomCandidate(5, P3, images))[0] == \
                check_relations(HomCandidate(5, P3, conjugated))[0]


class TestExponentProfile:
    def test_constant_images(self):
        images = words(EDGE, "g1 g2", "g1 g2", "g1 g2", "g1 g2")
        matrix, equal = exponent_profile(HomCandidate(5, EDGE, images))
        assert equal and matrix == [[1, 1, 1, 1], [1, 1, 1, 1]]

    def test_unequal_columns_force_relation_failure(self):
        images = words(FREE2, "g1", "g1 g1")
        cand = HomCandidate(3, FREE2, images)
        _, equal = exponent_profile(cand)
        assert not equal
        assert not check_relations(cand)[0]


class TestConclusionCheck:
    def test_passing_candidate(self):
        images = words(FREE2, *(["g1 g2 g1^-1"] * 4))
        report = conclusion_check(HomCandidate(5, FREE2, images))
        assert report["relations_hold"]
        assert report["images_all_equal"] and report["image_cyclic"]
        assert report["counterexample"] is None

    def test_vacuous_when_relations_fail(self):
        images = words(FREE2, "g1", "g1", "g1", "g2")
        report = conclusion_check(HomCandidate(5, FREE2, images))
        assert not report["relations_hold"]
        assert report["vacuous"]

    def test_strand_hypothesis_enforced(self):
        with pytest.raises(GraphBraidError):
            conclusion_check(HomCandidate(4, EDGE, words(EDGE, "g1", "g1", "g1")))


class TestStructuralInvariants:
    """Shape of passing candidates: shared support, equal balanced parts."""

    def test_support_and_h_parts_agree(self):
        from graphbraids import split_h_hat, support

        # cyclically reduced image with a nonzero part and a balanced part:
        # g1^2 carries exponent sum, the commutator of g2, g3 is balanced
        graph = Graph(3, [(0, 1), (0, 2)])
        text = "g1 g1 g2 g3 g2^-1 g3^-1"
        images = words(graph, *([text] * 4))
        cand = HomCandidate(5, graph, images)
        assert check_relations(cand)[0]
        supports = [support(w) for w in images]
        assert all(s == supports[0] for s in supports)
        parts = [split_h_hat(normal_form(w)) for w in images]
        for h, hat in parts[1:]:
            assert h.letters == parts[0][0].letters
            assert hat.letters == parts[0][1].letters
        h, hat = parts[0]
        assert support(h) == {0} and support(hat) == {1, 2}


class TestSweep:
    def test_small_sweeps_find_nothing(self):
        for graph in [EDGE, FREE2]:
            report = sweep(graph, 5, 2)
            assert report["counterexamples"] == []
            assert report["braid_pairs_unequal"] == 0

    def test_triangle_sweep(self):
        triangle = Graph(3, [(0, 1), (0, 2), (1, 2)])
        report = sweep(triangle, 5, 2)
        assert report["counterexamples"] == []

    def test_sweep_all_shape(self):
        report = sweep_all(max_vertices=2, strands=5, max_len=2)
        assert report["graphs"] == 3
        assert report["counterexamples"] == []

    def test_class_enumeration_counts_free_group(self):
        # reduced words of length <= 2 in F_2: 1 + 4 + 12
        report = sweep(FREE2, 5, 2)
        assert report["classes"] == 17
