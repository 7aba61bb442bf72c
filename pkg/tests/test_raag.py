import itertools
import random
from collections import deque

import pytest

import corpus
from graphbraids import (
    Graph,
    GraphBraidError,
    RaagWord,
    WordFormatError,
    cyclic_reduce,
    delete_generators,
    exponent_sum,
    link_of,
    nonisomorphic_graphs,
    parse_raag_word,
    pure_factors,
    split_h_hat,
    support,
    word_to_text,
    words_equal,
)
from graphbraids.raag import commutator, concat, inverse, normal_form

EDGE = Graph(2, [(0, 1)])
FREE2 = Graph(2, [])
P3 = Graph(3, [(0, 1), (1, 2)])


def adjacency_sets(graph):
    adj = [set() for _ in range(graph.vertex_count)]
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_normal_form(word: RaagWord) -> tuple:
    """Oracle: explore single swaps and adjacent cancellations exhaustively."""
    adj = adjacency_sets(word.graph)
    start = tuple(word.letters)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            (g1, s1), (g2, s2) = w[i], w[i + 1]
            nxt = None
            if g1 == g2 and s1 == -s2:
                nxt = w[:i] + w[i + 2 :]
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
            if g1 != g2 and g2 in adj[g1]:
                swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    shortest = min(len(w) for w in seen)
    return min(w for w in seen if len(w) == shortest)


def random_word(rng, graph, length):
    return RaagWord(
        graph,
        tuple(
            (rng.randrange(graph.vertex_count), rng.choice((1, -1)))
            for _ in range(length)
        ),
    )


class TestNormalForm:
    def test_commuting_pair_cancels(self):
        w = parse_raag_word("g2 g1 g2^-1", EDGE)
        assert word_to_text(normal_form(w)) == "g1"

    def test_free_commutator_stays(self):
        w = parse_raag_word("g1 g2 g1^-1 g2^-1", FREE2)
        assert len(normal_form(w)) == 4

    def test_non_adjacent_conjugate_keeps_length(self):
        w = parse_raag_word("g3 g1 g3^-1", P3)
        assert len(normal_form(w)) == 3

    def test_equality_decision(self):
        u = parse_raag_word("g1 g2", EDGE)
        v = parse_raag_word("g2 g1", EDGE)
        assert words_equal(u, v)
        assert not words_equal(
            parse_raag_word("g1 g2", FREE2), parse_raag_word("g2 g1", FREE2)
        )

    def test_exhaustive_against_bfs_two_generators(self):
        for graph in (EDGE, FREE2):
            alphabet = [(g, s) for g in range(2) for s in (1, -1)]
            for length in range(5):
                for letters in itertools.product(alphabet, repeat=length):
                    w = RaagWord(graph, letters)
                    assert normal_form(w).letters == bfs_normal_form(w)

    def test_exhaustive_against_bfs_three_generators(self):
        alphabet = [(g, s) for g in range(3) for s in (1, -1)]
        for graph in nonisomorphic_graphs(3):
            for length in range(4):
                for letters in itertools.product(alphabet, repeat=length):
                    w = RaagWord(graph, letters)
                    assert normal_form(w).letters == bfs_normal_form(w)

    @pytest.mark.parametrize("seed", range(4))
    def test_random_against_bfs_four_generators(self, seed):
        rng = random.Random(seed)
        graphs = nonisomorphic_graphs(4)
        for _ in range(60):
            graph = rng.choice(graphs)
            w = random_word(rng, graph, rng.randint(5, 8))
            assert normal_form(w).letters == bfs_normal_form(w)

    @pytest.mark.parametrize("seed", range(3))
    def test_relator_insertion_invariance(self, seed):
        rng = random.Random(1000 + seed)
        graphs = [EDGE, FREE2, P3, corpus.cycle(4)]
        for _ in range(170):
            graph = rng.choice(graphs)
            w = random_word(rng, graph, rng.randint(0, 12))
            pos = rng.randint(0, len(w.letters))
            if graph.edges and rng.random() < 0.5:
                u, v = rng.choice(graph.edges)
                relator = ((u, 1), (v, 1), (u, -1), (v, -1))
            else:
                g = rng.randrange(graph.vertex_count)
                s = rng.choice((1, -1))
                relator = ((g, s), (g, -s))
            spliced = RaagWord(
                graph, w.letters[:pos] + relator + w.letters[pos:]
            )
            assert normal_form(spliced).letters == normal_form(w).letters

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(50):
            w = random_word(rng, P3, rng.randint(0, 10))
            nf = normal_form(w)
            assert normal_form(nf).letters == nf.letters


class TestExponentSum:
    def test_examples(self):
        w = parse_raag_word("g1 g2 g1^-1 g2", FREE2)
        assert exponent_sum(w, 0) == 0
        assert exponent_sum(w, 1) == 2

    def test_homomorphism_property(self):
        rng = random.Random(11)
        for _ in range(40):
            u = random_word(rng, P3, rng.randint(0, 8))
            v = random_word(rng, P3, rng.randint(0, 8))
            for k in range(3):
                assert exponent_sum(concat(u, v), k) == exponent_sum(
                    u, k
                ) + exponent_sum(v, k)

    def test_invariant_under_normal_form(self):
        rng = random.Random(12)
        for _ in range(40):
            w = random_word(rng, corpus.cycle(4), rng.randint(0, 10))
            for k in range(4):
                assert exponent_sum(w, k) == exponent_sum(normal_form(w), k)


class TestSupportAndLink:
    def test_examples(self):
        w = parse_raag_word("g1 g3", P3)
        assert support(w) == {0, 2}
        assert link_of(w) == {1}

    def test_empty_word(self):
        w = RaagWord(P3, ())
        assert support(w) == set()
        assert link_of(w) == {0, 1, 2}

    def test_isolated_generator(self):
        w = parse_raag_word("g1", FREE2)
        assert link_of(w) == set()


class TestCyclicReduce:
    def test_free_conjugate(self):
        w = parse_raag_word("g1 g2 g1^-1", FREE2)
        p, core = cyclic_reduce(w)
        assert word_to_text(p) == "g1" and word_to_text(core) == "g2"

    def test_already_reduced(self):
        w = parse_raag_word("g1 g2", FREE2)
        p, core = cyclic_reduce(w)
        assert p.letters == () and core.letters == normal_form(w).letters

    def test_conjugation_identity(self):
        w = parse_raag_word("g2 g1 g3 g1^-1 g2^-1", P3)
        p, core = cyclic_reduce(w)
        assert words_equal(concat(p, core, inverse(p)), w)
        assert len(core) <= len(normal_form(w))

    @pytest.mark.parametrize("seed", range(3))
    def test_random_conjugation_identity(self, seed):
        rng = random.Random(2000 + seed)
        for _ in range(60):
            graph = rng.choice([EDGE, FREE2, P3])
            w = random_word(rng, graph, rng.randint(0, 10))
            p, core = cyclic_reduce(w)
            assert words_equal(concat(p, core, inverse(p)), w)
            assert len(core) <= len(normal_form(w))
            # the core really is cyclically reduced
            assert cyclic_reduce(core)[0].letters == ()


class TestPureFactors:
    def test_two_factors(self):
        w = parse_raag_word("g1 g1 g2", EDGE)
        assert [word_to_text(f) for f in pure_factors(w)] == ["g1 g1", "g2"]

    def test_free_word_single_factor(self):
        w = parse_raag_word("g1 g2 g1", FREE2)
        assert [word_to_text(f) for f in pure_factors(w)] == ["g1 g2 g1"]

    def test_single_letter(self):
        w = parse_raag_word("g1", P3)
        assert [word_to_text(f) for f in pure_factors(w)] == ["g1"]

    def test_not_cyclically_reduced_rejected(self):
        with pytest.raises(GraphBraidError):
            pure_factors(parse_raag_word("g1 g2 g1^-1", FREE2))

    @pytest.mark.parametrize("seed", range(3))
    def test_factors_commute_and_multiply_back(self, seed):
        rng = random.Random(3000 + seed)
        graphs = nonisomorphic_graphs(3)
        for _ in range(40):
            graph = rng.choice(graphs)
            _, core = cyclic_reduce(random_word(rng, graph, rng.randint(1, 8)))
            if not core.letters:
                continue
            factors = pure_factors(core)
            for f1, f2 in itertools.combinations(factors, 2):
                assert words_equal(commutator(f1, f2), RaagWord(graph, ()))
            assert words_equal(concat(*factors), core)


class TestSplitHHat:
    def test_all_factors_live(self):
        h, hat = split_h_hat(parse_raag_word("g1 g1 g2", EDGE))
        assert word_to_text(h) == "g1 g1 g2" and hat.letters == ()

    def test_balanced_word_goes_to_hat(self):
        w = parse_raag_word("g1 g2 g1^-1 g2^-1", FREE2)
        h, hat = split_h_hat(w)
        assert h.letters == () and words_equal(hat, w)

    def test_mixed(self):
        w = parse_raag_word("g1 g2 g1^-1 g2", FREE2)
        h, hat = split_h_hat(w)
        assert exponent_sum(h, 1) == 2 and hat.letters == ()

    @pytest.mark.parametrize("seed", range(3))
    def test_hat_is_balanced_and_product_recovers(self, seed):
        rng = random.Random(4000 + seed)
        for _ in range(40):
            graph = rng.choice(nonisomorphic_graphs(3))
            _, core = cyclic_reduce(random_word(rng, graph, rng.randint(0, 8)))
            h, hat = split_h_hat(core)
            for k in range(graph.vertex_count):
                assert exponent_sum(hat, k) == 0
            assert words_equal(concat(h, hat), core)


class TestDeleteGenerators:
    def test_keep_nothing(self):
        w = parse_raag_word("g1 g2 g3", P3)
        assert delete_generators(w, set()).letters == ()

    def test_keep_support(self):
        w = parse_raag_word("g3 g1 g3^-1", P3)
        kept = delete_generators(w, support(w))
        assert words_equal(kept, w)

    @pytest.mark.parametrize("seed", range(3))
    def test_respects_equality(self, seed):
        # equal words stay equal after deleting generators
        rng = random.Random(5000 + seed)
        for _ in range(40):
            graph = rng.choice([EDGE, P3, corpus.cycle(4)])
            w = random_word(rng, graph, rng.randint(0, 8))
            # equivalent representative: conjugate by a commuting relator splice
            pos = rng.randint(0, len(w.letters))
            g = rng.randrange(graph.vertex_count)
            spliced = RaagWord(
                graph, w.letters[:pos] + ((g, 1), (g, -1)) + w.letters[pos:]
            )
            keep = {
                v for v in range(graph.vertex_count) if rng.random() < 0.5
            }
            assert words_equal(
                delete_generators(w, keep), delete_generators(spliced, keep)
            )


class TestParsing:
    def test_exponent_token(self):
        w = parse_raag_word("g1^3 g2^-2", P3)
        assert w.letters == ((0, 1), (0, 1), (0, 1), (1, -1), (1, -1))

    def test_bad_token(self):
        with pytest.raises(WordFormatError):
            parse_raag_word("x1", P3)

    def test_out_of_range(self):
        with pytest.raises(WordFormatError):
            parse_raag_word("g4", P3)

    def test_roundtrip(self):
        text = "g1 g2^-1 g1"
        assert word_to_text(parse_raag_word(text, P3)) == text
