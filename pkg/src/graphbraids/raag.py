"""Right-angled Artin group words over a defining graph.

Generators are the vertices of the defining graph; two generators commute
exactly when they are adjacent. The word problem is decided by a canonical
normal form: cancel every inverse pair separated only by commuting letters,
then repeatedly pull the smallest generator that can reach the front. Two
words are equal in the group iff their normal forms are letter-identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import GraphBraidError, WordFormatError
from .graphs import Graph

Letter = tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class RaagWord:
    graph: Graph
    letters: tuple[Letter, ...]

    def __post_init__(self):
        for g, s in self.letters:
            if not 0 <= g < self.graph.vertex_count:
                raise WordFormatError(f"generator g{g + 1} out of range")
            if s not in (1, -1):
                raise WordFormatError(f"letter sign must be +-1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)


@lru_cache(maxsize=None)
def _adjacency(graph: Graph) -> tuple[frozenset[int], ...]:
    adj = [set() for _ in range(graph.vertex_count)]
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    return tuple(frozenset(s) for s in adj)


_TOKEN = re.compile(r"^g(\d+)(\^(-?\d+))?$")


def parse_raag_word(text: str, graph: Graph) -> RaagWord:
    """Parse whitespace-separated tokens g<k>, g<k>^-1 or g<k>^<e> (1-based)."""
    letters: list[Letter] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise WordFormatError(f"bad token {token!r}")
        gen = int(m.group(1)) - 1
        if not 0 <= gen < graph.vertex_count:
            raise WordFormatError(f"generator {token!r} out of range")
        exp = int(m.group(3)) if m.group(3) is not None else 1
        sign = 1 if exp > 0 else -1
        letters.extend((gen, sign) for _ in range(abs(exp)))
    return RaagWord(graph, tuple(letters))


def word_to_text(w: RaagWord) -> str:
    parts = []
    for g, s in w.letters:
        parts.append(f"g{g + 1}" if s > 0 else f"g{g + 1}^-1")
    return " ".join(parts)


def concat(*words: RaagWord) -> RaagWord:
    graph = words[0].graph
    letters: list[Letter] = []
    for w in words:
        assert w.graph == graph, "words over different defining graphs"
        letters.extend(w.letters)
    return RaagWord(graph, tuple(letters))


def inverse(w: RaagWord) -> RaagWord:
    return RaagWord(w.graph, tuple((g, -s) for g, s in reversed(w.letters)))


def commutator(u: RaagWord, v: RaagWord) -> RaagWord:
    return concat(u, v, inverse(u), inverse(v))


def _reduce(letters: list[Letter], adj) -> list[Letter]:
    """Cancel x...x^-1 pairs whose in-between letters all commute with x."""
    changed = True
    while changed:
        changed = False
        for i in range(len(letters)):
            g, s = letters[i]
            for j in range(i + 1, len(letters)):
                g2, s2 = letters[j]
                if g2 == g:
                    if s2 == -s:
                        del letters[j]
                        del letters[i]
                        changed = True
                    break
                if g2 not in adj[g]:
                    break
            if changed:
                break
    return letters


def _front_movable(letters: list[Letter], idx: int, adj) -> bool:
    g = letters[idx][0]
    return all(h in adj[g] for h, _ in letters[:idx])


def _back_movable(letters: list[Letter], idx: int, adj) -> bool:
    g = letters[idx][0]
    return all(h in adj[g] for h, _ in letters[idx + 1 :])


def normal_form(w: RaagWord) -> RaagWord:
    """Shortlex-least representative under commutations; decides equality."""
    adj = _adjacency(w.graph)
    letters = _reduce(list(w.letters), adj)
    out: list[Letter] = []
    while letters:
        best = 0
        for idx in range(1, len(letters)):
            if letters[idx][0] < letters[best][0] and _front_movable(letters, idx, adj):
                best = idx
        out.append(letters.pop(best))
    return RaagWord(w.graph, tuple(out))


def words_equal(u: RaagWord, v: RaagWord) -> bool:
    return normal_form(u).letters == normal_form(v).letters


def exponent_sum(w: RaagWord, k: int) -> int:
    """Total exponent of generator k; a homomorphism to the integers."""
    return sum(s for g, s in w.letters if g == k)


def support(w: RaagWord) -> set[int]:
    """Generators present in the reduced word."""
    return {g for g, _ in normal_form(w).letters}


def link_of(w: RaagWord) -> set[int]:
    """Vertices outside the support adjacent to every support vertex."""
    adj = _adjacency(w.graph)
    supp = support(w)
    return {
        v
        for v in range(w.graph.vertex_count)
        if v not in supp and all(v in adj[u] for u in supp)
    }


def cyclic_reduce(w: RaagWord) -> tuple[RaagWord, RaagWord]:
    """Write w = p * core * p^-1 with the core cyclically reduced.

    A reduced word shortens cyclically iff some letter can commute to the
    front while its inverse commutes to the back; the pair is then stripped
    and the letter appended to the conjugator. Pairs are chosen smallest
    generator first, so p is deterministic.
    """
    adj = _adjacency(w.graph)
    letters = list(normal_form(w).letters)
    conj: list[Letter] = []
    while True:
        found = None
        for i in range(len(letters)):
            g, s = letters[i]
            if found is not None and found[0] <= g:
                continue
            if not _front_movable(letters, i, adj):
                continue
            for j in range(len(letters) - 1, i, -1):
                if letters[j] == (g, -s) and _back_movable(letters, j, adj):
                    found = (g, i, j)
                    break
        if found is None:
            break
        _, i, j = found
        conj.append(letters[i])
        del letters[j]
        del letters[i]
    return (
        normal_form(RaagWord(w.graph, tuple(conj))),
        normal_form(RaagWord(w.graph, tuple(letters))),
    )


def is_cyclically_reduced(w: RaagWord) -> bool:
    p, _ = cyclic_reduce(w)
    return not p.letters


def pure_factors(w: RaagWord) -> list[RaagWord]:
    """Commuting factors given by components of the complemented support graph.

    The support of a cyclically reduced word splits along the connected
    components of the complement of its induced subgraph; letters in distinct
    components commute, so grouping letters by component factors the word.
    Factors are ordered by their smallest support vertex.
    """
    if not is_cyclically_reduced(w):
        raise GraphBraidError("pure factors need a cyclically reduced word")
    word = normal_form(w)
    supp = sorted({g for g, _ in word.letters})
    adj = _adjacency(w.graph)
    comp: dict[int, int] = {}
    for v in supp:
        if v in comp:
            continue
        comp[v] = v
        stack = [v]
        while stack:
            x = stack.pop()
            for y in supp:
                # complement within the support: non-adjacent means connected here
                if y not in comp and y not in adj[x] and y != x:
                    comp[y] = v
                    stack.append(y)
    roots = sorted(set(comp.values()))
    return [
        RaagWord(w.graph, tuple(l for l in word.letters if comp[l[0]] == root))
        for root in roots
    ]


def split_h_hat(w: RaagWord) -> tuple[RaagWord, RaagWord]:
    """Split off the pure factors carrying a nonzero exponent sum.

    Returns (h, h_hat): h multiplies the factors meeting
    {k : exponent_sum(w, k) != 0}, h_hat the rest, so every generator has
    exponent sum zero in h_hat and h * h_hat = w.
    """
    factors = pure_factors(w)
    word = normal_form(w)
    live = {g for g, _ in word.letters if exponent_sum(word, g) != 0}
    h_parts, hat_parts = [], []
    for f in factors:
        if {g for g, _ in f.letters} & live:
            h_parts.append(f)
        else:
            hat_parts.append(f)
    empty = RaagWord(w.graph, ())
    h = concat(*h_parts) if h_parts else empty
    hat = concat(*hat_parts) if hat_parts else empty
    return normal_form(h), normal_form(hat)


def delete_generators(w: RaagWord, keep: set[int]) -> RaagWord:
    """Kill every generator outside `keep`; the standard retraction."""
    return normal_form(
        RaagWord(w.graph, tuple(l for l in w.letters if l[0] in keep))
    )
