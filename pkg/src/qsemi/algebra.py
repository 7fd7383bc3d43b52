"""Sparse elements of the monoid algebra over a prime field F_p.

Elements are dictionaries from canonical word forms to nonzero coefficients
mod p.  Multiplication concatenates supports pairwise and re-canonicalizes,
so coefficients of equivalent products merge (and may cancel mod p).  The
zero-divisor search repeatedly multiplies random nonzero elements looking
for a vanishing product; the canonicalizer is a parameter so the identical
search can run against a deliberately degenerate quotient as a control.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable

from .quaternion import GroupTable
from .words import (RewriteConfig, Word, canonicalizer, concat, format_word,
                    random_word, seeded_word)

Canon = Callable[[Word], Word]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class AlgebraElement:
    """Finitely supported map from canonical words to F_p minus zero."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict[Word, int]):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        for w, c in terms.items():
            if not 1 <= c <= p - 1:
                raise ValueError(f"coefficient {c} of {w} not reduced mod {p}")
        self.p = p
        self.terms = dict(terms)

    @classmethod
    def zero(cls, p: int) -> "AlgebraElement":
        return cls(p, {})

    def is_zero(self) -> bool:
        return not self.terms

    def support_lengths(self) -> set[int]:
        return {len(w) for w in self.terms}

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement)
                and self.p == other.p and self.terms == other.terms)

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"AlgebraElement(p={self.p}, {self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c}*{format_word(w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [{"coef": c, "word": format_word(w)}
                      for w, c in sorted(self.terms.items())],
        }


def element_from_pairs(pairs: Iterable[tuple[Word, int]], p: int,
                       canon: Canon) -> AlgebraElement:
    """Build an element, canonicalizing words and merging coefficients."""
    terms: dict[Word, int] = {}
    for w, c in pairs:
        key = canon(tuple(w))
        terms[key] = (terms.get(key, 0) + c) % p
    return AlgebraElement(p, {w: c for w, c in terms.items() if c})


def make_element(pairs: Iterable[tuple[Word, int]], p: int,
                 g: GroupTable, cfg: RewriteConfig) -> AlgebraElement:
    return element_from_pairs(pairs, p, canonicalizer(g, cfg))


def algebra_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.p != y.p:
        raise ValueError("mixed moduli")
    terms = dict(x.terms)
    for w, c in y.terms.items():
        s = (terms.get(w, 0) + c) % x.p
        if s:
            terms[w] = s
        else:
            terms.pop(w, None)
    return AlgebraElement(x.p, terms)


def mul_with_canon(x: AlgebraElement, y: AlgebraElement,
                   canon: Canon) -> AlgebraElement:
    if x.p != y.p:
        raise ValueError("mixed moduli")
    p = x.p
    terms: dict[Word, int] = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            key = canon(concat(w1, w2))
            s = (terms.get(key, 0) + c1 * c2) % p
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return AlgebraElement(p, terms)


def algebra_mul(x: AlgebraElement, y: AlgebraElement, g: GroupTable,
                cfg: RewriteConfig,
                cache: dict[Word, Word] | None = None) -> AlgebraElement:
    return mul_with_canon(x, y, canonicalizer(g, cfg, cache))


def random_element(rng: random.Random, p: int, canon: Canon,
                   word_sampler: Callable[[random.Random], Word],
                   max_support: int) -> AlgebraElement:
    """Random nonzero element; resamples if everything cancels."""
    while True:
        size = rng.randint(1, max_support)
        pairs = [(word_sampler(rng), rng.randint(1, p - 1))
                 for _ in range(size)]
        x = element_from_pairs(pairs, p, canon)
        if not x.is_zero():
            return x


def zero_divisor_search_with_canon(
        canon: Canon, n_letters: int, p: int, trials: int, max_support: int,
        max_len: int, rng: random.Random | None = None,
        word_sampler: Callable[[random.Random], Word] | None = None,
        progress: Callable[[int], None] | None = None,
) -> tuple[AlgebraElement, AlgebraElement] | None:
    """Random search for x, y != 0 with x*y = 0 under the given
    canonicalizer.  Returns the first hit or None."""
    rng = rng if rng is not None else random.Random(0)
    if word_sampler is None:
        def word_sampler(r: random.Random) -> Word:
            return random_word(r, n_letters, r.randint(1, max_len))
    for trial in range(trials):
        x = random_element(rng, p, canon, word_sampler, max_support)
        y = random_element(rng, p, canon, word_sampler, max_support)
        if mul_with_canon(x, y, canon).is_zero():
            return x, y
        if progress is not None and (trial + 1) % 1000 == 0:
            progress(trial + 1)
    return None


def zero_divisor_search(g: GroupTable, cfg: RewriteConfig, p: int = 2,
                        trials: int = 10000, max_support: int = 3,
                        max_len: int = 10,
                        rng: random.Random | None = None,
                        progress: Callable[[int], None] | None = None,
                        ) -> tuple[AlgebraElement, AlgebraElement] | None:
    """Search the monoid algebra itself.  Support words are biased to
    contain defining windows so products actually merge terms."""
    rng = rng if rng is not None else random.Random(0)

    def sampler(r: random.Random) -> Word:
        return seeded_word(r, g, r.randint(1, max_len))

    return zero_divisor_search_with_canon(
        canonicalizer(g, cfg, {}), g.n, p, trials, max_support, max_len, rng,
        word_sampler=sampler, progress=progress)
