"""Finite checks of the window combinatorics behind the rewriting system.

The first group of oracles is exhaustive: they scan every choice of table
elements and positions and confirm that short factors of defining windows
cannot collide except in the trivial ways (NotPossible, MaxOne, Big,
Overlapp, and their mirror-image Sym* variants, obtained by reading words
right to left and flipping positions p to n+1-p).

The second group (Stepss, Step3, SymStep3) is empirical: it enumerates
members of actual congruence classes and confirms the forced prefix/suffix
shapes of equivalent words.  Those checks sample seed words inside a
configurable radius, so they are evidence, not proof.

Every oracle returns a LemmaReport; a planted violation (a table that is not
a regular quaternion group) must surface as passed=False with a populated
counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .perms import Perm
from .quaternion import GroupTable
from .words import RewriteConfig, Word, class_of, format_word


class LemmaId(str, Enum):
    NOT_POSSIBLE = "NotPossible"
    MAX_ONE = "MaxOne"
    BIG = "Big"
    OVERLAPP = "Overlapp"
    STEPSS = "Stepss"
    STEP3 = "Step3"
    SYM_NOT_POSSIBLE = "SymNotPossible"
    SYM_MAX_ONE = "SymMaxOne"
    SYM_STEP3 = "SymStep3"
    SYM_OVERLAPP = "SymOverlapp"


@dataclass
class LemmaReport:
    lemma_id: LemmaId
    k: int
    passed: bool
    counterexample: dict | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing report cannot carry a counterexample")

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id.value,
            "k": self.k,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "stats": self.stats,
        }


def _name(g: GroupTable, idx: int) -> str:
    return g.label_name(idx)


def _position_table(g: GroupTable) -> dict[tuple[int, int], list[int]]:
    """(position, value) -> indices of elements sending position to value."""
    table: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(g.elements):
        for pos in range(1, g.n + 1):
            table.setdefault((pos, e[pos - 1]), []).append(idx)
    return table


def verify_not_possible(g: GroupTable) -> LemmaReport:
    """Adjacent pairs from the lower-half positions of one window never match
    adjacent pairs from the upper-half positions of another."""
    n, half = g.n, g.n // 2
    instances = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            for p in range(1, half):            # 1 <= p <= n/2 - 1
                a, b = s[p - 1], s[p]
                for q in range(half + 1, n):    # n/2 < q <= n - 1
                    instances += 1
                    if t[q - 1] == a and t[q] == b:
                        return LemmaReport(
                            LemmaId.NOT_POSSIBLE, g.k, False,
                            counterexample={
                                "sigma": _name(g, si), "tau": _name(g, ti),
                                "p": p, "q": q, "pair": [a, b],
                            })
    return LemmaReport(LemmaId.NOT_POSSIBLE, g.k, True,
                       stats={"instances": instances})


def verify_sym_not_possible(g: GroupTable) -> LemmaReport:
    """Mirror of NotPossible: upper-half pairs of one window against
    lower-half pairs of another."""
    n, half = g.n, g.n // 2
    instances = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            for p in range(half + 1, n):        # n/2 < p <= n - 1
                a, b = s[p - 1], s[p]
                for q in range(1, half):        # 1 <= q <= n/2 - 1
                    instances += 1
                    if t[q - 1] == a and t[q] == b:
                        return LemmaReport(
                            LemmaId.SYM_NOT_POSSIBLE, g.k, False,
                            counterexample={
                                "sigma": _name(g, si), "tau": _name(g, ti),
                                "p": p, "q": q, "pair": [a, b],
                            })
    return LemmaReport(LemmaId.SYM_NOT_POSSIBLE, g.k, True,
                       stats={"instances": instances})


def verify_max_one(g: GroupTable) -> LemmaReport:
    """A suffix of one window starting before position n/2 - 1 matches an
    interior factor of another only trivially: the factor has length 1, or it
    is the whole window of the same element."""
    n, half = g.n, g.n // 2
    instances = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            for i in range(1, half - 1):        # 1 <= i < n/2 - 1
                for j in range(i, n + 1):
                    instances += 1
                    if s[n - j + i - 1:] == t[i - 1:j]:
                        if j == i or (j == n and si == ti):
                            continue
                        return LemmaReport(
                            LemmaId.MAX_ONE, g.k, False,
                            counterexample={
                                "sigma": _name(g, si), "tau": _name(g, ti),
                                "i": i, "j": j,
                                "factor": list(t[i - 1:j]),
                            })
    return LemmaReport(LemmaId.MAX_ONE, g.k, True,
                       stats={"instances": instances})


def verify_sym_max_one(g: GroupTable) -> LemmaReport:
    """Mirror of MaxOne: a prefix of one window against an interior factor
    anchored past position n/2 + 2."""
    n, half = g.n, g.n // 2
    instances = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            for i in range(half + 3, n + 1):    # n/2 + 2 < i <= n
                for j in range(1, i + 1):
                    instances += 1
                    if s[:i - j + 1] == t[j - 1:i]:
                        if j == i or (j == 1 and si == ti):
                            continue
                        return LemmaReport(
                            LemmaId.SYM_MAX_ONE, g.k, False,
                            counterexample={
                                "sigma": _name(g, si), "tau": _name(g, ti),
                                "i": i, "j": j,
                                "factor": list(t[j - 1:i]),
                            })
    return LemmaReport(LemmaId.SYM_MAX_ONE, g.k, True,
                       stats={"instances": instances})


def verify_big(g: GroupTable) -> LemmaReport:
    """Windows of length n/2 + 1 inside defining words determine both the
    element and the offset."""
    n, half = g.n, g.n // 2
    instances = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            for j in range(1, half + 1):
                for i in range(1, half + 1):
                    instances += 1
                    if s[j - 1:j + half] == t[i - 1:i + half]:
                        if i == j and si == ti:
                            continue
                        return LemmaReport(
                            LemmaId.BIG, g.k, False,
                            counterexample={
                                "sigma": _name(g, si), "tau": _name(g, ti),
                                "i": i, "j": j,
                                "factor": list(s[j - 1:j + half]),
                            })
    return LemmaReport(LemmaId.BIG, g.k, True, stats={"instances": instances})


def verify_overlapp(g: GroupTable) -> LemmaReport:
    """A tail-anchored mixed word s(j..l) t(l+1..m), m >= n-1, matches a
    factor of a single window starting at position 1 or 2 only when both
    parts are single letters (j = l and l + 1 = m).

    Instances whose right side would need positions beyond n are counted as
    unsatisfiable rather than silently skipped.
    """
    n = g.n
    postab = _position_table(g)
    instances = 0
    unsatisfiable = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            if si == ti:
                continue
            for m in (n - 1, n):
                for l in range(1, m):
                    for j in range(1, l + 1):
                        lhs = s[j - 1:l] + t[l:m]
                        for i in (1, 2):
                            instances += 1
                            end = m - j + i
                            if end > n:
                                unsatisfiable += 1
                                continue
                            for li in postab.get((i, lhs[0]), ()):
                                lam = g.elements[li]
                                if lam[i - 1:end] == lhs:
                                    if j == l and l + 1 == m:
                                        continue
                                    return LemmaReport(
                                        LemmaId.OVERLAPP, g.k, False,
                                        counterexample={
                                            "sigma": _name(g, si),
                                            "tau": _name(g, ti),
                                            "lambda": _name(g, li),
                                            "j": j, "l": l, "m": m, "i": i,
                                            "word": list(lhs),
                                        })
    return LemmaReport(LemmaId.OVERLAPP, g.k, True,
                       stats={"instances": instances,
                              "unsatisfiable": unsatisfiable})


def verify_sym_overlapp(g: GroupTable) -> LemmaReport:
    """Mirror of Overlapp: the mixed word starts at position 1 or 2 and the
    matching factor of a single window ends at position n-1 or n."""
    n = g.n
    postab = _position_table(g)
    instances = 0
    unsatisfiable = 0
    for si, s in enumerate(g.elements):
        for ti, t in enumerate(g.elements):
            if si == ti:
                continue
            for j in (1, 2):
                for l in range(j, n):
                    for m in range(l + 1, n + 1):
                        lhs = s[j - 1:l] + t[l:m]
                        for e in (n - 1, n):
                            instances += 1
                            start = e - (m - j)
                            if start < 1:
                                unsatisfiable += 1
                                continue
                            for li in postab.get((start, lhs[0]), ()):
                                lam = g.elements[li]
                                if lam[start - 1:e] == lhs:
                                    if j == l and l + 1 == m:
                                        continue
                                    return LemmaReport(
                                        LemmaId.SYM_OVERLAPP, g.k, False,
                                        counterexample={
                                            "sigma": _name(g, si),
                                            "tau": _name(g, ti),
                                            "lambda": _name(g, li),
                                            "j": j, "l": l, "m": m, "end": e,
                                            "word": list(lhs),
                                        })
    return LemmaReport(LemmaId.SYM_OVERLAPP, g.k, True,
                       stats={"instances": instances,
                              "unsatisfiable": unsatisfiable})


def _prefix_elements(g: GroupTable, postab, w: Word, length: int) -> list[int]:
    """Indices of elements whose first `length` images spell w[:length],
    located through the value at position 1."""
    return [i for i in postab.get((1, w[0]), ())
            if g.elements[i][:length] == w[:length]]


def _distinct_first_pairs(members: list[Word]) -> Iterator[tuple[Word, Word]]:
    for w1 in members:
        for w2 in members:
            if w1[0] != w2[0]:
                yield w1, w2


def default_stepss_seeds(g: GroupTable, max_extra: int,
                         rng: random.Random, per_length: int = 4) -> list[Word]:
    """Seed words: an image tuple with a random tail, one batch per length,
    plus chained seeds where a second window overlaps the first in exactly
    one letter (those classes mix rewrites at both ends, so the two words of
    a pair can break their windows at letter n in different ways)."""
    n = g.n
    pin1 = {e[0]: e for e in g.elements}
    seeds = []
    for extra in range(max_extra + 1):
        for _ in range(per_length):
            e = g.elements[rng.randrange(len(g.elements))]
            tail = tuple(rng.randint(1, n) for _ in range(extra))
            seeds.append(e + tail)
        if extra >= n - 1:
            e = g.elements[rng.randrange(len(g.elements))]
            nxt = pin1.get(e[n - 1])
            if nxt is not None:
                pad = tuple(rng.randint(1, n)
                            for _ in range(extra - (n - 1)))
                seeds.append(e + nxt[1:] + pad)
    return seeds


def verify_stepss(g: GroupTable, cfg: RewriteConfig,
                  max_extra: int | None = None,
                  rng: random.Random | None = None,
                  seeds: Iterable[Word] = (),
                  seeds_per_length: int = 4,
                  pair_cap: int = 20000) -> LemmaReport:
    """Equivalent words of equal length whose first letters differ must each
    start with the first n-1 letters of some window, and at most one of the
    two may break the window at its n-th letter.

    Pairs are drawn from congruence classes of seed words of length up to
    n + max_extra, so this samples a radius rather than proving the claim.
    """
    n = g.n
    if max_extra is None:
        max_extra = n
    rng = rng if rng is not None else random.Random(0)
    postab = _position_table(g)
    all_seeds = list(seeds) or default_stepss_seeds(g, max_extra, rng,
                                                    seeds_per_length)
    pairs = 0
    cond_counts = [0, 0, 0]  # both letters match / only first / only second
    classes = 0
    for seed in all_seeds:
        cls = class_of(seed, g, cfg)
        classes += 1
        members = sorted(cls.members)
        for w1, w2 in _distinct_first_pairs(members):
            if pairs >= pair_cap:
                break
            pairs += 1
            bad = _stepss_pair_check(g, postab, w1, w2, cond_counts)
            if bad is not None:
                return LemmaReport(LemmaId.STEPSS, g.k, False,
                                   counterexample=bad,
                                   stats={"classes": classes, "pairs": pairs})
    return LemmaReport(LemmaId.STEPSS, g.k, True,
                       stats={"classes": classes, "pairs": pairs,
                              "condition_counts": cond_counts})


def _stepss_pair_check(g: GroupTable, postab, w1: Word, w2: Word,
                       cond_counts: list[int]) -> dict | None:
    n = g.n
    base = {"w1": format_word(w1), "w2": format_word(w2)}
    if len(w1) < n:
        return {**base, "reason": "equivalent pair shorter than a window"}
    sig = _prefix_elements(g, postab, w1, n - 1)
    tau = _prefix_elements(g, postab, w2, n - 1)
    if not sig or not tau:
        return {**base, "reason": "first n-1 letters are not a window prefix"}
    c1 = any(g.elements[i][n - 1] == w1[n - 1] for i in sig)
    c2 = any(g.elements[i][n - 1] == w2[n - 1] for i in tau)
    if not c1 and not c2:
        return {**base, "reason": "both words break their window at letter n"}
    if c1 and c2:
        cond_counts[0] += 1
    elif c1:
        cond_counts[1] += 1
    else:
        cond_counts[2] += 1
    return None


def _step3_tail(g: GroupTable, postab, t: Perm, rng: random.Random,
                max_tail: int) -> Word:
    """Half the time, a tail that completes a window one letter into the
    kept prefix (so rewrites actually fire); otherwise uniform letters."""
    n = g.n
    if rng.random() < 0.5:
        cands = postab.get((1, t[n - 1]), ())
        if cands:
            lam = g.elements[cands[rng.randrange(len(cands))]]
            extra = rng.randint(0, max(0, max_tail - (n - 1)))
            return lam[1:] + tuple(rng.randint(1, n) for _ in range(extra))
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_tail)))


def verify_step3(g: GroupTable, cfg: RewriteConfig,
                 samples: int = 1000,
                 rng: random.Random | None = None,
                 max_tail: int | None = None) -> LemmaReport:
    """Every member of the class of t(i+1..n) w2 either keeps that exact
    prefix or replaces its last letter by a fresh window prefix of length
    n-1.  `samples` random tails are drawn per (element, i) cell."""
    n = g.n
    rng = rng if rng is not None else random.Random(0)
    if max_tail is None:
        max_tail = n
    postab = _position_table(g)
    instances = 0
    members_checked = 0
    for ti, t in enumerate(g.elements):
        for i in range(1, n):
            seen: set[Word] = set()
            for _ in range(samples):
                tail = _step3_tail(g, postab, t, rng, max_tail)
                w = t[i:] + tail
                if w in seen:
                    continue
                seen.add(w)
                instances += 1
                cls = class_of(w, g, cfg)
                for w1 in cls.members:
                    members_checked += 1
                    bad = _step3_member_check(g, postab, t, i, w1)
                    if bad is not None:
                        bad.update({"tau": _name(g, ti), "i": i,
                                    "seed": format_word(w)})
                        return LemmaReport(
                            LemmaId.STEP3, g.k, False, counterexample=bad,
                            stats={"instances": instances,
                                   "members_checked": members_checked})
    return LemmaReport(LemmaId.STEP3, g.k, True,
                       stats={"instances": instances,
                              "members_checked": members_checked})


def _step3_member_check(g: GroupTable, postab, t: Perm, i: int,
                        w1: Word) -> dict | None:
    n = g.n
    if w1[:n - i] == t[i:]:
        return None
    head_len = n - 1 - i
    if w1[:head_len] != t[i:n - 1]:
        return {"w1": format_word(w1),
                "reason": "prefix leaves t(i+1..n-1) before letter n"}
    if len(w1) < head_len + n - 1:
        return {"w1": format_word(w1),
                "reason": "too short for the alternative prefix shape"}
    seg = w1[head_len:head_len + n - 1]
    if not _prefix_elements(g, postab, seg, n - 1):
        return {"w1": format_word(w1),
                "reason": "no window prefix after t(i+1..n-1)"}
    return None


def _sym_step3_head(g: GroupTable, postab, t: Perm, rng: random.Random,
                    max_tail: int) -> Word:
    """Mirror of _step3_tail: a head that completes a window one letter into
    the kept suffix, half the time."""
    n = g.n
    if rng.random() < 0.5:
        cands = postab.get((n, t[0]), ())
        if cands:
            lam = g.elements[cands[rng.randrange(len(cands))]]
            extra = rng.randint(0, max(0, max_tail - (n - 1)))
            return tuple(rng.randint(1, n) for _ in range(extra)) + lam[:n - 1]
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_tail)))


def verify_sym_step3(g: GroupTable, cfg: RewriteConfig,
                     samples: int = 1000,
                     rng: random.Random | None = None,
                     max_tail: int | None = None) -> LemmaReport:
    """Mirror of Step3 for suffixes: every member of the class of
    w2 t(1..i) either keeps that exact suffix or replaces the first letter
    of the t-part by a fresh length n-1 window suffix."""
    n = g.n
    rng = rng if rng is not None else random.Random(0)
    if max_tail is None:
        max_tail = n
    postab = _position_table(g)
    instances = 0
    members_checked = 0
    for ti, t in enumerate(g.elements):
        for i in range(1, n):
            seen: set[Word] = set()
            for _ in range(samples):
                head = _sym_step3_head(g, postab, t, rng, max_tail)
                w = head + t[:i]
                if w in seen:
                    continue
                seen.add(w)
                instances += 1
                cls = class_of(w, g, cfg)
                for w1 in cls.members:
                    members_checked += 1
                    bad = _sym_step3_member_check(g, postab, t, i, w1)
                    if bad is not None:
                        bad.update({"tau": _name(g, ti), "i": i,
                                    "seed": format_word(w)})
                        return LemmaReport(
                            LemmaId.SYM_STEP3, g.k, False, counterexample=bad,
                            stats={"instances": instances,
                                   "members_checked": members_checked})
    return LemmaReport(LemmaId.SYM_STEP3, g.k, True,
                       stats={"instances": instances,
                              "members_checked": members_checked})


def _suffix_elements(g: GroupTable, postab, seg: Word) -> list[int]:
    """Indices of elements whose images at positions 2..n spell seg."""
    n = g.n
    return [i for i in postab.get((2, seg[0]), ())
            if g.elements[i][1:n] == seg]


def _sym_step3_member_check(g: GroupTable, postab, t: Perm, i: int,
                            w1: Word) -> dict | None:
    n = g.n
    if w1[len(w1) - i:] == t[:i]:
        return None
    tail2 = t[1:i]  # t(2..i), empty when i = 1
    t2 = len(tail2)
    if t2 and w1[len(w1) - t2:] != tail2:
        return {"w1": format_word(w1),
                "reason": "suffix leaves t(2..i) after letter 1"}
    need = t2 + n - 1
    if len(w1) < need:
        return {"w1": format_word(w1),
                "reason": "too short for the alternative suffix shape"}
    seg = w1[len(w1) - need:len(w1) - t2]
    if not _suffix_elements(g, postab, seg):
        return {"w1": format_word(w1),
                "reason": "no window suffix before t(2..i)"}
    return None


def verify_symmetric_analogs(g: GroupTable, cfg: RewriteConfig,
                             samples: int = 1000,
                             rng: random.Random | None = None) -> list[LemmaReport]:
    """The four mirror-image oracles, in enum order."""
    return [
        verify_sym_not_possible(g),
        verify_sym_max_one(g),
        verify_sym_step3(g, cfg, samples=samples, rng=rng),
        verify_sym_overlapp(g),
    ]


def exhaustive_reports(g: GroupTable) -> list[LemmaReport]:
    """The oracles that scan their whole quantifier range."""
    return [
        verify_not_possible(g),
        verify_max_one(g),
        verify_big(g),
        verify_overlapp(g),
        verify_sym_not_possible(g),
        verify_sym_max_one(g),
        verify_sym_overlapp(g),
    ]


def run_lemma_suite(g: GroupTable, cfg: RewriteConfig,
                    stepss_extra: int | None = None,
                    step3_samples: int = 1000,
                    rng: random.Random | None = None) -> list[LemmaReport]:
    """All ten oracles, deterministic order."""
    rng = rng if rng is not None else random.Random(0)
    return [
        verify_not_possible(g),
        verify_max_one(g),
        verify_big(g),
        verify_overlapp(g),
        verify_stepss(g, cfg, max_extra=stepss_extra, rng=rng),
        verify_step3(g, cfg, samples=step3_samples, rng=rng),
        verify_sym_not_possible(g),
        verify_sym_max_one(g),
        verify_sym_step3(g, cfg, samples=step3_samples, rng=rng),
        verify_sym_overlapp(g),
    ]
