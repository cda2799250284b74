"""Hypothesis strategies and seeded generators shared by the tests."""

from __future__ import annotations

import random
from typing import List

from hypothesis import strategies as st

from linkmap.group_ring import LaurentPoly, RingElem
from linkmap.heisenberg import GX, GY, GZ, HeisenbergElem
from linkmap.milnor import Mf3Auto
from linkmap.theta import JKBlock, Stack, ThetaElem
from linkmap.triples import BasingShift, Triple
from linkmap.welded import BraidWord, braid_permutation

CTXS = (GX, GY, GZ)
small = st.integers(-4, 4)
contexts = st.sampled_from(CTXS)


@st.composite
def elems(draw, ctx=None, bound=4):
    ctx = draw(contexts) if ctx is None else ctx
    r = st.integers(-bound, bound)
    return HeisenbergElem(ctx, draw(r), draw(r), draw(r))


@st.composite
def ring_elems(draw, ctx=None, max_terms=4, bound=4):
    ctx = draw(contexts) if ctx is None else ctx
    e = st.integers(-bound, bound)
    records = draw(st.lists(st.tuples(e, e, e, st.integers(-3, 3)), max_size=max_terms))
    return RingElem.from_records(ctx, records)


@st.composite
def triples(draw, max_terms=4, bound=4):
    return Triple(*(draw(ring_elems(ctx, max_terms, bound)) for ctx in CTXS))


shifts = st.builds(BasingShift, small, small, small)
words = st.lists(st.sampled_from((1, 2, 3, -1, -2, -3)), max_size=10).map(tuple)
short_words = st.lists(st.sampled_from((1, 2, 3, -1, -2, -3)), max_size=3).map(tuple)
autos = st.tuples(short_words, short_words, short_words).map(Mf3Auto)


def _pure_completion(letters) -> tuple:
    """v letters that undo the permutation of `letters`."""
    perm = list(braid_permutation(BraidWord(tuple(letters))))
    tail = []
    for p in range(3):
        while perm[p] != p + 1:
            q = perm.index(p + 1)
            perm[q - 1], perm[q] = perm[q], perm[q - 1]
            tail.append(("v", q, 1))
    return tuple(letters) + tuple(tail)


letters = st.tuples(st.sampled_from("sv"), st.integers(1, 2), st.sampled_from((1, -1))).map(
    lambda a: (a[0], a[1], 1 if a[0] == "v" else a[2])
)
pure_braids = st.lists(letters, max_size=4).map(lambda ls: BraidWord(_pure_completion(ls)))


@st.composite
def kirk_polys(draw, max_degree=3):
    p = LaurentPoly("t")
    for n in range(1, max_degree + 1):
        c = draw(st.integers(-2, 2))
        p = p + c * (LaurentPoly.monomial("t", n) + LaurentPoly.monomial("t", -n) - 2)
    return p


@st.composite
def jk_blocks(draw):
    return JKBlock(draw(st.integers(1, 3)), draw(kirk_polys()), draw(kirk_polys()))


@st.composite
def stacks(draw, max_blocks=4):
    n = draw(st.integers(1, max_blocks))
    items: List = []
    for b in range(n):
        if b:
            items.append(draw(pure_braids))
        items.append(draw(jk_blocks()))
    return Stack.from_items(items)


theta_elems = st.builds(ThetaElem, triples(max_terms=3), autos)


# seeded generators for the counted acceptance runs

def rand_elem(rng: random.Random, ctx=GX, bound=3) -> HeisenbergElem:
    return HeisenbergElem(ctx, *(rng.randint(-bound, bound) for _ in range(3)))


def rand_ring(rng: random.Random, ctx, max_terms=4) -> RingElem:
    return RingElem.from_records(ctx, [
        tuple(rng.randint(-3, 3) for _ in range(3)) + (rng.choice((-2, -1, 1, 2)),)
        for _ in range(rng.randint(0, max_terms))
    ])


def rand_triple(rng: random.Random, max_terms=4) -> Triple:
    return Triple(*(rand_ring(rng, ctx, max_terms) for ctx in CTXS))


def rand_shift(rng: random.Random, bound=4) -> BasingShift:
    return BasingShift(*(rng.randint(-bound, bound) for _ in range(3)))


def rand_word(rng: random.Random, max_len=12) -> tuple:
    return tuple(rng.choice((1, 2, 3, -1, -2, -3)) for _ in range(rng.randint(0, max_len)))


def rand_auto(rng: random.Random, max_len=3) -> Mf3Auto:
    return Mf3Auto([rand_word(rng, max_len) for _ in range(3)])


def rand_pure_braid(rng: random.Random, max_len=4) -> BraidWord:
    ls = []
    for _ in range(rng.randint(0, max_len)):
        kind, i = rng.choice("sv"), rng.randint(1, 2)
        ls.append((kind, i, 1 if kind == "v" else rng.choice((1, -1))))
    return BraidWord(_pure_completion(ls))


def rand_kirk(rng: random.Random, max_degree=2) -> LaurentPoly:
    p = LaurentPoly("t")
    for n in range(1, max_degree + 1):
        p = p + rng.randint(-2, 2) * (LaurentPoly.monomial("t", n) + LaurentPoly.monomial("t", -n) - 2)
    return p


def rand_stack(rng: random.Random, max_blocks=4) -> Stack:
    items: List = []
    for b in range(rng.randint(1, max_blocks)):
        if b:
            items.append(rand_pure_braid(rng))
        items.append(JKBlock(rng.randint(1, 3), rand_kirk(rng), rand_kirk(rng)))
    return Stack.from_items(items)
