"""
The free Milnor group MF(3) via the reduced Magnus expansion.

x_i ↦ 1 + X_i and x_i⁻¹ ↦ 1 − X_i, in the algebra of noncommuting symbols
X_1, X_2, X_3 where every monomial with a repeated symbol is zero.  For three
symbols that leaves 16 monomials (degree ≤ 3), so elements are 16-vectors.

Words are tuples of signed generator indices: (1, -2) is x_1 x_2⁻¹.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .group_ring import format_terms
from .heisenberg import BY_KILLED, HeisenbergElem
from .parsing import Algebra, ParseError, parse_with

Word = Tuple[int, ...]

MONOMIALS: List[Tuple[int, ...]] = (
    [()]
    + [(a,) for a in (1, 2, 3)]
    + [p for p in permutations((1, 2, 3), 2)]
    + [p for p in permutations((1, 2, 3), 3)]
)
INDEX: Dict[Tuple[int, ...], int] = {m: n for n, m in enumerate(MONOMIALS)}
SIZE = len(MONOMIALS)


def _product_table():
    table = []
    for a in MONOMIALS:
        row = []
        for b in MONOMIALS:
            m = a + b
            row.append(INDEX[m] if len(set(m)) == len(m) else None)
        table.append(row)
    return table


_TABLE = _product_table()


# words

def free_reduce(word: Iterable[int]) -> Word:
    out: List[int] = []
    for a in word:
        if a == 0 or abs(a) > 3:
            raise ValueError(f"bad generator index {a}")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def word_inv(word: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(word))


def word_mul(*words: Sequence[int]) -> Word:
    return free_reduce(a for w in words for a in w)


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Replace x_i by images[i-1] (and x_i⁻¹ by its inverse)."""
    out: List[int] = []
    for a in word:
        img = images[abs(a) - 1]
        out.extend(img if a > 0 else word_inv(img))
    return free_reduce(out)


def conjugate_word(x: int, w: Sequence[int]) -> Word:
    """w⁻¹ x w."""
    return word_mul(word_inv(w), (x,), w)


def word_exponents(word: Sequence[int]) -> Tuple[int, int, int]:
    sums = [0, 0, 0]
    for a in word:
        sums[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(sums)  # type: ignore[return-value]


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "1"
    parts = []
    run_gen, run_exp = None, 0
    for a in list(word) + [0]:
        g, e = abs(a), (1 if a > 0 else -1)
        if a and g == run_gen:
            run_exp += e
            continue
        if run_gen is not None:
            parts.append(f"x{run_gen}" if run_exp == 1 else f"x{run_gen}^{run_exp}")
        run_gen, run_exp = (g, e) if a else (None, 0)
    return " ".join(parts)


_ALIASES = {"x1": 1, "x2": 2, "x3": 3, "x": 1, "y": 2, "z": 3}


class _WordAlgebra(Algebra):
    def gen(self, name, exponent):
        if name not in _ALIASES:
            raise ParseError(f"unknown generator {name!r}; use x1, x2, x3")
        g = _ALIASES[name]
        return free_reduce([g if exponent > 0 else -g] * abs(exponent))

    def mul(self, a, b):
        return word_mul(a, b)

    def one(self):
        return ()

    def inv(self, a):
        return word_inv(a)


def parse_word(text: str) -> Word:
    return parse_with(text, _WordAlgebra())


# Magnus expansion

@dataclass(frozen=True)
class MF3Elem:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != SIZE:
            raise ValueError("an MF(3) element has 16 coefficients")

    @classmethod
    def identity(cls) -> "MF3Elem":
        return cls((1,) + (0,) * (SIZE - 1))

    @classmethod
    def generator(cls, a: int) -> "MF3Elem":
        c = [0] * SIZE
        c[0] = 1
        c[INDEX[(abs(a),)]] = 1 if a > 0 else -1
        return cls(tuple(c))

    def __getitem__(self, monomial: Tuple[int, ...]) -> int:
        return self.coeffs[INDEX[tuple(monomial)]]

    def __mul__(self, other: "MF3Elem") -> "MF3Elem":
        return mf3_mul(self, other)

    def is_identity(self) -> bool:
        return self == MF3Elem.identity()

    def is_group_like(self) -> bool:
        """Necessary conditions satisfied by every image of a word."""
        if self.coeffs[0] != 1:
            return False
        for a, b in permutations((1, 2, 3), 2):
            if self[(a, b)] + self[(b, a)] != self[(a,)] * self[(b,)]:
                return False
        return True

    def __str__(self) -> str:
        parts = []
        for m, c in zip(MONOMIALS, self.coeffs):
            if c:
                name = "".join(f"X{a}" for a in m) or "1"
                parts.append((name, c))
        return format_terms(parts)


def mf3_mul(a: MF3Elem, b: MF3Elem) -> MF3Elem:
    out = [0] * SIZE
    for p, ca in enumerate(a.coeffs):
        if not ca:
            continue
        row = _TABLE[p]
        for q, cb in enumerate(b.coeffs):
            if cb and row[q] is not None:
                out[row[q]] += ca * cb
    return MF3Elem(tuple(out))


def mf3_inv(a: MF3Elem) -> MF3Elem:
    if a.coeffs[0] != 1:
        raise ValueError("constant term must be 1")
    # a = 1 + n with n nilpotent of order 4: a⁻¹ = 1 − n + n² − n³
    n = MF3Elem((0,) + a.coeffs[1:])
    n2 = mf3_mul(n, n)
    n3 = mf3_mul(n2, n)
    return MF3Elem(tuple(
        (1 if p == 0 else 0) - n.coeffs[p] + n2.coeffs[p] - n3.coeffs[p] for p in range(SIZE)
    ))


def mf3_eq(a: MF3Elem, b: MF3Elem) -> bool:
    return a.coeffs == b.coeffs


_GEN = {a: MF3Elem.generator(a) for a in (1, 2, 3, -1, -2, -3)}


def magnus(word: Iterable[int]) -> MF3Elem:
    out = MF3Elem.identity()
    for a in word:
        if a not in _GEN:
            raise ValueError(f"bad generator index {a}")
        out = mf3_mul(out, _GEN[a])
    return out


def exponent_sums(e) -> Tuple[int, int, int]:
    if isinstance(e, MF3Elem):
        return (e[(1,)], e[(2,)], e[(3,)])
    return word_exponents(e)


def project_gamma(e: MF3Elem, kill: int) -> HeisenbergElem:
    """
    Image in Γ_kill (the quotient by the normal closure of x_kill).

    In the surviving symbols A = first, B = second, first^i s^j second^k has
    expansion 1 + iA + kB + (ik + j)AB − jBA, so j is minus the BA coefficient.
    """
    if isinstance(e, (tuple, list)):
        e = magnus(e)
    if not e.is_group_like():
        raise ValueError("element is not group-like")
    ctx = BY_KILLED[kill]
    a, b = _gen_index(ctx.first), _gen_index(ctx.second)
    return HeisenbergElem(ctx, e[(a,)], -e[(b, a)], e[(b,)])


def _gen_index(name: str) -> int:
    return {"x": 1, "y": 2, "z": 3}[name]


# automorphisms

class Mf3Auto:
    """x_i ↦ w_i⁻¹ x_i w_i, stored by the conjugator words w_i."""

    __slots__ = ("conjugators", "_images")

    def __init__(self, conjugators: Sequence[Sequence[int]]):
        if len(conjugators) != 3:
            raise ValueError("need three conjugator words")
        self.conjugators: Tuple[Word, Word, Word] = tuple(free_reduce(w) for w in conjugators)  # type: ignore[assignment]
        self._images: Optional[Tuple[MF3Elem, ...]] = None

    @classmethod
    def identity(cls) -> "Mf3Auto":
        return cls(((), (), ()))

    @property
    def image_words(self) -> Tuple[Word, Word, Word]:
        return tuple(conjugate_word(i + 1, w) for i, w in enumerate(self.conjugators))  # type: ignore[return-value]

    @property
    def images(self) -> Tuple[MF3Elem, ...]:
        if self._images is None:
            self._images = tuple(magnus(w) for w in self.image_words)
        return self._images

    def apply_word(self, word: Sequence[int]) -> Word:
        return substitute(word, self.image_words)

    def apply(self, word: Sequence[int]) -> MF3Elem:
        out = MF3Elem.identity()
        for a in word:
            img = self.images[abs(a) - 1]
            out = mf3_mul(out, img if a > 0 else mf3_inv(img))
        return out

    def compose(self, other: "Mf3Auto") -> "Mf3Auto":
        """self ∘ other; conjugator of x_i becomes w_i · self(v_i)."""
        return Mf3Auto([
            word_mul(w, self.apply_word(v)) for w, v in zip(self.conjugators, other.conjugators)
        ])

    def __matmul__(self, other: "Mf3Auto") -> "Mf3Auto":
        return self.compose(other)

    def is_identity(self) -> bool:
        return all(img == _GEN[i + 1] for i, img in enumerate(self.images))

    def inverse(self) -> "Mf3Auto":
        """
        Each correction pushes the residual conjugators one step down the lower
        central series; conjugators in γ_3 act trivially, so three rounds suffice.
        """
        b = Mf3Auto.identity()
        for _ in range(4):
            residual = self.compose(b)
            if residual.is_identity():
                return b
            b = b.compose(Mf3Auto([word_inv(w) for w in residual.conjugators]))
        if not self.compose(b).is_identity():
            raise ArithmeticError("inverse did not converge")
        return b

    def gamma_conjugator(self, kill: int) -> HeisenbergElem:
        return project_gamma(magnus(self.conjugators[kill - 1]), kill)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mf3Auto) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return "Mf3Auto(" + ", ".join(format_word(w) for w in self.conjugators) + ")"


def auto_compose(a: Mf3Auto, b: Mf3Auto) -> Mf3Auto:
    return a.compose(b)


def auto_apply(a: Mf3Auto, word: Sequence[int]) -> MF3Elem:
    return a.apply(word)
