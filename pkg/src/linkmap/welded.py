"""
Three-strand welded braid words and the automorphisms of F(3) they induce.

Letters: s1, s2 (classical), s1', s2' (their inverses), v1, v2 (welded).
Per-letter substitutions on position generators:

    s_i : x_i ↦ x_i x_{i+1} x_i⁻¹,  x_{i+1} ↦ x_i
    s_i': x_i ↦ x_{i+1},            x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
    v_i : x_i ↔ x_{i+1}

A word b₁ b₂ … b_n acts by the composite b₁ ∘ b₂ ∘ … ∘ b_n, matching the
stacking order used when composing automorphisms.  With this convention
"s1' v1" sends x ↦ y⁻¹ x y and fixes y and z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .milnor import Mf3Auto, Word, conjugate_word, free_reduce, substitute, word_exponents, word_inv, format_word
from .parsing import ParseError

STRANDS = 3
Letter = Tuple[str, int, int]  # (kind, index, sign); welded letters carry sign +1

_IDENTITY_IMAGES: Tuple[Word, Word, Word] = ((1,), (2,), (3,))


@dataclass(frozen=True)
class BraidWord:
    letters: Tuple[Letter, ...] = ()

    def __str__(self) -> str:
        return " ".join(letter_name(a) for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(
            (kind, i, -sign if kind == "s" else sign) for kind, i, sign in reversed(self.letters)
        ))

    def normalized(self) -> "BraidWord":
        """Cancel adjacent inverse pairs, including v v."""
        out: List[Letter] = []
        for a in self.letters:
            if out and _cancels(out[-1], a):
                out.pop()
            else:
                out.append(a)
        return BraidWord(tuple(out))


def _cancels(a: Letter, b: Letter) -> bool:
    if a[0] != b[0] or a[1] != b[1]:
        return False
    return a[0] == "v" or a[2] == -b[2]


def letter_name(a: Letter) -> str:
    kind, i, sign = a
    return f"{kind}{i}" + ("'" if kind == "s" and sign < 0 else "")


def parse_braid(text: str) -> BraidWord:
    letters = []
    for tok in text.replace(",", " ").split():
        kind, rest = tok[:1], tok[1:]
        sign = 1
        if rest.endswith("'"):
            if kind != "s":
                raise ParseError(f"welded letter {tok!r} cannot be primed; it is its own inverse")
            sign, rest = -1, rest[:-1]
        if kind not in ("s", "v") or not rest.isdigit():
            raise ParseError(f"unknown braid letter {tok!r}")
        i = int(rest)
        if not 1 <= i < STRANDS:
            raise ParseError(f"letter {tok!r} out of range for {STRANDS} strands")
        letters.append((kind, i, sign))
    return BraidWord(tuple(letters))


def _as_braid(b) -> BraidWord:
    return parse_braid(b) if isinstance(b, str) else b


def braid_permutation(b) -> Tuple[int, int, int]:
    """perm[p] = strand label (1-based) sitting at position p+1 at the top, starting from (1, 2, 3)."""
    perm = [1, 2, 3]
    for _, i, _ in _as_braid(b).letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)  # type: ignore[return-value]


def is_pure(b) -> bool:
    return braid_permutation(b) == (1, 2, 3)


def letter_images(a: Letter) -> Tuple[Word, Word, Word]:
    kind, i, sign = a
    imgs: List[Word] = [(1,), (2,), (3,)]
    p, q = i, i + 1
    if kind == "v":
        imgs[p - 1], imgs[q - 1] = (q,), (p,)
    elif sign > 0:
        imgs[p - 1], imgs[q - 1] = (p, q, -p), (p,)
    else:
        imgs[p - 1], imgs[q - 1] = (q,), (-q, p, q)
    return tuple(imgs)  # type: ignore[return-value]


def braid_action(b) -> Tuple[Word, Word, Word]:
    """Generator images of the induced automorphism, as reduced words."""
    images: Tuple[Word, ...] = _IDENTITY_IMAGES
    for a in _as_braid(b).letters:
        # (images ∘ letter)(x) = images(letter(x))
        images = tuple(substitute(w, images) for w in letter_images(a))
    return images  # type: ignore[return-value]


def compose_images(f: Sequence[Word], g: Sequence[Word]) -> Tuple[Word, Word, Word]:
    return tuple(substitute(w, f) for w in g)  # type: ignore[return-value]


def is_identity_action(images: Sequence[Word]) -> bool:
    return tuple(images) == _IDENTITY_IMAGES


class NotPureError(ValueError):
    pass


@dataclass(frozen=True)
class PureBraidData:
    longitudes: Tuple[Word, Word, Word]
    k: int
    k_prime: int
    l: int
    l_prime: int
    m: int
    m_prime: int

    @property
    def exponents(self) -> Dict[str, int]:
        return {"k": self.k, "k'": self.k_prime, "l": self.l, "l'": self.l_prime, "m": self.m, "m'": self.m_prime}


def split_conjugate(image: Word, x: int) -> Word:
    """Return the maximal w with image == w⁻¹ x w as reduced words."""
    n = len(image)
    if n % 2 == 0 or image[n // 2] != x:
        raise ValueError(f"{format_word(image)} is not a conjugate of x{x}")
    head, tail = image[: n // 2], image[n // 2 + 1:]
    if head != word_inv(tail):
        raise ValueError(f"{format_word(image)} is not a conjugate of x{x}")
    return tail


def longitudes(b) -> PureBraidData:
    b = _as_braid(b)
    if not is_pure(b):
        raise NotPureError(f"braid {b} is not pure")
    ws = []
    for idx, image in enumerate(braid_action(b), start=1):
        w = split_conjugate(image, idx)
        own = word_exponents(w)[idx - 1]
        # x^{-own} w has the same conjugation action and zero own-exponent
        ws.append(free_reduce((-idx if own > 0 else idx,) * abs(own) + w))
    ex = [word_exponents(w) for w in ws]
    return PureBraidData(
        longitudes=tuple(ws),  # type: ignore[arg-type]
        k=ex[0][1], k_prime=ex[0][2],
        l=ex[1][2], l_prime=ex[1][0],
        m=ex[2][0], m_prime=ex[2][1],
    )


def to_mf3_auto(b) -> Mf3Auto:
    return Mf3Auto(longitudes(b).longitudes)


# relation words as pairs (lhs, rhs); each must induce the same automorphism

RELATIONS: Dict[str, Tuple[str, str]] = {
    "inverse pair s1": ("s1 s1'", ""),
    "inverse pair s2": ("s2 s2'", ""),
    "inverse pair s1 reversed": ("s1' s1", ""),
    "inverse pair s2 reversed": ("s2' s2", ""),
    "braid relation": ("s1 s2 s1", "s2 s1 s2"),
    "braid relation inverse": ("s1' s2' s1'", "s2' s1' s2'"),
    "welded involution v1": ("v1 v1", ""),
    "welded involution v2": ("v2 v2", ""),
    "welded braid relation": ("v1 v2 v1", "v2 v1 v2"),
    "mixed relation": ("v1 s2 v1", "v2 s1 v2"),
    "mixed relation inverse": ("v1 s2' v1", "v2 s1' v2"),
    "overcrossings commute": ("s1 s2 v1", "v2 s1 s2"),
    "overcrossings commute inverse": ("v1 s2' s1'", "s2' s1' v2"),
}

# the other mixed move (undercrossings commute) is not a welded relation
FORBIDDEN: Tuple[str, str] = ("v1 s2 s1", "s2 s1 v2")


def relation_holds(lhs: str, rhs: str) -> bool:
    return braid_action(lhs) == braid_action(rhs)


def conjugating_images(b) -> Tuple[Word, Word, Word]:
    """Images written as w⁻¹ x_i w using the extracted longitudes."""
    data = longitudes(b)
    return tuple(conjugate_word(i + 1, w) for i, w in enumerate(data.longitudes))  # type: ignore[return-value]
