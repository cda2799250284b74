"""
Exact arithmetic in the three Heisenberg quotients Γ_x, Γ_y, Γ_z.

Each context has two non-central generators (first, second) and a central
generator equal to their commutator, using the convention [g, h] = g h g⁻¹ h⁻¹:

    Γ_x = <y, z, s>,   Γ_y = <z, x, t>,   Γ_z = <x, y, u>.

An element is stored in normal form first^i · central^j · second^k.  The
exponent law below was read off from the unitriangular matrix model
(`to_matrix`), where first ↦ I + E₂₃, second ↦ I + E₁₂, central ↦ I − E₁₃.
In that model first^i central^j second^k is the matrix

    [[1, k, -j],
     [0, 1,  i],
     [0, 0,  1]]

and multiplying two such matrices gives

    (i, j, k) · (i', j', k') = (i + i', j + j' - k·i', k + k').
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

Matrix3 = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]


@dataclass(frozen=True)
class GammaContext:
    label: str
    first: str
    second: str
    central: str
    # index (1, 2, 3) of the meridian that is killed to obtain this quotient
    killed: int

    @property
    def generators(self) -> Tuple[str, str, str]:
        return (self.first, self.second, self.central)

    def __repr__(self) -> str:
        return f"Γ_{self.label.lower()}"


GX = GammaContext("X", "y", "z", "s", 1)
GY = GammaContext("Y", "z", "x", "t", 2)
GZ = GammaContext("Z", "x", "y", "u", 3)

CONTEXTS = {"X": GX, "Y": GY, "Z": GZ}
BY_KILLED = {1: GX, 2: GY, 3: GZ}


class ContextError(ValueError):
    pass


def context(label) -> GammaContext:
    if isinstance(label, GammaContext):
        return label
    try:
        return CONTEXTS[str(label).upper()]
    except KeyError:
        raise ContextError(f"unknown context {label!r}") from None


def _check(a: "HeisenbergElem", b: "HeisenbergElem") -> None:
    if a.ctx != b.ctx:
        raise ContextError(f"context mismatch: {a.ctx!r} vs {b.ctx!r}")


@dataclass(frozen=True)
class HeisenbergElem:
    ctx: GammaContext
    i: int = 0
    j: int = 0
    k: int = 0

    @classmethod
    def identity(cls, ctx) -> "HeisenbergElem":
        return cls(context(ctx), 0, 0, 0)

    @classmethod
    def first(cls, ctx, n: int = 1) -> "HeisenbergElem":
        return cls(context(ctx), n, 0, 0)

    @classmethod
    def second(cls, ctx, n: int = 1) -> "HeisenbergElem":
        return cls(context(ctx), 0, 0, n)

    @classmethod
    def central(cls, ctx, n: int = 1) -> "HeisenbergElem":
        return cls(context(ctx), 0, n, 0)

    @classmethod
    def generator(cls, ctx, name: str, n: int = 1) -> "HeisenbergElem":
        ctx = context(ctx)
        if name == ctx.first:
            return cls(ctx, n, 0, 0)
        if name == ctx.second:
            return cls(ctx, 0, 0, n)
        if name == ctx.central:
            return cls(ctx, 0, n, 0)
        raise ValueError(f"{name!r} is not a generator of {ctx!r}")

    @property
    def exponents(self) -> Tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0 and self.k == 0

    def __mul__(self, other: "HeisenbergElem") -> "HeisenbergElem":
        return mul(self, other)

    def __invert__(self) -> "HeisenbergElem":
        return inv(self)

    def __pow__(self, n: int) -> "HeisenbergElem":
        return power(self, n)

    # lexicographic order on (i, j, k), used for canonical forms
    def __lt__(self, other: "HeisenbergElem") -> bool:
        _check(self, other)
        return self.exponents < other.exponents

    def __str__(self) -> str:
        parts = []
        for name, e in ((self.ctx.first, self.i), (self.ctx.central, self.j), (self.ctx.second, self.k)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"


def mul(a: HeisenbergElem, b: HeisenbergElem) -> HeisenbergElem:
    _check(a, b)
    return HeisenbergElem(a.ctx, a.i + b.i, a.j + b.j - a.k * b.i, a.k + b.k)


def inv(a: HeisenbergElem) -> HeisenbergElem:
    return HeisenbergElem(a.ctx, -a.i, -a.j - a.k * a.i, -a.k)


def power(a: HeisenbergElem, n: int) -> HeisenbergElem:
    # (i, j, k)^n = (n i, n j - C(n, 2) k i, n k), valid for negative n too
    return HeisenbergElem(a.ctx, n * a.i, n * a.j - (n * (n - 1) // 2) * a.k * a.i, n * a.k)


def conj(a: HeisenbergElem, h: HeisenbergElem) -> HeisenbergElem:
    """h a h⁻¹.  Only the central exponent moves: j ↦ j − w·i + v·k for h = (v, q, w)."""
    _check(a, h)
    return HeisenbergElem(a.ctx, a.i, a.j - h.k * a.i + h.i * a.k, a.k)


def commutator(a: HeisenbergElem, b: HeisenbergElem) -> HeisenbergElem:
    return mul(mul(a, b), inv(mul(b, a)))


def hom_apply(a: HeisenbergElem, first_image: HeisenbergElem, second_image: HeisenbergElem) -> HeisenbergElem:
    """Image of `a` under the endomorphism sending first ↦ first_image, second ↦ second_image."""
    central_image = commutator(first_image, second_image)
    return mul(mul(power(first_image, a.i), power(central_image, a.j)), power(second_image, a.k))


# matrix model

def matmul3(a: Matrix3, b: Matrix3) -> Matrix3:
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(3)) for c in range(3)) for r in range(3)
    )  # type: ignore[return-value]


IDENTITY3: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _elementary(r: int, c: int, n: int) -> Matrix3:
    # (I + E_rc)^n = I + n E_rc since E_rc² = 0 off the diagonal
    rows = [list(row) for row in IDENTITY3]
    rows[r][c] += n
    return tuple(tuple(row) for row in rows)  # type: ignore[return-value]


def first_matrix(n: int = 1) -> Matrix3:
    return _elementary(1, 2, n)


def second_matrix(n: int = 1) -> Matrix3:
    return _elementary(0, 1, n)


def central_matrix(n: int = 1) -> Matrix3:
    return _elementary(0, 2, -n)


def to_matrix(a: HeisenbergElem) -> Matrix3:
    return matmul3(matmul3(first_matrix(a.i), central_matrix(a.j)), second_matrix(a.k))


def from_matrix(m: Matrix3, ctx) -> HeisenbergElem:
    if m[0][0] != 1 or m[1][1] != 1 or m[2][2] != 1 or m[1][0] or m[2][0] or m[2][1]:
        raise ValueError("matrix is not upper unitriangular")
    return HeisenbergElem(context(ctx), m[1][2], -m[0][2], m[0][1])
