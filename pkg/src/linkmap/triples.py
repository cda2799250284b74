"""
Triples in K = ZΓ_x × ZΓ_y × ZΓ_z, the basing action of Z³ on them, and the
projections that forget one component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .group_ring import LaurentPoly, RingElem, parse_ring
from .heisenberg import GX, GY, GZ, GammaContext, HeisenbergElem

LABELS = ("x", "y", "z")
_CTX = {"x": GX, "y": GY, "z": GZ}


def component_index(c) -> int:
    """Accept 1/2/3, 'x'/'y'/'z' or '1'/'2'/'3'."""
    if isinstance(c, int) and c in (1, 2, 3):
        return c
    s = str(c).strip().lower()
    if s in LABELS:
        return LABELS.index(s) + 1
    if s in ("1", "2", "3"):
        return int(s)
    raise ValueError(f"unknown component {c!r}")


@dataclass(frozen=True)
class BasingShift:
    p: int = 0
    q: int = 0
    r: int = 0

    def __add__(self, other: "BasingShift") -> "BasingShift":
        return BasingShift(self.p + other.p, self.q + other.q, self.r + other.r)

    def __neg__(self) -> "BasingShift":
        return BasingShift(-self.p, -self.q, -self.r)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @classmethod
    def from_shifts(cls, a: int, b: int, c: int, d: int, e: int, f: int) -> "BasingShift":
        """From the six basing-path parameters (p, q, r) = (b − c, d − e, f − a)."""
        return cls(b - c, d - e, f - a)


def shift_form(component: int, i: int, k: int) -> Tuple[int, int, int]:
    """Coefficients of (p, q, r) in the central shift of a monomial with exponents (i, ·, k)."""
    if component == 1:
        return (i, 0, k)
    if component == 2:
        return (k, i, 0)
    return (0, k, i)


class Triple:
    __slots__ = ("a", "b", "c")

    def __init__(self, a: RingElem = None, b: RingElem = None, c: RingElem = None):
        self.a = a if a is not None else RingElem.zero(GX)
        self.b = b if b is not None else RingElem.zero(GY)
        self.c = c if c is not None else RingElem.zero(GZ)
        for elem, ctx in zip(self.parts, (GX, GY, GZ)):
            if elem.ctx != ctx:
                raise ValueError(f"component over {elem.ctx!r} where {ctx!r} was expected")

    @classmethod
    def zero(cls) -> "Triple":
        return cls()

    @classmethod
    def parse(cls, a: str, b: str, c: str) -> "Triple":
        return cls(parse_ring(a, GX), parse_ring(b, GY), parse_ring(c, GZ))

    @property
    def parts(self) -> Tuple[RingElem, RingElem, RingElem]:
        return (self.a, self.b, self.c)

    def component(self, i) -> RingElem:
        return self.parts[component_index(i) - 1]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Triple) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __add__(self, other: "Triple") -> "Triple":
        return Triple(*(p + q for p, q in zip(self.parts, other.parts)))

    def __neg__(self) -> "Triple":
        return Triple(*(-p for p in self.parts))

    def __sub__(self, other: "Triple") -> "Triple":
        return self + (-other)

    def map(self, fn) -> "Triple":
        return Triple(*(fn(n + 1, p) for n, p in enumerate(self.parts)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Triple{self}"


def act(s: BasingShift, v: Triple) -> Triple:
    def shift(component: int, r: RingElem) -> RingElem:
        out: Dict[HeisenbergElem, int] = {}
        for g, c in r.items():
            fp, fq, fr = shift_form(component, g.i, g.k)
            h = HeisenbergElem(g.ctx, g.i, g.j + fp * s.p + fq * s.q + fr * s.r, g.k)
            out[h] = out.get(h, 0) + c
        return RingElem(r.ctx, out)
    return v.map(shift)


# meridian killed in each context: which slot (first/second) it occupies
def _kill_slot(ctx: GammaContext, meridian: str) -> str:
    if ctx.first == meridian:
        return "first"
    if ctx.second == meridian:
        return "second"
    raise ValueError(f"{meridian} is not a meridian generator of {ctx!r}")


def kirk_projection(v: Triple, i) -> Tuple[LaurentPoly, LaurentPoly]:
    """Drop component i and kill its meridian in the other two components."""
    i = component_index(i)
    meridian = LABELS[i - 1]
    out: List[LaurentPoly] = []
    for n, r in enumerate(v.parts, start=1):
        if n != i:
            out.append(r.kill(_kill_slot(r.ctx, meridian)))
    return out[0], out[1]


def brunnian_certificate(v: Triple) -> bool:
    """True iff every projection is (0, 0); a certificate via completeness of the two-component invariant."""
    return all(p.is_zero() and q.is_zero() for p, q in (kirk_projection(v, i) for i in (1, 2, 3)))


def monomials(v: Triple) -> Iterable[Tuple[int, int, int, int, int]]:
    """(component, i, j, k, coeff) over all nonzero terms."""
    for n, r in enumerate(v.parts, start=1):
        for g, c in r.items():
            yield n, g.i, g.j, g.k, c
