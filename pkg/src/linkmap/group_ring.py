"""
The integral group rings ZΓ_x, ZΓ_y, ZΓ_z and integer Laurent polynomials.

A `RingElem` maps Heisenberg elements to nonzero integers.  Conjugation and
the involution g ↦ g⁻¹ preserve coefficients; killing one non-central
generator also kills the central one and lands in a `LaurentPoly` in the
surviving generator.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .heisenberg import (
    CONTEXTS,
    GammaContext,
    HeisenbergElem,
    ContextError,
    conj,
    context,
    hom_apply,
    inv,
    mul,
)
from .parsing import Algebra, ParseError, names_in, parse_with


def _clean(terms: Mapping) -> Dict:
    return {g: c for g, c in terms.items() if c}


class RingElem:
    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx, terms: Optional[Mapping[HeisenbergElem, int]] = None):
        self.ctx: GammaContext = context(ctx)
        clean = {}
        for g, c in (terms or {}).items():
            if g.ctx != self.ctx:
                raise ContextError(f"term {g} does not live in {self.ctx!r}")
            if c:
                clean[g] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, ctx) -> "RingElem":
        return cls(ctx)

    @classmethod
    def one(cls, ctx) -> "RingElem":
        ctx = context(ctx)
        return cls(ctx, {HeisenbergElem.identity(ctx): 1})

    @classmethod
    def monomial(cls, ctx, i: int, j: int, k: int, coeff: int = 1) -> "RingElem":
        ctx = context(ctx)
        return cls(ctx, {HeisenbergElem(ctx, i, j, k): coeff})

    @classmethod
    def of(cls, g: HeisenbergElem, coeff: int = 1) -> "RingElem":
        return cls(g.ctx, {g: coeff})

    @classmethod
    def from_records(cls, ctx, records: Iterable[Tuple[int, int, int, int]]) -> "RingElem":
        ctx = context(ctx)
        acc: Dict[HeisenbergElem, int] = defaultdict(int)
        for i, j, k, c in records:
            acc[HeisenbergElem(ctx, i, j, k)] += c
        return cls(ctx, acc)

    @property
    def terms(self) -> Dict[HeisenbergElem, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[HeisenbergElem, int]]:
        """Terms in canonical (lexicographic) order."""
        for g in sorted(self._terms, key=lambda h: h.exponents):
            yield g, self._terms[g]

    def records(self):
        return [(g.i, g.j, g.k, c) for g, c in self.items()]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, g: HeisenbergElem) -> int:
        return self._terms.get(g, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def _same(self, other: "RingElem") -> None:
        if self.ctx != other.ctx:
            raise ContextError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other: "RingElem") -> "RingElem":
        if isinstance(other, int):
            other = RingElem.one(self.ctx) * other
        self._same(other)
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, 0) + c
        return RingElem(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return RingElem(self.ctx, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __rsub__(self, other) -> "RingElem":
        return (-self) + other

    def __mul__(self, other) -> "RingElem":
        if isinstance(other, int):
            return RingElem(self.ctx, {g: c * other for g, c in self._terms.items()})
        if isinstance(other, HeisenbergElem):
            other = RingElem.of(other)
        self._same(other)
        acc: Dict[HeisenbergElem, int] = defaultdict(int)
        for g, c in self._terms.items():
            for h, d in other._terms.items():
                acc[mul(g, h)] += c * d
        return RingElem(self.ctx, acc)

    def __rmul__(self, other) -> "RingElem":
        if isinstance(other, int):
            return self * other
        if isinstance(other, HeisenbergElem):
            return RingElem.of(other) * self
        return NotImplemented

    def conj(self, h: HeisenbergElem) -> "RingElem":
        if h.ctx != self.ctx:
            raise ContextError(f"context mismatch: {self.ctx!r} vs {h.ctx!r}")
        return RingElem(self.ctx, {conj(g, h): c for g, c in self._terms.items()})

    def bar(self) -> "RingElem":
        return RingElem(self.ctx, {inv(g): c for g, c in self._terms.items()})

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def kill(self, which: str) -> "LaurentPoly":
        """Set the `first` or `second` generator (and hence the central one) to 1."""
        acc: Dict[int, int] = defaultdict(int)
        if which == "first":
            for g, c in self._terms.items():
                acc[g.k] += c
            return LaurentPoly(self.ctx.second, acc)
        if which == "second":
            for g, c in self._terms.items():
                acc[g.i] += c
            return LaurentPoly(self.ctx.first, acc)
        raise ValueError("which must be 'first' or 'second'")

    def substitute(self, first_image: HeisenbergElem, second_image: HeisenbergElem) -> "RingElem":
        """Apply the group endomorphism determined by the images of the two generators."""
        acc: Dict[HeisenbergElem, int] = defaultdict(int)
        for g, c in self._terms.items():
            acc[hom_apply(g, first_image, second_image)] += c
        return RingElem(first_image.ctx, acc)

    def __str__(self) -> str:
        return format_terms(((str(g), c) for g, c in self.items()))

    def __repr__(self) -> str:
        return f"RingElem({self.ctx!r}, {str(self)!r})"


def format_terms(pairs) -> str:
    out = []
    for name, c in pairs:
        unit = name == "1"
        mag = abs(c)
        body = str(mag) if unit else (name if mag == 1 else f"{mag} {name}")
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


# functional API

def add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def negate(a: RingElem) -> RingElem:
    return -a


def scale(c: int, a: RingElem) -> RingElem:
    return a * c


def conj_ring(r: RingElem, h: HeisenbergElem) -> RingElem:
    return r.conj(h)


def bar(r: RingElem) -> RingElem:
    return r.bar()


def augmentation(r: RingElem) -> int:
    return r.augmentation()


def specialize_kill(r: RingElem, which: str) -> "LaurentPoly":
    return r.kill(which)


class SelfIntersectionSum:
    """Signed sum over {g, g⁻¹} classes; the key is the lexicographically smaller of g, g⁻¹."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx, terms: Optional[Mapping[HeisenbergElem, int]] = None):
        self.ctx = context(ctx)
        acc: Dict[HeisenbergElem, int] = defaultdict(int)
        for g, c in (terms or {}).items():
            acc[self.representative(g)] += c
        self._terms = _clean(acc)

    @staticmethod
    def representative(g: HeisenbergElem) -> HeisenbergElem:
        h = inv(g)
        return g if g.exponents <= h.exponents else h

    @classmethod
    def from_points(cls, ctx, points: Iterable[Tuple[HeisenbergElem, int]]) -> "SelfIntersectionSum":
        acc: Dict[HeisenbergElem, int] = defaultdict(int)
        for g, sign in points:
            acc[cls.representative(g)] += sign
        return cls(ctx, acc)

    @property
    def terms(self) -> Dict[HeisenbergElem, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SelfIntersectionSum) and self.ctx == other.ctx and self._terms == other._terms


def lambda_from_mu(m: SelfIntersectionSum, euler: int) -> RingElem:
    """λ = μ + μ̄ + χ·1."""
    acc: Dict[HeisenbergElem, int] = defaultdict(int)
    for g, c in m.terms.items():
        acc[g] += c
        acc[inv(g)] += c
    acc[HeisenbergElem.identity(m.ctx)] += euler
    return RingElem(m.ctx, acc)


class LaurentPoly:
    __slots__ = ("var", "_terms")

    def __init__(self, var: str = "t", terms: Optional[Mapping[int, int]] = None):
        self.var = var
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, var: str, e: int, c: int = 1) -> "LaurentPoly":
        return cls(var, {e: c})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var if self._terms else None, frozenset(self._terms.items())))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.var, {0: other})
        if other.var != self.var and other._terms and self._terms:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return other

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        var = self.var if self._terms else other.var
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(var, acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        var = self.var if self._terms else other.var
        acc: Dict[int, int] = defaultdict(int)
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                acc[e + f] += c * d
        return LaurentPoly(var, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have inverses")
            return LaurentPoly(self.var, {-e * -n: c ** (-n)})
        out = LaurentPoly(self.var, {0: 1})
        for _ in range(n):
            out = out * self
        return out

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def is_symmetric(self) -> bool:
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly(var, self._terms)

    def to_ring(self, ctx, generator: str) -> RingElem:
        """Substitute a non-central generator of `ctx` for the variable."""
        ctx = context(ctx)
        return RingElem(ctx, {HeisenbergElem.generator(ctx, generator, e): c for e, c in self._terms.items()})

    def __str__(self) -> str:
        def name(e):
            return "1" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
        return format_terms((name(e), c) for e, c in sorted(self._terms.items(), reverse=True))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.var!r}, {str(self)!r})"


def to_z_coordinates(p: LaurentPoly) -> Dict[int, int]:
    """
    Rewrite a symmetric, augmentation-zero Laurent polynomial in t as a
    polynomial in z = 2 − t − t⁻¹.  Returns {power: coefficient}; the constant
    term is always absent.
    """
    if not p.is_symmetric():
        raise ValueError(f"{p} is not symmetric under t <-> t^-1")
    if p.augmentation() != 0:
        raise ValueError(f"{p} does not vanish at t = 1")
    z = LaurentPoly(p.var, {0: 2, 1: -1, -1: -1})
    rest = LaurentPoly(p.var, p.terms)
    out: Dict[int, int] = {}
    while rest:
        n = max(rest.terms)
        # z^n has leading term (-1)^n t^n
        c = rest.terms[n] * (-1) ** n
        out[n] = c
        rest = rest - (z ** n) * c
    return out


def in_kirk_image(first: LaurentPoly, second: LaurentPoly) -> bool:
    """Both lie in z·Z[z] and their linear z-coefficients cancel."""
    try:
        a, b = to_z_coordinates(first), to_z_coordinates(second)
    except ValueError:
        return False
    return a.get(1, 0) + b.get(1, 0) == 0


# parsing

class _RingAlgebra(Algebra):
    def __init__(self, ctx: GammaContext):
        self.ctx = ctx

    def const(self, n):
        return RingElem.one(self.ctx) * n

    def gen(self, name, exponent):
        if name in self.ctx.generators:
            return RingElem.of(HeisenbergElem.generator(self.ctx, name, exponent))
        # allow run-together single-letter generators such as "zs"
        if len(name) > 1 and all(ch in self.ctx.generators for ch in name):
            out = RingElem.one(self.ctx)
            for ch in name[:-1]:
                out = out * RingElem.of(HeisenbergElem.generator(self.ctx, ch))
            return out * RingElem.of(HeisenbergElem.generator(self.ctx, name[-1], exponent))
        raise ParseError(f"{name!r} is not a generator of {self.ctx!r} (expected one of {', '.join(self.ctx.generators)})")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def one(self):
        return RingElem.one(self.ctx)

    def inv(self, a):
        if len(a) == 1:
            (g, c), = a.items()
            if abs(c) == 1:
                return RingElem.of(inv(g), c)
        raise ParseError("only unit monomials can be inverted")


def infer_context(text: str) -> GammaContext:
    letters = set()
    for name in names_in(text):
        letters.update(name)
    matches = [c for c in CONTEXTS.values() if letters <= set(c.generators)]
    if len(matches) != 1:
        raise ParseError(f"cannot infer the context of {text!r}; pass it explicitly")
    return matches[0]


def parse_ring(text: str, ctx=None) -> RingElem:
    ctx = infer_context(text) if ctx is None else context(ctx)
    if text.strip() == "":
        return RingElem.zero(ctx)
    return parse_with(text, _RingAlgebra(ctx))


def parse_element(text: str, ctx=None) -> HeisenbergElem:
    r = parse_ring(text, ctx) if text.strip() else RingElem.one(ctx if ctx is not None else "X")
    if len(r) != 1 or next(iter(r.terms.values())) != 1:
        raise ParseError(f"{text!r} is not a single group element")
    return next(iter(r.terms))


class _LaurentAlgebra(Algebra):
    def __init__(self, var: str):
        self.var = var

    def const(self, n):
        return LaurentPoly(self.var, {0: n})

    def gen(self, name, exponent):
        if name != self.var:
            raise ParseError(f"unexpected variable {name!r}; expected {self.var!r}")
        return LaurentPoly(self.var, {exponent: 1})

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def one(self):
        return LaurentPoly(self.var, {0: 1})

    def inv(self, a):
        try:
            return a ** -1
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    if not text.strip() or text.strip() == "0":
        return LaurentPoly(var)
    return parse_with(text, _LaurentAlgebra(var))
