"""
The annular invariant Θ with values in K ⋊ Aut(MF(3)), and closures of
stacks of JK blocks separated by pure welded braids.

For an automorphism ψ given by conjugators (x_i ↦ τ_i⁻¹ x_i τ_i), Φ(ψ) acts
on component i of a triple by first applying the map ψ induces on Γ_i and
then conjugating by the image [τ_i] of τ_i in Γ_i.  Products follow

    (a₁, ψ₁)(a₂, ψ₂) = (a₁ + Φ(ψ₁)(a₂), ψ₁ ∘ ψ₂).

A stack X₁ J₁ X₂ … J_{n−1} X_n has Θ equal to the product of the Θ of its
pieces, and its closure invariant is the K part of that product.  The same
triple is also available from an explicit sum over blocks in which each
block's Kirk polynomials are conjugated by powers determined by the linking
exponents of the braid accumulated before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .group_ring import LaurentPoly, RingElem, parse_laurent
from .heisenberg import BY_KILLED, GX, GY, GZ, HeisenbergElem
from .milnor import Mf3Auto, magnus, project_gamma
from .triples import LABELS, Triple, brunnian_certificate, component_index
from .welded import BraidWord, longitudes, parse_braid, to_mf3_auto


class StackError(ValueError):
    pass


# which ring each surviving component's Kirk polynomial lands in, and in which variable
_SURVIVORS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


@dataclass(frozen=True)
class JKBlock:
    """
    A JK construction in which `split` is unlinked from the other two.
    kirk1, kirk2 belong to the surviving components in alphabetical order, each
    a Laurent polynomial in t standing for the other survivor's meridian.
    """

    split: int
    kirk1: LaurentPoly
    kirk2: LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "split", component_index(self.split))
        for p in (self.kirk1, self.kirk2):
            if p.augmentation() != 0 or not p.is_symmetric():
                raise StackError(f"Kirk polynomial {p} must be symmetric and vanish at t = 1")

    @classmethod
    def parse(cls, split, kirk1: str, kirk2: str) -> "JKBlock":
        return cls(split, parse_laurent(kirk1), parse_laurent(kirk2))

    def mirror(self) -> "JKBlock":
        """The reversed mirror image; its Θ is the inverse."""
        return JKBlock(self.split, -self.kirk1, -self.kirk2)

    @property
    def survivors(self) -> Tuple[int, int]:
        return _SURVIVORS[self.split]

    def kirk_of(self, component: int) -> LaurentPoly:
        a, b = self.survivors
        if component == a:
            return self.kirk1
        if component == b:
            return self.kirk2
        return LaurentPoly("t")

    def report(self) -> dict:
        return {"split": LABELS[self.split - 1], "kirk1": str(self.kirk1), "kirk2": str(self.kirk2)}


class ThetaElem:
    __slots__ = ("k_part", "auto")

    def __init__(self, k_part: Triple, auto: Mf3Auto):
        self.k_part = k_part
        self.auto = auto

    @classmethod
    def identity(cls) -> "ThetaElem":
        return cls(Triple.zero(), Mf3Auto.identity())

    def __mul__(self, other: "ThetaElem") -> "ThetaElem":
        return theta_compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, ThetaElem) and self.k_part == other.k_part and self.auto == other.auto

    def __hash__(self) -> int:
        return hash((self.k_part, self.auto))

    def __repr__(self) -> str:
        return f"ThetaElem({self.k_part}, {self.auto!r})"


def _kirk_ring(component: int, other: int, poly: LaurentPoly) -> RingElem:
    ctx = BY_KILLED[component]
    return poly.to_ring(ctx, LABELS[other - 1])


def theta_of_jk(block: JKBlock) -> ThetaElem:
    parts = [RingElem.zero(GX), RingElem.zero(GY), RingElem.zero(GZ)]
    a, b = block.survivors
    parts[a - 1] = _kirk_ring(a, b, block.kirk1)
    parts[b - 1] = _kirk_ring(b, a, block.kirk2)
    return ThetaElem(Triple(*parts), Mf3Auto.identity())


def theta_of_braid(b: Union[str, BraidWord]) -> ThetaElem:
    return ThetaElem(Triple.zero(), to_mf3_auto(b))


def induced_gamma_images(a: Mf3Auto, component: int) -> Tuple[HeisenbergElem, HeisenbergElem]:
    """Images of Γ_i's first and second generators under the map a induces on Γ_i."""
    ctx = BY_KILLED[component]
    gens = [LABELS.index(ctx.first) + 1, LABELS.index(ctx.second) + 1]
    return tuple(project_gamma(a.images[g - 1], component) for g in gens)  # type: ignore[return-value]


def phi_apply(a: Mf3Auto, k: Triple) -> Triple:
    def one(component: int, r: RingElem) -> RingElem:
        if r.is_zero():
            return r
        first, second = induced_gamma_images(a, component)
        tau = project_gamma(magnus(a.conjugators[component - 1]), component)
        return r.substitute(first, second).conj(tau)
    return k.map(one)


def theta_compose(t1: ThetaElem, t2: ThetaElem) -> ThetaElem:
    return ThetaElem(t1.k_part + phi_apply(t1.auto, t2.k_part), t1.auto.compose(t2.auto))


def theta_inverse(t: ThetaElem) -> ThetaElem:
    inv = t.auto.inverse()
    return ThetaElem(-phi_apply(inv, t.k_part), inv)


# stacks

@dataclass(frozen=True)
class Stack:
    blocks: Tuple[JKBlock, ...]
    braids: Tuple[BraidWord, ...]

    def __post_init__(self):
        if not self.blocks:
            raise StackError("a stack needs at least one JK block")
        if len(self.braids) != len(self.blocks) - 1:
            raise StackError("a stack alternates JK blocks and braids, starting and ending with a block")

    @classmethod
    def from_items(cls, items: Sequence[Union[JKBlock, BraidWord, str]]) -> "Stack":
        blocks: List[JKBlock] = []
        braids: List[BraidWord] = []
        for n, item in enumerate(items):
            if isinstance(item, str):
                item = parse_braid(item)
            want = JKBlock if n % 2 == 0 else BraidWord
            if not isinstance(item, want):
                raise StackError(f"entry {n} should be a {'JK block' if want is JKBlock else 'braid'}")
            (blocks if want is JKBlock else braids).append(item)  # type: ignore[arg-type]
        if len(items) % 2 == 0:
            raise StackError("a stack must end with a JK block")
        return cls(tuple(blocks), tuple(braids))

    def items(self) -> List[Union[JKBlock, BraidWord]]:
        out: List[Union[JKBlock, BraidWord]] = []
        for n, block in enumerate(self.blocks):
            if n:
                out.append(self.braids[n - 1])
            out.append(block)
        return out

    def __add__(self, other: "Stack") -> "Stack":
        """Concatenate, joining the two through an empty braid."""
        return Stack(self.blocks + other.blocks, self.braids + (BraidWord(),) + other.braids)

    def inverse(self) -> "Stack":
        return Stack(
            tuple(b.mirror() for b in reversed(self.blocks)),
            tuple(b.inverse() for b in reversed(self.braids)),
        )


def theta_of_stack(st: Stack) -> ThetaElem:
    out = ThetaElem.identity()
    for n, item in enumerate(st.items()):
        out = theta_compose(out, theta_of_jk(item) if n % 2 == 0 else theta_of_braid(item))  # type: ignore[arg-type]
    return out


def closure_by_theta(st: Stack) -> Triple:
    return theta_of_stack(st).k_part


def _conj_power(r: RingElem, generator: str, n: int) -> RingElem:
    return r.conj(HeisenbergElem.generator(r.ctx, generator, n))


def closure_by_formula(st: Stack) -> Triple:
    """
    Sum over blocks, each conjugated using the linking exponents of the
    braid J₁⋯J_{i−1} preceding it:

      σ_x += z^{k'−l} P_x(y) z^{l−k'} + y^{k−m'} Q_x(z) y^{m'−k}
      σ_y += z^{l−k'} P_y(x) z^{k'−l} + x^{l'−m} Q_y(z) x^{m−l'}
      σ_z += y^{m'−k} P_z(x) y^{k−m'} + x^{m−l'} Q_z(y) x^{l'−m}

    where P, Q are the block's Kirk polynomials in the indicated variable
    (zero unless the corresponding component survives).
    """
    total = Triple.zero()
    prefix = BraidWord()
    for n, block in enumerate(st.blocks):
        if n:
            prefix = prefix + st.braids[n - 1]
        d = longitudes(prefix)
        k, kp, l, lp, m, mp = d.k, d.k_prime, d.l, d.l_prime, d.m, d.m_prime
        base = theta_of_jk(block).k_part
        # split the block's contribution by which variable it is written in
        sx_y, sx_z = _by_variable(base.a, "y", "z")
        sy_x, sy_z = _by_variable(base.b, "x", "z")
        sz_x, sz_y = _by_variable(base.c, "x", "y")
        contribution = Triple(
            _conj_power(sx_y, "z", kp - l) + _conj_power(sx_z, "y", k - mp),
            _conj_power(sy_x, "z", l - kp) + _conj_power(sy_z, "x", lp - m),
            _conj_power(sz_x, "y", mp - k) + _conj_power(sz_y, "x", m - lp),
        )
        total = total + contribution
    return total


def _by_variable(r: RingElem, first_name: str, second_name: str) -> Tuple[RingElem, RingElem]:
    """Split a sum of pure powers of one generator into its two single-variable parts."""
    zero = RingElem.zero(r.ctx)
    parts = {first_name: zero, second_name: zero}
    for g, c in r.items():
        if g.j:
            raise StackError("block polynomials must not involve the central generator")
        if g.i and g.k:
            raise StackError("block polynomials must be in a single variable")
        name = r.ctx.first if g.i else (r.ctx.second if g.k else None)
        if name is None:
            # constant terms: attribute to whichever variable the block uses (conjugation fixes them)
            name = first_name
        parts[name] = parts[name] + RingElem.of(g, c)
    return parts[first_name], parts[second_name]


class RouteMismatch(AssertionError):
    pass


def closure_sigma(st: Stack, check: bool = True) -> Triple:
    """Closure invariant of the stack; both routes are computed and compared when `check`."""
    via_theta = closure_by_theta(st)
    if check:
        via_formula = closure_by_formula(st)
        if via_formula != via_theta:
            raise RouteMismatch(f"closure routes disagree: {via_theta} vs {via_formula}")
    return via_theta


def brunnian_closure_check(st: Stack) -> bool:
    return brunnian_certificate(closure_sigma(st))
