"""
Worked examples as data, with their expected values.

The stacking block `LINKED_BLOCK` keeps y split and links x with z; it is the
reversed mirror of `WHITEHEAD_BLOCK`, whose Kirk pair is
(t + t⁻¹ − 2, 2 − t − t⁻¹).  Which of the two goes first in X·J·X̄ is fixed
by requiring that stack to produce `XJX` below; the braid `CONJ_X_BY_Y` is
the welded braid sending x ↦ y⁻¹ x y and fixing y and z.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .group_ring import LaurentPoly
from .triples import Triple
from .theta import JKBlock, Stack

CONJ_X_BY_Y = "s1' v1"

WHITEHEAD_BLOCK = JKBlock.parse("y", "t + t^-1 - 2", "2 - t - t^-1")
LINKED_BLOCK = WHITEHEAD_BLOCK.mirror()
TRIVIAL_BLOCK = JKBlock("y", LaurentPoly("t"), LaurentPoly("t"))

XJX = Triple.parse("z*(s-1) + z^-1*(s^-1-1)", "0", "x*(1-u) + x^-1*(1-u^-1)")
XJX_REFLECTED = Triple.parse("z*(s^-1-1) + z^-1*(s-1)", "0", "x*(1-u^-1) + x^-1*(1-u)")
XJJX = Triple.parse("z*(s^2-1) + z^-1*(s^-2-1)", "0", "x*(1-u^2) + x^-1*(1-u^-2)")

# Separated by j mod gcd(i, k) in the first component.  The second triple's
# last component is written with x, the Γ_z generator, in place of z.
GCD_V = Triple.parse(
    "z^2 s^2 + z^-2 s^-2 - 4 z s - 4 z^-1 s^-1 + 6",
    "0",
    "4 x u + 4 x^-1 u^-1 - x^2 u^2 - x^-2 u^-2 - 6",
)
GCD_W = Triple.parse(
    "z^2 s + z^-2 s - 4 z s - 4 z^-1 s^-1 + 6",
    "0",
    "x^2 u + x^-2 u - 4 x u - 4 x^-1 u^-1 + 6",
)


def stack_xjx() -> Stack:
    return Stack.from_items([LINKED_BLOCK, CONJ_X_BY_Y, LINKED_BLOCK.mirror()])


def stack_xjjx() -> Stack:
    return Stack.from_items([LINKED_BLOCK, CONJ_X_BY_Y + " " + CONJ_X_BY_Y, LINKED_BLOCK.mirror()])


def stack_xxj() -> Stack:
    # X X̄ J, closed off by a trivial block so the stack ends with a JK entry
    return Stack.from_items([LINKED_BLOCK, "", LINKED_BLOCK.mirror(), CONJ_X_BY_Y, TRIVIAL_BLOCK])


TRIPLES: Dict[str, Triple] = {
    "xjx": XJX,
    "xjx_reflected": XJX_REFLECTED,
    "xjjx": XJJX,
    "gcd_v": GCD_V,
    "gcd_w": GCD_W,
}

STACKS: Dict[str, Callable[[], Stack]] = {
    "xjx": stack_xjx,
    "xjjx": stack_xjjx,
    "xxj": stack_xxj,
}

BRAIDS: Dict[str, str] = {
    "conj_x_by_y": CONJ_X_BY_Y,
}

NORM_STATS = {"xjx": Fraction(10), "xjjx": Fraction(16)}


def golden_checks() -> List[Tuple[str, Callable[[], bool]]]:
    """(name, check) pairs run by `linkmap examples run`."""
    from .heisenberg import GX, HeisenbergElem, from_matrix, matmul3, mul, to_matrix
    from .invariants import affine_norm_stat, gcd_profile, mu_bar, mu_bar_eq
    from .milnor import magnus, word_inv, word_mul
    from .orbit import Distinct, orbit_eq
    from .theta import closure_by_formula, closure_by_theta, closure_sigma
    from .triples import brunnian_certificate
    from .welded import FORBIDDEN, RELATIONS, braid_action, longitudes, relation_holds

    def heisenberg_grid() -> bool:
        rng = range(-2, 3)
        elems = [HeisenbergElem(GX, i, j, k) for i in rng for j in rng for k in rng]
        return all(
            to_matrix(mul(a, b)) == matmul3(to_matrix(a), to_matrix(b)) for a in elems for b in elems
        ) and all(from_matrix(to_matrix(a), GX) == a for a in elems)

    def xjx() -> bool:
        v = closure_sigma(stack_xjx())
        return v == XJX and brunnian_certificate(v)

    def xjjx() -> bool:
        v = closure_sigma(stack_xjjx())
        return v == XJJX and isinstance(orbit_eq(v, XJX), Distinct)

    def reflection() -> bool:
        return isinstance(orbit_eq(XJX, XJX_REFLECTED, radius=2), Distinct)

    def gcd_example() -> bool:
        verdict = orbit_eq(GCD_V, GCD_W)
        return (
            gcd_profile(GCD_V) != gcd_profile(GCD_W)
            and isinstance(verdict, Distinct)
            and verdict.separator == "gcd_profile"
        )

    def norm_stats() -> bool:
        fv, fw = mu_bar(XJX), mu_bar(XJJX)
        return (
            affine_norm_stat(fv) == NORM_STATS["xjx"]
            and affine_norm_stat(fw) == NORM_STATS["xjjx"]
            and not mu_bar_eq(fv, fw)
        )

    def welded() -> bool:
        return (
            all(relation_holds(*r) for r in RELATIONS.values())
            and not relation_holds(*FORBIDDEN)
            and braid_action(CONJ_X_BY_Y) == ((-2, 1, 2), (2,), (3,))
            and longitudes(CONJ_X_BY_Y).longitudes == ((2,), (), ())
        )

    def commute() -> bool:
        a, b = closure_sigma(stack_xxj()), closure_sigma(stack_xjx())
        return a.is_zero() and not b.is_zero() and isinstance(orbit_eq(a, b), Distinct)

    def routes() -> bool:
        return all(closure_by_theta(f()) == closure_by_formula(f()) for f in STACKS.values())

    def milnor() -> bool:
        g = (1, 2, -3, 2, 2, -1, 3)
        return all(
            magnus(word_mul((x,), g, (x,), word_inv(g), (-x,), g, (-x,), word_inv(g))).is_identity()
            for x in (1, 2, 3)
        )

    return [
        ("heisenberg product matches the matrix model", heisenberg_grid),
        ("X J X-bar closes to the Brunnian triple", xjx),
        ("X J J X-bar closes to the double-pass triple, distinct from X J X-bar", xjjx),
        ("reflected triple is orbit-distinct", reflection),
        ("gcd residues separate v and w", gcd_example),
        ("mu-bar norm statistics 10 and 16", norm_stats),
        ("welded relations and the conjugating braid", welded),
        ("X X-bar J closes to zero, X J X-bar does not", commute),
        ("closure routes agree on the bundled stacks", routes),
        ("Milnor relators die under the Magnus expansion", milnor),
    ]
