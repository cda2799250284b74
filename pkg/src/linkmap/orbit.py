"""
Deciding whether two triples differ by a basing shift.

The action is a bijection on monomials that fixes (component, i, k) and moves
j by the same amount within each such group.  So `act(s, v) == w` holds
exactly when, for every group, w's (j, coeff) list is v's translated by
form(i, k)·s.  Each nonempty group pins down one translation, giving an
integer linear system in (p, q, r) that is solved exactly.  No search is
needed, so `Undecided` is never produced; the type is kept so callers can
handle a bounded procedure uniformly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .invariants import coefficient_multisets, gcd_profile, support_multisets
from .lattice import column_echelon, rank, solve_integer
from .triples import LABELS, BasingShift, Triple, act, monomials, shift_form


@dataclass(frozen=True)
class Equal:
    witness: BasingShift

    name = "Equal"


@dataclass(frozen=True)
class Distinct:
    separator: str
    detail: str = ""
    component: Optional[str] = None

    name = "Distinct"


@dataclass(frozen=True)
class Undecided:
    radius: int

    name = "Undecided"


OrbitVerdict = Union[Equal, Distinct, Undecided]

FAST_SEPARATORS = (
    ("coefficients", coefficient_multisets),
    ("support", support_multisets),
    ("gcd_profile", gcd_profile),
)


def fast_separator(v: Triple, w: Triple) -> Optional[Distinct]:
    """First (component, invariant) pair whose values differ."""
    values = {name: (fn(v), fn(w)) for name, fn in FAST_SEPARATORS}
    for n, label in enumerate(LABELS):
        for name, _ in FAST_SEPARATORS:
            a, b = values[name][0][n], values[name][1][n]
            if a != b:
                only_v = sorted((a - b).elements())
                only_w = sorted((b - a).elements())
                return Distinct(name, f"only in first: {only_v}; only in second: {only_w}", label)
    return None


def _groups(v: Triple) -> Dict[Tuple[int, int, int], List[Tuple[int, int]]]:
    out: Dict[Tuple[int, int, int], List[Tuple[int, int]]] = defaultdict(list)
    for n, i, j, k, c in monomials(v):
        out[(n, i, k)].append((j, c))
    for key in out:
        out[key].sort()
    return out


def shift_constraints(v: Triple, w: Triple):
    """
    Rows (form, d) with form·(p, q, r) = d, or a Distinct verdict if some
    group of w is not a translate of the matching group of v.
    """
    gv, gw = _groups(v), _groups(w)
    if gv.keys() != gw.keys():
        return Distinct("support", "different (component, i, k) groups")
    rows = []
    for key in sorted(gv):
        a, b = gv[key], gw[key]
        d = b[0][0] - a[0][0]
        if len(a) != len(b) or any(jb - ja != d or cb != ca for (ja, ca), (jb, cb) in zip(a, b)):
            n, i, k = key
            return Distinct("constraints", f"group (i, k) = ({i}, {k}) of component {LABELS[n - 1]} is not a translate", LABELS[n - 1])
        rows.append((shift_form(*key), d))
    return rows


def orbit_eq(v: Triple, w: Triple, radius: Optional[int] = None) -> OrbitVerdict:
    """
    Equal(witness) with act(witness, v) == w, or Distinct(separator).

    `radius` is accepted for interface compatibility; the constraint system is
    solved exactly, so it never limits the answer.
    """
    fast = fast_separator(v, w)
    if fast is not None:
        return fast
    rows = shift_constraints(v, w)
    if isinstance(rows, Distinct):
        return rows
    a = [list(f) for f, _ in rows]
    b = [d for _, d in rows]
    sol = solve_integer(a, b, 3) if rows else [0, 0, 0]
    if sol is None:
        return Distinct("constraints", f"no integer (p, q, r) solves the {len(rows)} shift equations")
    witness = canonical_witness(a, sol)
    if act(witness, v) != w:
        raise AssertionError("orbit witness failed to replay")
    return Equal(witness)


def canonical_witness(a: List[List[int]], sol: List[int]) -> BasingShift:
    """Prefer (0, 0, 0) along directions the constraints do not see."""
    if not a or rank(a, 3) == 0:
        return BasingShift(0, 0, 0)
    if rank(a, 3) == 3:
        return BasingShift(*sol)
    # move the solution along the integer kernel toward the origin, coordinatewise
    _, u, pivots = column_echelon(a, 3)
    kernel = [[u[r][c] for r in range(3)] for c in range(len(pivots), 3)]
    x = list(sol)
    improved = True
    while improved:
        improved = False
        for kv in kernel:
            for sign in (1, -1):
                cand = [xi + sign * ki for xi, ki in zip(x, kv)]
                if sum(c * c for c in cand) < sum(c * c for c in x):
                    x, improved = cand, True
    return BasingShift(*x)


def replay(verdict: OrbitVerdict, v: Triple, w: Triple) -> bool:
    """Re-check a verdict independently of how it was reached."""
    if isinstance(verdict, Equal):
        return act(verdict.witness, v) == w
    if isinstance(verdict, Distinct):
        fns = dict(FAST_SEPARATORS)
        if verdict.separator in fns:
            n = LABELS.index(verdict.component)
            return fns[verdict.separator](v)[n] != fns[verdict.separator](w)[n]
        return not isinstance(shift_constraints(v, w), list) or solve_integer(
            [list(f) for f, _ in shift_constraints(v, w)], [d for _, d in shift_constraints(v, w)], 3
        ) is None
    return True


def verdict_report(verdict: OrbitVerdict) -> Dict:
    if isinstance(verdict, Equal):
        return {"verdict": "Equal", "witness": list(verdict.witness.as_tuple())}
    if isinstance(verdict, Distinct):
        out = {"verdict": "Distinct", "separator": verdict.separator, "detail": verdict.detail}
        if verdict.component:
            out["component"] = verdict.component
        return out
    return {"verdict": "Undecided", "radius": verdict.radius}
