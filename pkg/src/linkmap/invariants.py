"""
Invariants of triples under the basing action.

The action moves the central exponent j of a monomial by a linear form in
(p, q, r) whose coefficients are the monomial's (i, k).  Everything here is a
function of data the action cannot change: coefficients, (i, k) supports,
j modulo gcd(i, k), the affine orbit of the j-vector, and the minimal spread
of the supports.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import hermite_rows, in_lattice, kernel_complement
from .triples import BasingShift, Triple, shift_form

DEFAULT_RADIUS = 64


def default_radius() -> int:
    value = os.environ.get("LINKMAP_RADIUS")
    if value is None:
        return DEFAULT_RADIUS
    n = int(value)
    if n <= 0:
        raise ValueError("LINKMAP_RADIUS must be positive")
    return n


def _components(v: Triple):
    for n, r in enumerate(v.parts, start=1):
        yield n, [(g.i, g.j, g.k, c) for g, c in r.items()]


def coefficient_multisets(v: Triple) -> Tuple[Counter, Counter, Counter]:
    return tuple(Counter(c for *_, c in terms) for _, terms in _components(v))  # type: ignore[return-value]


def support_multisets(v: Triple) -> Tuple[Counter, Counter, Counter]:
    return tuple(Counter((i, k) for i, _, k, _ in terms) for _, terms in _components(v))  # type: ignore[return-value]


def gcd_residue(i: int, j: int, k: int) -> Tuple[int, int]:
    """(g, residue); g = 0 means nothing reduces j and the residue is j itself."""
    g = math.gcd(abs(i), abs(k))
    return (g, j % g if g else j)


def gcd_profile(v: Triple) -> Tuple[Counter, Counter, Counter]:
    return tuple(
        Counter((i, k, c, gcd_residue(i, j, k)[1]) for i, j, k, c in terms) for _, terms in _components(v)
    )  # type: ignore[return-value]


def _canonical_counter(c: Counter) -> List:
    return sorted([list(key) if isinstance(key, tuple) else key, n] for key, n in c.items())


def profile_report(profile) -> Dict[str, List]:
    return {label: _canonical_counter(c) for label, c in zip(("gx", "gy", "gz"), profile)}


# μ̄: affine families

# generator coefficients (q1, q2, q3) of a block's odd slot, per segment
def _block_gens(component: int, i: int, k: int) -> Tuple[int, int, int]:
    if component == 1:
        return (k, i, 0)
    if component == 2:
        return (0, k, i)
    return (i, 0, k)


@dataclass(frozen=True)
class AffineFamily:
    sizes: Tuple[int, int, int]
    base: Tuple[int, ...]
    gens: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    def __post_init__(self):
        n = 2 * sum(self.sizes)
        if len(self.base) != n or any(len(g) != n for g in self.gens):
            raise ValueError("family vectors have the wrong length")
        for g in self.gens:
            if any(g[t] for t in range(1, n, 2)):
                raise ValueError("generators must vanish on coefficient slots")

    @property
    def dim(self) -> int:
        return len(self.base)

    def blocks(self) -> List[Tuple[int, int, int, Tuple[int, int, int]]]:
        """(segment, j, coeff, generator coefficients) per block."""
        out = []
        seg_of = [1] * self.sizes[0] + [2] * self.sizes[1] + [3] * self.sizes[2]
        for b, seg in enumerate(seg_of):
            out.append((seg, self.base[2 * b], self.base[2 * b + 1], tuple(g[2 * b] for g in self.gens)))
        return out

    def point(self, m: Sequence[int]) -> Tuple[int, ...]:
        return tuple(self.base[t] + sum(mi * g[t] for mi, g in zip(m, self.gens)) for t in range(self.dim))

    def report(self) -> Dict:
        return {"sizes": list(self.sizes), "base": list(self.base), "gens": [list(g) for g in self.gens]}


def mu_bar(v: Triple) -> AffineFamily:
    base: List[int] = []
    gens: List[List[int]] = [[], [], []]
    sizes = []
    for n, terms in _components(v):
        sizes.append(len(terms))
        for i, j, k, c in terms:  # already in lexicographic (i, j, k) order
            base += [j, c]
            for q, coeff in enumerate(_block_gens(n, i, k)):
                gens[q] += [coeff, 0]
    return AffineFamily(tuple(sizes), tuple(base), tuple(tuple(g) for g in gens))  # type: ignore[arg-type]


def _odd(vectors, slots):
    # the j-slots (even 0-based indices) of the chosen blocks
    return [[vec[2 * b] for b in slots] for vec in vectors]


def mu_bar_eq(f1: AffineFamily, f2: AffineFamily) -> bool:
    """
    Is there a within-segment block permutation π with equal coefficients,
    span(π gens₁) = span(gens₂) and π base₁ − base₂ in that span?

    Blocks are matched by (segment, coefficient, g, j mod g), where g is the
    gcd of the block's generator coefficients; projections of equal lattices
    onto any set of slots agree, which prunes partial matchings.
    """
    if f1.sizes != f2.sizes:
        return False
    b1, b2 = f1.blocks(), f2.blocks()

    def residue(block):
        g = math.gcd(*block[3])
        return (block[0], block[2], g, block[1] % g if g else block[1])

    if Counter(map(residue, b1)) != Counter(map(residue, b2)):
        return False

    order = list(range(len(b2)))
    chosen: List[int] = []
    used = [False] * len(b1)

    def consistent(depth: int) -> bool:
        slots2 = order[:depth]
        slots1 = chosen[:depth]
        g1 = _odd(f1.gens, slots1)
        g2 = _odd(f2.gens, slots2)
        if hermite_rows(g1, depth) != hermite_rows(g2, depth):
            return False
        diff = [f1.base[2 * s1] - f2.base[2 * s2] for s1, s2 in zip(slots1, slots2)]
        return in_lattice(diff, g2)

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        target = b2[order[depth]]
        key = residue(target)
        tried = set()
        for n, blk in enumerate(b1):
            if used[n] or residue(blk) != key:
                continue
            # identical blocks are interchangeable
            sig = (blk[1], blk[3])
            if sig in tried:
                continue
            tried.add(sig)
            used[n] = True
            chosen.append(n)
            if consistent(depth + 1) and search(depth + 1):
                return True
            chosen.pop()
            used[n] = False
        return False

    return search(0)


def affine_norm_stat(f: AffineFamily) -> Fraction:
    """Minimum over real m of |base + Σ m_q gen_q|², exactly."""
    basis: List[List[Fraction]] = []
    for g in f.gens:
        u = [Fraction(x) for x in g]
        for b in basis:
            bb = sum(x * x for x in b)
            coef = sum(x * y for x, y in zip(u, b)) / bb
            u = [x - coef * y for x, y in zip(u, b)]
        if any(u):
            basis.append(u)
    r = [Fraction(x) for x in f.base]
    for b in basis:
        bb = sum(x * x for x in b)
        coef = sum(x * y for x, y in zip(r, b)) / bb
        r = [x - coef * y for x, y in zip(r, b)]
    return sum(x * x for x in r)


# width

METRICS = ("L1", "Linf", "L2sq")


@dataclass(frozen=True)
class WidthResult:
    value: int
    witness: BasingShift
    exhaustive: bool


def _pair_data(v: Triple):
    """Per component: list of (di, dk, dj, form) over unordered pairs of support points."""
    out = []
    for n, terms in _components(v):
        pts = [(i, j, k) for i, j, k, _ in terms]
        pairs = []
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                di, dj, dk = (pts[b][0] - pts[a][0], pts[b][1] - pts[a][1], pts[b][2] - pts[a][2])
                pairs.append((di, dk, dj, shift_form(n, di, dk)))
        out.append(pairs)
    return out


def _distance(metric: str, di: int, dk: int, e: int) -> int:
    if metric == "L1":
        return abs(di) + abs(dk) + abs(e)
    if metric == "Linf":
        return max(abs(di), abs(dk), abs(e))
    return di * di + dk * dk + e * e


def width_at(v: Triple, s: BasingShift, metric: str = "L1") -> int:
    return _width_value(_pair_data(v), s.as_tuple(), metric)


def _width_value(data, x: Sequence[int], metric: str) -> int:
    total = 0
    for pairs in data:
        best = 0
        for di, dk, dj, f in pairs:
            e = dj + f[0] * x[0] + f[1] * x[1] + f[2] * x[2]
            d = _distance(metric, di, dk, e)
            if d > best:
                best = d
        total += best
    return total


def width(v: Triple, metric: str = "L1", radius: Optional[int] = None) -> WidthResult:
    """
    Minimal summed diameter of the three supports over all basing shifts.

    The objective depends on the shift x only through the pair forms f·x, and
    is a coercive convex function on the quotient of Z³ by their common kernel.
    A descent gives an upper bound F; every shift with value ≤ F satisfies
    |dj + f·x| ≤ B(F) for each pair, and the integer points of that polytope
    (intersected with a fundamental domain for the kernel) are enumerated.
    Points further than `radius` (sup norm) from the descent point are
    skipped; the result says whether that cut anything off.
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}")
    radius = default_radius() if radius is None else radius
    data = _pair_data(v)
    forms = sorted({f for pairs in data for *_, f in pairs if any(f)})
    u, rho = kernel_complement([list(f) for f in forms], 3)

    def value(x) -> int:
        return _width_value(data, x, metric)

    if rho == 0:
        return WidthResult(value((0, 0, 0)), BasingShift(0, 0, 0), True)

    # integer descent over the full neighbourhood, in the reduced coordinates
    def lift(y: Sequence[int]) -> Tuple[int, int, int]:
        yy = list(y) + [0] * (3 - rho)
        return tuple(sum(u[r][c] * yy[c] for c in range(3)) for r in range(3))  # type: ignore[return-value]

    y = (0,) * rho
    fy = value(lift(y))
    steps = [d for d in product((-1, 0, 1), repeat=rho) if any(d)]
    while True:
        best = None
        for d in steps:
            cand = tuple(a + b for a, b in zip(y, d))
            fc = value(lift(cand))
            if fc < fy and (best is None or fc < best[0]):
                best = (fc, cand)
        if best is None:
            break
        fy, y = best

    # Enumerate in shift coordinates, which keep the forms small; one reduced
    # coordinate suffices when the forms are all proportional.
    if rho == 1:
        basis = [[u[r][0]] for r in range(3)]
        centre: Tuple[int, ...] = y
        extra_rows, extra_rhs = [], []
    else:
        basis = [[int(r == c) for c in range(3)] for r in range(3)]
        centre = lift(y)
        extra_rows, extra_rhs = [], []
        if rho == 2:
            k = [u[r][2] for r in range(3)]
            c = min((r for r in range(3) if k[r]), key=lambda r: abs(k[r]))
            # translates by k cover everything; keep one per class via 0 <= x_c < |k_c|
            n = -(centre[c] // abs(k[c])) * (1 if k[c] > 0 else -1)
            centre = tuple(x + n * kr for x, kr in zip(centre, k))
            unit = [int(r == c) for r in range(3)]
            extra_rows += [unit, [-a for a in unit]]
            extra_rhs += [abs(k[c]) - 1, 0]
    nvar = len(centre)

    def to_shift(w: Sequence[int]) -> Tuple[int, int, int]:
        return tuple(sum(basis[r][t] * w[t] for t in range(nvar)) for r in range(3))  # type: ignore[return-value]

    rows, rhs = _constraints(data, basis, fy, metric)
    rows, rhs = rows + extra_rows, rhs + extra_rhs
    win_rows, win_rhs = [], []
    for t in range(nvar):
        unit = [int(s == t) for s in range(nvar)]
        win_rows += [unit, [-a for a in unit]]
        win_rhs += [centre[t] + radius, radius - centre[t]]
    clipped = _reaches_past(rows, rhs, win_rows, win_rhs)
    points = _lattice_points(rows + win_rows, rhs + win_rhs, nvar)

    best_val, best_x = fy, lift(y)
    for cand in points:
        x = to_shift(cand)
        fc = value(x)
        if fc < best_val or (fc == best_val and x < best_x):
            best_val, best_x = fc, x
    return WidthResult(best_val, BasingShift(*best_x), not clipped)


def _constraints(data, basis, bound: int, metric: str):
    """Rows g, rhs h with g·w ≤ h for every w (shift = basis·w) whose value is at most `bound`."""
    # a component's diameter is at least its in-plane spread, whatever the shift
    floors = [max((_distance(metric, di, dk, 0) for di, dk, _, _ in pairs), default=0) for pairs in data]
    nvar = len(basis[0])
    rows, rhs = [], []
    for n, pairs in enumerate(data):
        own = bound - (sum(floors) - floors[n])
        for di, dk, dj, f in pairs:
            if metric == "L1":
                lim = own - abs(di) - abs(dk)
            elif metric == "Linf":
                lim = own
            else:
                lim = math.isqrt(max(own - di * di - dk * dk, 0))
            g = [sum(f[r] * basis[r][c] for r in range(3)) for c in range(nvar)]
            if not any(g):
                continue
            # -lim <= dj + g·w <= lim
            rows.append(g)
            rhs.append(lim - dj)
            rows.append([-a for a in g])
            rhs.append(lim + dj)
    return rows, rhs


def _linprog(obj, a, b):
    from scipy.optimize import linprog

    return linprog(obj, A_ub=a, b_ub=b, bounds=[(None, None)] * len(obj), method="highs")


def _reaches_past(rows, rhs, extra_rows, extra_rhs) -> bool:
    """Does the polytope rows·y ≤ rhs leave the half-spaces extra_rows·y ≤ extra_rhs?"""
    import numpy as np

    a, b = np.array(rows, dtype=float), np.array(rhs, dtype=float)
    for g, h in zip(extra_rows, extra_rhs):
        res = _linprog(-np.array(g, dtype=float), a, b)
        if res.status != 0 or -res.fun > h + 1e-6:
            return True
    return False


def _lattice_points(rows, rhs, rho: int) -> List[Tuple[int, ...]]:
    """
    All integer y in the bounded polytope rows·y ≤ rhs.  Leading coordinates
    get their range from linear programs over the slice fixed so far; the
    last one is bounded exactly in integers.
    """
    import numpy as np

    a = np.array(rows, dtype=float)
    b = np.array(rhs, dtype=float)
    points: List[Tuple[int, ...]] = []

    def last(prefix):
        c = rho - 1
        lo, hi = None, None
        for row, h in zip(rows, rhs):
            rest = h - sum(row[t] * prefix[t] for t in range(c))
            coef = row[c]
            if coef > 0:
                hi = rest // coef if hi is None else min(hi, rest // coef)
            elif coef < 0:
                bound = -(rest // -coef)
                lo = bound if lo is None else max(lo, bound)
            elif rest < 0:
                return
        for t in range(lo, hi + 1):
            points.append(tuple(prefix) + (t,))

    def walk(prefix):
        c = len(prefix)
        if c == rho - 1:
            last(prefix)
            return
        sub_a = a[:, c:]
        sub_b = b - (a[:, :c] @ np.array(prefix, dtype=float) if c else 0.0)
        ends = []
        for sign in (1.0, -1.0):
            obj = np.zeros(rho - c)
            obj[0] = sign
            res = _linprog(obj, sub_a, sub_b)
            if res.status == 2:
                return
            if res.status != 0:
                raise ArithmeticError(f"width bound failed: {res.message}")
            ends.append(sign * res.fun)
        for t in range(math.floor(ends[0] - 1e-6), math.ceil(ends[1] + 1e-6) + 1):
            walk(prefix + [t])

    walk([])
    return points
