"""
Build link maps by stacking JK blocks with welded braids in between, and
read off the three-component invariant of the closure.

    python3 demos/closing_stacks.py
"""

from linkmap import fixtures
from linkmap.theta import Stack, closure_by_formula, closure_by_theta, closure_sigma, theta_of_stack
from linkmap.triples import LABELS, brunnian_certificate, kirk_projection


def show(name, st: Stack) -> None:
    v = closure_sigma(st)  # raises if the two evaluation routes disagree
    print(f"{name}:")
    for label, part in zip(LABELS, v.parts):
        print(f"  sigma_{label} = {part}")
    print(f"  brunnian: {brunnian_certificate(v)}")
    for c in LABELS:
        p, q = kirk_projection(v, c)
        print(f"  drop {c}: ({p}, {q})")


block = fixtures.LINKED_BLOCK
print(f"block keeps {LABELS[block.split - 1]} split; Kirk pair ({block.kirk1}, {block.kirk2})")
print(f"braid between blocks: {fixtures.CONJ_X_BY_Y!r}\n")

show("X J X-bar", fixtures.stack_xjx())
show("X J J X-bar", fixtures.stack_xjjx())
show("X X-bar J", fixtures.stack_xxj())

# the closure is the K part of a product in a semidirect product
th = theta_of_stack(fixtures.stack_xjx())
print(f"\nTheta(X J X-bar) automorphism: {th.auto!r}")
st = fixtures.stack_xjx()
print("routes agree:", closure_by_theta(st) == closure_by_formula(st))
