"""
Welded braids on three strands: their action on the free group, the
relations they satisfy, and the automorphism of the reduced free group.

    python3 demos/welded_braids.py
"""

from linkmap.milnor import format_word
from linkmap.welded import (
    FORBIDDEN, RELATIONS, braid_action, braid_permutation, longitudes, parse_braid, relation_holds, to_mf3_auto,
)

for word in ["s1", "v1", "s1' v1", "s1 s2 s1", "s2 s1 s1 s2"]:
    b = parse_braid(word)
    images = ", ".join(format_word(w) for w in braid_action(b))
    print(f"{word:12} perm {braid_permutation(b)}  images ({images})")

print()
for name, (lhs, rhs) in RELATIONS.items():
    print(f"{name:24} {lhs!r} = {rhs!r}: {relation_holds(lhs, rhs)}")
print(f"{'forbidden':24} {FORBIDDEN[0]!r} = {FORBIDDEN[1]!r}: {relation_holds(*FORBIDDEN)}")

print()
b = "s1' v1 s2 s2"
d = longitudes(b)
print(f"longitudes of {b!r}:", [format_word(w) for w in d.longitudes], d.exponents)
print("automorphism:", to_mf3_auto(b))
