"""Search all edge permutations of a polygon surface for simple twists.

Only one or two boundary components admit one, and then only the cyclic
shifts pass.
"""

from braidcover.polygon import build_polygon, classify_simple_twists, cover_equivalence_check, functor_order, shift_twist

for h, b in [(1, 1), (0, 2), (1, 2), (2, 1), (0, 3), (1, 3), (0, 4)]:
    P = build_polygon(h, b)
    found = sorted(classify_simple_twists(h, b))
    print(f"S_{{{h},{b}}}: {len(found)} simple twist(s) {found}")
    if found:
        print(f"   shift order {functor_order(shift_twist(P))}")

print("\ncover lift agrees with the polygon shift for d=2..9:",
      all(cover_equivalence_check(d) for d in range(2, 10)))
