"""Lifted half-twists on a cyclic cover still satisfy the braid relations.

We lift each half-twist of the disk with n marked points to the d-fold
cyclic cover, check every braid relator, then show that cubes of the
lifts do not satisfy the braid relation even though the lifts do.
"""

from braidcover import verify_cube_failure, verify_relations
from braidcover.braid import BraidWord
from braidcover.covering import build_cover_groupoid, evaluate_on_cover

n, d = 4, 3
E = build_cover_groupoid(n, d)
twist = evaluate_on_cover(E, BraidWord.from_ints(n, [1]))
print(f"lifted twist on the {d}-fold cover with {n} points:")
for label in ("e[0][1]", "e[1][1]", "e[2][1]"):
    print(f"  {label} -> {twist.edge_map[label]}")

report = verify_relations(n, d)
print(f"\nrelations sweep: {report.summary}")

for d in (2, 3, 4):
    r = verify_cube_failure(d)
    fail = next(c for c in r.checks if c.name == "cube_relation_fails")
    print(f"d={d}: cubes break the relation, witness edge {fail.witness.get('edge')}")
