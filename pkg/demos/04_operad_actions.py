"""Framed little disks acting on configurations and on surfaces."""

import numpy as np

from braidcover.operad import (
    act_on_configurations,
    act_on_surfaces,
    algebra_map_square,
    identity_element,
    max_distance,
    operad_compose,
    random_configuration,
    random_element,
    stratum_operand,
)

rng = np.random.default_rng(7)
f = random_element(rng, 3)
gs = [random_element(rng, k) for k in (2, 1, 2)]
print("unit error:", max_distance(operad_compose(identity_element(), [f]), f))
print("arity of f(g1, g2, g3):", operad_compose(f, gs).arity)

configs = [random_configuration(rng, k) for k in (2, 3, 1)]
print("points after acting:", len(act_on_configurations(f, configs)))

d, ms = 3, (1, 2, 2)
glued = act_on_surfaces(3, [stratum_operand(d, m) for m in ms])
print(f"gluing genera {[stratum_operand(d, m).genus for m in ms]} -> genus {glued.genus}, "
      f"direct {stratum_operand(d, sum(ms)).genus}")
print("algebra map square commutes:", algebra_map_square(d, ms))
