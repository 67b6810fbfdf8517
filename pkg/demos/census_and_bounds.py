"""
Counting unit-distance graphs and comparing against the zero-pattern bound
===========================================================================
"""

import math

from udgraph import (
    SolverConfig,
    count_distance,
    count_faithful,
    ramsey_exact,
    ramsey_fd_lower,
    zero_pattern_bound,
)

# on the line the census is exact: a graph embeds faithfully in R^1 iff
# it is a disjoint union of paths
rep = count_faithful(4, 1)
print("faithful on 4 labelled vertices in R^1:", rep.count_realizable)
print("exact (oracle backed):", rep.exact)

rep5 = count_faithful(5, 1)
print("faithful on 5 labelled vertices in R^1:", rep5.count_realizable)

# in the plane the counts come from the numeric solver
cfg = SolverConfig(seed=0, restarts=40, max_iters=800)
rep2 = count_faithful(3, 2, cfg=cfg)
print("faithful on 3 labelled vertices in R^2:", rep2.count_realizable,
      "of", 2 ** 3)

rep2d = count_distance(3, 2, cfg=cfg)
print("distance  on 3 labelled vertices in R^2:", rep2d.count_realizable)

# the algebraic ceiling: number of zero-patterns of the distance polynomials
print()
for n, d in ((4, 1), (4, 2), (20, 2)):
    b = zero_pattern_bound(n, d)
    print("zero-pattern bound n=%-2d d=%d: %s" % (n, d, b))
print("check against binomial form:", zero_pattern_bound(20, 2) == math.comb(380, 40))

# Ramsey-style consequence: below the threshold every 2-coloring of a clique
# has a monochromatic unit-distance class
print()
for s, d in ((3, 1), (6, 1), (8, 2)):
    print("ramsey lower bound s=%d d=%d:" % (s, d), ramsey_fd_lower(s, d))
print("exact value s=3 d=1:", ramsey_exact(3, 1))
