"""
Picking one stabilizer for a cluster state
==========================================

For a 2x4 cluster with boustrophedon numbering we list the stabilizers that
have exactly two identity letters, then check how well the fidelity is
approximated at small noise.
"""

import graphfid as gf

g = gf.grid_cluster((2, 4))
for res in gf.find_set_A(g)[:8]:
    print(res.describe())

###############################################################################
# Members with weight n/2 keep the estimate valid for noise that is not
# depolarizing. The smallest one is what ``auto_select`` returns; the
# alternating product g0 g2 g4 g6 is another.

print("dual choice:", gf.auto_select(g, dual=True).describe())
alt = gf.StabilizerIndex.from_generators(g.n, [0, 2, 4, 6])
print("alternating:", alt, gf.stabilizer(g, alt))

###############################################################################
# Larger clusters reuse the 2x4 block, mirrored on alternate tiles.

for q, r in [(1, 2), (2, 1), (2, 2)]:
    res = gf.cluster_tiling_pattern(q, r)
    print(f"{2 * r}x{4 * q}: {res.string} ({res.source})")

###############################################################################
# Third-order truncation against the exact fidelity.

for p in (0.04, 0.02, 0.01):
    exact = gf.exact_fidelity(g, gf.depolarizing(p))
    approx = gf.cluster_third_order(g, p)
    print(f"p = {p:.2f}: exact {exact:.10f}  third order {approx:.10f}  error {abs(exact - approx):.2e}")
