"""
Between depolarizing and dephasing noise
========================================

``interpolated(p, delta)`` moves weight from X and Y errors onto Z. For an
8-qubit cluster the single-stabilizer estimate falls steadily with delta,
and it never exceeds the exact fidelity.
"""

import numpy as np

import graphfid as gf

p = 0.15
g = gf.grid_cluster((2, 4))

for delta in np.linspace(0, p / 3, 6):
    ch = gf.interpolated(p, delta)
    F = gf.exact_fidelity(g, ch)
    F_est = gf.f_est_interpolated(g.n, p, delta)
    print(f"delta = {delta:.3f}  F = {F:.6f}  F_est = {F_est:.6f}")
