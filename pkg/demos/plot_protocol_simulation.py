"""
Simulating the single-setting protocol
======================================

Each shot measures every qubit in the basis given by one stabilizer and
multiplies the +-1 outcomes. Hoeffding's inequality fixes how many shots are
needed for a target accuracy.
"""

import graphfid as gf

g = gf.complete_graph(8)
ch = gf.depolarizing(0.15)
res = gf.auto_select(g)
eps, delta = 0.05, 0.01
N = gf.hoeffding_samples(eps, delta)

report = gf.run_protocol(g, res.index, ch, N, seed=1, epsilon=eps, delta=delta)
print(report.to_json(stabilizer=str(res.string)))
print("expected", gf.stabilizer_expectation(ch, res.counts))

###############################################################################
# Repeating the experiment many times shows how often the estimate lands
# within epsilon of the expectation.

cov = gf.coverage_trials(g, res.index, ch, eps, delta, trials=500, seed=2, workers=4)
print(f"coverage over 500 trials: {cov:.3f} (target {1 - delta})")
