"""
Exact optima and empirical ratios
=================================

On small graphs an exhaustive search gives the true minimum, so the greedy
size can be compared with it and with the worst-case bound.
"""

from fractions import Fraction

import numpy as np

from ftbackbone import brute_min_kmcds, gamma_bound, gen_random_3connected, solve_3m_cds

rows = []
for s in range(12):
    g = gen_random_3connected(10 + s % 4, 0.15, seed=300 + s)
    result, trace = solve_3m_cds(g, 3)
    opt3 = len(brute_min_kmcds(g, 3, 3))
    opt2 = len(brute_min_kmcds(g, 2, 3))
    alpha = Fraction(trace.c0_size, opt2)
    rows.append((len(g), len(result), opt3, float(alpha), len(result) / opt3, gamma_bound(alpha)))

table = np.array(rows)
print(" n  alg  opt  alpha  ratio  bound")
for n, alg, opt, alpha, ratio, bound in table:
    print(f"{n:2.0f} {alg:4.0f} {opt:4.0f}  {alpha:.2f}  {ratio:.3f}  {bound:.2f}")
print("mean ratio %.3f, max ratio %.3f" % (table[:, 4].mean(), table[:, 4].max()))
