# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Linear time in practice
#
# Each index is pushed onto the critical list once, popped at most once and
# finalized once, so the operation count per interval stays bounded.

# %%
import numpy as np

from dispersion.bench import run_bench

report = run_bench([2**12, 2**14, 2**16, 2**18], seed=0)
print(report.to_table())

# %%
per = np.array([r.per_interval for r in report.rows]) * 1e9
ops = np.array([r.stats.total / r.n for r in report.rows])
print("ns per interval:", np.round(per, 1))
print("ops per interval:", np.round(ops, 3))
print("spread of time per interval:", round(float(per.max() / per.min()), 2))

# %% [markdown]
# Random instances on a wide coordinate range mostly take the first branch,
# which resets the list. Left endpoints on a concave curve keep many indices
# alive at once, and the count still stays at most 3 per interval: one push,
# at most one pop and one finalization each.

# %%
from dispersion import LineInstance, solve_line

for n in (2**12, 2**16):
    lefts = [10 * n * i - i * i for i in range(n)]
    inst = LineInstance.from_pairs((l, l + 10 * n - 2 * i - 2) for i, l in enumerate(lefts))
    s = solve_line(inst).stats
    print(n, s, round(s.total / n, 3))
