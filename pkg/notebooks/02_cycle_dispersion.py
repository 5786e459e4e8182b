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
# # The cycle version
#
# Arcs sit on a circle of circumference C, each given by a start and a
# clockwise length. The circle is cut open and laid out twice on a line, and
# the line scan starts from d_min = C / n instead of infinity.

# %%
from dispersion import CycleInstance, double_instance, oracle_cycle_optimum, solve_cycle

inst = CycleInstance(10, [(0, 1), (2, 1), (6, 1)])
doubled = double_instance(inst)
print([(str(iv.left), str(iv.right)) for iv in doubled.line.intervals])

# %%
sol = solve_cycle(inst)
print("points:", [str(p) for p in sol.points])
print("d_min :", sol.d_min, " certificate:", sol.certificate)
assert sol.d_min == oracle_cycle_optimum(inst)

# %% [markdown]
# When the arcs are spread evenly, nothing is tighter than C / n and the
# certificate says so.

# %%
even = CycleInstance(12, [(0, 1), (4, 1), (8, 1)])
print(solve_cycle(even).certificate)

# %% [markdown]
# Starting the circle elsewhere only relabels coordinates.

# %%
shifted = CycleInstance(10, [(2, 1), (7, 1)])
print([str(p) for p in solve_cycle(shifted).points], double_instance(shifted).offset)

# %% [markdown]
# ## A seeded batch against the oracle

# %%
from dispersion.oracle import corpus

bad = 0
for _, c in corpus("cycle", 2000, seed=4, n_range=(2, 9), allow_touching=True):
    bad += solve_cycle(c).d_min != oracle_cycle_optimum(c)
print("mismatches:", bad)
