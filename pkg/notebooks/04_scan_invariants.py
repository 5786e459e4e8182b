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
# # Watching the scan invariants
#
# `check_invariants` evaluates every invariant of the scan exactly on the
# current state. It is quadratic, so it is for testing and teaching.

# %%
from dispersion import LineInstance, check_invariants, trace_line

inst = LineInstance.from_pairs([(0, 1), (2, 4), (5, 6)])
for _, state in trace_line(inst):
    print(check_invariants(state))

# %% [markdown]
# ## Slope ties
#
# When three left endpoints lie on one line in (index, coordinate) space, the
# strict priority inequality cannot hold: whichever index is dropped lies
# exactly on the line through the others. The non-strict form still holds.

# %%
inst = LineInstance.from_pairs([(0, 7), (10, 15), (20, 27)])
for _, state in trace_line(inst):
    if state.done:  # inspect before the tail is finalized
        print(check_invariants(state)["inv9_priority"])
        print(check_invariants(state, strict_priority=False).ok)

# %% [markdown]
# How often ties show up on small random instances:

# %%
from dispersion.oracle import corpus

runs = ties = 0
for _, inst in corpus("line", 300, seed=2, n_range=(2, 50), allow_touching=True, allow_degenerate=True):
    runs += 1
    ties += any(not check_invariants(s).ok for _, s in trace_line(inst))
print(f"{ties} of {runs} runs hit a tie")
