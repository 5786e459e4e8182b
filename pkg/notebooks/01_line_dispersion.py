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
# # Spreading points over intervals on a line
#
# Each interval gets one point. We want the smallest distance between
# consecutive points to be as large as possible.

# %%
from fractions import Fraction

from dispersion import LineInstance, oracle_line_optimum, solve_line

inst = LineInstance.from_pairs([(0, 1), (2, 4), (5, 6)])
sol = solve_line(inst)
print("points:", [str(p) for p in sol.points])
print("d_min :", sol.d_min)
print("pair  :", sol.certificate)

# %% [markdown]
# The certificate names intervals 1 and 3: the points of 1..3 must fit
# between l_1 = 0 and r_3 = 6 using two gaps, so no placement beats 6/2 = 3.
# A brute-force oracle over every pair agrees.

# %%
assert sol.d_min == oracle_line_optimum(inst) == 3

# %% [markdown]
# ## Following the scan
#
# `trace_line` yields the state after each interval along with the branch
# taken: "A" (point sits at the left end), "B" (point one d_min past its
# predecessor) or "C" (point pinned at the right end, d_min shrinks).

# %%
from dispersion import trace_line

inst = LineInstance.from_pairs([(0, 1), (10, 11), (12, 13)])
for branch, state in trace_line(inst):
    n, d = state.d_min
    d_text = "inf" if d == 0 else str(Fraction(n, d))
    print(f"after {state.i}: branch {branch:4}  d_min {d_text:>4}  critical {[k + 1 for k in state.critical]}")

print([str(p) for p in solve_line(inst).points])

# %% [markdown]
# At interval 3 the point is pinned at 13. Interval 1 would have to move left
# past its own left end, so it is finalized and interval 2 sets the binding
# pair instead.
#
# ## Rational input and an initial bound

# %%
inst = LineInstance.from_pairs([(Fraction(1, 3), Fraction(1, 2)), (Fraction(2, 3), 1), (Fraction(7, 5), 2)])
sol = solve_line(inst)
print(sol.d_min, [str(p) for p in sol.points])

capped = solve_line(LineInstance.from_pairs([(0, 5), (6, 10)]), initial_bound=2)
print(capped.d_min, capped.certificate)
