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
# # Checking a solution without trusting the solver
#
# `verify_solution` recomputes everything from the instance: each point must
# be in its interval, every gap must reach d_min, and the certificate must
# evaluate to exactly d_min.

# %%
from fractions import Fraction

from dispersion import LineInstance, LinePair, Solution, solve_line, verify_solution
from dispersion.model import RationalPoints

inst = LineInstance.from_pairs([(0, 1), (2, 4), (5, 6)])
print(verify_solution(inst, solve_line(inst)))

# %% [markdown]
# A claim of d = 4 with the pair (1, 2) is consistent as a bound, since
# r_2 - l_1 = 4, but the points do not achieve it.

# %%
claim = Solution("line", RationalPoints.of([0, 3, 6]), Fraction(4), LinePair(1, 2, Fraction(4)))
print(verify_solution(inst, claim))

# %% [markdown]
# ## Round trip through JSON

# %%
from dispersion import solution_from_json, solution_to_json

text = solution_to_json(solve_line(inst), indent=2)
print(text)
assert verify_solution(inst, solution_from_json(text)).optimal
