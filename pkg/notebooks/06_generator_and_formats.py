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
# # Seeded instances and the text format
#
# Instances come from numpy's PCG64 generator seeded with the given integer,
# so a seed and a config always give the same instance.

# %%
from fractions import Fraction

from dispersion import GeneratorConfig, format_instance, gen_instance, parse_instance

cfg = GeneratorConfig(seed=7, n=5, kind="line")
text = format_instance(gen_instance(cfg))
print(text)
assert text == format_instance(gen_instance(cfg))

# %%
print(format_instance(gen_instance(GeneratorConfig(seed=1, n=4, kind="cycle", coord_max=60))))

# %% [markdown]
# Decimals are exact, and p/q is accepted so any rational instance can be
# written back without loss.

# %%
inst = parse_instance("line 3\n0 0.5\n2/3 1\n1.25 7/3\n")
print(format_instance(inst))
assert parse_instance(format_instance(inst)) == inst

# %%
spaced = gen_instance(GeneratorConfig(seed=3, n=6, min_gap=Fraction(5, 2), denominator=4, coord_max=400))
print(format_instance(spaced))
