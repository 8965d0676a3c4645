# %% [markdown]
# # Two definitions of a semiprime fuzzy subset
#
# * pointwise: `f(x) >= f(x*x)` for all x
# * order-theoretic: every g with `g*g <= f` satisfies `g <= f`
#
# The second is decided through fuzzy points: it holds exactly when
# `f(x) >= min{f(a) : a <= x*x}` for every x. The brute-force decider
# enumerates every g over a grade grid and agrees.

# %%
from fuzzy_semiprime.calculus import FuzzySubset
from fuzzy_semiprime.semiprime import (
    def2_bruteforce,
    def2_threshold,
    has_property_a,
    is_semiprime_def1,
    is_semiprime_def2,
)
from fuzzy_semiprime.structures import OrderedGroupoid

C = OrderedGroupoid.from_order([[1, 1], [1, 1]], [(0, 1)], ["a", "b"])  # a < b, x*y = b
f = FuzzySubset(C, (0, 1))
print(is_semiprime_def1(f))
print(is_semiprime_def2(f), "thresholds:", [str(def2_threshold(f, x)) for x in C.elements])
print(def2_bruteforce(f))

# %% [markdown]
# Drop the order and the two definitions agree again: both fail.

# %%
D = OrderedGroupoid.discrete([[1, 1], [1, 1]], ["a", "b"])
h = FuzzySubset(D, (0, 1))
r = is_semiprime_def2(h)
print(r.holds, "violating fuzzy point:", r.witness.g, "at", D.labels[r.witness.x])
print(def2_bruteforce(h).witness.g)

# %% [markdown]
# Condition (a) fails on the converse witness, as it must: together with the
# order-theoretic definition it forces the pointwise one.

# %%
print(has_property_a(f))
