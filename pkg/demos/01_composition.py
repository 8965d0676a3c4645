# %% [markdown]
# # Composition of fuzzy subsets
#
# A fuzzy subset of a finite ordered groupoid assigns an exact rational grade
# in [0, 1] to every element. The product `f * g` at `a` is the largest
# `min(f(x), g(y))` over pairs with `a <= x*y`, or 0 when there are none.

# %%
from fractions import Fraction

from fuzzy_semiprime.calculus import FuzzySubset, compose, constant, fuzzy_point, square
from fuzzy_semiprime.structures import OrderedGroupoid

# two-element chain a < b whose product is constantly a
S = OrderedGroupoid.from_order([[0, 0], [0, 0]], [(0, 1)], ["a", "b"])
print(S, "associative:", S.is_associative(), "top:", S.labels[S.greatest_element()])

# %%
f = FuzzySubset(S, ("3/10", "7/10"))
print("f     =", f)
print("f * f =", f * f)  # nothing lies above b, so (f*f)(b) = 0
print("pairs above a:", S.pairs_above(0))

# %% [markdown]
# Fuzzy points and the order on fuzzy subsets.

# %%
p = fuzzy_point(S, 1, Fraction(1, 2))
print("b_{1/2}^2 =", square(p))
print("f <= 1 :", f <= constant(S, 1))

# %% [markdown]
# On a non-associative table the composition need not be associative either.

# %%
T = OrderedGroupoid.discrete([[0, 0], [1, 0]], ["a", "b"])
g = FuzzySubset(T, (0, 1))
h = FuzzySubset(T, (1, 1))
print("(g*g)*h =", compose(compose(g, g), h))
print("g*(g*h) =", compose(g, compose(g, h)))
