# %% [markdown]
# # The two counterexamples on infinite carriers
#
# Naturals `{2, 3, ...}` with the step function, checked on a window, and the
# identity map on `[0, 1]`, checked with exact rational products.

# %%
from fuzzy_semiprime import gallery

print("\n".join(gallery.theorem4_transcript(1000)))
print()
print("\n".join(gallery.remark6_transcript()))

# %% [markdown]
# A finite stand-in for the naturals: cap products at N. The general deciders
# then reproduce the same verdicts.

# %%
from fuzzy_semiprime.semiprime import is_semiprime_def1, is_semiprime_def2

f = gallery.theorem4_fuzzy(12)
print(is_semiprime_def1(f).as_dict(f.structure.labels.__getitem__))
print(is_semiprime_def2(f).holds)
