# %% [markdown]
# # Exhaustive search over small ordered groupoids
#
# Every labeled ordered groupoid on up to three elements, every fuzzy subset
# over a grade grid. Theorem scans should come back empty.

# %%
import time

from fuzzy_semiprime.search import SearchTask, dedupe_isomorphic, enumerate_structures, run_search

structures = list(enumerate_structures(3))
print(len(structures), "labeled structures,", len(dedupe_isomorphic(structures)), "up to isomorphism")

# %%
for goal in ("theorem4-scan", "theorem5-scan"):
    t = time.perf_counter()
    r = run_search(SearchTask(3, (0, "1/2", 1), goal))
    print(f"{goal}: examined {r.examined}, violations {len(r.found)}, {time.perf_counter() - t:.1f}s")

# %% [markdown]
# Finite witnesses where the order-theoretic definition holds but the
# pointwise one fails.

# %%
r = run_search(SearchTask(2, (0, 1), "def2-not-def1"))
for hit in r.found:
    print(hit.as_dict())
