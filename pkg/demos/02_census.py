# %% [markdown]
# # Counting structures over all parameters
#
# The census runs over every valid (a1, a2, b1, b2) at level N and counts
# which kinds of pivotal structure exist.

# %%
import time

import numpy as np

from taftpiv.classifier import CSV_HEADER, census

print(CSV_HEADER)
for N in range(2, 13):
    print(census(N).csv_row())

# %% the big one takes a few seconds
t0 = time.perf_counter()
r = census(36)
print(r.to_dict(), f"{time.perf_counter() - t0:.1f}s")

# %% fraction with a twisted pivotal structure, by level
levels = np.arange(2, 25)
reports = [census(int(N)) for N in levels]
frac = np.array([r.with_twisted_pivotal / r.total_valid for r in reports])
for N, f in zip(levels, frac):
    print(N, round(float(f), 3))
