# %% [markdown]
# # String-net dimensions on the sphere
#
# For a twisted pivotal pair (c, d) the punctured sphere space is at most
# one dimensional; the closed sphere needs a little more.

# %%
from taftpiv.classifier import twisted_pivotal_pairs
from taftpiv.hopf import make_gen_taft, make_taft
from taftpiv.stringnet import sphere_report

for H in (make_gen_taft(9, 1, 3, 5, 3), make_gen_taft(8, 2, 2, 6, 2), make_taft(5)):
    print(H.label())
    for c, d in twisted_pivotal_pairs(H):
        r = sphere_report(H, c, d, oracle=True)
        print(f"  ({c},{d}) punctured={r.dim_punctured} sphere={r.dim_sphere} coend={r.oracle_dim_punctured}")

# %% Taft algebras never give anything on the punctured sphere
for N in range(2, 8):
    T = make_taft(N)
    print(N, [sphere_report(T, c, d).dim_punctured for c, d in twisted_pivotal_pairs(T)])
