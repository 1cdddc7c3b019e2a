# %% [markdown]
# # Generalized Taft algebras by hand
#
# Build a few algebras, multiply in the PBW basis, and look at the
# distinguished data that drives everything else.

# %%
from taftpiv.hopf import antipode, coproduct, generator, make_gen_taft, make_taft, pbw_basis

H = make_gen_taft(9, 1, 3, 5, 3)
print(H.label(), "dim", H.dim, "n", H.n, "m", H.m)

# %%
g, x, y = (generator(H, s) for s in "gxy")
print("x*y =", x * y)
print("y*x =", y * x)  # differs from x*y by a root of unity
print("Delta(x) =", coproduct(x))

# %% S^2 acts on x by a scalar
print("S^2(x) =", antipode(antipode(x)))

# %% the two indices that matter later
print("socle index", H.D_index, "grouplike index", H.grouplike_index)

# %% Taft algebras are the m = 1 corner
T = make_taft(4)
print(T.label(), len(pbw_basis(T)), "basis monomials")
