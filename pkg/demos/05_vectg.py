# %% [markdown]
# # The same question for Vect_G
#
# Invertible objects of the center are pairs (z, chi) with z central and
# chi a character.  Load a few groups from Cayley tables.

# %%
from pathlib import Path

from taftpiv.vectg import group_center, group_characters, load_cayley, vectg_classify

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

for name in ("z2", "z3", "z4", "s3", "q8"):
    G = load_cayley(DATA / f"{name}.txt")
    pairs = vectg_classify(G)
    print(
        name,
        "order", G.order,
        "center", group_center(G),
        "characters", len(group_characters(G)),
        "pairs", len(pairs),
        "trivial twist", sum(p.trivial_twist for p in pairs),
        "sphere", sum(p.sphere_nonzero for p in pairs),
    )
