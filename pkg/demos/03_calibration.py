# %% [markdown]
# # Which convention do the worked examples pin down?
#
# The module oracle builds actual representations and searches for a
# natural isomorphism to the double dual.  Several conventions enter
# (which dual, which tensor legs, which index order), so we try them all.
# Slow: a minute or so.

# %%
from taftpiv.classifier import quasi_pivotal_pairs
from taftpiv.hopf import make_gen_taft
from taftpiv.pivotal import CALIBRATED, LITERAL, accepted_pairs, calibrate

print(calibrate().render())

# %% the default and calibrated conventions disagree on this one
H = make_gen_taft(3, 1, 1, 1, 2)
print("default   ", accepted_pairs(H, LITERAL))
print("calibrated", accepted_pairs(H, CALIBRATED))
print("standard  ", quasi_pivotal_pairs(H, form="standard"))
print("exchanged ", quasi_pivotal_pairs(H, form="exchanged"))
