# %% [markdown]
# # The unit circle U and the polynomials T+ and T-
#
# U is the subgroup of order p^2k + 1. Counting u in its square and
# nonsquare halves with a prescribed relative trace gives counts that differ
# only at c = +-Tr(b^d).

# %%
from walsh_forge import FamilyParams
from walsh_forge.niho import roots_over_field, t_minus, t_plus, verify_cor1, verify_cor2, verify_prop3
from walsh_forge.units import build_unit_set, count_n, verify_prop2

P = FamilyParams(3, 1)
F = P.field()
U = build_unit_set(P)
print(len(U.elements), "units,", len(U.plus), "squares")
b = F.xi**3
for c in range(3):
    print("c =", c, " (n+, n-) =", count_n(b, F(c), U))
print(verify_prop2(P).summary())

# %% [markdown]
# T+(X, 1) splits into 15 distinct roots in GF(81); T-(X, 1) has none among
# the nonzero squares.

# %%
print(len(roots_over_field(t_plus(P, 1))), "roots of T+(X, 1)")
print(len(roots_over_field(t_minus(P, 1))), "roots of T-(X, 1)")
for fn in (verify_prop3, verify_cor1, verify_cor2):
    rep = fn(P)
    print(rep.summary(), rep.details.get("root_set_sizes", ""))
