# %% [markdown]
# # The sums C(a) and the quadratic Gauss sum
#
# C(a) = sum_x w^Tr(x + a x^d) with d = (p^2k + 1)/2 is always a rational
# integer. Its difference C(a) - C(-a) takes only three values, decided by
# Tr_2k^4k(a).

# %%
from collections import Counter

import numpy as np

from walsh_forge import FamilyParams
from walsh_forge.expsums import c_table, gauss_quadratic, verify_prop1
from walsh_forge.gf import subfield_elements

P = FamilyParams(3, 1)
F = P.field()
table = c_table(P)
diff = table.values - table.values[F.vneg(F.all_codes())]
print("C(a) values:", sorted(set(table.values.tolist())))
print("C(a) - C(-a):", sorted(Counter(diff.tolist()).items()))
print("sum C(a)^2 =", int(np.sum(table.values**2)))

# %%
print(verify_prop1(P).summary())
print(verify_prop1(FamilyParams(5, 1)).summary())

# %% [markdown]
# The Gauss sum over GF(p^2k) equals -s p^k eta(a).

# %%
for a in subfield_elements(F, 2)[1:4]:
    print(a, gauss_quadratic(a, P))
