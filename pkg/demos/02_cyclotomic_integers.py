# %% [markdown]
# # Exact character sums in Z[w]
#
# A Walsh coefficient is an integer combination of p-th roots of unity. It is
# kept as a `CycInt`, reduced by 1 + w + ... + w^(p-1) = 0, so equality is exact.

# %%
import cmath

from walsh_forge import CycInt, cyc_root, mag_sq, match_scaled_root

p = 5
w = cyc_root(p, 1)
print("w^5 =", w * w * w * w * w)
print("1 + w + w^2 + w^3 + w^4 =", sum((cyc_root(p, t) for t in range(p)), CycInt.zero(p)))

# %% [markdown]
# The quadratic Gauss sum over GF(5) has |g|^2 = 5. Counting the values of
# x^2 mod 5 is all it takes to build it.

# %%
counts = [0] * p
for x in range(p):
    counts[x * x % p] += 1
g = CycInt.from_counts(p, counts)
print("g =", g, "  |g|^2 =", mag_sq(g))
print("float check:", complex(g), sum(cmath.exp(2j * cmath.pi * x * x / p) for x in range(p)))

# %% [markdown]
# `match_scaled_root` recognises numbers of the form +-m * w^t.

# %%
z = -9 * cyc_root(3, 2)
print(z, "->", match_scaled_root(z, 9))
