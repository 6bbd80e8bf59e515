# %% [markdown]
# # Field arithmetic in GF(p^n)
#
# Elements are stored as integer codes: the coordinate vector in the
# polynomial basis read as base-p digits, least significant first.
# Multiplication goes through discrete-log tables built once per field.

# %%
import numpy as np

from walsh_forge import build_field, quadratic_character, trace

F = build_field(3, 4)
print(F)
print("xi =", F.xi, "  field size", F.q)

# %% [markdown]
# Scalar arithmetic works on `FieldElem` objects. Integers are treated as
# elements of the prime field.

# %%
xi = F.xi
print(xi * xi == xi**2, (xi**5) / (xi**3) == xi**2)
print("order of xi:", next(e for e in range(1, F.q) if xi**e == 1))
print("Tr(xi) =", trace(xi), "  Tr_2^4(xi) =", trace(xi, 2))

# %% [markdown]
# The vectorized path takes arrays of codes. Here is the squaring map on the
# whole field and the number of squares it hits.

# %%
codes = F.all_codes()
squares = np.unique(F.vpow(codes, 2))
print(len(squares), "squares including 0")
eta = F.vquadratic_character(codes)
print("eta counts:", {v: int((eta == v).sum()) for v in (-1, 0, 1)})
assert all(quadratic_character(F.from_code(int(c))) == 1 for c in squares if c)

# %% [markdown]
# Subfields are picked out as fixed points of Frobenius.

# %%
for k in (1, 2, 4):
    print(f"GF(3^{k}) inside GF(81):", len(F.subfield_codes(k)), "elements")
