# %% [markdown]
# # The binomial family Tr(x^d0 + x^2), n = 4k
#
# With d0 = p^3k + p^2k - p^k + 1 the function is weakly regular bent and
# S_f(b) = -p^2k w^(Tr_k(x0)/4), where x0 is the unique root in GF(p^k) of a
# fixed equation in b. Everything below is exhaustive.

# %%
from walsh_forge import FamilyParams, walsh_spectrum
from walsh_forge.family import (closed_form_walsh, fact1_scan, family_function, solve_x0,
                                special_case_x0, verify_theorem1)

P = FamilyParams(3, 1)
print("d0 =", P.d0, " n =", P.n, " s =", P.s)
F = P.field()
spec = walsh_spectrum(family_function(P))
for b in [F.zero, F.one, F.xi, F.xi**7]:
    x0 = solve_x0(b, P)
    print(f"b = {b!s:20s} x0 = {x0!s:4s} S(b) = {spec[b]}   closed form = {closed_form_walsh(b, P)}")

# %% [markdown]
# When b^2 lies in GF(p^2k) the root has the explicit value -Tr_k^2k(b^2).

# %%
hits = [(b, special_case_x0(b, P)) for b in F.elements() if special_case_x0(b, P) is not None]
print(len(hits), "such b; all agree:", all(x == solve_x0(b, P) for b, x in hits))

# %% [markdown]
# The full check, as a report.

# %%
for k in [(3, 1), (5, 1), (7, 1)]:
    print(verify_theorem1(FamilyParams(*k)).summary())

# %% [markdown]
# Over GF(3^4) the ternary binomial Tr(a0 x^22 + x^4) is bent but not weakly
# regular for a handful of a0. The scan lists them as powers of xi.

# %%
rep = fact1_scan()
print(rep.summary(), "qualifying a0 = xi^", rep.details["qualifying_logs"])
