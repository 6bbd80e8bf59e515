# %% [markdown]
# # Walsh spectra and classification
#
# `walsh_spectrum` evaluates S_f(b) = sum_x w^(f(x) - Tr(bx)) for every b and
# checks Parseval before returning. `classify` then decides bentness and
# (weak) regularity without floating point.

# %%
from collections import Counter

from walsh_forge import PFunction, build_field, classify, inverse_walsh, walsh_spectrum
from walsh_forge.funcspec import parse_function_spec

F = build_field(3, 4)

for text in ["Tr(x^2)", "Tr(x^1)", "Tr(x^34 + x^2)", "Tr(xi^10 x^22 + x^4)"]:
    f = parse_function_spec(text).to_function(F)
    spec = walsh_spectrum(f)
    cls = classify(spec)
    print(f"{text:24s} {cls.verdict}")

# %% [markdown]
# For a weakly regular bent function the dual is read off the angles of the
# normalized coefficients. Here is how its values are distributed.

# %%
f = PFunction.trace_form(F, [(1, 34), (1, 2)])
spec = walsh_spectrum(f)
cls = classify(spec)
print("S(0) =", spec.entries[0], "  unit", cls.unit)
print("dual value counts:", sorted(Counter(cls.dual).items()))

# %% [markdown]
# Round trip: the inverse transform gives back w^f(x) exactly.

# %%
for x in list(F.elements())[:5]:
    print(x, inverse_walsh(spec, x))
