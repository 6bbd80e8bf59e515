# %% [markdown]
# # Driving the command line from Python
#
# `walsh-forge` is also available as `python -m walsh_forge`. Exit code 0
# means verified, 1 falsified, 2 misuse.

# %%
import json
import tempfile
from pathlib import Path

from walsh_forge.cli import main

out = Path(tempfile.mkdtemp())
print("exit", main(["field", "--p", "3", "--n", "4", "--out", str(out / "gf81.json")]))
print("exit", main(["spectrum", "--field", str(out / "gf81.json"), "--f", "Tr(x^34 + x^2)",
                    "--format", "csv", "--out", str(out / "spec.csv")]))
print((out / "spec.csv").read_text().splitlines()[:3])

# %%
code = main(["verify", "all", "--p", "3", "--k", "1", "--out", str(out / "all.json")])
report = json.loads((out / "all.json").read_text())
print("exit", code, "pass", report["pass"], "claims", sorted(report["details"]))

# %%
print("exit", main(["verify", "prop1", "--p", "3", "--k", "3"]))
