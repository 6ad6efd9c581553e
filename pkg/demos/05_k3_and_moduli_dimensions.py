"""Two companion computations: the low-degree K3 filters, and the moduli
dimension counts for diagonal symplectic automorphisms.

Run as:  python3 demos/05_k3_and_moduli_dimensions.py
"""

import json

from latticelab import (
    DiagonalAction,
    family_dimension,
    full_report,
    invariant_monomials,
    symplectic_weight_check,
)
from latticelab.casebook import data_dir

print("== Low degree K3 surfaces ==")
for degree, root in ((2, "E7"), (6, "E6+A1")):
    rows = [v.record.row for v in full_report("k3max11", root) if v.passed]
    print(f"degree {degree} (root {root}): rows {rows} pass")

print()
print("== Diagonal actions on cubic fourfolds ==")
print("A diagonal symmetry 1/n(w1..w6) fixes a family of cubics; its moduli")
print("dimension is the count of invariant monomials minus the dimension of")
print("the centralizer of the action in GL(6).")
with open(data_dir() / "fu_cases.json", encoding="utf-8") as fh:
    cases = json.load(fh)["cases"]
for case in cases:
    acts = [DiagonalAction(g["order"], tuple(g["weights"]), g["w0"])
            for g in case["generators"]]
    mons = invariant_monomials(acts)
    dim = family_dimension(acts)
    sym = all(symplectic_weight_check(a, mons) for a in acts)
    gens = ", ".join(f"1/{a.order}{a.weights}" for a in acts)
    print(f"  case {case['case']:>5s}: {gens:42s} dim {dim:2d} symplectic {sym}")
