"""The classification pipeline for symplectic automorphism groups of
cubic fourfolds with rank-20 covariant lattice.

Each candidate row carries a group, its order, and the discriminant form
of the rank-4 fixed lattice K.  The pipeline decides which rows are
realized by smooth cubic fourfolds, determines the rank-2 transcendental
lattice of each realization, counts the inequivalent embeddings, and
bounds the non-symplectic part of the full automorphism group.

Run as:  python3 demos/04_cubic_fourfold_classification.py
"""

from latticelab import full_report

report = full_report("hm15", "E6")

print("row  group            |G|      verdict")
for v in report:
    mark = "pass" if v.passed else "fail"
    print(f"{v.record.row:3d}  {v.record.group:15s} {v.record.order:6d}   {mark}"
          + ("" if v.passed else f"   ({v.reason})"))

print()
print("The six passing rows, their transcendental lattices, and the full")
print("automorphism group order |G| * nbar:")
for v in report:
    if not v.passed:
        continue
    for c in v.classes:
        print(f"  row {v.record.row:2d} {v.record.group:15s} T = {str(c.form):13s}"
              f" embeddings {c.embedding_count}  nbar {c.nonsymplectic}"
              f"  total order {c.total_order}")

total_classes = sum(c.embedding_count for v in report for c in v.classes)
print()
print(f"{total_classes} isolated classes in all; the largest automorphism group")
print(f"order is {max(c.total_order for v in report for c in v.classes)}, "
      "attained exactly once (the Fermat cubic).")
