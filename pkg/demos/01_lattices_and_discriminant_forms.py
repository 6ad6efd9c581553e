"""Tour of the exact lattice layer: Gram matrices, invariants, and the
finite quadratic forms living on the discriminant groups.

Run as:  python3 demos/01_lattices_and_discriminant_forms.py
"""

from latticelab import (
    build_lattice,
    direct_sum,
    discriminant_form,
    named_lattice,
    rescale,
    signature_mod8,
    to_symbol,
)

print("== Gram lattices ==")
a2 = build_lattice([[2, 1], [1, 2]])
print("A2 presented by ((2,1),(1,2)):", a2)

for name in ("A1", "A2", "E6", "E7", "E8", "U"):
    latt = named_lattice(name)
    print(f"{name:4s} rank {latt.rank:2d} signature {latt.signature} det {latt.det}")

borcherds = named_lattice("Borcherds")
print("Borcherds lattice II(26,2):", borcherds)
lambda0 = named_lattice("Lambda0")
print("Primitive cubic lattice Lambda0:", lambda0)

print()
print("== Discriminant forms ==")
# q_L lives on the finite group L*/L; its canonical genus symbol and its
# Milgram signature are complete, exactly computed invariants here.
for name in ("A1", "A2", "E6", "E7", "D7"):
    q = discriminant_form(named_lattice(name))
    print(f"q_{name:3s} = {to_symbol(q)}   |A| = {q.order}   sig mod 8 = {signature_mod8(q)}")

print()
print("Milgram check: sig(q_L) = n+ - n- mod 8 for a rescaled sum")
latt = rescale(direct_sum(named_lattice("A2"), named_lattice("E6")), -1)
q = discriminant_form(latt)
print("lattice signature:", latt.signature, "  form signature:", signature_mod8(q))
assert signature_mod8(q) == (latt.n_plus - latt.n_minus) % 8
