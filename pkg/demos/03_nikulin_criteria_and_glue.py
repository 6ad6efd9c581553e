"""Even-lattice existence, primitive embeddings, and glue groups.

Run as:  python3 demos/03_nikulin_criteria_and_glue.py
"""

from latticelab import (
    LatticeInvariant,
    complement_quotient,
    direct_sum_forms,
    discriminant_form,
    even_lattice_exists,
    form_from_symbol_text,
    isotropic_subgroups,
    named_lattice,
    negate_form,
    primitive_embedding_into_even_unimodular_exists,
    saturations_keeping_primitive,
    to_symbol,
)

print("== Existence of even lattices with prescribed invariants ==")
cases = [
    ((0, 2), "3^+1 9^+1"),
    ((0, 2), "2_II^-2 3^+2 7^-1"),
    ((0, 2), "4_5^-1 8_1^+1"),
    ((0, 2), "5^+1 7^+1"),
]
for sig, text in cases:
    verdict = even_lattice_exists(LatticeInvariant(*sig, form_from_symbol_text(text)))
    tail = "" if verdict.exists else f"   [fails condition {verdict.failed_condition}]"
    print(f"  signature {sig}, q = {text:22s} -> exists: {verdict.exists}{tail}")

print()
print("== Primitive embeddings via the complement ==")
# E6 embeds into the even unimodular E8 with complement A2
e6 = named_lattice("E6")
verdict, comp = primitive_embedding_into_even_unimodular_exists(
    LatticeInvariant(6, 0, discriminant_form(e6)), (8, 0))
print(f"E6 into II(8,0): {verdict.exists}, complement {comp.n_plus, comp.n_minus} "
      f"with q = {to_symbol(comp.form)}  (that is A2)")

# the rank-22 primitive cubic lattice embeds into II(26,2) with complement E6
l0 = named_lattice("Lambda0")
verdict, comp = primitive_embedding_into_even_unimodular_exists(
    LatticeInvariant(20, 2, discriminant_form(l0)), (26, 2))
print(f"Lambda0 into II(26,2): {verdict.exists}, complement q = {to_symbol(comp.form)}")

print()
print("== Glue: isotropic subgroups classify even overlattices ==")
q = direct_sum_forms(discriminant_form(named_lattice("A2")),
                     discriminant_form(named_lattice("E6")))
print(f"q_A2 + q_E6 = {to_symbol(q)}")
for sub in isotropic_subgroups(q):
    quot = complement_quotient(q, sub)
    print(f"  glue of order {sub.order}: quotient form {to_symbol(quot)}")
print("The order-3 glues realize A2 + E6 inside E8.")

print()
print("== Overlattices of a direct sum keeping the first factor primitive ==")
q_s = negate_form(form_from_symbol_text("3^+2 9^+1"))
q_r = discriminant_form(named_lattice("E6"))
for w in saturations_keeping_primitive(q_s, q_r)[:4]:
    print(f"  index {w.index}: resulting form {to_symbol(w.quotient)}")
