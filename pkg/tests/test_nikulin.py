import random

import pytest

from latticelab import (
    LatticeInvariant,
    discriminant_form,
    even_lattice_exists,
    form_from_symbol_text,
    is_isomorphic,
    named_lattice,
    negate_form,
    primitive_embedding_into_even_unimodular_exists,
    rescale,
    saturations_keeping_primitive,
    trivial_form,
    unique_primitive_embedding,
)
from latticelab.errors import BadSignatureError


def inv(n1, n2, text):
    form = form_from_symbol_text(text) if text else trivial_form()
    return LatticeInvariant(n1, n2, form)


@pytest.mark.parametrize("n1,n2,text,expect,cond", [
    (0, 2, "3^+1 9^+1", True, None),
    (0, 2, "2_II^-2 3^+2 7^-1", False, 4),
    (1, 1, "", True, None),
    (0, 2, "4_5^-1 8_1^+1", False, 4),
    (0, 2, "5^+1 7^+1", True, None),
    (0, 2, "3^-2 5^+1 7^+1", True, None),
    (0, 2, "2_2^+2 3^+2", True, None),
    (0, 2, "4_3^-1 8_1^+1 3^-1 5^-1", False, 4),
    (0, 2, "4_2^+2 3^-1 7^+1", False, 4),
    (0, 2, "8_6^-2 3^+2", False, 4),
    (0, 2, "2_II^-2 3^+1 5^+1", False, 4),
    (0, 2, "2_3^-1 4_7^+1 3^+2 5^+1", True, None),
    (0, 2, "3^-1 11^+2", True, None),
    (0, 2, "4_7^+1 8_1^+1 3^+1", False, 4),
    (0, 2, "3^-1 5^-2", True, None),
    (0, 2, "2_II^+2 3^-1 7^+2", False, 3),
])
def test_existence_catalog(n1, n2, text, expect, cond):
    verdict = even_lattice_exists(inv(n1, n2, text))
    assert verdict.exists == expect
    if not expect:
        assert verdict.failed_condition == cond


def test_existence_rejects_rank_shortfall():
    # signature matches but the 3-part needs four generators
    verdict = even_lattice_exists(inv(0, 2, "3^-2 9^+1 27^+1"))
    assert not verdict.exists and verdict.failed_condition == 2


def test_existence_signature_condition():
    # sig(3^+1) = 6 forces n_plus - n_minus = 6 mod 8
    assert even_lattice_exists(inv(6, 0, "3^+1")).exists
    verdict = even_lattice_exists(inv(2, 0, "3^+1"))
    assert not verdict.exists and verdict.failed_condition == 1


def test_existence_swap_symmetry():
    rng = random.Random(51)
    texts = ["3^+1 9^+1", "2_II^-2 3^+2 7^-1", "5^+1 7^+1", "2_2^+2 3^+2",
             "8_6^-2 3^+2", "2_3^-1 4_7^+1 3^+2 5^+1"]
    for text in texts:
        q = form_from_symbol_text(text)
        for _ in range(4):
            n1, n2 = rng.randint(0, 3), rng.randint(0, 3)
            a = even_lattice_exists(LatticeInvariant(n1, n2, q))
            b = even_lattice_exists(LatticeInvariant(n2, n1, negate_form(q)))
            assert a.exists == b.exists


def test_existence_sound_on_registry():
    for name in ["A1", "A2", "A6", "D4", "D7", "E6", "E7", "E8", "U"]:
        base = named_lattice(name)
        for n in (-3, -2, -1, 1, 2, 3):
            latt = rescale(base, n)
            invariant = LatticeInvariant(latt.n_plus, latt.n_minus,
                                         discriminant_form(latt))
            assert even_lattice_exists(invariant).exists, (name, n)


def test_unique_primitive_embedding():
    ok, _ = unique_primitive_embedding(inv(0, 0, ""), (26, 2))
    assert ok
    # signature slack fails when n_minus equals the target's
    l0 = named_lattice("Lambda0")
    res, note = unique_primitive_embedding(
        LatticeInvariant(20, 2, discriminant_form(l0)), (26, 2))
    assert not res and "silent" in note
    with pytest.raises(BadSignatureError):
        unique_primitive_embedding(inv(0, 0, ""), (25, 2))


def test_embedding_with_complement():
    e6 = named_lattice("E6")
    verdict, comp = primitive_embedding_into_even_unimodular_exists(
        LatticeInvariant(6, 0, discriminant_form(e6)), (8, 0))
    assert verdict.exists
    assert (comp.n_plus, comp.n_minus) == (2, 0)
    assert is_isomorphic(comp.form, discriminant_form(named_lattice("A2")))

    l0 = named_lattice("Lambda0")
    verdict, comp = primitive_embedding_into_even_unimodular_exists(
        LatticeInvariant(20, 2, discriminant_form(l0)), (26, 2))
    assert verdict.exists
    assert (comp.n_plus, comp.n_minus) == (6, 0)
    assert is_isomorphic(comp.form, discriminant_form(named_lattice("E6")))


def test_saturations_glue_example():
    # q_S = -(3^+2 9^+1) + q_{E6}: nontrivial index-3 overlattices exist and
    # the resulting form is 3^-1 9^-1
    q_s = negate_form(form_from_symbol_text("3^+2 9^+1"))
    q_r = discriminant_form(named_lattice("E6"))
    wits = saturations_keeping_primitive(q_s, q_r)
    assert wits[0].trivial and wits[0].index == 1
    nontrivial = [w for w in wits if not w.trivial]
    assert nontrivial
    assert all(w.index == 3 for w in nontrivial)
    target = form_from_symbol_text("3^-1 9^-1")
    assert all(is_isomorphic(w.quotient, target) for w in nontrivial)


def test_saturations_none_when_blocked():
    q_s = negate_form(form_from_symbol_text("2_II^-2 3^-1 7^-1"))
    q_r = discriminant_form(named_lattice("E6"))
    wits = saturations_keeping_primitive(q_s, q_r)
    assert len(wits) == 1 and wits[0].trivial


def test_saturations_trivial_partner():
    q_s = form_from_symbol_text("3^+2 9^+1")
    wits = saturations_keeping_primitive(q_s, trivial_form())
    assert len(wits) == 1 and wits[0].trivial


def test_saturation_index_law():
    q_s = negate_form(form_from_symbol_text("2_2^+2 3^+3"))
    q_r = discriminant_form(named_lattice("E6"))
    total = q_s.order * q_r.order
    for w in saturations_keeping_primitive(q_s, q_r):
        assert w.quotient.order * w.index ** 2 == total


def test_complement_duality_realized():
    # E6 + A2 glue to E8: direct sum of sample realizations has the target
    # signature and opposite discriminant forms
    from latticelab import direct_sum
    e6 = named_lattice("E6")
    a2 = named_lattice("A2")
    assert is_isomorphic(discriminant_form(a2),
                         negate_form(discriminant_form(e6)))
    both = direct_sum(e6, a2)
    assert both.signature == named_lattice("E8").signature
    assert abs(both.det) == 9  # index-3 glue recovers the unimodular lattice
