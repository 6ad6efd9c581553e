"""Existence and uniqueness criteria for even lattices (Nikulin).

even_lattice_exists decides whether an even lattice with prescribed
signature and discriminant form exists, reporting the first failed
condition:

  1. signature: sig(q) = n_plus - n_minus  (mod 8);
  2. ranks: n_plus, n_minus >= 0 and n_plus + n_minus >= l(A);
  3. for each odd p with n_plus + n_minus = l_p(A): the determinant class
     of the p-adic Jordan lattice must match (-1)^{n_minus} |A| up to
     p-adic squares;
  4. for p = 2 with n_plus + n_minus = l_2(A): the 2-adic determinant
     class must match |A| up to sign and 2-adic squares, unless the
     2-part splits off some q_a(2), in which case both determinant
     classes are realizable and the condition is vacuous.

The glue machinery (saturations of a direct sum keeping the first factor
primitive) and the sufficient uniqueness criterion for primitive
embeddings into even unimodular lattices live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadSignatureError, CapExceededError
from .fqf import (
    BRUTE_CAP,
    FiniteQuadraticForm,
    Subgroup,
    complement_quotient,
    isotropic_subgroups,
    negate_form,
    primary_lengths,
    total_length,
)
from .symbol import (
    eps_total,
    legendre,
    scale2_is_odd_type,
    signature_mod8,
    to_symbol,
)

CONDITION_NAMES = {
    1: "signature mod 8",
    2: "rank vs generator count",
    3: "odd p-adic determinant",
    4: "2-adic determinant",
}


@dataclass(frozen=True)
class LatticeInvariant:
    n_plus: int
    n_minus: int
    form: FiniteQuadraticForm

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    def to_json_dict(self):
        return {"signature": [self.n_plus, self.n_minus],
                "form": str(to_symbol(self.form))}


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    failed_condition: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.exists

    def to_json_dict(self):
        return {"exists": self.exists,
                "failed_condition": self.failed_condition,
                "detail": self.detail}


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def even_lattice_exists(inv: LatticeInvariant) -> ExistenceVerdict:
    """Decide existence of an even lattice with the given invariant."""
    q = inv.form
    n1, n2 = inv.n_plus, inv.n_minus
    if (n1 - n2 - signature_mod8(q)) % 8 != 0:
        return ExistenceVerdict(False, 1, CONDITION_NAMES[1])
    lens = primary_lengths(q)
    if n1 < 0 or n2 < 0 or n1 + n2 < total_length(q):
        return ExistenceVerdict(False, 2, CONDITION_NAMES[2])
    order = q.order
    for p in sorted(lens):
        if p == 2:
            continue
        if n1 + n2 != lens[p]:
            continue
        unit = order // p ** _p_valuation(order, p)
        lhs = legendre(((-1) ** n2) * unit, p)
        if lhs != eps_total(q, p):
            return ExistenceVerdict(False, 3, f"{CONDITION_NAMES[3]} at p={p}")
    if 2 in lens and n1 + n2 == lens[2] and not scale2_is_odd_type(q):
        odd_part = order >> _p_valuation(order, 2)
        want_plus = odd_part % 8 in (1, 7)
        if want_plus != (eps_total(q, 2) == 1):
            return ExistenceVerdict(False, 4, CONDITION_NAMES[4])
    return ExistenceVerdict(True)


def unique_primitive_embedding(inv: LatticeInvariant,
                               target: tuple[int, int]) -> tuple[bool, str]:
    """Sufficient criterion for a unique primitive embedding into the even
    unimodular lattice of the target signature.

    A False answer means the criterion is silent, not that uniqueness fails.
    """
    l1, l2 = target
    if (l1 - l2) % 8 != 0:
        raise BadSignatureError("even unimodular target needs l1 = l2 mod 8")
    if not (l1 > inv.n_plus and l2 > inv.n_minus):
        return False, "criterion silent: strict signature inequalities fail"
    if l1 + l2 - inv.rank < total_length(inv.form) + 2:
        return False, "criterion silent: rank slack below l(A)+2"
    return True, "unique primitive embedding"


def primitive_embedding_into_even_unimodular_exists(
        inv: LatticeInvariant, target: tuple[int, int]):
    """Existence of a primitive embedding into II(target), via the complement.

    Returns (ExistenceVerdict, complement LatticeInvariant or None).
    """
    l1, l2 = target
    if (l1 - l2) % 8 != 0 or l1 < inv.n_plus or l2 < inv.n_minus:
        raise BadSignatureError("target signature incompatible with embedding")
    comp = LatticeInvariant(l1 - inv.n_plus, l2 - inv.n_minus,
                            negate_form(inv.form))
    verdict = even_lattice_exists(comp)
    return verdict, (comp if verdict.exists else None)


@dataclass(frozen=True)
class SaturationWitness:
    """One even overlattice of S + R with S still primitive.

    glue is the isotropic subgroup H of A_S + A_R with H meet A_S = 0;
    quotient is the induced form on H-perp/H (the overlattice's
    discriminant form); index = |H| is the overlattice index.
    """

    glue_gens: tuple
    index: int
    quotient: FiniteQuadraticForm
    trivial: bool = field(compare=False, default=False)

    def to_json_dict(self):
        return {"index": self.index,
                "glue": [list(g) for g in self.glue_gens],
                "quotient": str(to_symbol(self.quotient))}


def saturations_keeping_primitive(q_s: FiniteQuadraticForm,
                                  q_r: FiniteQuadraticForm,
                                  cap: int = BRUTE_CAP):
    """All isotropic H <= A_S + A_R with H meet A_S = 0, trivial H first.

    Witnesses are deduplicated by the subgroup itself (not by isomorphism
    of the quotient form) and sorted by (index, subgroup elements).
    """
    total = q_s.direct_sum(q_r)
    if total.order > cap:
        raise CapExceededError(f"group order {total.order} exceeds cap {cap}")
    ns = q_s.ngens
    witnesses = []
    for sub in isotropic_subgroups(total, cap=cap):
        meets_s = any(all(c == 0 for c in x[ns:]) and any(x[:ns])
                      for x in sub.elements)
        if meets_s:
            continue
        quotient = complement_quotient(total, sub, cap=cap)
        witnesses.append(SaturationWitness(
            glue_gens=sub.gens, index=sub.order, quotient=quotient,
            trivial=sub.order == 1))
    witnesses.sort(key=lambda w: (w.index, w.glue_gens))
    return witnesses
