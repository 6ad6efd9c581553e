"""Conway-Sloane genus symbols for finite quadratic forms.

A finite quadratic form splits (per prime) into an orthogonal sum of
standard pieces: cyclic forms (Z/p^k, 2a/p^k) for odd p, cyclic forms
(Z/2^k, a/2^k) with a odd, and the two even rank-2 blocks u(2^k), v(2^k).
From the pieces we read off the Jordan constituents (scale, rank, sign;
type and oddity at p = 2).

Two complications are handled here:

* For p = 2 the constituent data is only unique up to *oddity fusion*
  inside compartments and *sign walking* along trains, plus the extra
  scale-2 identification q_a(2) = q_{a+4}(2).  to_symbol() therefore
  canonicalizes by taking the lexicographic minimum over the (small)
  orbit of the symbol under these moves, so isomorphic forms print
  identically.
* The Milgram signature is assembled from exact rank-1 and rank-2 Gauss
  sums (classical closed forms); the cyclotomic module re-derives it by
  direct summation for cross-checking.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import RealizabilityError, SymbolSyntaxError
from .fqf import FiniteQuadraticForm, direct_sum_forms, trivial_form

# -- legendre symbol -------------------------------------------------------


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _det_class_2(a: int) -> int:
    """Sign of an odd 2-adic unit: +1 for 1,7 mod 8; -1 for 3,5 mod 8."""
    return 1 if a % 8 in (1, 7) else -1


# -- orthogonal splitting into standard pieces ------------------------------


@dataclass(frozen=True)
class CyclicPiece:
    p: int
    k: int
    value: Fraction  # q on the generator, normalized mod 2

    @property
    def scale(self) -> int:
        return self.p ** self.k


@dataclass(frozen=True)
class EvenPiece:
    k: int
    kind: str  # 'u' or 'v'

    @property
    def scale(self) -> int:
        return 2 ** self.k


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _split_odd(form: FiniteQuadraticForm, p: int):
    """Split a p-group form (p odd) into cyclic pieces."""
    pieces = []
    while not form.is_trivial:
        gens = form.gens()
        cands = list(gens)
        for i in range(len(gens)):
            for j in range(len(gens)):
                if i != j:
                    cands.append(form.add(gens[i], gens[j]))
        cands.sort(key=lambda x: (-form.element_order(x), x))
        x = next(c for c in cands
                 if form.element_order(c) > 1
                 and form.q(c).denominator == form.element_order(c))
        ox = form.element_order(x)
        pieces.append(CyclicPiece(p, _p_valuation(ox, p), form.q(x)))
        if form.ngens == 1:
            break
        bxx = form.q(x) % 1
        inv = pow(int(bxx * ox), -1, ox)
        rest = []
        for g in gens:
            c = (int(form.b(x, g) * ox) * inv) % ox
            rest.append(form.add(g, form.scale(x, -c)))
        form, _ = form.subquotient(rest)
    return pieces


def _split_two(form: FiniteQuadraticForm):
    """Split a 2-group form into cyclic and u/v pieces."""
    pieces = []
    while not form.is_trivial:
        gens = form.gens()
        odd_gens = [g for g in gens
                    if form.q(g).denominator == form.element_order(g)]
        if odd_gens:
            # odd-valued generators are found among the generators themselves:
            # cross terms 2*b(x,y) can never contribute an odd numerator
            odd_gens.sort(key=lambda x: (-form.element_order(x), x))
            x = odd_gens[0]
            ox = form.element_order(x)
            pieces.append(CyclicPiece(2, _p_valuation(ox, 2), form.q(x)))
            if form.ngens == 1:
                break
            a = int(form.q(x) * ox)  # odd
            inv = pow(a, -1, ox)
            rest = []
            for g in gens:
                c = (int(form.b(x, g) * ox) * inv) % ox
                rest.append(form.add(g, form.scale(x, -c)))
            form, _ = form.subquotient(rest)
            continue
        # even type at the top scale: split off a rank-2 block
        ox = max(form.orders)
        x = next(g for g in gens if form.element_order(g) == ox)
        y = next(g for g in gens
                 if g != x and form.b(x, g).denominator == ox)
        k = _p_valuation(ox, 2)
        alpha = int(form.q(x) * ox) // 2
        beta = int(form.q(y) * ox) // 2
        gamma = int(form.b(x, y) * ox)
        det = 4 * alpha * beta - gamma * gamma  # odd unit
        pieces.append(EvenPiece(k, "u" if det % 8 in (1, 7) else "v"))
        if form.ngens == 2:
            break
        inv = pow(det, -1, ox)
        rest = []
        for g in gens:
            if g == x or g == y:
                continue
            r1 = int(form.b(x, g) * ox)
            r2 = int(form.b(y, g) * ox)
            c1 = (inv * (2 * beta * r1 - gamma * r2)) % ox
            c2 = (inv * (-gamma * r1 + 2 * alpha * r2)) % ox
            g2 = form.add(g, form.scale(x, -c1))
            g2 = form.add(g2, form.scale(y, -c2))
            rest.append(g2)
        form, _ = form.subquotient(rest)
    return pieces


def jordan_pieces(form: FiniteQuadraticForm) -> dict[int, list]:
    """Orthogonal standard pieces of the form, keyed by prime."""
    out: dict[int, list] = {}
    for p in form.primes():
        part, _ = form.primary_part(p)
        part, _ = part.normalized()
        pieces = _split_two(part) if p == 2 else _split_odd(part, p)
        out[p] = sorted(pieces, key=lambda pc: (pc.k, isinstance(pc, EvenPiece), str(pc)))
    return out


# -- constituents ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class JordanConstituent:
    """One Jordan constituent: scale p^k, rank n, sign eps; type/oddity at p=2."""

    p: int
    k: int
    n: int
    eps: int            # +1 or -1
    even: bool = True   # always True for odd p (field unused there)
    oddity: int = 0     # trace mod 8, only meaningful for p = 2 odd type

    @property
    def scale(self) -> int:
        return self.p ** self.k


def _constituents_from_pieces(p: int, pieces) -> dict[int, JordanConstituent]:
    by_scale: dict[int, list] = {}
    for pc in pieces:
        by_scale.setdefault(pc.k, []).append(pc)
    out = {}
    for k, pcs in sorted(by_scale.items()):
        if p != 2:
            n = len(pcs)
            eps = 1
            for pc in pcs:
                c = int(pc.value * pc.scale)  # = 2a with gcd(a, p) = 1
                eps *= legendre(c, p)
            out[k] = JordanConstituent(p, k, n, eps)
        else:
            n = 0
            eps = 1
            t = 0
            odd_type = False
            for pc in pcs:
                if isinstance(pc, EvenPiece):
                    n += 2
                    eps *= 1 if pc.kind == "u" else -1
                else:
                    odd_type = True
                    n += 1
                    a = int(pc.value * pc.scale)  # odd; defined mod 2^{k+1}
                    if k == 1:
                        a %= 4  # scale-2 values only carry a mod 4
                    t += a
                    eps *= _det_class_2(a if k > 1 else (a % 4))
            out[k] = JordanConstituent(2, k, n, eps, even=not odd_type,
                                       oddity=t % 8 if odd_type else 0)
    return out


def form_constituents(form: FiniteQuadraticForm) -> dict[int, dict[int, JordanConstituent]]:
    return {p: _constituents_from_pieces(p, pieces)
            for p, pieces in jordan_pieces(form).items()}


# -- realizability -----------------------------------------------------------


@lru_cache(maxsize=None)
def realizable_pairs(n: int) -> frozenset[tuple[int, int]]:
    """(eps, oddity) pairs realizable by n odd 2-adic units."""
    states = {(1, 0)}
    for _ in range(n):
        states = {(e * _det_class_2(a), (t + a) % 8)
                  for (e, t) in states for a in (1, 3, 5, 7)}
    return frozenset(states)


def constituent_is_realizable(c: JordanConstituent) -> bool:
    if c.p != 2:
        return c.n >= 1 and c.eps in (1, -1)
    if c.n == 0:
        return c.eps == 1 and c.even
    if c.even:
        return c.n % 2 == 0 and c.oddity == 0
    return (c.eps, c.oddity % 8) in realizable_pairs(c.n)


# -- 2-adic canonicalization --------------------------------------------------


def _compartments(scales, cons):
    """Maximal runs of adjacent odd-type scales."""
    comps = []
    run = []
    for k in scales:
        c = cons[k]
        if not c.even:
            if run and k != run[-1] + 1:
                comps.append(run)
                run = []
            run.append(k)
        else:
            if run:
                comps.append(run)
                run = []
    if run:
        comps.append(run)
    return comps


def _walk_pairs(scales, cons):
    """Bound pairs of *consecutive* present scales.

    Scales at distance 1 are bound when at least one is odd type; scales
    at distance 2 (one empty scale between them) only when both are odd;
    larger gaps break the chain.  Longer-distance sign walks arise by
    composing these elementary ones.
    """
    pairs = []
    for a, b in zip(scales, scales[1:]):
        odd_a = not cons[a].even
        odd_b = not cons[b].even
        if b - a == 1 and (odd_a or odd_b):
            pairs.append((a, b))
        elif b - a == 2 and odd_a and odd_b:
            pairs.append((a, b))
    return pairs


def _canonical_two_adic(cons: dict[int, JordanConstituent]):
    """Canonical (scale -> constituent) map under fusion/walking moves.

    States are (sign vector, compartment oddity totals).  An elementary
    walk flips the two signs and adds 4 to the oddity of each odd
    endpoint's compartment -- once only if both endpoints share a
    compartment.  The extra scale-2 move (q_a(2) = q_{a+4}(2)) flips the
    scale-2 sign and adds 4 to its compartment.  States admitting no
    valid oddity distribution are vacuous labels and are skipped.
    """
    scales = sorted(cons)
    if not scales:
        return {}
    comps = _compartments(scales, cons)
    comp_index = {k: i for i, comp in enumerate(comps) for k in comp}
    walks = _walk_pairs(scales, cons)
    has_scale2_move = 1 in cons and not cons[1].even

    def realizable(eps_vec, tot_vec):
        return _render_state(scales, cons, comps, eps_vec, tot_vec) is not None

    start = (
        tuple(cons[k].eps for k in scales),
        tuple(sum(cons[k].oddity for k in comp) % 8 for comp in comps),
    )
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for eps_vec, tot_vec in frontier:
            moves = []
            for a, b in walks:
                ev = list(eps_vec)
                tv = list(tot_vec)
                ev[scales.index(a)] *= -1
                ev[scales.index(b)] *= -1
                touched = {comp_index[k] for k in (a, b) if k in comp_index}
                for ci in touched:
                    tv[ci] = (tv[ci] + 4) % 8
                moves.append((tuple(ev), tuple(tv)))
            if has_scale2_move:
                ev = list(eps_vec)
                tv = list(tot_vec)
                ev[scales.index(1)] *= -1
                ci = comp_index[1]
                tv[ci] = (tv[ci] + 4) % 8
                moves.append((tuple(ev), tuple(tv)))
            for st in moves:
                if st not in seen and realizable(*st):
                    seen.add(st)
                    new.append(st)
        frontier = new

    best = None
    best_key = None
    for eps_vec, tot_vec in sorted(seen):
        rendered = _render_state(scales, cons, comps, eps_vec, tot_vec)
        if rendered is None:
            continue
        key = _render_key(rendered)
        if best is None or key < best_key:
            best, best_key = rendered, key
    if best is None:
        raise RealizabilityError("no realizable oddity distribution found")
    return {k: c for k, c in zip(scales, best)}


def _render_key(rendered):
    """Canonical preference: plus signs first, then small oddities."""
    return tuple((c.k, 0 if c.eps > 0 else 1, c.oddity) for c in rendered)


def _render_state(scales, cons, comps, eps_vec, tot_vec):
    """Constituents for one orbit state, with oddities distributed
    lexicographically-minimally inside each compartment; None if impossible."""
    eps_of = dict(zip(scales, eps_vec))
    oddity_of = {}
    for comp, total in zip(comps, tot_vec):
        dist = _distribute(comp, [cons[k].n for k in comp],
                           [eps_of[k] for k in comp], total)
        if dist is None:
            return None
        for k, t in zip(comp, dist):
            oddity_of[k] = t
    out = []
    for k in scales:
        c = cons[k]
        if c.even:
            if eps_of[k] != c.eps and c.n == 0:
                return None
            out.append(JordanConstituent(2, k, c.n, eps_of[k], even=True, oddity=0))
        else:
            out.append(JordanConstituent(2, k, c.n, eps_of[k], even=False,
                                         oddity=oddity_of[k]))
    return tuple(out)


def _distribute(comp, ranks, epss, total):
    """Lexicographically smallest oddity split across a compartment."""

    def rec(idx, remaining):
        if idx == len(comp):
            return [] if remaining % 8 == 0 else None
        for t in range(8):
            if (epss[idx], t) in realizable_pairs(ranks[idx]):
                rest = rec(idx + 1, (remaining - t) % 8)
                if rest is not None:
                    return [t] + rest
        return None

    return rec(0, total % 8)


# -- the genus symbol ---------------------------------------------------------


@dataclass(frozen=True)
class GenusSymbol:
    """Canonical Conway-Sloane symbol: tuple of constituents grouped by prime."""

    constituents: tuple[JordanConstituent, ...]

    def per_prime(self) -> dict[int, list[JordanConstituent]]:
        out: dict[int, list[JordanConstituent]] = {}
        for c in self.constituents:
            out.setdefault(c.p, []).append(c)
        return out

    def __str__(self):
        if not self.constituents:
            return "1^+0"
        parts = []
        for c in self.constituents:
            sign = "+" if c.eps > 0 else "-"
            if c.p == 2:
                tag = "II" if c.even else str(c.oddity % 8)
                parts.append(f"{c.scale}_{tag}^{sign}{c.n}")
            else:
                parts.append(f"{c.scale}^{sign}{c.n}")
        return " ".join(parts)


def to_symbol(form: FiniteQuadraticForm) -> GenusSymbol:
    """Canonical genus symbol; isomorphic forms yield identical symbols."""
    cons = form_constituents(form)
    out = []
    for p in sorted(cons):
        if p == 2:
            canon = _canonical_two_adic(cons[p])
            out.extend(canon[k] for k in sorted(canon))
        else:
            out.extend(cons[p][k] for k in sorted(cons[p]))
    return GenusSymbol(tuple(out))


_TOKEN_RE = re.compile(
    r"^(?P<scale>\d+)(?:_(?P<tag>II|\d))?\^(?P<sign>[+-])(?P<rank>\d+)$")


def _prime_power(scale: int):
    for p in range(2, scale + 1):
        if scale % p == 0:
            k = _p_valuation(scale, p)
            if p ** k != scale:
                return None
            return p, k
    return None


def parse_symbol(text: str) -> GenusSymbol:
    """Parse the documented grammar and validate realizability.

    Constituents are space separated; odd p: "9^+1"; p = 2 odd type:
    "4_5^-1"; p = 2 even type: "2_II^-2".  "1^+0" and "" mean trivial.
    """
    text = text.strip()
    cons: list[JordanConstituent] = []
    if text in ("", "1^+0"):
        return GenusSymbol(())
    seen = set()
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise SymbolSyntaxError(f"bad constituent {token!r}")
        scale = int(m.group("scale"))
        sign = 1 if m.group("sign") == "+" else -1
        rank = int(m.group("rank"))
        if scale == 1:
            if rank != 0 or sign != 1:
                raise SymbolSyntaxError("scale 1 must be the trivial '1^+0'")
            continue
        pk = _prime_power(scale)
        if pk is None:
            raise SymbolSyntaxError(f"scale {scale} is not a prime power")
        p, k = pk
        if p == 2:
            tag = m.group("tag")
            if tag is None:
                raise SymbolSyntaxError(f"2-adic constituent {token!r} needs a type tag")
            even = tag == "II"
            oddity = 0 if even else int(tag)
            c = JordanConstituent(2, k, rank, sign, even=even, oddity=oddity % 8)
        else:
            if m.group("tag") is not None:
                raise SymbolSyntaxError(f"odd constituent {token!r} cannot carry a tag")
            c = JordanConstituent(p, k, rank, sign)
        if rank == 0:
            raise RealizabilityError("rank 0 constituents must be omitted")
        if (p, k) in seen:
            raise SymbolSyntaxError(f"duplicate scale {scale}")
        seen.add((p, k))
        if not constituent_is_realizable(c):
            raise RealizabilityError(f"constituent {token!r} violates the "
                                     "2-adic sign/oddity constraints")
        cons.append(c)
    cons.sort(key=lambda c: (c.p, c.k))
    return GenusSymbol(tuple(cons))


# -- building a form from a symbol --------------------------------------------


def _odd_unit_multiset(n: int, eps: int, t: int):
    """n odd residues mod 8 with given total sign and trace, smallest first."""

    def rec(count, e, s, start):
        if count == 0:
            return [] if (e == eps and s % 8 == t % 8) else None
        for a in (1, 3, 5, 7):
            if a < start:
                continue
            rest = rec(count - 1, e * _det_class_2(a), (s + a) % 8, a)
            if rest is not None:
                return [a] + rest
        return None

    return rec(n, 1, 0, 1)


def form_from_symbol(sym: GenusSymbol) -> FiniteQuadraticForm:
    """A finite quadratic form realizing the symbol."""
    parts = []
    for c in sym.constituents:
        scale = c.scale
        if c.p != 2:
            # n-1 square units and one unit fixing the total sign
            need_last = c.eps
            vals = []
            for i in range(c.n):
                want = 1 if i < c.n - 1 else need_last
                a = next(a for a in range(1, scale)
                         if gcd(a, c.p) == 1 and legendre(2 * a % c.p, c.p) == want)
                vals.append(Fraction(2 * a, scale))
            parts.append(FiniteQuadraticForm([scale] * c.n, vals))
        elif c.even:
            blocks = c.n // 2
            kinds = ["u"] * blocks
            if c.eps < 0:
                kinds[0] = "v"
            for kind in kinds:
                parts.append(_uv_form(c.k, kind))
        else:
            units = _odd_unit_multiset(c.n, c.eps, c.oddity)
            if units is None:
                raise RealizabilityError(f"constituent {c} is not realizable")
            parts.append(FiniteQuadraticForm(
                [scale] * c.n, [Fraction(a, scale) for a in units]))
    return direct_sum_forms(*parts) if parts else trivial_form()


def _uv_form(k: int, kind: str) -> FiniteQuadraticForm:
    scale = 2 ** k
    if kind == "u":
        q = [Fraction(0), Fraction(0)]
        b = [[Fraction(0), Fraction(1, scale)], [Fraction(1, scale), Fraction(0)]]
    else:
        q = [Fraction(2, scale), Fraction(2, scale)]
        b = [[Fraction(2, scale), Fraction(1, scale)],
             [Fraction(1, scale), Fraction(2, scale)]]
    return FiniteQuadraticForm([scale, scale], q, b)


def form_from_symbol_text(text: str) -> FiniteQuadraticForm:
    return form_from_symbol(parse_symbol(text))


# -- signature ----------------------------------------------------------------


def signature_mod8(form: FiniteQuadraticForm) -> int:
    """Milgram signature: sig(q_L) = n_plus - n_minus mod 8 for even L.

    Assembled from the exact Gauss sums of the standard pieces (classical
    closed forms); see cyclotomic.gauss_sum_signature for the direct
    root-of-unity evaluation used as a cross-check.
    """
    total = 0
    for p, cons in form_constituents(form).items():
        for k, c in cons.items():
            if p == 2:
                total += c.oddity
                if c.eps < 0 and k % 2 == 1:
                    total += 4
            else:
                if p % 4 == 3 and k % 2 == 1:
                    total += 2 * c.n
                chi = (c.eps ** k) * (legendre(2, p) ** (c.n * k))
                if chi < 0:
                    total += 4
    return total % 8


def eps_total(form: FiniteQuadraticForm, p: int) -> int:
    """Product of constituent signs of the p-part (determinant class)."""
    cons = form_constituents(form).get(p, {})
    e = 1
    for c in cons.values():
        e *= c.eps
    return e


def scale2_is_odd_type(form: FiniteQuadraticForm) -> bool:
    """True iff the 2-part splits off some q_a(2) (scale-2 odd constituent)."""
    cons = form_constituents(form).get(2, {})
    return 1 in cons and not cons[1].even


def is_isomorphic(f1: FiniteQuadraticForm, f2: FiniteQuadraticForm) -> bool:
    """Isometry of finite quadratic forms via canonical symbol equality."""
    n1, _ = f1.normalized()
    n2, _ = f2.normalized()
    if n1.orders != n2.orders:
        return False
    return to_symbol(n1) == to_symbol(n2)
