"""Definite rank-2 lattices: Gauss reduction, enumeration, isometries.

A Rank2Form stores the positive definite Gram matrix ((a,b),(b,c)) plus
a sign flag for negative definite forms.  The reduced shape is
-a < 2b <= a <= c with b >= 0 if a = c, i.e. one representative per
proper equivalence class; enumeration by determinant is complete for
that convention (bound 3b^2 <= det).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import NotDefiniteError
from .lattice import GramLattice, build_lattice
from .shortvec import short_vectors


@dataclass(frozen=True, order=True)
class Rank2Form:
    a: int
    b: int
    c: int
    negative: bool = False

    def __post_init__(self):
        if self.a <= 0 or self.a * self.c - self.b * self.b <= 0:
            raise NotDefiniteError("rank-2 form must be definite")

    @property
    def det(self) -> int:
        return self.a * self.c - self.b * self.b

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return -a < 2 * b <= a <= c and (a != c or b >= 0)

    def positive_lattice(self) -> GramLattice:
        return build_lattice([[self.a, self.b], [self.b, self.c]])

    def signed_lattice(self) -> GramLattice:
        s = -1 if self.negative else 1
        return build_lattice([[s * self.a, s * self.b], [s * self.b, s * self.c]])

    def __str__(self):
        body = f"({self.a}^{self.b} {self.c})"
        return f"-{body}" if self.negative else body


def rank2_form_from_gram(gram) -> Rank2Form:
    """Classify a definite 2x2 Gram matrix into a signed Rank2Form."""
    latt = build_lattice(gram)
    if latt.rank != 2:
        raise NotDefiniteError("expected a 2x2 Gram matrix")
    if latt.signature == (2, 0):
        return Rank2Form(gram[0][0], gram[0][1], gram[1][1], negative=False)
    if latt.signature == (0, 2):
        return Rank2Form(-gram[0][0], -gram[0][1], -gram[1][1], negative=True)
    raise NotDefiniteError("rank-2 form must be definite")


def rank2_reduce(form: Rank2Form) -> Rank2Form:
    """Gauss reduction to the unique reduced representative of the proper class."""
    a, b, c = form.a, form.b, form.c
    while True:
        # translate b into (-a/2, a/2]
        k = (2 * b + a - 1) // (2 * a)
        if k:
            c = c + k * k * a - 2 * k * b
            b = b - k * a
        if a > c:
            a, b, c = c, -b, a
            continue
        if 2 * b == -a:
            b = -b  # boundary: translate by one step, proper move
            continue
        if a == c and b < 0:
            b = -b  # boundary rotation, proper move
        break
    return Rank2Form(a, b, c, negative=form.negative)


def rank2_enumerate(det: int, negative: bool = False) -> list[Rank2Form]:
    """All reduced even rank-2 forms with the given determinant and sign.

    Complete and duplicate free; lexicographic in (a, b, c).
    """
    if det < 1:
        raise NotDefiniteError("determinant must be positive")
    found = []
    bmax = isqrt(det // 3)
    for b in range(-bmax - 1, bmax + 2):
        if 3 * b * b > det:
            continue
        ac = det + b * b
        for a in range(2, isqrt(ac) + 1, 2):
            if ac % a:
                continue
            c = ac // a
            if c % 2 or a > c:
                continue
            if not (-a < 2 * b <= a):
                continue
            if a == c and b < 0:
                continue
            found.append(Rank2Form(a, b, c, negative=negative))
    return sorted(found, key=lambda f: (f.a, f.b, f.c))


def rank2_isometries(form: Rank2Form) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The (finite) isometry group of a definite rank-2 form, as 2x2 matrices.

    Matrices are returned as rows ((p, q), (r, s)) acting on column vectors.
    """
    latt = form.positive_lattice()
    g = [[form.a, form.b], [form.b, form.c]]
    cap = max(form.a, form.c)
    cols_a = short_vectors(latt, form.a, norm_cap=max(cap, 100))
    cols_c = short_vectors(latt, form.c, norm_cap=max(cap, 100))
    result = set()
    for u in [v for w in cols_a for v in (w, (-w[0], -w[1]))]:
        for w in [v for z in cols_c for v in (z, (-z[0], -z[1]))]:
            # columns u, w; demand P^T G P = G
            gu = [g[0][0] * u[0] + g[0][1] * u[1], g[1][0] * u[0] + g[1][1] * u[1]]
            if u[0] * gu[0] + u[1] * gu[1] != form.a:
                continue
            if w[0] * gu[0] + w[1] * gu[1] != form.b:
                continue
            gw = [g[0][0] * w[0] + g[0][1] * w[1], g[1][0] * w[0] + g[1][1] * w[1]]
            if w[0] * gw[0] + w[1] * gw[1] != form.c:
                continue
            result.add(((u[0], w[0]), (u[1], w[1])))
    return sorted(result)


def _mat2_mul(m1, m2):
    return ((m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0],
             m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
            (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0],
             m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]))


_ID2 = ((1, 0), (0, 1))


def matrix_order(m, cap: int = 24) -> int:
    acc = m
    for k in range(1, cap + 1):
        if acc == _ID2:
            return k
        acc = _mat2_mul(acc, m)
    raise ValueError("matrix order exceeds cap; not a finite isometry?")


def rank2_automorphism_orders(form: Rank2Form) -> set[int]:
    """Orders of elements of the isometry group of the (definite) form."""
    return {matrix_order(m) for m in rank2_isometries(form)}
