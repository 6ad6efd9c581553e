"""Diagonal automorphisms of cubic fourfolds: weights and moduli counts.

A diagonal action 1/n(w1..w6) scales coordinate x_i by zeta_n^{w_i}.
The cubics preserved up to scalar lie in one weight class w0; the action
is symplectic exactly when w1+...+w6 = 2*w0 (mod n).  The dimension of
the corresponding family is the number of degree-3 monomials in the
prescribed class minus the dimension of the centralizer of the action
in GL(6), which for a diagonal (abelian) group is the sum of squared
multiplicities of the joint coordinate characters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MixedWeightClassesError


@dataclass(frozen=True)
class DiagonalAction:
    order: int
    weights: tuple[int, int, int, int, int, int]
    w0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "weights",
                           tuple(w % self.order if self.order else w
                                 for w in self.weights))

    def weight_of(self, monomial) -> int:
        return sum(w * a for w, a in zip(self.weights, monomial)) % self.order


def degree3_monomials():
    """Exponent 6-tuples of the 56 cubic monomials in x1..x6."""
    out = []
    for combo in itertools.combinations_with_replacement(range(6), 3):
        e = [0] * 6
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def invariant_monomials(actions) -> list[tuple[int, ...]]:
    """Monomials lying in the prescribed weight class of every generator."""
    return [m for m in degree3_monomials()
            if all(a.weight_of(m) == a.w0 % a.order for a in actions)]


def symplectic_weight_check(action: DiagonalAction, monomials) -> bool:
    """True iff the diagonal action is symplectic on a cubic with the
    given monomials: all monomials must share one weight class w0 and
    |w| = 2*w0 (mod n)."""
    n = action.order
    classes = {action.weight_of(m) for m in monomials}
    if len(classes) > 1:
        raise MixedWeightClassesError(
            f"monomials span several weight classes mod {n}: {sorted(classes)}")
    w0 = classes.pop() if classes else action.w0 % n if n else 0
    return (sum(action.weights) - 2 * w0) % n == 0


def centralizer_dimension(actions) -> int:
    """dim of the centralizer in GL(6) of a diagonal abelian group."""
    chars = [tuple(a.weights[i] % a.order for a in actions) for i in range(6)]
    dim = 0
    for c in set(chars):
        m = chars.count(c)
        dim += m * m
    return dim


def family_dimension(actions) -> int:
    """Moduli dimension of cubics with the given diagonal symmetry.

    Accepts a single DiagonalAction or an iterable of them (an abelian
    diagonal group given by generators, each with its own weight class).
    """
    if isinstance(actions, DiagonalAction):
        actions = [actions]
    actions = list(actions)
    return len(invariant_monomials(actions)) - centralizer_dimension(actions)
