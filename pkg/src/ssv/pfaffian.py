"""The Pfaffian of the mode -1 generator matrix, and the tools around it.

The production formula sums over normalized matchings; the oracle sums over
all (2n)! permutations and divides by 2^n n! with an exactness check, as an
independent cross-check of the matching enumeration and its signs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from . import kpoly
from .algebra import Context, Element, Gen, normal_form, normalize_letter
from .errors import InputError
from .matchings import enumerate_matchings
from .vacuum import LevelPolicy, VacuumVector, apply
from .kpoly import KPoly

ORACLE_LIMIT_DEFAULT = 4


def pfaffian_minus_one(ctx: Context) -> VacuumVector:
    """Sum over matchings of sign times the product of F[a,b;-1] factors.

    The factors of each term pairwise commute (disjoint index pairs, equal
    modes) and arrive already sorted, so the result is canonical by
    construction, with (2n-1)!! terms of coefficient +-1.
    """
    terms: dict = {}
    for m in enumerate_matchings(range(1, ctx.dim + 1)):
        word = tuple(Gen(-1, a, b) for a, b in m.pairs)
        terms[word] = kpoly.const(m.sign)
    return VacuumVector(ctx, terms)


def pfaffian_submatrix(ctx: Context, index_subset: Sequence[int]) -> VacuumVector:
    """Matching-sum Pfaffian restricted to an even subset of 1..2n.

    The empty subset gives the empty product, 1 applied to the vacuum.
    """
    indices = sorted(index_subset)
    if len(set(indices)) != len(indices):
        raise InputError("index subset must have distinct entries")
    for i in indices:
        ctx.check_index(i)
    if not indices:
        return VacuumVector(ctx, {(): kpoly.ONE})
    if len(indices) % 2:
        raise InputError(f"index subset must have even size, got {len(indices)}")
    terms: dict = {}
    for m in enumerate_matchings(indices):
        word = tuple(Gen(-1, a, b) for a, b in m.pairs)
        terms[word] = kpoly.const(m.sign)
    return VacuumVector(ctx, terms)


def perm_sign_cycles(perm: Sequence[int]) -> int:
    """Permutation signature via cycle decomposition (independent of inversion counting)."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def pfaffian_full_sum_oracle(ctx: Context, limit: int = ORACLE_LIMIT_DEFAULT) -> VacuumVector:
    """Brute-force Pfaffian: (1 / 2^n n!) times the sum over all of S_2n.

    Deliberately avoids the matching enumeration so the two code paths can
    check each other; the division is exact integer division with a
    consistency assertion.
    """
    n = ctx.n
    if n > limit:
        raise InputError(f"oracle limit is n <= {limit} ((2n)! growth), got n={n}")
    items = []
    for perm in itertools.permutations(range(1, ctx.dim + 1)):
        coeff = perm_sign_cycles(perm)
        word = []
        for k in range(n):
            a, b = perm[2 * k], perm[2 * k + 1]
            if a > b:
                a, b = b, a
                coeff = -coeff
            word.append(Gen(-1, a, b))
        items.append((tuple(word), kpoly.const(coeff)))
    raw = normal_form(items, vacuum=True)
    denom = 2**n * factorial(n)
    return VacuumVector(ctx, {w: c.div_exact(denom) for w, c in raw.items()})


def permute_indices(x, perm: Sequence[int]):
    """Apply the index automorphism F[i,j;r] -> F[perm(i),perm(j);r], K -> K.

    ``perm`` lists the images of 1..2n in order.  Works on Elements and
    VacuumVectors alike and returns the same kind, re-canonicalized.
    """
    ctx = x.ctx
    images = tuple(perm)
    if sorted(images) != list(range(1, ctx.dim + 1)):
        raise InputError(f"permutation must be a bijection on 1..{ctx.dim}")
    items = []
    for word, coeff in x.terms.items():
        sign = 1
        letters = []
        for g in word:
            a, b = images[g.i - 1], images[g.j - 1]
            if a > b:
                a, b = b, a
                sign = -sign
            letters.append(Gen(g.r, a, b))
        items.append((tuple(letters), coeff.scale(sign)))
    if isinstance(x, VacuumVector):
        return VacuumVector(ctx, normal_form(items, vacuum=True))
    if isinstance(x, Element):
        return Element(ctx, normal_form(items))
    raise InputError(f"cannot permute object of type {type(x).__name__}")


@dataclass(frozen=True)
class ResidualResult:
    lhs: VacuumVector
    rhs: VacuumVector
    equal: bool


def residual_noncritical(ctx: Context) -> ResidualResult:
    """Compare F[1,2;1] acting on the Pfaffian with its closed symbolic form.

    With K kept symbolic the action equals (-K - 2n + 2) times the Pfaffian
    of the submatrix on indices {3..2n}; the factor vanishes exactly at the
    critical charge.
    """
    if ctx.n < 2:
        raise InputError(f"residual check needs n >= 2, got n={ctx.n}")
    lhs = apply(ctx.gen(1, 2, 1), pfaffian_minus_one(ctx), LevelPolicy.SYMBOLIC)
    factor = KPoly({1: -1, 0: -(2 * ctx.n - 2)})
    rhs = factor * pfaffian_submatrix(ctx, range(3, ctx.dim + 1))
    return ResidualResult(lhs, rhs, lhs == rhs)
