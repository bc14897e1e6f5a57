"""Laurent-coefficient layer of the Pfaffian series.

Expanding each matrix entry as F_ij(z) = sum_r F_ij[r] z^(-r-1), a product
of n factors lands in z^(-p-1) exactly when its modes sum to p + 1 - n.
The plus-part coefficients (all modes negative) are honest module vectors;
the full-series coefficients are realized through their action on a
finite-energy vector, truncating each mode at the vector's energy (larger
modes annihilate it, and the factors of one matching commute exactly, so
the truncation drops only vanishing terms).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kpoly
from .algebra import Context, Gen, letter_bracket
from .errors import InputError
from .matchings import enumerate_matchings
from .vacuum import LevelPolicy, VacuumVector, apply, apply_items, vacuum


def mode_compositions(parts: int, total: int, hi: int) -> list[tuple[int, ...]]:
    """Integer tuples of the given length, each entry <= hi, summing to total.

    Lexicographically ascending; the implicit per-entry lower bound is
    total - (parts - 1) * hi.
    """
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, k: int) -> None:
        if k == 1:
            if remaining <= hi:
                out.append(tuple(prefix) + (remaining,))
            return
        for m in range(remaining - (k - 1) * hi, hi + 1):
            prefix.append(m)
            rec(prefix, remaining - m, k - 1)
            prefix.pop()

    if parts >= 1:
        rec([], total, parts)
    return out


def _checked_matchings(ctx: Context):
    """Matchings of 1..2n, asserting the composed factors commute exactly."""
    for m in enumerate_matchings(range(1, ctx.dim + 1)):
        letters = [Gen(-1, a, b) for a, b in m.pairs]
        for x in range(len(letters)):
            for y in range(x + 1, len(letters)):
                terms, k_coeff = letter_bracket(letters[x], letters[y])
                assert not terms and not k_coeff, (
                    f"matching factors fail to commute: {letters[x]} {letters[y]}"
                )
        yield m


def sugawara_plus_coefficient(ctx: Context, p: int) -> VacuumVector:
    """Coefficient of z^(-p-1) in the plus-part Pfaffian series, p < 0.

    Sums sign times the product of F[a_k,b_k;m_k] over matchings and over
    all-negative mode tuples with sum p + 1 - n.  Distinct (matching,
    modes) choices give distinct sorted words, so every coefficient is +-1.
    """
    if p >= 0:
        raise InputError(f"plus-part coefficients need p < 0, got p={p}")
    total = p + 1 - ctx.n
    terms: dict = {}
    for m in _checked_matchings(ctx):
        for comp in mode_compositions(ctx.n, total, -1):
            word = tuple(sorted(Gen(mode, a, b) for mode, (a, b) in zip(comp, m.pairs)))
            assert word not in terms
            terms[word] = kpoly.const(m.sign)
    return VacuumVector(ctx, terms)


def apply_sugawara_full(
    ctx: Context, p: int, v: VacuumVector, mode_cap: int | None = None
) -> VacuumVector:
    """Act by the full-series coefficient of z^(-p-1) on a module vector.

    Modes are truncated at ``mode_cap`` (default: the energy of ``v``); any
    factor with a larger mode kills v after commuting to the right, so
    enlarging the cap never changes the result.  Acts at the critical level.
    """
    if v.ctx.n != ctx.n:
        raise InputError(f"vector built for n={v.ctx.n}, expected n={ctx.n}")
    cap = v.energy() if mode_cap is None else mode_cap
    total = p + 1 - ctx.n
    items = []
    for m in _checked_matchings(ctx):
        for comp in mode_compositions(ctx.n, total, cap):
            word = tuple(sorted(Gen(mode, a, b) for mode, (a, b) in zip(comp, m.pairs)))
            for vw, vc in v.terms.items():
                items.append((word + vw, vc.scale(m.sign)))
    return apply_items(ctx, items, LevelPolicy.CRITICAL)


@dataclass(frozen=True)
class CommutationCell:
    p: int
    generator: tuple[int, int, int]
    vector_label: str
    residual: VacuumVector

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


@dataclass(frozen=True)
class CommutationReport:
    cells: tuple[CommutationCell, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def failures(self) -> list[CommutationCell]:
        return [c for c in self.cells if not c.ok]

    @property
    def residual_terms(self) -> int:
        return sum(c.residual.num_terms for c in self.cells)


def default_test_vectors(ctx: Context) -> list[tuple[str, VacuumVector]]:
    """The standard commutation probes: vacuum plus one- and two-letter vectors."""
    out = [("|0>", vacuum(ctx))]
    out.append(("F[1,2;-1]|0>", apply(ctx.gen(1, 2, -1), vacuum(ctx))))
    if ctx.dim >= 4:
        two = apply(ctx.gen(1, 3, -1) * ctx.gen(2, 4, -1), vacuum(ctx))
        out.append(("F[1,3;-1]F[2,4;-1]|0>", two))
    return out


def default_generator_triples(ctx: Context, modes: Iterable[int]) -> list[tuple[int, int, int]]:
    return [
        (i, j, m)
        for i in range(1, ctx.dim + 1)
        for j in range(i + 1, ctx.dim + 1)
        for m in modes
    ]


def check_sugawara_commutation(
    ctx: Context,
    p_list: Sequence[int],
    generators: Sequence[tuple[int, int, int]],
    test_vectors: Sequence[tuple[str, VacuumVector]],
) -> CommutationReport:
    """Verify the series coefficients commute with every probe generator.

    For each (p, X, v) computes S_p(X v) - X(S_p v) at the critical level
    and records the residual.
    """
    cells = []
    for p in p_list:
        for i, j, mode in generators:
            x = ctx.gen(i, j, mode)
            for label, v in test_vectors:
                lhs = apply_sugawara_full(ctx, p, apply(x, v))
                rhs = apply(x, apply_sugawara_full(ctx, p, v))
                cells.append(CommutationCell(p, (i, j, mode), label, lhs - rhs))
    return CommutationReport(tuple(cells))
