"""The vacuum module: negative-mode words acting on a cyclic vacuum vector.

The module is the quotient of the enveloping algebra by the left ideal
generated by all nonnegative-mode generators together with K + 2n - 2; the
symbolic level policy drops the second relation and keeps K in coefficients,
which is what the non-critical residual identity needs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kpoly
from .algebra import Context, Element, TermSum, _require_same_context, format_terms, normal_form
from .errors import InputError


class LevelPolicy(enum.Enum):
    """Whether coefficients are evaluated at the critical charge or kept in K."""

    CRITICAL = "critical"
    SYMBOLIC = "symbolic"

    @classmethod
    def parse(cls, text: str) -> "LevelPolicy":
        try:
            return cls(text.lower())
        except ValueError:
            raise InputError(f"unknown level policy {text!r}; use critical or symbolic")

    def k_value(self, n: int) -> int | None:
        return 2 - 2 * n if self is LevelPolicy.CRITICAL else None


class VacuumVector(TermSum):
    """Canonical sum of negative-mode words applied to the vacuum."""

    __slots__ = ()

    def __init__(self, ctx: Context, terms: dict):
        if __debug__:
            for w in terms:
                assert all(g.r < 0 for g in w), f"nonnegative mode in vacuum word {w}"
        super().__init__(ctx, terms)

    def energy(self) -> int:
        """Max over terms of the total negative mode; the vacuum has energy 0."""
        return max((sum(-g.r for g in w) for w in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return format_terms(self.terms, suffix="|0>")


def vacuum(ctx: Context) -> VacuumVector:
    return VacuumVector(ctx, {(): kpoly.ONE})


def apply_items(ctx: Context, items, policy: LevelPolicy) -> VacuumVector:
    """Canonicalize raw (word, coefficient) items inside the module."""
    kv = policy.k_value(ctx.n)
    if kv is not None:
        items = [(w, c.substitute(kv)) for w, c in items]
    return VacuumVector(ctx, normal_form(items, k_value=kv, vacuum=True))


def apply(u: Element, v: VacuumVector, policy: LevelPolicy = LevelPolicy.CRITICAL) -> VacuumVector:
    """Act by an enveloping-algebra element on a module vector.

    Words whose rightmost letter has mode >= 0 die against the vacuum; under
    the critical policy every K in sight is evaluated at 2 - 2n.
    """
    if not isinstance(u, Element) or not isinstance(v, VacuumVector):
        raise InputError("apply expects (Element, VacuumVector)")
    _require_same_context(u, v)
    items = []
    for uw, uc in u.terms.items():
        for vw, vc in v.terms.items():
            items.append((uw + vw, uc * vc))
    return apply_items(u.ctx, items, policy)


@dataclass(frozen=True)
class AnnihilationEntry:
    i: int
    j: int
    r: int
    residual: VacuumVector

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


@dataclass(frozen=True)
class AnnihilationReport:
    entries: tuple[AnnihilationEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[AnnihilationEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def residual_terms(self) -> int:
        return sum(e.residual.num_terms for e in self.entries)


def is_annihilated_by_modes(
    v: VacuumVector,
    modes,
    policy: LevelPolicy = LevelPolicy.CRITICAL,
) -> AnnihilationReport:
    """Sweep every generator F[i,j;r], i < j, r in ``modes``, against ``v``.

    Modes {0, 1} already decide full nonnegative-loop invariance (brackets of
    mode-0 and mode-1 letters generate every higher mode); longer lists are
    accepted as belt and braces.
    """
    modes = list(modes)
    if not modes or any(not isinstance(r, int) or r < 0 for r in modes):
        raise InputError("modes must be a nonempty list of integers >= 0")
    ctx = v.ctx
    entries = []
    for i in range(1, ctx.dim + 1):
        for j in range(i + 1, ctx.dim + 1):
            for r in modes:
                residual = apply(ctx.gen(i, j, r), v, policy)
                entries.append(AnnihilationEntry(i, j, r, residual))
    return AnnihilationReport(tuple(entries))
