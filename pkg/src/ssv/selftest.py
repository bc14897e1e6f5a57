"""Seeded property suites exercised by the CLI selftest and the test suite.

Each suite draws its cases from a seed-derived RNG, so a run is fully
reproducible, and returns the failures as printable descriptions rather
than booleans.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import kpoly
from .algebra import Context, Element, Gen, bracket, multiply, normal_form, word_element
from .matchings import enumerate_matchings, inversion_sign, odd_double_factorial
from .pfaffian import pfaffian_minus_one, permute_indices


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _rng(seed: int, name: str) -> random.Random:
    # str seeds hash deterministically across processes, unlike hash()
    return random.Random(f"{seed}/{name}")


def _random_letter(rng: random.Random, ctx: Context, lo: int = -2, hi: int = 2) -> Gen:
    i = rng.randrange(1, ctx.dim)
    j = rng.randrange(i + 1, ctx.dim + 1)
    return Gen(rng.randint(lo, hi), i, j)


def _letter_element(ctx: Context, g: Gen) -> Element:
    return Element(ctx, {(g,): kpoly.ONE})


def selection_sort_sign(seq) -> int:
    """Signature by counting the swaps of a selection sort; an independent oracle."""
    arr = list(seq)
    sign = 1
    for p in range(len(arr)):
        m = min(range(p, len(arr)), key=arr.__getitem__)
        if m != p:
            arr[p], arr[m] = arr[m], arr[p]
            sign = -sign
    return sign


def suite_antisymmetry(seed: int, cases: int) -> SuiteResult:
    """bracket(a,b) = -bracket(b,a), and both match the multiply commutator."""
    rng = _rng(seed, "antisymmetry")
    ctx = Context(3)
    res = SuiteResult("antisymmetry", cases)
    for _ in range(cases):
        a, b = _random_letter(rng, ctx), _random_letter(rng, ctx)
        ea, eb = _letter_element(ctx, a), _letter_element(ctx, b)
        lhs = bracket(ea, eb)
        if not (lhs + bracket(eb, ea)).is_zero():
            res.failures.append(f"bracket({a},{b}) not antisymmetric")
        if lhs != multiply(ea, eb) - multiply(eb, ea):
            res.failures.append(f"bracket({a},{b}) disagrees with commutator")
    return res


def suite_jacobi(seed: int, cases: int) -> SuiteResult:
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 on random letters."""
    rng = _rng(seed, "jacobi")
    ctx = Context(3)
    res = SuiteResult("jacobi", cases)
    for _ in range(cases):
        a, b, c = (_letter_element(ctx, _random_letter(rng, ctx)) for _ in range(3))
        total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        if not total.is_zero():
            res.failures.append(f"jacobi fails on {a}, {b}, {c}")
    return res


def suite_confluence(seed: int, cases: int) -> SuiteResult:
    """Canonical forms ignore association order and the rewrite-step order."""
    rng = _rng(seed, "confluence")
    ctx = Context(2)
    res = SuiteResult("confluence", cases)
    for _ in range(cases):
        letters = [_random_letter(rng, ctx) for _ in range(rng.randint(2, 4))]
        factors = [_letter_element(ctx, g) for g in letters]
        left = factors[0]
        for f in factors[1:]:
            left = multiply(left, f)
        right = factors[-1]
        for f in reversed(factors[:-1]):
            right = multiply(f, right)
        if left != right:
            res.failures.append(f"association order changes product of {letters}")
        items = [(tuple(letters), kpoly.ONE)]
        first = normal_form(items)
        last = normal_form(items, descent="last")
        shuffled = normal_form(items, descent="random", rng=rng)
        if not (first == last == shuffled):
            res.failures.append(f"descent order changes normal form of {letters}")
        if first != left.terms:
            res.failures.append(f"direct normal form disagrees with product for {letters}")
    return res


def suite_matching_signs(seed: int, cases: int) -> SuiteResult:
    """Counts are (2m-1)!! and every stored sign matches a sort-based oracle."""
    rng = _rng(seed, "matching-signs")
    res = SuiteResult("matching-signs", 0)
    for m in range(1, 7):
        ms = enumerate_matchings(range(1, 2 * m + 1))
        res.cases += len(ms)
        if len(ms) != odd_double_factorial(m):
            res.failures.append(f"count at m={m}: {len(ms)} != {odd_double_factorial(m)}")
        for mt in ms:
            if mt.sign != selection_sort_sign(mt.flatten()):
                res.failures.append(f"sign mismatch for {mt}")
    for _ in range(cases):
        size = 2 * rng.randint(1, 4)
        ground = sorted(rng.sample(range(1, 17), size))
        for mt in enumerate_matchings(ground):
            res.cases += 1
            if mt.sign != selection_sort_sign(mt.flatten()):
                res.failures.append(f"sign mismatch for {mt} on {ground}")
            if sorted(mt.flatten()) != ground:
                res.failures.append(f"{mt} is not a matching of {ground}")
    return res


def suite_cancellation(ns=(2, 3)) -> SuiteResult:
    """The quadratic combination behind mode-0 invariance collapses to zero.

    For every 2 < i < j <= 2n:
    -F[2,i]F[2,j] + F[1,i]F[1,j] + F[2,j]F[2,i] - F[1,j]F[1,i] = 0
    (all modes -1).
    """
    res = SuiteResult("cancellation", 0)
    for n in ns:
        ctx = Context(n)
        for i in range(3, ctx.dim + 1):
            for j in range(i + 1, ctx.dim + 1):
                res.cases += 1
                expr = (
                    -word_element(ctx, [(2, i, -1), (2, j, -1)])
                    + word_element(ctx, [(1, i, -1), (1, j, -1)])
                    + word_element(ctx, [(2, j, -1), (2, i, -1)])
                    - word_element(ctx, [(1, j, -1), (1, i, -1)])
                )
                if not expr.is_zero():
                    res.failures.append(f"cancellation fails at n={n}, (i,j)=({i},{j})")
    return res


def suite_automorphism_sign(seed: int, per_n: int = 20, ns=(2, 3, 4)) -> SuiteResult:
    """Relabeling indices multiplies the Pfaffian by the permutation sign."""
    rng = _rng(seed, "automorphism-sign")
    res = SuiteResult("automorphism-sign", 0)
    for n in ns:
        ctx = Context(n)
        pf = pfaffian_minus_one(ctx)
        perms = []
        for k in range(1, ctx.dim):
            ident = list(range(1, ctx.dim + 1))
            ident[k - 1], ident[k] = ident[k], ident[k - 1]
            perms.append(ident)
        for _ in range(per_n):
            p = list(range(1, ctx.dim + 1))
            rng.shuffle(p)
            perms.append(p)
        for p in perms:
            res.cases += 1
            expected = selection_sort_sign(p) * pf
            if permute_indices(pf, p) != expected:
                res.failures.append(f"automorphism sign fails at n={n}, perm={p}")
    return res


def iter_suites(seed: int, cases: int = 200, extra_n: int | None = None):
    """Yield each suite result in a fixed order, with seed-derived randomness."""
    ns_cancel = (2, 3) if extra_n is None or extra_n <= 3 else (2, 3, extra_n)
    ns_auto = (2, 3, 4) if extra_n is None or extra_n <= 4 else (2, 3, 4, extra_n)
    yield suite_antisymmetry(seed, cases)
    yield suite_jacobi(seed, cases)
    yield suite_confluence(seed, cases)
    yield suite_matching_signs(seed, min(cases, 50))
    yield suite_cancellation(ns_cancel)
    yield suite_automorphism_sign(seed, ns=ns_auto)


def run_all(seed: int, cases: int = 200, extra_n: int | None = None) -> list[SuiteResult]:
    return list(iter_suites(seed, cases, extra_n))
