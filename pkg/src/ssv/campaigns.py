"""Verification campaigns behind the CLI subcommands.

Each campaign returns its reports plus optional grid data for the figure
renderers.  Cell workers take plain tuples and return plain dicts so the
process-pool path stays picklable; shared objects are rebuilt per process
behind small caches.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Context
from .errors import InputError
from .matchings import enumerate_matchings
from .parallel import pmap
from .pfaffian import (
    pfaffian_full_sum_oracle,
    pfaffian_minus_one,
    residual_noncritical,
)
from .reports import CheckReport, failed, passed
from .selftest import iter_suites
from .sugawara import (
    apply_sugawara_full,
    check_sugawara_commutation,
    default_generator_triples,
    default_test_vectors,
    sugawara_plus_coefficient,
)
from .vacuum import LevelPolicy, apply, is_annihilated_by_modes


@dataclass
class CampaignResult:
    ok: bool
    reports: list[CheckReport]
    grids: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


@lru_cache(maxsize=None)
def _pfaffian_cached(n: int):
    return pfaffian_minus_one(Context(n))


def _center_cell(args: tuple) -> dict:
    n, i, j, r, level = args
    ctx = Context(n)
    residual = apply(ctx.gen(i, j, r), _pfaffian_cached(n), LevelPolicy.parse(level))
    ok = residual.is_zero()
    return {
        "i": i,
        "j": j,
        "r": r,
        "ok": ok,
        "terms": residual.num_terms,
        "text": None if ok else str(residual),
    }


def verify_center(n: int, level: LevelPolicy, modes: list[int], threads: int = 1) -> CampaignResult:
    """Sweep every F[i,j;r] for r in ``modes`` against the Pfaffian."""
    if not modes or any(r < 0 for r in modes):
        raise InputError("modes must be a nonempty list of integers >= 0")
    ctx = Context(n)
    start = time.perf_counter()
    pairs = [(i, j) for i in range(1, ctx.dim + 1) for j in range(i + 1, ctx.dim + 1)]
    tasks = [(n, i, j, r, level.value) for (i, j) in pairs for r in modes]
    cells = pmap(_center_cell, tasks, threads)
    bad = [c for c in cells if not c["ok"]]
    residual_terms = sum(c["terms"] for c in bad)
    if bad:
        first = bad[0]
        detail = f"F[{first['i']},{first['j']};{first['r']}] -> {first['text']}"
        report = failed("verify-center", n, residual_terms, _ms(start), detail)
    else:
        report = passed("verify-center", n, _ms(start))
    by_cell = {(c["i"], c["j"], c["r"]): c["ok"] for c in cells}
    ok_matrix = [[by_cell[i, j, r] for r in modes] for (i, j) in pairs]
    grid = {
        "name": f"verify-center-n{n}",
        "title": f"annihilation sweep, n={n}, level={level.value}",
        "rows": [f"F[{i},{j}]" for i, j in pairs],
        "cols": [f"r={r}" for r in modes],
        "ok": ok_matrix,
    }
    return CampaignResult(report.ok, [report], [grid])


def oracle_compare(n: int, oracle_limit: int) -> CampaignResult:
    """Matching-sum Pfaffian against the full permutation-sum oracle."""
    ctx = Context(n)
    start = time.perf_counter()
    lhs = pfaffian_minus_one(ctx)
    rhs = pfaffian_full_sum_oracle(ctx, oracle_limit)
    diff = lhs - rhs
    if diff.is_zero():
        report = passed("oracle-compare", n, _ms(start))
    else:
        word = sorted(diff.terms)[0]
        detail = f"first differing term: ({diff.terms[word]})*" + "".join(str(g) for g in word)
        report = failed("oracle-compare", n, diff.num_terms, _ms(start), detail)
    return CampaignResult(report.ok, [report])


def residual_campaign(n: int) -> CampaignResult:
    """Closed-form check of the mode-1 action at symbolic central charge."""
    start = time.perf_counter()
    result = residual_noncritical(Context(n))
    if result.equal:
        report = passed("residual-noncritical", n, _ms(start))
    else:
        diff = result.lhs - result.rhs
        report = failed(
            "residual-noncritical",
            n,
            diff.num_terms,
            _ms(start),
            f"lhs = {result.lhs}; rhs = {result.rhs}",
        )
    return CampaignResult(report.ok, [report])


@lru_cache(maxsize=None)
def _test_vector_cached(n: int, label: str):
    for name, v in default_test_vectors(Context(n)):
        if name == label:
            return v
    raise InputError(f"unknown test vector {label!r}")


def _commutation_cell(args: tuple) -> dict:
    n, p, i, j, mode, label = args
    ctx = Context(n)
    v = _test_vector_cached(n, label)
    x = ctx.gen(i, j, mode)
    residual = apply_sugawara_full(ctx, p, apply(x, v)) - apply(x, apply_sugawara_full(ctx, p, v))
    ok = residual.is_zero()
    return {
        "p": p,
        "gen": (i, j, mode),
        "vector": label,
        "ok": ok,
        "terms": residual.num_terms,
        "text": None if ok else str(residual),
    }


def sugawara_campaign(
    n: int,
    p_list: list[int],
    annihilation_modes: list[int],
    gen_modes: list[int],
    threads: int = 1,
) -> CampaignResult:
    """Both series-coefficient checks: center membership and commutation."""
    ctx = Context(n)
    reports: list[CheckReport] = []
    grids: list[dict] = []
    warnings: list[str] = []

    # plus-part coefficients: only negative p index the series
    neg_p = [p for p in p_list if p < 0]
    start = time.perf_counter()
    if not neg_p and not p_list:
        warnings.append("empty p grid: sugawara checks pass trivially")
    if not neg_p:
        if p_list:
            warnings.append("no negative p in grid: plus-part check passes trivially")
        reports.append(passed("sugawara-plus-center", n, _ms(start)))
    else:
        bad_detail = None
        residual_terms = 0
        rows = []
        ok_matrix = []
        cols: list[str] = []
        for p in neg_p:
            coeff = sugawara_plus_coefficient(ctx, p)
            ann = is_annihilated_by_modes(coeff, annihilation_modes, LevelPolicy.CRITICAL)
            rows.append(f"p={p}")
            cols = [f"F[{e.i},{e.j};{e.r}]" for e in ann.entries]
            ok_matrix.append([e.ok for e in ann.entries])
            for e in ann.failures():
                residual_terms += e.residual.num_terms
                if bad_detail is None:
                    bad_detail = f"p={p}, F[{e.i},{e.j};{e.r}] -> {e.residual}"
        if bad_detail is None:
            reports.append(passed("sugawara-plus-center", n, _ms(start)))
        else:
            reports.append(failed("sugawara-plus-center", n, residual_terms, _ms(start), bad_detail))
        grids.append(
            {
                "name": f"sugawara-plus-n{n}",
                "title": f"plus-part coefficients vs annihilation sweep, n={n}",
                "rows": rows,
                "cols": cols,
                "ok": ok_matrix,
            }
        )

    # commutation grid over the default probe vectors
    start = time.perf_counter()
    if not p_list:
        reports.append(passed("sugawara-commutation", n, _ms(start)))
        return CampaignResult(all(r.ok for r in reports), reports, grids, warnings)
    vectors = default_test_vectors(ctx)
    triples = default_generator_triples(ctx, gen_modes)
    tasks = [
        (n, p, i, j, mode, label)
        for p in p_list
        for (i, j, mode) in triples
        for (label, _) in vectors
    ]
    cells = pmap(_commutation_cell, tasks, threads)
    bad = [c for c in cells if not c["ok"]]
    if bad:
        first = bad[0]
        i, j, mode = first["gen"]
        detail = f"p={first['p']}, X=F[{i},{j};{mode}], v={first['vector']} -> {first['text']}"
        reports.append(
            failed(
                "sugawara-commutation",
                n,
                sum(c["terms"] for c in bad),
                _ms(start),
                detail,
            )
        )
    else:
        reports.append(passed("sugawara-commutation", n, _ms(start)))
    rows = [f"F[{i},{j};{m}]" for (i, j, m) in triples]
    cols = [f"p={p}, v{k}" for p in p_list for k in range(len(vectors))]
    by_cell = {(c["p"], c["gen"], c["vector"]): c["ok"] for c in cells}
    ok_matrix = [
        [by_cell[p, (i, j, mode), label] for p in p_list for (label, _) in vectors]
        for (i, j, mode) in triples
    ]
    grids.append(
        {
            "name": f"sugawara-commutation-n{n}",
            "title": f"commutation grid, n={n}",
            "rows": rows,
            "cols": cols,
            "ok": ok_matrix,
        }
    )
    return CampaignResult(all(r.ok for r in reports), reports, grids, warnings)


def selftest_campaign(seed: int, cases: int, extra_n: int | None = None) -> CampaignResult:
    """Run every property suite and report one check per suite."""
    reports = []
    bars = []
    overall = True
    suites = iter_suites(seed, cases=cases, extra_n=extra_n)
    while True:
        start = time.perf_counter()
        try:
            suite = next(suites)
        except StopIteration:
            break
        if suite.ok:
            reports.append(passed(f"selftest-{suite.name}", 0, _ms(start)))
        else:
            overall = False
            reports.append(
                failed(
                    f"selftest-{suite.name}",
                    0,
                    len(suite.failures),
                    _ms(start),
                    suite.failures[0],
                )
            )
        bars.append({"name": suite.name, "cases": suite.cases, "failures": len(suite.failures)})
    grid = {"name": "selftest", "title": f"property suites (seed={seed})", "bars": bars}
    return CampaignResult(overall, reports, [grid])


def matchings_listing(n: int) -> list:
    return enumerate_matchings(range(1, 2 * n + 1))
