import pytest
from hypothesis import given, settings, strategies as st

from ssv import Context, InputError, multiply
from ssv.algebra import Gen
from ssv.kpoly import ONE, const
from ssv.vacuum import (
    LevelPolicy,
    VacuumVector,
    apply,
    is_annihilated_by_modes,
    vacuum,
)
from ssv.pfaffian import pfaffian_minus_one


def test_vacuum_energy_zero(ctx2):
    assert vacuum(ctx2).energy() == 0
    assert VacuumVector(ctx2, {}).energy() == 0


def test_apply_single_bracket_at_critical(ctx2):
    # acting by the mode 1 partner on a mode -1 letter leaves -K|0>, i.e. 2|0> at n=2
    v = apply(ctx2.gen(1, 2, -1), vacuum(ctx2))
    got = apply(ctx2.gen(1, 2, 1), v, LevelPolicy.CRITICAL)
    assert got == 2 * vacuum(ctx2)
    assert str(got) == "(2)|0>"


def test_apply_symbolic_keeps_charge(ctx2):
    v = apply(ctx2.gen(1, 2, -1), vacuum(ctx2))
    got = apply(ctx2.gen(1, 2, 1), v, LevelPolicy.SYMBOLIC)
    assert str(got) == "(-K)|0>"


def test_nonnegative_mode_kills_vacuum(ctx2):
    assert apply(ctx2.gen(1, 2, 0), vacuum(ctx2)).is_zero()
    assert apply(ctx2.gen(1, 2, 5), vacuum(ctx2)).is_zero()


def test_creation_operator(ctx2):
    got = apply(ctx2.gen(3, 4, -1), vacuum(ctx2))
    assert got.terms == {(Gen(-1, 3, 4),): ONE}
    assert got.energy() == 1


def test_apply_context_mismatch(ctx2, ctx3):
    with pytest.raises(InputError):
        apply(ctx2.gen(1, 2, 0), vacuum(ctx3))


def test_annihilation_report_vacuum_passes(ctx2):
    report = is_annihilated_by_modes(vacuum(ctx2), [0, 1, 2])
    assert report.ok
    assert len(report.entries) == 6 * 3


def test_annihilation_report_pfaffian_passes(ctx2):
    assert is_annihilated_by_modes(pfaffian_minus_one(ctx2), [0, 1]).ok


def test_annihilation_report_failure_has_residual(ctx2):
    v = apply(ctx2.gen(1, 2, -1), vacuum(ctx2))
    report = is_annihilated_by_modes(v, [1], LevelPolicy.CRITICAL)
    bad = report.failures()
    assert [(e.i, e.j, e.r) for e in bad] == [(1, 2, 1)]
    assert bad[0].residual == 2 * vacuum(ctx2)


def test_modes_validation(ctx2):
    with pytest.raises(InputError):
        is_annihilated_by_modes(vacuum(ctx2), [])
    with pytest.raises(InputError):
        is_annihilated_by_modes(vacuum(ctx2), [-1])


# ---------------------------------------------------------------------------
# module laws

ctx_m = Context(2)


def letters(dim, lo, hi):
    return st.tuples(st.integers(lo, hi), st.integers(1, dim), st.integers(1, dim)).filter(
        lambda t: t[1] != t[2]
    ).map(lambda t: Gen(t[0], min(t[1], t[2]), max(t[1], t[2])))


def word_elements(max_len, lo=-2, hi=2):
    return st.lists(letters(4, lo, hi), min_size=1, max_size=max_len).map(
        lambda ls: multiply_all(ls)
    )


def multiply_all(ls):
    out = ctx_m.one()
    for g in ls:
        out = multiply(out, ctx_m.gen(g.i, g.j, g.r))
    return out


def small_vectors():
    return st.lists(letters(4, -2, -1), min_size=0, max_size=2).map(
        lambda ls: apply(multiply_all(ls) if ls else ctx_m.one(), vacuum(ctx_m))
    )


@settings(derandomize=True, deadline=None, max_examples=80)
@given(word_elements(2), word_elements(2), small_vectors())
def test_module_law(a, b, v):
    assert apply(multiply(a, b), v) == apply(a, apply(b, v))


@settings(derandomize=True, deadline=None, max_examples=80)
@given(letters(4, -2, 2), small_vectors())
def test_energy_grading(g, v):
    out = apply(ctx_m.gen(g.i, g.j, g.r), v)
    if not out.is_zero():
        assert out.energy() <= v.energy() - g.r
    if g.r > v.energy():
        assert out.is_zero()


@settings(derandomize=True, deadline=None, max_examples=80)
@given(word_elements(2), small_vectors())
def test_critical_substitution_commutes_with_apply(a, v):
    symbolic = apply(a, v, LevelPolicy.SYMBOLIC)
    kv = ctx_m.critical_k()
    substituted = VacuumVector(
        ctx_m,
        {
            w: c
            for w, c in ((w, c.substitute(kv)) for w, c in symbolic.terms.items())
            if not c.is_zero()
        },
    )
    assert substituted == apply(a, v, LevelPolicy.CRITICAL)
