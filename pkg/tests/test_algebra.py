import pytest
from hypothesis import given, settings, strategies as st

from ssv import Context, InputError, bracket, canonicalize, multiply
from ssv.algebra import Element, Gen, normal_form, word_element
from ssv.kpoly import K, ONE, const


def F(ctx, i, j, r):
    return ctx.gen(i, j, r)


def letter(ctx, g):
    return Element(ctx, {(g,): ONE})


# ---------------------------------------------------------------------------
# construction and normalization


def test_make_generator_normalized(ctx2):
    e = F(ctx2, 1, 2, -1)
    assert e.terms == {(Gen(-1, 1, 2),): ONE}


def test_make_generator_skew(ctx2):
    assert F(ctx2, 2, 1, -1) == -F(ctx2, 1, 2, -1)


def test_make_generator_diagonal_is_zero(ctx2):
    assert F(ctx2, 3, 3, 0).is_zero()


@pytest.mark.parametrize("i,j", [(0, 1), (1, 5), (-1, 2), (1, 0)])
def test_make_generator_index_range(ctx2, i, j):
    with pytest.raises(InputError):
        F(ctx2, i, j, 0)


def test_context_requires_positive_n():
    with pytest.raises(InputError):
        Context(0)
    with pytest.raises(InputError):
        Context(-3)


def test_context_mismatch_is_input_error(ctx2, ctx3):
    with pytest.raises(InputError):
        multiply(F(ctx2, 1, 2, 0), F(ctx3, 1, 2, 0))


# ---------------------------------------------------------------------------
# bracket: delta evaluation of the structure constants


def test_bracket_shared_index(ctx2):
    assert bracket(F(ctx2, 1, 2, 0), F(ctx2, 2, 3, 0)) == F(ctx2, 1, 3, 0)


def test_bracket_same_pair_central(ctx2):
    got = bracket(F(ctx2, 1, 2, 1), F(ctx2, 1, 2, -1))
    assert got == ctx2.scalar(-1 * K)
    assert str(got) == "(-K)"


def test_bracket_disjoint_pairs_vanishes(ctx3):
    assert bracket(F(ctx3, 1, 2, 0), F(ctx3, 3, 4, 5)).is_zero()


def test_bracket_no_central_term_off_diagonal_modes(ctx2):
    # central part needs r = -s; here r + s = -1
    got = bracket(F(ctx2, 1, 2, 0), F(ctx2, 1, 2, -1))
    assert got.is_zero()


def test_bracket_rejects_higher_degree(ctx2):
    quad = multiply(F(ctx2, 1, 3, -1), F(ctx2, 2, 4, -1))
    with pytest.raises(InputError):
        bracket(quad, F(ctx2, 1, 2, 0))


# ---------------------------------------------------------------------------
# multiply and canonicalize


def test_multiply_unit(ctx2):
    x = F(ctx2, 1, 2, -1) * F(ctx2, 3, 4, -2)
    assert multiply(ctx2.one(), x) == x
    assert multiply(x, ctx2.one()) == x


def test_multiply_commuting_factors_sorted(ctx2):
    got = multiply(F(ctx2, 1, 3, -1), F(ctx2, 2, 4, -1))
    assert got.terms == {(Gen(-1, 1, 3), Gen(-1, 2, 4)): ONE}


def test_multiply_swap_produces_central_term(ctx2):
    got = multiply(F(ctx2, 1, 2, 1), F(ctx2, 1, 2, -1))
    expected = word_element(ctx2, [(1, 2, -1), (1, 2, 1)]) + ctx2.scalar(-1 * K)
    assert got == expected


def test_canonicalize_reorders_commuting_letters(ctx2):
    got = word_element(ctx2, [(1, 2, 0), (1, 2, -1)])
    assert got.terms == {(Gen(-1, 1, 2), Gen(0, 1, 2)): ONE}


def test_canonicalize_idempotent(ctx2):
    x = F(ctx2, 1, 2, 1) * F(ctx2, 1, 3, -1) * F(ctx2, 2, 3, 0)
    assert canonicalize(x) == x


def test_canonicalize_commutator_word(ctx2):
    got = word_element(ctx2, [(2, 3, -1), (1, 2, -1)]) - word_element(ctx2, [(1, 2, -1), (2, 3, -1)])
    assert got == F(ctx2, 1, 3, -2) * -1
    # cross-check against the bracket
    assert got == bracket(F(ctx2, 2, 3, -1), F(ctx2, 1, 2, -1))


def test_scalar_coefficient_k_is_central(ctx2):
    x = F(ctx2, 1, 2, 1) * F(ctx2, 2, 3, -1)
    assert K * x == x * K


def test_proof_step_cancellation_all_pairs():
    # -F[2,i]F[2,j] + F[1,i]F[1,j] + F[2,j]F[2,i] - F[1,j]F[1,i] = 0 at mode -1
    for n in (2, 3):
        ctx = Context(n)
        for i in range(3, ctx.dim + 1):
            for j in range(i + 1, ctx.dim + 1):
                expr = (
                    -word_element(ctx, [(2, i, -1), (2, j, -1)])
                    + word_element(ctx, [(1, i, -1), (1, j, -1)])
                    + word_element(ctx, [(2, j, -1), (2, i, -1)])
                    - word_element(ctx, [(1, j, -1), (1, i, -1)])
                )
                assert expr.is_zero(), (n, i, j)


# ---------------------------------------------------------------------------
# property tests

ctx_h = Context(3)


def letters(dim, lo=-2, hi=2):
    return st.tuples(st.integers(lo, hi), st.integers(1, dim), st.integers(1, dim)).filter(
        lambda t: t[1] != t[2]
    ).map(lambda t: Gen(t[0], min(t[1], t[2]), max(t[1], t[2])))


@settings(derandomize=True, deadline=None, max_examples=100)
@given(letters(6), letters(6))
def test_bracket_antisymmetry(a, b):
    ea, eb = letter(ctx_h, a), letter(ctx_h, b)
    assert bracket(ea, eb) == -bracket(eb, ea)
    assert bracket(ea, eb) == multiply(ea, eb) - multiply(eb, ea)


@settings(derandomize=True, deadline=None, max_examples=100)
@given(letters(6), letters(6), letters(6))
def test_jacobi_identity(a, b, c):
    ea, eb, ec = (letter(ctx_h, g) for g in (a, b, c))
    total = (
        bracket(ea, bracket(eb, ec))
        + bracket(eb, bracket(ec, ea))
        + bracket(ec, bracket(ea, eb))
    )
    assert total.is_zero()


ctx_c = Context(2)


@settings(derandomize=True, deadline=None, max_examples=100)
@given(st.lists(letters(4), min_size=2, max_size=4))
def test_pbw_confluence(ls):
    factors = [letter(ctx_c, g) for g in ls]
    left = factors[0]
    for f in factors[1:]:
        left = multiply(left, f)
    right = factors[-1]
    for f in reversed(factors[:-1]):
        right = multiply(f, right)
    assert left == right
    items = [(tuple(ls), ONE)]
    assert normal_form(items) == normal_form(items, descent="last") == left.terms


@settings(derandomize=True, deadline=None, max_examples=60)
@given(st.lists(letters(4), min_size=1, max_size=3), st.integers(-20, 20))
def test_scaling_distributes(ls, c):
    x = word_element(ctx_c, [(g.i, g.j, g.r) for g in ls])
    assert c * x == x * c
    assert (c * x) + ((-c) * x) == ctx_c.zero()
    assert const(c) * x == c * x
