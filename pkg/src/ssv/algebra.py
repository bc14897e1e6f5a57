"""Exact enveloping-algebra arithmetic for the even orthogonal affine algebra.

Basis letters are the skew generators F[i,j;r] = (E_ij - E_ji) t^r of
o(2n)[t,t^-1], always stored with i < j; the central element K lives in the
coefficient ring (:mod:`ssv.kpoly`), never inside words.  The commutator of
two letters is

    [F_ij[r], F_kl[s]] = d(k,j) F_il[r+s] - d(i,l) F_kj[r+s]
                       - d(k,i) F_jl[r+s] + d(j,l) F_ki[r+s]
                       + r d(r,-s) (d(k,j) d(i,l) - d(k,i) d(j,l)) K

with d the Kronecker delta.  Elements are kept in a canonical normal form:
every word sorted nondecreasing by the total letter order (r, i, j), like
words merged, zero coefficients dropped.  Canonical form is unique, so two
elements are equal iff their term maps coincide.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import kpoly
from .errors import InputError
from .kpoly import KPoly


class Gen(NamedTuple):
    """A normalized basis letter F[i,j;r] (i < j), ordered by (r, i, j)."""

    r: int
    i: int
    j: int

    def __str__(self) -> str:
        return f"F[{self.i},{self.j};{self.r}]"


Word = tuple  # tuple of Gen, used as a term key


class Context:
    """Fixes the algebra size: row/column indices run over 1..2n.

    Elements carry their context; mixing contexts is an input error.
    """

    __slots__ = ("n", "dim")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"n must be a positive integer, got {n!r}")
        self.n = n
        self.dim = 2 * n

    def __eq__(self, other) -> bool:
        return isinstance(other, Context) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("Context", self.n))

    def __repr__(self) -> str:
        return f"Context(n={self.n})"

    def critical_k(self) -> int:
        """The central charge at the critical level, K = -(2n - 2)."""
        return 2 - 2 * self.n

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.dim:
            raise InputError(f"index {i!r} out of range 1..{self.dim}")

    def gen(self, i: int, j: int, r: int) -> "Element":
        return make_generator(self, i, j, r)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {(): kpoly.ONE})

    def scalar(self, c) -> "Element":
        c = c if isinstance(c, KPoly) else kpoly.const(c)
        return Element(self, {(): c} if c else {})


def _require_same_context(a, b) -> None:
    if a.ctx.n != b.ctx.n:
        raise InputError(
            f"elements from different contexts (n={a.ctx.n} vs n={b.ctx.n})"
        )


class TermSum:
    """Shared linear structure: a finite map from words to KPoly coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict):
        self.ctx = ctx
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and other.ctx.n == self.ctx.n
            and other.terms == self.terms
        )

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _require_same_context(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return type(self)(self.ctx, out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)(self.ctx, {w: -c for w, c in self.terms.items()})

    def _scaled(self, c):
        c = c if isinstance(c, KPoly) else kpoly.const(c)
        if c.is_zero():
            return type(self)(self.ctx, {})
        return type(self)(self.ctx, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, KPoly)):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, KPoly)):
            return self._scaled(other)
        return NotImplemented

    def __str__(self) -> str:
        return format_terms(self.terms)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class Element(TermSum):
    """An enveloping-algebra element in canonical form.

    Construct through :func:`make_generator`, arithmetic, or
    :func:`element_from_items`; the constructor trusts its term map.
    """

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return super().__mul__(other)


def format_terms(terms: dict, suffix: str = "") -> str:
    """Render a canonical term map in the shared element grammar.

    Coefficient +1/-1 terms print bare factor strings; every other
    coefficient prints parenthesized, e.g. ``(-K - 2)*F[3,4;-1]``.  A term
    with an empty word prints as the bare parenthesized polynomial.
    """
    if not terms:
        return "0"
    chunks = []
    for word in sorted(terms):
        c = terms[word]
        factors = "".join(str(g) for g in word)
        if word and c == kpoly.ONE:
            chunks.append(("+", factors))
        elif word and c == kpoly.MINUS_ONE:
            chunks.append(("-", factors))
        elif word:
            chunks.append(("+", f"({c})*{factors}"))
        else:
            chunks.append(("+", f"({c})"))
    sign, body = chunks[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text + suffix


@lru_cache(maxsize=None)
def letter_bracket(a: Gen, b: Gen) -> tuple[tuple[tuple[int, Gen], ...], int]:
    """Structure constants of [a, b] for normalized letters.

    Returns (letter terms, k_coeff): the letter terms are (integer, Gen)
    pairs at mode a.r + b.r, and k_coeff multiplies the central K.
    """
    r, i, j = a
    s, k, l = b
    m = r + s
    raw = []
    if k == j:
        raw.append((1, i, l))
    if i == l:
        raw.append((-1, k, j))
    if k == i:
        raw.append((-1, j, l))
    if j == l:
        raw.append((1, k, i))
    acc: dict[Gen, int] = {}
    for c, x, y in raw:
        if x == y:
            continue
        if x > y:
            c, x, y = -c, y, x
        g = Gen(m, x, y)
        acc[g] = acc.get(g, 0) + c
    terms = tuple((c, g) for g, c in acc.items() if c)
    # for normalized pairs the central part survives only on identical pairs
    k_coeff = -r if (m == 0 and i == k and j == l) else 0
    return terms, k_coeff


def _find_descent(word: Word, descent: str, rng: random.Random | None) -> int | None:
    last = len(word) - 1
    if descent == "first":
        for p in range(last):
            if word[p] > word[p + 1]:
                return p
        return None
    if descent == "last":
        for p in range(last - 1, -1, -1):
            if word[p] > word[p + 1]:
                return p
        return None
    if descent == "random":
        spots = [p for p in range(last) if word[p] > word[p + 1]]
        if not spots:
            return None
        return spots[0] if rng is None else rng.choice(spots)
    raise ValueError(f"unknown descent strategy {descent!r}")


def normal_form(
    items: Iterable[tuple[Word, KPoly]],
    *,
    k_value: int | None = None,
    vacuum: bool = False,
    descent: str = "first",
    rng: random.Random | None = None,
) -> dict:
    """Rewrite raw (word, coefficient) items into the canonical term map.

    Each out-of-order adjacent pair a.b is replaced by b.a + [a,b]; every
    swap strictly lowers the inversion count at fixed length and bracket
    terms are strictly shorter, so the rewriting terminates.  With
    ``vacuum=True`` any word whose rightmost letter has mode >= 0 is dropped
    (it lies in the left ideal defining the vacuum module), and with
    ``k_value`` set, central contributions are evaluated at that charge
    instead of multiplying by K.

    The canonical result is independent of the descent strategy; the
    strategy knob exists so the confluence property can be exercised.
    """
    out: dict = {}
    stack = [(w, c) for w, c in items if not c.is_zero()]
    while stack:
        word, coeff = stack.pop()
        if vacuum and word and word[-1].r >= 0:
            continue
        pos = _find_descent(word, descent, rng)
        if pos is None:
            acc = out.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                out.pop(word, None)
            else:
                out[word] = acc
            continue
        a, b = word[pos], word[pos + 1]
        head, tail = word[:pos], word[pos + 2 :]
        stack.append((head + (b, a) + tail, coeff))
        letters, k_coeff = letter_bracket(a, b)
        for c, g in letters:
            stack.append((head + (g,) + tail, coeff.scale(c)))
        if k_coeff:
            if k_value is None:
                stack.append((head + tail, coeff.mul_k().scale(k_coeff)))
            else:
                stack.append((head + tail, coeff.scale(k_coeff * k_value)))
    return out


def normalize_letter(ctx: Context, i: int, j: int, r: int) -> tuple[int, Gen | None]:
    """Validate indices and fold skew symmetry: returns (sign, letter or None)."""
    ctx.check_index(i)
    ctx.check_index(j)
    if not isinstance(r, int):
        raise InputError(f"mode must be an integer, got {r!r}")
    if i == j:
        return 0, None
    if i > j:
        return -1, Gen(r, j, i)
    return 1, Gen(r, i, j)


def make_generator(ctx: Context, i: int, j: int, r: int) -> Element:
    """The single-letter element F[i,j;r]; F[j,i;r] = -F[i,j;r], F[i,i;r] = 0."""
    sign, g = normalize_letter(ctx, i, j, r)
    if g is None:
        return ctx.zero()
    return Element(ctx, {(g,): kpoly.const(sign)})


def element_from_items(ctx: Context, items: Iterable[tuple[Word, KPoly]]) -> Element:
    """Canonicalize raw (word, coefficient) items into an Element."""
    return Element(ctx, normal_form(items))


def word_element(ctx: Context, letters: Iterable[tuple[int, int, int]], coeff=1) -> Element:
    """Element for a literal product of (i, j, r) factors, then canonicalized."""
    c = coeff if isinstance(coeff, KPoly) else kpoly.const(coeff)
    word = []
    sign = 1
    for i, j, r in letters:
        s, g = normalize_letter(ctx, i, j, r)
        if g is None:
            return ctx.zero()
        sign *= s
        word.append(g)
    return element_from_items(ctx, [(tuple(word), c.scale(sign))])


def multiply(a: Element, b: Element) -> Element:
    """Product in the enveloping algebra: concatenate words, canonicalize."""
    _require_same_context(a, b)
    items = []
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            items.append((wa + wb, ca * cb))
    return Element(a.ctx, normal_form(items))


def canonicalize(x: Element) -> Element:
    """Re-run the normal form; idempotent on canonical input."""
    return Element(x.ctx, normal_form(x.terms.items()))


def bracket(a: Element, b: Element) -> Element:
    """Lie bracket, extended linearly over elements of degree <= 1.

    Scalar (empty word) terms bracket to zero since K is central.
    """
    _require_same_context(a, b)
    out: dict = {}

    def add(word: Word, c: KPoly) -> None:
        acc = out.get(word)
        acc = c if acc is None else acc + c
        if acc.is_zero():
            out.pop(word, None)
        else:
            out[word] = acc

    for wa, ca in a.terms.items():
        if not wa:
            continue
        if len(wa) > 1:
            raise InputError("bracket is defined for elements of degree <= 1")
        for wb, cb in b.terms.items():
            if not wb:
                continue
            if len(wb) > 1:
                raise InputError("bracket is defined for elements of degree <= 1")
            letters, k_coeff = letter_bracket(wa[0], wb[0])
            c = ca * cb
            for s, g in letters:
                add((g,), c.scale(s))
            if k_coeff:
                add((), c.mul_k().scale(k_coeff))
    return Element(a.ctx, out)
