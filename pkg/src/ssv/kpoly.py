"""Coefficient ring: polynomials in the central charge K over the integers.

All arithmetic is exact; coefficients are arbitrary-precision Python ints.
The zero polynomial is the empty coefficient map and no zero coefficient is
ever stored, so equality of maps is equality in the ring.
"""

from __future__ import annotations

from .errors import ConsistencyError


class KPoly:
    """Immutable polynomial in K with integer coefficients.

    ``coeffs`` maps a nonnegative exponent of K to its (nonzero) integer
    coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        cleaned: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative K-exponent {e}")
                if c:
                    cleaned[e] = c
        self.coeffs = cleaned

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree in K; the zero polynomial has degree -1."""
        return max(self.coeffs, default=-1)

    def constant_value(self) -> int:
        """The value of a constant polynomial (degree <= 0)."""
        if self.degree() > 0:
            raise ValueError(f"not a constant: {self}")
        return self.coeffs.get(0, 0)

    def __add__(self, other: "KPoly") -> "KPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = KPoly.__new__(KPoly)
        res.coeffs = out
        return res

    def __sub__(self, other: "KPoly") -> "KPoly":
        return self + (-other)

    def __neg__(self) -> "KPoly":
        res = KPoly.__new__(KPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, KPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = KPoly.__new__(KPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def scale(self, c: int) -> "KPoly":
        if c == 0:
            return ZERO
        if c == 1:
            return self
        res = KPoly.__new__(KPoly)
        res.coeffs = {e: c * v for e, v in self.coeffs.items()}
        return res

    def mul_k(self) -> "KPoly":
        """Multiply by K (shift every exponent up by one)."""
        res = KPoly.__new__(KPoly)
        res.coeffs = {e + 1: c for e, c in self.coeffs.items()}
        return res

    def substitute(self, k_value: int) -> "KPoly":
        """Evaluate K at an integer; the result is a constant polynomial."""
        total = 0
        for e, c in self.coeffs.items():
            total += c * k_value**e
        return const(total)

    def div_exact(self, d: int) -> "KPoly":
        """Divide every coefficient by ``d``, insisting on exact divisibility."""
        if d == 0:
            raise ZeroDivisionError("division by zero")
        out: dict[int, int] = {}
        for e, c in self.coeffs.items():
            q, rem = divmod(c, d)
            if rem:
                raise ConsistencyError(f"coefficient {c} of K^{e} not divisible by {d}")
            out[e] = q
        res = KPoly.__new__(KPoly)
        res.coeffs = out
        return res

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if isinstance(other, KPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "K" if e == 1 else f"K^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"KPoly({self})"


def const(c: int) -> KPoly:
    if c == 0:
        return ZERO
    if c == 1:
        return ONE
    if c == -1:
        return MINUS_ONE
    res = KPoly.__new__(KPoly)
    res.coeffs = {0: c}
    return res


ZERO = KPoly()
ONE = KPoly({0: 1})
MINUS_ONE = KPoly({0: -1})
K = KPoly({1: 1})
