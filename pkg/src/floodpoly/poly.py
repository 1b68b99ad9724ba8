"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import re
from collections.abc import Iterable

from floodpoly.errors import PolynomialSyntaxError, ZeroPolynomial


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Coefficients are normalised so the last stored entry is nonzero; the
    zero polynomial stores an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.to_string()

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    eval_int = __call__

    def divide_by_x_plus_1(self) -> tuple[IntPolynomial, int]:
        """Synthetic division at -1: returns (quotient, remainder)."""
        cs = self.coeffs
        if not cs:
            return IntPolynomial(), 0
        q = [0] * (len(cs) - 1)
        carry = 0
        for k in range(len(cs) - 1, 0, -1):
            carry = cs[k] - carry
            q[k - 1] = carry
        return IntPolynomial(q), cs[0] - carry

    def multiplicity_x_plus_1(self) -> int:
        """Largest ``s`` with ``(x + 1)**s`` dividing this polynomial."""
        if self.is_zero():
            raise ZeroPolynomial("every power of (x+1) divides the zero polynomial")
        p, s = self, 0
        while True:
            q, r = p.divide_by_x_plus_1()
            if r != 0:
                return s
            p, s = q, s + 1

    def to_string(self) -> str:
        """Human form such as ``x^4 + 4x^3 + 2x^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Inverse of :meth:`to_string`; accepts ``term (+|- term)*``."""
        s = text.replace(" ", "").replace("\t", "")
        if not s:
            raise PolynomialSyntaxError("empty polynomial")
        pos = 0
        acc: dict[int, int] = {}
        first = True
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise PolynomialSyntaxError(f"cannot parse {text!r} at offset {pos}")
            sign, coef, star, xpart, exp = m.groups()
            if not first and not sign:
                raise PolynomialSyntaxError(f"missing operator in {text!r} at offset {pos}")
            if coef is None and xpart is None:
                raise PolynomialSyntaxError(f"empty term in {text!r} at offset {pos}")
            if star and (coef is None or xpart is None):
                raise PolynomialSyntaxError(f"dangling '*' in {text!r}")
            if exp is not None and xpart is None:
                raise PolynomialSyntaxError(f"exponent without x in {text!r}")
            c = int(coef) if coef is not None else 1
            if sign == "-":
                c = -c
            k = 0 if xpart is None else (int(exp) if exp is not None else 1)
            acc[k] = acc.get(k, 0) + c
            pos = m.end()
            first = False
        top = max(acc)
        return cls([acc.get(k, 0) for k in range(top + 1)])

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPolynomial:
        return cls(int(c) for c in obj["coeffs"])


_TERM = re.compile(r"([+-])?(\d+)?(\*)?(x)?(?:\^(\d+))?")


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot combine IntPolynomial with {type(p).__name__}")


X = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ZERO = IntPolynomial()
