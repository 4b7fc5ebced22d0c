"""Integer polynomials in one variable ``q`` with exact arithmetic."""

from __future__ import annotations

from typing import Iterable


class QPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, c: int) -> "QPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, int):
            return QPolynomial([other])
        if isinstance(other, QPolynomial):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        """Division by a polynomial with leading coefficient +-1."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return QPolynomial(), QPolynomial(rem)
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * y
        return QPolynomial(quot), QPolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def exact_div(self, other) -> "QPolynomial":
        quot, rem = divmod(self, other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse(self, degree: int) -> "QPolynomial":
        """``q**degree * self(1/q)``; requires ``degree >= self.degree``."""
        if degree < self.degree:
            raise ValueError(f"cannot reverse degree-{self.degree} polynomial in degree {degree}")
        c = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return QPolynomial(reversed(c))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


Q = QPolynomial.monomial(1)


def q_int(k: int) -> QPolynomial:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return QPolynomial([1] * k)


def q_factorial(k: int) -> QPolynomial:
    out = QPolynomial([1])
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out
