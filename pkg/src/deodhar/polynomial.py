"""Integer polynomials in ``q``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections.abc import Iterable


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPolynomial:
    """
    Dense integer coefficients, index = exponent of ``q``.

    >>> p = QPolynomial((1, 1)) + QPolynomial.monomial(2, 2)
    >>> str(p), p.degree, p[1]
    ('1 + q + 2q^2', 2, 1)
    """
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> QPolynomial:
        if not counts:
            return cls()
        top = max(counts)
        return cls(tuple(counts.get(k, 0) for k in range(top + 1)))

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else -math.inf

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __add__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return QPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                 for i in range(n)))

    def __neg__(self) -> QPolynomial:
        return QPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return self + (-other)

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            return QPolynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        return sum(c * q ** k for k, c in enumerate(self.coefficients))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else "q" if k == 1 else f"q^{k}"
            if k == 0:
                body = str(abs(c))
            else:
                body = (str(abs(c)) if abs(c) != 1 else "") + mono
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    @classmethod
    def parse(cls, text: str) -> QPolynomial:
        """Inverse of ``str``: ``"1 + q + 2q^2"``."""
        text = text.replace(" ", "").replace("-", "+-")
        counts: dict[int, int] = {}
        for term in filter(None, text.split("+")):
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("-")
            if "q" in term:
                coef, _, power = term.partition("q")
                k = int(power[1:]) if power.startswith("^") else 1
                c = int(coef) if coef else 1
            else:
                k, c = 0, int(term)
            counts[k] = counts.get(k, 0) + sign * c
        return cls.from_counts(counts)


ONE = QPolynomial((1,))
ZERO = QPolynomial()
