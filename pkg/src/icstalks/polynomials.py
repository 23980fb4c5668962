"""Exact sparse Laurent polynomial arithmetic in one and two variables.

Coefficients are ``fractions.Fraction`` throughout; no floating point is used
anywhere.  Two immutable types are provided:

  ``LaurentPolynomial``    one variable q, terms stored as {exponent: coeff}
  ``BiLaurentPolynomial``  two variables K, L; the K-exponent may be a
                           half-integer, so it is stored *doubled* (an int)
                           and the terms are {(k_twice, l): coeff}

Zero coefficients are never stored; the zero polynomial has an empty term
map.  Quantities that must end up with integer K-exponents go through
``assert_integral`` at output boundaries instead of assuming integrality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NonIntegralExponent

Coeff = Fraction


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class LaurentPolynomial:
    """A Laurent polynomial in a single variable (rendered as q by default)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        data = {}
        if terms:
            for exp, c in terms.items():
                c = _coeff(c)
                if c != 0:
                    data[int(exp)] = c
        self._terms = data

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def term(cls, exponent: int, coeff=1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def items(self):
        return self._terms.items()

    def support(self) -> list[int]:
        return sorted(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not supported")
        out = LaurentPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPolynomial":
        """The involution q -> q^{-1}."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def substitute(self, image: "BiLaurentPolynomial") -> "BiLaurentPolynomial":
        """Substitute a two-variable monomial c*K^a*L^b for the variable.

        ``image`` must consist of a single term with nonzero coefficient; the
        K-exponent may be a half-integer.  q^j maps to c^j K^{aj} L^{bj},
        exactly.
        """
        if len(image._terms) != 1:
            raise ValueError("substitution image must be a single monomial")
        ((kt, l), c) = next(iter(image._terms.items()))
        if c == 0:
            raise ValueError("substitution image must have a nonzero coefficient")
        out: dict[tuple[int, int], Fraction] = {}
        for e, coeff in self._terms.items():
            key = (kt * e, l * e)
            out[key] = out.get(key, Fraction(0)) + coeff * c**e
        return BiLaurentPolynomial(out)

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def to_text(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                body = _format_coeff(abs(c))
            else:
                v = var if e == 1 else f"{var}^{e}"
                body = v if abs(c) == 1 else f"{_format_coeff(abs(c))}*{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_obj(self, var: str = "q") -> list[dict]:
        return [
            {var: e, "c": _format_coeff(self._terms[e])} for e in sorted(self._terms)
        ]

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()})"


class BiLaurentPolynomial:
    """A Laurent polynomial in K and L with half-integer K-exponents allowed.

    Keys of the term map are ``(k_twice, l)`` where ``k_twice`` is twice the
    K-exponent.  A polynomial is *integral* when every stored ``k_twice`` is
    even.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        data = {}
        if terms:
            for (kt, l), c in terms.items():
                c = _coeff(c)
                if c != 0:
                    data[(int(kt), int(l))] = c
        self._terms = data

    @classmethod
    def zero(cls) -> "BiLaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BiLaurentPolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, k_twice: int, l: int, coeff=1) -> "BiLaurentPolynomial":
        """The monomial coeff * K^(k_twice/2) * L^l."""
        return cls({(k_twice, l): coeff})

    def coefficient(self, k_twice: int, l: int) -> Fraction:
        return self._terms.get((k_twice, l), Fraction(0))

    def items(self):
        return self._terms.items()

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiLaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BiLaurentPolynomial({(0, 0): other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "BiLaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            other = BiLaurentPolynomial({(0, 0): other})
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiLaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "BiLaurentPolynomial":
        return BiLaurentPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiLaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            other = BiLaurentPolynomial({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "BiLaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            return BiLaurentPolynomial(
                {k: c * other for k, c in self._terms.items()}
            )
        out: dict[tuple[int, int], Fraction] = {}
        for (k1, l1), c1 in self._terms.items():
            for (k2, l2), c2 in other._terms.items():
                key = (k1 + k2, l1 + l2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiLaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiLaurentPolynomial":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not supported")
        out = BiLaurentPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    @property
    def is_integral(self) -> bool:
        return all(kt % 2 == 0 for (kt, _l) in self._terms)

    def assert_integral(self) -> "BiLaurentPolynomial":
        if not self.is_integral:
            bad = sorted(k for k in self._terms if k[0] % 2 != 0)
            raise NonIntegralExponent(f"half-integer K-exponents present: {bad}")
        return self

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def chi_y(self) -> LaurentPolynomial:
        """Specialize K = (-y)^{-1}, L = -1; requires integral K-exponents.

        c*K^k*L^l maps to c*(-1)^{k+l} y^{-k}.
        """
        self.assert_integral()
        out: dict[int, Fraction] = {}
        for (kt, l), c in self._terms.items():
            k = kt // 2
            e = -k
            sign = -1 if (k + l) % 2 else 1
            out[e] = out.get(e, Fraction(0)) + sign * c
        return LaurentPolynomial(out)

    @staticmethod
    def _format_exponent(var: str, kt: int) -> str:
        if kt == 2:
            return var
        if kt % 2 == 0:
            return f"{var}^{kt // 2}"
        return f"{var}^({kt}/2)"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (kt, l) in sorted(self._terms):
            c = self._terms[(kt, l)]
            factors = []
            if kt != 0:
                factors.append(self._format_exponent("K", kt))
            if l != 0:
                factors.append("L" if l == 1 else f"L^{l}")
            if not factors:
                body = _format_coeff(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{_format_coeff(abs(c))}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_obj(self) -> list[dict]:
        out = []
        for (kt, l) in sorted(self._terms):
            k = kt // 2 if kt % 2 == 0 else kt / 2
            out.append({"k": k, "l": l, "c": _format_coeff(self._terms[(kt, l)])})
        return out

    def __repr__(self):
        return f"BiLaurentPolynomial({self.to_text()})"


# Common building blocks.

Q = LaurentPolynomial.term(1)          # the variable q
Q_SQUARED_MINUS_ONE = LaurentPolynomial({2: 1, 0: -1})
K_INV = BiLaurentPolynomial.monomial(-2, 0)   # K^{-1}
L_VAR = BiLaurentPolynomial.monomial(0, 1)    # L
L_INV = BiLaurentPolynomial.monomial(0, -1)   # L^{-1}
K_INV_PLUS_L_INV = K_INV + L_INV
# q -> L*K^{-1/2}, the substitution used by every stalk-to-deRham conversion.
L_K_INV_HALF = BiLaurentPolynomial.monomial(-1, 1)
# q -> L^{-1}*K^{1/2}, its mirror image.
L_INV_K_HALF = BiLaurentPolynomial.monomial(1, -1)


def poly_from_pairs(pairs: Iterable[tuple[int, object]]) -> LaurentPolynomial:
    """Build a one-variable polynomial from (exponent, coefficient) pairs."""
    out: dict[int, Fraction] = {}
    for e, c in pairs:
        out[e] = out.get(e, Fraction(0)) + _coeff(c)
    return LaurentPolynomial(out)


def bipoly_from_triples(
    triples: Iterable[tuple[int, int, object]]
) -> BiLaurentPolynomial:
    """Build a two-variable polynomial from (k_twice, l, coefficient) triples."""
    out: dict[tuple[int, int], Fraction] = {}
    for kt, l, c in triples:
        key = (kt, l)
        out[key] = out.get(key, Fraction(0)) + _coeff(c)
    return BiLaurentPolynomial(out)
