"""Exact multivariate Laurent polynomials with rational coefficients.

Used for both gl characters (variables x1..xn) and AI characters (variables
y1, y3, ..., y_{2m-1}).  Coefficients are ``fractions.Fraction``; zero
coefficients are never stored.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

from aicrystal.errors import NonIntegralCharacterError

Exponents = tuple[int, ...]


def _term_key(exps: Exponents) -> tuple:
    # higher variables by absolute degree then sign (0, 1, -1, 2, -2, ...),
    # the leading variable by descending exponent
    if not exps:
        return ()
    key: list[int] = []
    for e in reversed(exps[1:]):
        key.extend((abs(e), -e))
    key.append(-exps[0])
    return tuple(key)


class LaurentPolynomial:
    __slots__ = ("variables", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[Exponents, Fraction | int] | None = None,
    ) -> None:
        self.variables: tuple[str, ...] = tuple(variables)
        cleaned: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            value = Fraction(coeff)
            if value:
                cleaned[exps] = cleaned.get(exps, Fraction(0)) + value
        self._terms = {e: c for e, c in cleaned.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> LaurentPolynomial:
        return cls(variables)

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exps: Exponents, coeff: Fraction | int = 1
    ) -> LaurentPolynomial:
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def total(
        cls, variables: Sequence[str], polys: Iterable[LaurentPolynomial]
    ) -> LaurentPolynomial:
        acc: dict[Exponents, Fraction] = {}
        for poly in polys:
            poly._check_ring(variables)
            for exps, coeff in poly._terms.items():
                acc[exps] = acc.get(exps, Fraction(0)) + coeff
        return cls(variables, acc)

    # -- access ---------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        """Terms in display order."""
        return {e: self._terms[e] for e in sorted(self._terms, key=_term_key)}

    def coefficient(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def integer_terms(self) -> dict[Exponents, int]:
        """Checked integer view of the coefficients."""
        if not self.is_integral():
            raise NonIntegralCharacterError(f"fractional coefficients in {self.to_text()}")
        return {e: int(c) for e, c in self.terms.items()}

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, variables: Sequence[str]) -> None:
        if tuple(variables) != self.variables:
            raise ValueError(f"variables differ: {self.variables} vs {tuple(variables)}")

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        other._check_ring(self.variables)
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + coeff
        return LaurentPolynomial(self.variables, acc)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial | Fraction | int) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            scale = Fraction(other)
            return LaurentPolynomial(self.variables, {e: c * scale for e, c in self._terms.items()})
        other._check_ring(self.variables)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc[exps] = acc.get(exps, Fraction(0)) + c1 * c2
        return LaurentPolynomial(self.variables, acc)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            constant = {tuple(0 for _ in self.variables): Fraction(other)} if other else {}
            return self._terms == constant
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- rendering ------------------------------------------------------------

    def _monomial_text(self, exps: Exponents) -> str:
        factors = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def to_text(self) -> str:
        """Render as e.g. ``y1 + 1 + y1^-1``; ``0`` for the zero polynomial."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.terms.items():
            mono = self._monomial_text(exps)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(pieces)

    def to_payload(self) -> dict[str, Any]:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(exps), "coefficient": str(coeff)}
                for exps, coeff in self.terms.items()
            ],
        }

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()!r})"
