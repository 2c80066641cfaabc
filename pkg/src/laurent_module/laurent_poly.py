##################################################
# Module A - Laurent Polynomial Core
# Python version: 3.13.x (project standard)
#
# Description:
# Exact sparse multivariate Laurent polynomials over the rationals.
# Every symmetric function in the project (s, sp, o, h, S*) is a
# LaurentPoly. The doubled alphabet x^± lives on the same N symbols
# as negative exponents.
#
# Functions:
# - add(a, b), mul(a, b), exact_div(a, b)
# - invert_vars(p, which), truncate(p, vars, cap)
# - LaurentPoly.to_json() / LaurentPoly.from_json()
# - LaurentPoly.to_text(names)
#
# Returns:
# LaurentPoly / RationalFn values (immutable)
#
# Requirements:
# - standard library only (fractions); sympy optional for to_sympy()
##################################################

from __future__ import annotations

import json
import logging
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


class ArityMismatch(ValueError):
    """Two polynomials over different alphabets were combined."""


class NotDivisible(ArithmeticError):
    """No exact quotient exists in the Laurent ring."""


class NegativeExponentInGrading(ValueError):
    """A graded variable carries a negative exponent."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


class LaurentPoly:
    """Sparse Laurent polynomial: a map exponent tuple -> nonzero Fraction.

    Values are immutable after construction. Equality is equality of the
    term maps (and of the arity).
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], object] | None = None):
        if arity < 0:
            raise ValueError(f"arity must be >= 0, got {arity}")
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity:
                raise ArityMismatch(f"monomial {exp} does not have arity {arity}")
            c = clean.get(exp, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.arity = arity
        self._terms = clean

    @classmethod
    def _raw(cls, arity: int, terms: dict[Exponent, Fraction]) -> LaurentPoly:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.arity = arity
        p._terms = terms
        return p

    # ---------------------------------------------------------------
    # Constructors
    # ---------------------------------------------------------------
    @classmethod
    def zero(cls, arity: int) -> LaurentPoly:
        return cls._raw(arity, {})

    @classmethod
    def one(cls, arity: int) -> LaurentPoly:
        return cls.constant(1, arity)

    @classmethod
    def constant(cls, value, arity: int) -> LaurentPoly:
        c = _as_fraction(value)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> LaurentPoly:
        exp = tuple(int(e) for e in exponents)
        c = _as_fraction(coeff)
        return cls._raw(len(exp), {exp: c} if c else {})

    @classmethod
    def variable(cls, index: int, arity: int, power: int = 1) -> LaurentPoly:
        if not 0 <= index < arity:
            raise IndexError(f"variable index {index} out of range for arity {arity}")
        exp = [0] * arity
        exp[index] = power
        return cls.monomial(exp)

    # ---------------------------------------------------------------
    # Inspection
    # ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def canonical_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order: lexicographically decreasing, x1 most significant."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self._terms)
        return exp, self._terms[exp]

    def degree_bounds(self, var: int) -> tuple[int, int]:
        """(lowest, highest) exponent of one variable over all terms."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        exps = [e[var] for e in self._terms]
        return min(exps), max(exps)

    def total_degree(self, variables: Iterable[int] | None = None) -> int:
        """Largest total exponent over `variables` (all of them by default)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        variables = range(self.arity) if variables is None else tuple(variables)
        return max(sum(exp[v] for v in variables) for exp in self._terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def coefficient_sum(self) -> Fraction:
        # value at x_1 = ... = x_N = 1 (the dimension, for a character)
        return sum(self._terms.values(), Fraction(0))

    # ---------------------------------------------------------------
    # Ring operations
    # ---------------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.arity != self.arity:
                raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.constant(other, self.arity)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return LaurentPoly._raw(self.arity, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, LaurentPoly):
            c = _as_fraction(other)
            if not c:
                return LaurentPoly.zero(self.arity)
            return LaurentPoly._raw(self.arity, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(exp, 0) + ca * cb
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return LaurentPoly._raw(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use invert_vars")
        result = LaurentPoly.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == LaurentPoly.constant(other, self.arity)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    # ---------------------------------------------------------------
    # Alphabet maps
    # ---------------------------------------------------------------
    def invert_vars(self, which: Iterable[int]) -> LaurentPoly:
        which = set(which)
        return LaurentPoly._raw(
            self.arity,
            {
                tuple(-e if k in which else e for k, e in enumerate(exp)): c
                for exp, c in self._terms.items()
            },
        )

    def permute(self, perm: Sequence[int]) -> LaurentPoly:
        """Send variable k to position perm[k]."""
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"{list(perm)} is not a permutation of range({self.arity})")
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * self.arity
            for k, e in enumerate(exp):
                new[perm[k]] = e
            terms[tuple(new)] = c
        return LaurentPoly._raw(self.arity, terms)

    def embed(self, positions: Sequence[int], arity: int) -> LaurentPoly:
        """Place variable k at index positions[k] of a larger alphabet."""
        if len(positions) != self.arity:
            raise ArityMismatch(f"{len(positions)} positions for arity {self.arity}")
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * arity
            for k, e in enumerate(exp):
                new[positions[k]] = e
            terms[tuple(new)] = c
        return LaurentPoly._raw(arity, terms)

    def substitute_monomials(self, images: Sequence[Sequence[int]], arity: int) -> LaurentPoly:
        """Replace variable k by the monomial with exponent vector images[k]."""
        if len(images) != self.arity:
            raise ArityMismatch(f"{len(images)} images for arity {self.arity}")
        result: dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            new = [0] * arity
            for k, e in enumerate(exp):
                if e:
                    for pos, v in enumerate(images[k]):
                        new[pos] += e * v
            key = tuple(new)
            s = result.get(key, 0) + c
            if s:
                result[key] = s
            else:
                result.pop(key, None)
        return LaurentPoly._raw(arity, result)

    def truncate(self, variables: Iterable[int], cap: int) -> LaurentPoly:
        variables = tuple(variables)
        kept = {}
        for exp, c in self._terms.items():
            graded = [exp[v] for v in variables]
            if any(e < 0 for e in graded):
                raise NegativeExponentInGrading(
                    f"monomial {exp} has a negative exponent on graded variables {variables}"
                )
            if sum(graded) <= cap:
                kept[exp] = c
        return LaurentPoly._raw(self.arity, kept)

    # ---------------------------------------------------------------
    # Rendering and serialization
    # ---------------------------------------------------------------
    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{k + 1}" for k in range(self.arity)]
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.canonical_terms():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            pieces.append(piece)
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.arity}, {self.to_text()!r})"

    def to_json_obj(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self.canonical_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> LaurentPoly:
        arity = int(obj["arity"])
        terms: dict[Exponent, Fraction] = {}
        for term in obj["terms"]:
            exp = tuple(int(e) for e in term["exp"])
            terms[exp] = terms.get(exp, Fraction(0)) + Fraction(int(term["num"]), int(term["den"]))
        return cls(arity, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))

    def to_sympy(self, symbols=None):
        import sympy

        if symbols is None:
            symbols = sympy.symbols(f"x1:{self.arity + 1}") if self.arity else ()
        expr = sympy.Integer(0)
        for exp, c in self._terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for sym, e in zip(symbols, exp):
                term *= sym**e
            expr += term
        return expr


# -------------------------------------------------------------------
# Functional API
# -------------------------------------------------------------------
def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def invert_vars(p: LaurentPoly, which: Iterable[int]) -> LaurentPoly:
    return p.invert_vars(which)


def truncate(p: LaurentPoly, variables: Iterable[int], cap: int) -> LaurentPoly:
    return p.truncate(variables, cap)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient q with q*b == a, or NotDivisible.

    Leading terms are eliminated in canonical order. Every term of a true
    quotient lies in the box ord_v(a)-ord_v(b) <= e_v <= deg_v(a)-deg_v(b),
    so a candidate outside that box proves there is no quotient.
    """
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.arity)

    low, high = [], []
    for v in range(a.arity):
        a_lo, a_hi = a.degree_bounds(v)
        b_lo, b_hi = b.degree_bounds(v)
        low.append(a_lo - b_lo)
        high.append(a_hi - b_hi)
        if low[-1] > high[-1]:
            raise NotDivisible(f"{a} is not divisible by {b} (degree in variable {v + 1})")

    lead_exp, lead_coeff = b.leading_term()
    b_terms = list(b.items())
    remainder = dict(a._terms)
    quotient: dict[Exponent, Fraction] = {}
    while remainder:
        exp = max(remainder)
        q_exp = tuple(x - y for x, y in zip(exp, lead_exp))
        if any(e < lo or e > hi for e, lo, hi in zip(q_exp, low, high)):
            raise NotDivisible(f"{a} is not divisible by {b}")
        q_coeff = remainder[exp] / lead_coeff
        quotient[q_exp] = q_coeff
        for eb, cb in b_terms:
            key = tuple(x + y for x, y in zip(q_exp, eb))
            s = remainder.get(key, 0) - q_coeff * cb
            if s:
                remainder[key] = s
            else:
                remainder.pop(key, None)
    return LaurentPoly._raw(a.arity, quotient)


class RationalFn:
    """num/den over the Laurent ring; den is reduced to 1 when the division is exact."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.arity)
        if num.arity != den.arity:
            raise ArityMismatch(f"arity {num.arity} vs {den.arity}")
        if den.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator")
        try:
            num, den = exact_div(num, den), LaurentPoly.one(num.arity)
        except NotDivisible:
            logger.debug("RationalFn kept unreduced (denominator has %d terms)", len(den))
        self.num = num
        self.den = den

    @property
    def arity(self) -> int:
        return self.num.arity

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return self.num

    def numerator_over(self, common_den: LaurentPoly) -> LaurentPoly:
        """Numerator after rewriting over common_den (which den must divide)."""
        return self.num * exact_div(common_den, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if self.is_polynomial():
            return self.num.to_text(names)
        return f"({self.num.to_text(names)}) / ({self.den.to_text(names)})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalFn({self.to_text()!r})"

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    x = LaurentPoly.variable(0, 1)
    x_inv = LaurentPoly.variable(0, 1, -1)
    print((x - x_inv) * (x + x_inv))
    print(exact_div(x**2 - x_inv * x_inv, x - x_inv))
    print((x + x_inv).to_json())
