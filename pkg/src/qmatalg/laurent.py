"""Laurent polynomials in q with arbitrary-precision integer coefficients.

This is the ground ring for everything else in the package.  Elements are
stored sparsely as {exponent: coefficient} with no zero coefficients kept,
so equality of dicts is equality in the ring.  Coefficients are Python ints
(they must be: coefficient growth in products of six or more algebra
generators already exceeds 64 bits).  Exponents are machine integers,
validated to |e| <= 2**31 - 1 on construction; desk-scale computations in
this package stay below a few hundred.

Text format: a signed sparse sum of monomials ``c*q^e``, printed with
exponents descending, e.g. ``q^2 - 2 + q^-2``.  ``parse_laurent`` and
``format_laurent`` round-trip bit-exactly.
"""

from __future__ import annotations

import re

EXPONENT_BOUND = 2**31 - 1


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class LaurentInt:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        d = dict(terms)
        for e, c in list(d.items()):
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if abs(e) > EXPONENT_BOUND:
                raise OverflowError(f"exponent {e} out of documented bound")
            if c == 0:
                del d[e]
        self.terms = d

    @staticmethod
    def _raw(d):
        obj = object.__new__(LaurentInt)
        obj.terms = d
        return obj

    @classmethod
    def from_int(cls, n):
        return cls._raw({0: n} if n else {})

    @classmethod
    def q_power(cls, e, coeff=1):
        if abs(e) > EXPONENT_BOUND:
            raise OverflowError(f"exponent {e} out of documented bound")
        return cls._raw({e: coeff} if coeff else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, LaurentInt):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __neg__(self):
        return LaurentInt._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentInt.from_int(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentInt.from_int(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return LaurentInt._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentInt._raw(out)

    __rmul__ = __mul__

    def bar(self):
        """The bar involution q -> q^-1."""
        return LaurentInt._raw({-e: c for e, c in self.terms.items()})

    def eval_q1(self):
        """Evaluate at q = 1 (an exact ring homomorphism to Z)."""
        return sum(self.terms.values())

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentInt({format_laurent(self)!r})"


_ZERO = LaurentInt._raw({})
ZERO = _ZERO
ONE = LaurentInt._raw({0: 1})
Q = LaurentInt._raw({1: 1})
QINV = LaurentInt._raw({-1: 1})


def lau_add(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a + b


def lau_mul(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a * b


def lau_bar(a: LaurentInt) -> LaurentInt:
    return a.bar()


def lau_eval_q1(a: LaurentInt) -> int:
    return a.eval_q1()


def lau_div_exact(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    """Exact division in Z[q, q^-1]; raises ExactDivisionError on remainder.

    Division proceeds by leading (highest-exponent) terms.  The loop is
    bounded below by the least possible quotient exponent, so a failed
    division terminates rather than running off to -infinity.
    """
    if not b:
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if not a:
        return _ZERO
    min_quot_exp = a.min_exp() - b.min_exp()
    eb, cb = b.max_exp(), b.terms[b.max_exp()]
    rem = dict(a.terms)
    quot = {}
    while rem:
        ea = max(rem)
        ca = rem[ea]
        e = ea - eb
        if e < min_quot_exp or ca % cb:
            raise ExactDivisionError("inexact Laurent division")
        c = ca // cb
        quot[e] = c
        for e2, c2 in b.terms.items():
            s = rem.get(e + e2, 0) - c * c2
            if s:
                rem[e + e2] = s
            else:
                rem.pop(e + e2, None)
    return LaurentInt._raw(quot)


def _format_monomial(coeff: int, exp: int) -> str:
    # sign handled by the caller; coeff > 0 here
    if exp == 0:
        return str(coeff)
    qpart = "q" if exp == 1 else f"q^{exp}"
    if coeff == 1:
        return qpart
    return f"{coeff}*{qpart}"


def format_laurent(a: LaurentInt) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e in sorted(a.terms, reverse=True):
        c = a.terms[e]
        mono = _format_monomial(abs(c), e)
        if not parts:
            parts.append(f"-{mono}" if c < 0 else mono)
        else:
            parts.append(f"- {mono}" if c < 0 else f"+ {mono}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*q(?:\^(?P<exp1>-?\d+))?)?
          | q(?:\^(?P<exp2>-?\d+))?
        )
    """,
    re.VERBOSE,
)
_SIGN_RE = re.compile(r"\s*([+-])")


def parse_laurent(text: str) -> LaurentInt:
    """Parse the ``c*q^e`` sum format produced by format_laurent."""
    pos = 0
    n = len(text)
    out = {}
    first = True
    while True:
        sign = 1
        m = _SIGN_RE.match(text, pos)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            pos = m.end()
        elif not first:
            break
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad Laurent polynomial syntax at {text[pos:]!r}")
        pos = m.end()
        first = False
        if m.group("coeff") is not None:
            c = int(m.group("coeff"))
            e = 0
            rest = text[m.start():m.end()]
            if "q" in rest:
                e = int(m.group("exp1")) if m.group("exp1") is not None else 1
        else:
            c = 1
            e = int(m.group("exp2")) if m.group("exp2") is not None else 1
        if abs(e) > EXPONENT_BOUND:
            raise OverflowError(f"exponent {e} out of documented bound")
        s = out.get(e, 0) + sign * c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
        if pos >= n:
            break
    if text[pos:].strip():
        raise ValueError(f"trailing junk in Laurent polynomial: {text[pos:]!r}")
    return LaurentInt._raw(out)
