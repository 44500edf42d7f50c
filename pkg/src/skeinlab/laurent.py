"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is stored as a mapping from exponent tuples (one integer per
variable, negative allowed) to nonzero integer coefficients.  Variables are
identified by name and kept in sorted order, so two polynomials in the same
ring always agree on the meaning of an exponent tuple.  All arithmetic is
exact; there is no floating point anywhere.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping


class ExactDivisionError(ArithmeticError):
    """Raised when divide_exact is asked for a quotient that does not exist."""


class LaurentPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, int] | None = None):
        variables = tuple(variables)
        if list(variables) != sorted(variables):
            raise ValueError(f"variables must be sorted: {variables}")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables: {variables}")
        self.variables = variables
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != len(variables):
                    raise ValueError(f"exponent {exp} does not match variables {variables}")
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "LaurentPoly":
        return cls(sorted(variables), {})

    @classmethod
    def constant(cls, c: int, variables: Iterable[str] = ()) -> "LaurentPoly":
        variables = sorted(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, power: int = 1, variables: Iterable[str] | None = None) -> "LaurentPoly":
        variables = sorted(variables) if variables is not None else [name]
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        exp = tuple(power if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def one(cls, variables: Iterable[str] = ()) -> "LaurentPoly":
        return cls.constant(1, variables)

    # -- ring housekeeping -------------------------------------------------

    def in_ring(self, variables: Iterable[str]) -> "LaurentPoly":
        """Reinterpret in a larger (or equal) variable set."""
        variables = tuple(sorted(variables))
        if variables == self.variables:
            return self
        if not set(self.variables) <= set(variables):
            raise ValueError(f"cannot narrow {self.variables} to {variables}")
        pos = [variables.index(v) for v in self.variables]
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = c
        return LaurentPoly(variables, terms)

    @staticmethod
    def _aligned(a: "LaurentPoly", b: "LaurentPoly"):
        if a.variables == b.variables:
            return a, b
        joint = sorted(set(a.variables) | set(b.variables))
        return a.in_ring(joint), b.in_ring(joint)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._aligned(self, other)
        return a.terms == b.terms

    def __hash__(self):
        # Hash in a variable-set-independent way: drop zero-only variables.
        core = tuple(sorted(self.trim().terms.items()))
        return hash((self.trim().variables, core))

    def trim(self) -> "LaurentPoly":
        """Drop variables that appear with exponent 0 in every term."""
        if not self.terms:
            return LaurentPoly((), {})
        used = [i for i in range(len(self.variables)) if any(e[i] for e in self.terms)]
        if len(used) == len(self.variables):
            return self
        variables = tuple(self.variables[i] for i in used)
        return LaurentPoly(variables, {tuple(e[i] for i in used): c for e, c in self.terms.items()})

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(self, other)
        terms = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return LaurentPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            inv = self.monomial_inverse()
            return inv ** (-n)
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def monomial_inverse(self) -> "LaurentPoly":
        if not self.is_unit_monomial():
            raise ExactDivisionError(f"not an invertible monomial: {self}")
        (exp, coeff), = self.terms.items()
        return LaurentPoly(self.variables, {tuple(-e for e in exp): coeff})

    # -- division ----------------------------------------------------------

    def _shift(self) -> tuple["LaurentPoly", tuple]:
        """Multiply by a monomial so all exponents are >= 0; return the shift."""
        if not self.terms:
            return self, (0,) * len(self.variables)
        lows = tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))
        terms = {tuple(x - l for x, l in zip(e, lows)): c for e, c in self.terms.items()}
        return LaurentPoly(self.variables, terms), lows

    def divide_exact(self, divisor: "LaurentPoly | int") -> "LaurentPoly":
        """Exact quotient self / divisor; raises ExactDivisionError otherwise."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly.zero(self.variables)
        a, b = self._aligned(self, divisor)
        na, sa = a._shift()
        nb, sb = b._shift()
        nvars = len(a.variables)
        quo: dict[tuple, int] = {}
        rem = dict(na.terms)
        ltb = max(nb.terms)  # lex-leading exponent of divisor
        cb = nb.terms[ltb]
        while rem:
            lt = max(rem)
            c = rem[lt]
            qe = tuple(x - y for x, y in zip(lt, ltb))
            if any(e < 0 for e in qe) or c % cb:
                raise ExactDivisionError(f"{self} is not divisible by {divisor}")
            qc = c // cb
            quo[qe] = qc
            for eb, coeff in nb.terms.items():
                e = tuple(x + y for x, y in zip(qe, eb))
                rem[e] = rem.get(e, 0) - qc * coeff
                if not rem[e]:
                    del rem[e]
        shift = tuple(x - y for x, y in zip(sa, sb))
        return LaurentPoly(a.variables, {tuple(x + s for x, s in zip(e, shift)): c for e, c in quo.items()})

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except ExactDivisionError:
            return False

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, images: Mapping[str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Replace variables by Laurent polynomials (units required for negative powers)."""
        fixed = {}
        for name, img in images.items():
            if name not in self.variables:
                raise ValueError(f"{name!r} is not a variable of {self.variables}")
            fixed[name] = LaurentPoly.constant(img) if isinstance(img, int) else img
        out_vars = sorted(
            set(v for v in self.variables if v not in fixed)
            | set(v for img in fixed.values() for v in img.variables)
        )
        result = LaurentPoly.zero(out_vars)
        for exp, c in self.terms.items():
            term = LaurentPoly.constant(c, out_vars)
            for name, e in zip(self.variables, exp):
                if not e:
                    continue
                base = fixed.get(name, LaurentPoly.var(name))
                term = term * base ** e
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"no value given for {missing}")
        total = Fraction(0)
        for exp, c in self.terms.items():
            val = Fraction(c)
            for name, e in zip(self.variables, exp):
                val *= Fraction(point[name]) ** e
            total += val
        return total

    # -- serialization -----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            monos = [f"{v}^{e}" for v, e in zip(self.variables, exp)]
            parts.append("*".join([str(c)] + monos))
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"e": list(e), "c": c} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    _TERM_RE = re.compile(r"^(?P<coeff>[+-]?\d+)(?P<monos>(?:\*[A-Za-z_][A-Za-z_0-9]*\^-?\d+)*)$")
    _MONO_RE = re.compile(r"\*([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+)")

    @classmethod
    def from_text(cls, text: str, variables: Iterable[str] | None = None) -> "LaurentPoly":
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        chunks = [t.strip() for t in text.split("+")]
        parsed = []
        names = set(variables or ())
        for chunk in chunks:
            m = cls._TERM_RE.match(chunk.replace(" ", ""))
            if not m:
                raise ValueError(f"malformed polynomial term: {chunk!r}")
            coeff = int(m.group("coeff"))
            mono = {}
            for name, e in cls._MONO_RE.findall(m.group("monos")):
                if name in mono:
                    raise ValueError(f"repeated variable {name!r} in term {chunk!r}")
                mono[name] = int(e)
            names.update(mono)
            parsed.append((coeff, mono))
        names = sorted(names)
        terms: dict[tuple, int] = {}
        for coeff, mono in parsed:
            exp = tuple(mono.get(v, 0) for v in names)
            terms[exp] = terms.get(exp, 0) + coeff
        return cls(names, terms)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        names = list(data["vars"])
        order = sorted(range(len(names)), key=lambda i: names[i])
        variables = [names[i] for i in order]
        terms: dict[tuple, int] = {}
        for item in data["terms"]:
            e = list(item["e"])
            if len(e) != len(names):
                raise ValueError(f"exponent {e} does not match vars {names}")
            exp = tuple(e[i] for i in order)
            terms[exp] = terms.get(exp, 0) + int(item["c"])
        return cls(variables, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


class RationalPoly:
    """A quotient of Laurent polynomials kept as an explicit pair.

    No GCD cancellation is performed; ``reduce`` extracts an exact quotient
    when (and only when) the denominator divides the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | int = 1):
        if isinstance(den, int):
            den = LaurentPoly.constant(den, num.variables)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value) -> "RationalPoly":
        if isinstance(value, RationalPoly):
            return value
        if isinstance(value, int):
            value = LaurentPoly.constant(value)
        return cls(value)

    def __add__(self, other):
        other = RationalPoly.of(other)
        if self.den == other.den:
            return RationalPoly(self.num + other.num, self.den)
        return RationalPoly(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalPoly.of(other))

    def __rsub__(self, other):
        return RationalPoly.of(other) - self

    def __mul__(self, other):
        other = RationalPoly.of(other)
        return RationalPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalPoly.of(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalPoly(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, (RationalPoly, LaurentPoly, int)):
            return NotImplemented
        other = RationalPoly.of(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(self.reduce())

    def reduce(self) -> LaurentPoly:
        return self.num.divide_exact(self.den)

    def __repr__(self):
        return f"RationalPoly({self.num.to_text()!r}, {self.den.to_text()!r})"


def substitute_rational(poly: LaurentPoly, images: Mapping[str, "RationalPoly | LaurentPoly | int"]) -> RationalPoly:
    """Substitute rational functions for variables (negative powers invert the image).

    Every variable of ``poly`` must receive an image; the result is an
    uncancelled quotient — call ``reduce`` when the value is known polynomial.
    """
    fixed = {}
    for name in poly.variables:
        if name not in images:
            raise ValueError(f"no image given for variable {name!r}")
        fixed[name] = RationalPoly.of(images[name])
    total = RationalPoly.of(0)
    for exp, c in poly.terms.items():
        term = RationalPoly.of(c)
        for name, e in zip(poly.variables, exp):
            img = fixed[name]
            if e < 0:
                img = RationalPoly(img.den, img.num)
                e = -e
            for _ in range(e):
                term = term * img
        total = total + term
    return total
