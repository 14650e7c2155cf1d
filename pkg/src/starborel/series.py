"""Exact truncated multivariate formal power series over the rationals.

A series lives over an ordered variable set whose first entry is the
distinguished "deformation" variable (t in the star-product plane, xi in the
Borel plane).  The truncation window caps the distinguished degree and the
joint total degree of the remaining variables separately; every operation is
coefficient-exact on the retained window.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    BindingError,
    ParseError,
    UnknownVariableError,
    VariableMismatchError,
    WindowOverflowError,
)

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce an int/str/Fraction into an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


@dataclass(frozen=True)
class VariableSet:
    """Ordered variable names; index 0 is the distinguished variable.

    ``dof`` counts canonical (q_j, p_j) pairs; it is 0 for generic z-variable
    sets used in the polynomial calculus.
    """

    names: tuple
    dof: int = 0

    def __post_init__(self):
        if not self.names:
            raise VariableMismatchError("variable set must contain at least one name")
        if len(set(self.names)) != len(self.names):
            raise VariableMismatchError(f"duplicate variable names in {self.names}")

    @property
    def distinguished(self) -> str:
        return self.names[0]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r} (have {self.names})") from None

    @classmethod
    def phase_space(cls, dof: int, deform: str = "t") -> "VariableSet":
        """Deformation variable followed by q_1..q_N, p_1..p_N (bare q, p if N=1)."""
        if dof < 1:
            raise VariableMismatchError("phase space needs dof >= 1")
        if dof == 1:
            return cls((deform, "q", "p"), dof=1)
        names = (deform,) + tuple(f"q{j}" for j in range(1, dof + 1)) \
            + tuple(f"p{j}" for j in range(1, dof + 1))
        return cls(names, dof=dof)

    def q_name(self, j: int) -> str:
        return "q" if self.dof == 1 else f"q{j}"

    def p_name(self, j: int) -> str:
        return "p" if self.dof == 1 else f"p{j}"

    def renamed_distinguished(self, name: str) -> "VariableSet":
        if name in self.names[1:]:
            raise VariableMismatchError(f"{name!r} already present in {self.names}")
        return VariableSet((name,) + self.names[1:], dof=self.dof)


@dataclass(frozen=True)
class Truncation:
    """Degree caps: deg_t for the distinguished variable, deg_xy for the rest."""

    deg_t: int
    deg_xy: int

    def __post_init__(self):
        if self.deg_t < 0 or self.deg_xy < 0:
            raise WindowOverflowError("truncation caps must be nonnegative")

    def admits(self, expo: tuple) -> bool:
        return expo[0] <= self.deg_t and sum(expo[1:]) <= self.deg_xy

    def meet(self, other: "Truncation") -> "Truncation":
        return Truncation(min(self.deg_t, other.deg_t), min(self.deg_xy, other.deg_xy))


class FormalSeries:
    """Sparse exact series: multi-index -> nonzero rational coefficient."""

    __slots__ = ("vars", "trunc", "terms")

    def __init__(self, vars: VariableSet, trunc: Truncation, terms=None):
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "trunc", trunc)
        clean = {}
        if terms:
            n = len(vars.names)
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != n:
                    raise VariableMismatchError(
                        f"multi-index {expo} has wrong arity for {vars.names}")
                c = as_rat(coeff)
                if c and trunc.admits(expo):
                    clean[expo] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars: VariableSet, trunc: Truncation) -> "FormalSeries":
        return cls(vars, trunc)

    @classmethod
    def constant(cls, vars: VariableSet, trunc: Truncation, value) -> "FormalSeries":
        zero_expo = (0,) * len(vars.names)
        return cls(vars, trunc, {zero_expo: as_rat(value)})

    @classmethod
    def one(cls, vars: VariableSet, trunc: Truncation) -> "FormalSeries":
        return cls.constant(vars, trunc, 1)

    @classmethod
    def variable(cls, vars: VariableSet, trunc: Truncation, name: str, power: int = 1):
        i = vars.index(name)
        expo = tuple(power if j == i else 0 for j in range(len(vars.names)))
        return cls(vars, trunc, {expo: Fraction(1)})

    @classmethod
    def from_string(cls, text: str, vars: VariableSet, trunc: Truncation) -> "FormalSeries":
        terms = {}
        for coeff, powers in parse_terms(text):
            expo = [0] * len(vars.names)
            for name, e in powers.items():
                expo[vars.index(name)] += e
            key = tuple(expo)
            if not trunc.admits(key):
                raise WindowOverflowError(
                    f"term {dict(powers)} exceeds window {trunc}")
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(vars, trunc, terms)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, expo: tuple) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero series."""
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def dist_coeff(self, n: int) -> "FormalSeries":
        """Coefficient of (distinguished variable)^n, as a series with 0 exponent there."""
        terms = {(0,) + e[1:]: c for e, c in self.terms.items() if e[0] == n}
        return FormalSeries(self.vars, self.trunc, terms)

    def dist_coeff_list(self, order=None) -> list:
        """Rational coefficients along the distinguished axis (univariate series only)."""
        if any(sum(e[1:]) for e in self.terms):
            raise VariableMismatchError("dist_coeff_list requires a univariate series")
        top = self.trunc.deg_t if order is None else order
        return [self.terms.get((n,) + (0,) * (len(self.vars.names) - 1), Fraction(0))
                for n in range(top + 1)]

    # -- ring operations --------------------------------------------------

    def _check_compatible(self, other: "FormalSeries"):
        if self.vars != other.vars:
            raise VariableMismatchError(
                f"variable sets differ: {self.vars.names} vs {other.vars.names}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalSeries.constant(self.vars, self.trunc, other)
        self._check_compatible(other)
        trunc = self.trunc.meet(other.trunc)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return FormalSeries(self.vars, trunc, terms)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries(self.vars, self.trunc, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalSeries.constant(self.vars, self.trunc, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return FormalSeries(self.vars, self.trunc,
                                {e: c * v for e, v in self.terms.items()})
        self._check_compatible(other)
        trunc = self.trunc.meet(other.trunc)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if trunc.admits(e):
                    terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return FormalSeries(self.vars, trunc, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def pow(self, n: int) -> "FormalSeries":
        if n < 0:
            raise ValueError("negative powers not supported")
        result = FormalSeries.one(self.vars, self.trunc)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        """Coefficient-wise equality on the common truncation window."""
        if not isinstance(other, FormalSeries):
            return NotImplemented
        if self.vars != other.vars:
            return False
        window = self.trunc.meet(other.trunc)
        for e in set(self.terms) | set(other.terms):
            if window.admits(e) and self.coeff(e) != other.coeff(e):
                return False
        return True

    def __hash__(self):
        raise TypeError("FormalSeries is not hashable")

    # -- calculus ---------------------------------------------------------

    def diff(self, name: str, order: int = 1, shrink_window: bool = True):
        """Exact termwise partial derivative of the given order."""
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < order:
                continue
            fall = Fraction(factorial(k), factorial(k - order))
            terms[e[:i] + (k - order,) + e[i + 1:]] = c * fall
        trunc = self.trunc
        if shrink_window and order:
            if i == 0:
                trunc = Truncation(max(self.trunc.deg_t - order, 0), self.trunc.deg_xy)
            else:
                trunc = Truncation(self.trunc.deg_t, max(self.trunc.deg_xy - order, 0))
        return FormalSeries(self.vars, trunc, terms)

    def antiderivative(self, name: str) -> "FormalSeries":
        """Exact antiderivative vanishing at ``name`` = 0."""
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            key = e[:i] + (e[i] + 1,) + e[i + 1:]
            if not self.trunc.admits(key):
                raise WindowOverflowError(
                    f"antiderivative of {e} in {name} leaves the window {self.trunc}")
            terms[key] = c / (e[i] + 1)
        return FormalSeries(self.vars, self.trunc, terms)

    def integrate(self, name: str, upper: "FormalSeries" = None) -> "FormalSeries":
        """Integrate from 0; with ``upper`` given, substitute it for ``name``.

        The upper limit must be polynomial in the retained window; overflow is
        raised, never silently truncated.
        """
        prim = self.antiderivative(name)
        if upper is None:
            return prim
        return prim.substitute(name, upper, strict=True)

    def substitute(self, name: str, replacement: "FormalSeries", strict: bool = False):
        """Exact substitution of a polynomial series for one variable."""
        self.vars.index(name)
        replacement._check_compatible(self)
        i = self.vars.index(name)
        trunc = self.trunc.meet(replacement.trunc)
        powers = {0: FormalSeries.one(self.vars, trunc)}

        def power(k):
            if k not in powers:
                powers[k] = power(k - 1)._mul_checked(replacement, trunc, strict)
            return powers[k]

        out = FormalSeries.zero(self.vars, trunc)
        by_exp = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            by_exp.setdefault(e[i], {})[rest] = c
        for k, part in sorted(by_exp.items()):
            out = out + FormalSeries(self.vars, trunc, part)._mul_checked(power(k), trunc, strict)
        return out

    def _mul_checked(self, other, trunc, strict):
        if not strict:
            return self * other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if not trunc.admits(e):
                    raise WindowOverflowError(
                        f"product multi-index {e} exceeds window {trunc}")
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return FormalSeries(self.vars, trunc, terms)

    def evaluate_partial(self, bindings: dict) -> "FormalSeries":
        """Substitute exact rationals for non-distinguished variables."""
        if not bindings:
            return self
        if self.vars.distinguished in bindings:
            raise BindingError("cannot bind the distinguished variable")
        idx = {self.vars.index(k): as_rat(v) for k, v in bindings.items()}
        terms = {}
        for e, c in self.terms.items():
            val = c
            key = list(e)
            for i, v in idx.items():
                val *= v ** e[i]
                key[i] = 0
            key = tuple(key)
            terms[key] = terms.get(key, Fraction(0)) + val
        return FormalSeries(self.vars, self.trunc, terms)

    # -- shape changes ----------------------------------------------------

    def truncate(self, trunc: Truncation) -> "FormalSeries":
        return FormalSeries(self.vars, trunc, self.terms)

    def rename_distinguished(self, name: str) -> "FormalSeries":
        return FormalSeries(self.vars.renamed_distinguished(name), self.trunc, self.terms)

    def embed(self, vars: VariableSet, trunc: Truncation) -> "FormalSeries":
        """Re-home into a larger variable set (old variables must all be present)."""
        pos = [vars.index(n) for n in self.vars.names]
        width = len(vars.names)
        terms = {}
        for e, c in self.terms.items():
            key = [0] * width
            for p, k in zip(pos, e):
                key[p] = k
            terms[tuple(key)] = c
        return FormalSeries(vars, trunc, terms)

    def drop_vars(self, names) -> "FormalSeries":
        """Remove variables that no term mentions."""
        drop = {self.vars.index(n) for n in names}
        if 0 in drop:
            raise BindingError("cannot drop the distinguished variable")
        for e in self.terms:
            for i in drop:
                if e[i]:
                    raise VariableMismatchError(
                        f"variable {self.vars.names[i]!r} still occurs")
        keep = [i for i in range(len(self.vars.names)) if i not in drop]
        vars = VariableSet(tuple(self.vars.names[i] for i in keep), dof=self.vars.dof)
        terms = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return FormalSeries(vars, self.trunc, terms)

    # -- canonical text form ----------------------------------------------

    def __str__(self):
        return format_terms(self.terms, self.vars.names)

    def __repr__(self):
        return f"FormalSeries({self})"


# -- repo-wide text grammar ----------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad character near {text[pos:pos+8]!r}")
            break
        pos = m.end()
        num, name, caret, star, plus, minus = m.groups()
        if num is not None:
            out.append(("num", Fraction(num.replace(" ", ""))))
        elif name is not None:
            out.append(("name", name))
        elif caret:
            out.append(("^", None))
        elif star:
            out.append(("*", None))
        elif plus:
            out.append(("+", None))
        elif minus:
            out.append(("-", None))
    return out


def parse_terms(text: str):
    """Parse grammar text into a list of (rational coefficient, {var: exponent})."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    terms, i = [], 0
    while i < len(toks):
        if terms and toks[i][0] not in "+-":
            raise ParseError("terms must be joined by + or -")
        sign = Fraction(1)
        while i < len(toks) and toks[i][0] in "+-":
            if toks[i][0] == "-":
                sign = -sign
            i += 1
        if i >= len(toks):
            raise ParseError("dangling sign")
        coeff, powers, saw_factor = sign, {}, False
        while True:
            kind, val = toks[i]
            if kind == "num":
                coeff *= val
            elif kind == "name":
                e = 1
                if i + 1 < len(toks) and toks[i + 1][0] == "^":
                    if i + 2 >= len(toks) or toks[i + 2][0] != "num" or toks[i + 2][1].denominator != 1:
                        raise ParseError("exponent must be a nonnegative integer")
                    e = int(toks[i + 2][1])
                    i += 2
                powers[val] = powers.get(val, 0) + e
            else:
                raise ParseError(f"unexpected token in term: {kind!r}")
            saw_factor = True
            i += 1
            if i < len(toks) and toks[i][0] == "*":
                i += 1
                continue
            break
        if not saw_factor:
            raise ParseError("empty term")
        terms.append((coeff, powers))
    return terms


def format_rational(c: Fraction) -> str:
    return str(c)


def _monomial_key(expo: tuple):
    # graded lexicographic, descending
    return (-sum(expo), tuple(-e for e in expo))


def format_terms(terms: dict, names: tuple) -> str:
    """Canonical form: graded-lex descending; distinguished power printed first,
    remaining variables alphabetically."""
    if not terms:
        return "0"
    order = [0] + sorted(range(1, len(names)), key=lambda i: names[i])
    pieces = []
    for expo in sorted(terms, key=_monomial_key):
        c = terms[expo]
        factors = [f"{names[i]}^{expo[i]}" if expo[i] > 1 else names[i]
                   for i in order if expo[i]]
        mag = abs(c)
        if not factors or mag != 1:
            factors.insert(0, format_rational(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)
