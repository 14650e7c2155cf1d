"""Exact multivariate polynomial calculus over the rationals: gcd over the
fraction field of the non-distinguished variables, content/primitive splits,
square-free ("simple") decomposition in one variable, Sylvester resultants
and discriminants, and the shift/reciprocal transforms used by the singular
locus constructions.

Polynomials are untruncated, unlike the windowed series in
:mod:`starborel.series`; arithmetic never drops terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

from .errors import (
    DegenerateError,
    NotSimpleError,
    UnknownVariableError,
    VariableMismatchError,
)
from .series import VariableSet, as_rat, format_terms, parse_terms


class MultiPoly:
    """Sparse exact multivariate polynomial: multi-index -> nonzero rational."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VariableSet, terms=None):
        object.__setattr__(self, "vars", vars)
        clean = {}
        if terms:
            n = len(vars.names)
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != n:
                    raise VariableMismatchError(
                        f"multi-index {expo} has wrong arity for {vars.names}")
                c = as_rat(coeff)
                if c:
                    clean[expo] = clean.get(expo, Fraction(0)) + c
                    if not clean[expo]:
                        del clean[expo]
        object.__setattr__(self, "terms", clean)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars: VariableSet) -> "MultiPoly":
        return cls(vars)

    @classmethod
    def constant(cls, vars: VariableSet, value) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars.names): as_rat(value)})

    @classmethod
    def one(cls, vars: VariableSet) -> "MultiPoly":
        return cls.constant(vars, 1)

    @classmethod
    def variable(cls, vars: VariableSet, name: str, power: int = 1) -> "MultiPoly":
        i = vars.index(name)
        expo = tuple(power if j == i else 0 for j in range(len(vars.names)))
        return cls(vars, {expo: Fraction(1)})

    @classmethod
    def from_string(cls, text: str, vars: VariableSet) -> "MultiPoly":
        terms = {}
        for coeff, powers in parse_terms(text):
            expo = [0] * len(vars.names)
            for name, e in powers.items():
                expo[vars.index(name)] += e
            key = tuple(expo)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(vars, terms)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, expo) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def leading(self):
        """(multi-index, coefficient) of the graded-lex leading term."""
        if self.is_zero:
            raise DegenerateError("zero polynomial has no leading term")
        key = max(self.terms, key=lambda e: (sum(e), e))
        return key, self.terms[key]

    def _check_compatible(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise VariableMismatchError(
                f"variable sets differ: {self.vars.names} vs {other.vars.names}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, terms)

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -as_rat(other))

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.vars, {e: c * as_rat(other) for e, c in self.terms.items()})
        self._check_compatible(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def pow(self, n: int) -> "MultiPoly":
        if n < 0:
            raise DegenerateError("negative powers not supported")
        out = MultiPoly.one(self.vars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        raise TypeError("MultiPoly is not hashable")

    # -- calculus and substitution ----------------------------------------

    def diff(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly(self.vars, terms)

    def substitute(self, name: str, replacement: "MultiPoly") -> "MultiPoly":
        self._check_compatible(replacement)
        i = self.vars.index(name)
        powers = {0: MultiPoly.one(self.vars)}

        def power(k):
            if k not in powers:
                powers[k] = power(k - 1) * replacement
            return powers[k]

        out = MultiPoly.zero(self.vars)
        for e, c in self.terms.items():
            rest = MultiPoly(self.vars, {e[:i] + (0,) + e[i + 1:]: c})
            out = out + rest * power(e[i])
        return out

    def evaluate(self, bindings: dict):
        """Full evaluation; exact with rational bindings, numeric otherwise."""
        missing = [n for n in self.vars.names if n not in bindings]
        if missing:
            raise UnknownVariableError(f"missing bindings for {missing}")
        vals = [bindings[n] for n in self.vars.names]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(vals, e):
                if k:
                    v = v * x ** k
            total = total + v
        return total

    def evaluate_partial(self, bindings: dict) -> "MultiPoly":
        """Substitute exact rationals for a subset of the variables."""
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
        return MultiPoly(self.vars, terms)

    def univariate_coeffs(self, name: str) -> list:
        """Dense coefficient list b_0..b_M in one variable; the b_i keep the
        full variable set with the exponent of ``name`` zeroed."""
        i = self.vars.index(name)
        deg = self.degree(name)
        if deg < 0:
            return []
        buckets = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    def rehome(self, vars: VariableSet) -> "MultiPoly":
        """Move into another variable set containing every mentioned name."""
        old = self.vars.names
        pos = []
        for j, n in enumerate(old):
            if n in vars.names:
                pos.append((j, vars.index(n)))
            elif any(e[j] for e in self.terms):
                raise UnknownVariableError(f"variable {n!r} not in target set")
        width = len(vars.names)
        terms = {}
        for e, c in self.terms.items():
            key = [0] * width
            for j, t in pos:
                key[t] = e[j]
            terms[tuple(key)] = c
        return MultiPoly(vars, terms)

    def __str__(self):
        return format_terms(self.terms, self.vars.names)

    def __repr__(self):
        return f"MultiPoly({self})"


class UniOverPoly:
    """A polynomial viewed as univariate in one distinguished variable with
    MultiPoly coefficients b_0..b_M (dense; b_M nonzero)."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        if not coeffs:
            raise DegenerateError("zero polynomial has no UniOverPoly form")
        for b in coeffs:
            if b.degree(var) > 0:
                raise VariableMismatchError(
                    f"coefficient {b} still involves {var!r}")
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_multipoly(cls, P: MultiPoly, var: str) -> "UniOverPoly":
        if P.is_zero:
            raise DegenerateError("zero polynomial has no UniOverPoly form")
        coeffs = P.univariate_coeffs(var)
        return cls(var, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> MultiPoly:
        return self.coeffs[-1]

    @property
    def vars(self) -> VariableSet:
        return self.coeffs[0].vars

    def to_multipoly(self) -> MultiPoly:
        x = MultiPoly.variable(self.vars, self.var)
        out = MultiPoly.zero(self.vars)
        for i, b in enumerate(self.coeffs):
            out = out + b * x.pow(i)
        return out

    def diff(self) -> "UniOverPoly":
        if self.degree == 0:
            raise DegenerateError("derivative of a degree-0 polynomial is zero")
        return UniOverPoly(self.var,
                           [b * (i + 1) for i, b in enumerate(self.coeffs[1:])])

    def __eq__(self, other):
        if not isinstance(other, UniOverPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("UniOverPoly is not hashable")

    def __str__(self):
        return str(self.to_multipoly())

    def __repr__(self):
        return f"UniOverPoly[{self.var}]({self})"


# -- rational/integer content --------------------------------------------

def rational_content(P: MultiPoly) -> Fraction:
    """Positive rational r with P/r having coprime integer coefficients,
    carrying the sign of the graded-lex leading coefficient."""
    if P.is_zero:
        return Fraction(0)
    num = 0
    den = 1
    for c in P.terms.values():
        num = int_gcd(num, c.numerator)
        den = int_lcm(den, c.denominator)
    r = Fraction(num, den)
    _, lead = P.leading()
    return r if lead > 0 else -r


def rational_gcd(a: Fraction, b: Fraction) -> Fraction:
    a, b = abs(a), abs(b)
    if not a:
        return b
    if not b:
        return a
    return Fraction(int_gcd(a.numerator, b.numerator),
                    int_lcm(a.denominator, b.denominator))


# -- exact division and gcd ----------------------------------------------

def mp_divexact(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Exact division by repeated graded-lex leading-term cancellation."""
    A._check_compatible(B)
    if B.is_zero:
        raise DegenerateError("division by zero polynomial")
    eb, cb = B.leading()
    quot = {}
    rem = dict(A.terms)
    while rem:
        ea = max(rem, key=lambda e: (sum(e), e))
        ca = rem[ea]
        eq = tuple(a - b for a, b in zip(ea, eb))
        if any(k < 0 for k in eq):
            raise DegenerateError("division is not exact")
        cq = ca / cb
        quot[eq] = quot.get(eq, Fraction(0)) + cq
        for e2, c2 in B.terms.items():
            e = tuple(a + b for a, b in zip(eq, e2))
            v = rem.get(e, Fraction(0)) - cq * c2
            if v:
                rem[e] = v
            elif e in rem:
                del rem[e]
    return MultiPoly(A.vars, quot)


def _pseudo_rem(A: MultiPoly, B: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder of A by B in one variable (fraction-free)."""
    db = B.degree(var)
    lb = UniOverPoly.from_multipoly(B, var).lead
    x = MultiPoly.variable(A.vars, var)
    R = A
    while not R.is_zero and R.degree(var) >= db:
        dr = R.degree(var)
        lr = UniOverPoly.from_multipoly(R, var).lead
        R = R * lb - B * lr * x.pow(dr - db)
    return R


def mp_gcd(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Gcd in Z[vars] scaled back to Q: includes the shared rational content,
    normalized with positive leading coefficient.  Primitive polynomial
    remainder sequences, recursing on the variables."""
    A._check_compatible(B)
    if A.is_zero and B.is_zero:
        return MultiPoly.zero(A.vars)
    if A.is_zero:
        return mp_divexact(B, MultiPoly.constant(B.vars, rational_content(B))) \
            * abs(rational_content(B))
    if B.is_zero:
        return mp_gcd(B, A)
    ca, cb = rational_content(A), rational_content(B)
    shared = rational_gcd(ca, cb)
    A = mp_divexact(A, MultiPoly.constant(A.vars, ca))
    B = mp_divexact(B, MultiPoly.constant(B.vars, cb))
    g = _pp_gcd(A, B)
    return g * shared


def _main_var(A: MultiPoly, B: MultiPoly):
    for n in A.vars.names:
        if A.degree(n) > 0 or B.degree(n) > 0:
            return n
    return None


def _content_in(P: MultiPoly, var: str) -> MultiPoly:
    """Gcd of the coefficients of P viewed as univariate in var."""
    coeffs = [b for b in P.univariate_coeffs(var) if not b.is_zero]
    g = MultiPoly.zero(P.vars)
    for b in coeffs:
        g = mp_gcd(g, b)
        if g.total_degree() == 0 and abs(rational_content(g)) == 1:
            break
    return g


def _pp_gcd(A: MultiPoly, B: MultiPoly) -> MultiPoly:
    """Gcd of two integer-primitive polynomials, primitive PRS in the first
    variable either mentions."""
    var = _main_var(A, B)
    if var is None:
        return MultiPoly.one(A.vars)
    contA = _content_in(A, var)
    contB = _content_in(B, var)
    cont = mp_gcd(contA, contB)
    A = mp_divexact(A, contA)
    B = mp_divexact(B, contB)
    if A.degree(var) < B.degree(var):
        A, B = B, A
    while not B.is_zero:
        R = _pseudo_rem(A, B, var)
        A = B
        if R.is_zero:
            B = R
        else:
            rc = rational_content(R)
            R = mp_divexact(R, MultiPoly.constant(R.vars, rc))
            B = mp_divexact(R, _content_in(R, var))
    rc = rational_content(A)
    A = mp_divexact(A, MultiPoly.constant(A.vars, rc))
    return cont * A


# -- the distinguished-variable calculus ----------------------------------

def content_primitive(P: UniOverPoly):
    """Split P = content * primitive with the primitive part having coprime
    integer-primitive coefficients and positive leading rational content."""
    g = MultiPoly.zero(P.vars)
    for b in P.coeffs:
        if not b.is_zero:
            g = mp_gcd(g, b)
    lead_sign = rational_content(P.lead)
    if lead_sign < 0:
        g = -g
    primitive = UniOverPoly(P.var, [mp_divexact(b, g) if not b.is_zero else b
                                    for b in P.coeffs])
    return g, primitive


def gcd_over_fraction_field(P: UniOverPoly, Q: UniOverPoly = None) -> UniOverPoly:
    """Gcd in F[var] (F the fraction field of the other variables),
    denominator-cleared and primitive.  Q = None stands for the zero
    polynomial: the result is then the primitive part of P."""
    if Q is None:
        return content_primitive(P)[1]
    if P.var != Q.var:
        raise VariableMismatchError(f"distinguished variables differ: {P.var} vs {Q.var}")
    g = mp_gcd(P.to_multipoly(), Q.to_multipoly())
    gg = UniOverPoly.from_multipoly(g, P.var)
    # keep only the var-dependent part: content in var is a unit of F[var]
    _, primitive = content_primitive(gg)
    return primitive


def is_simple(P: UniOverPoly) -> bool:
    """Square-free in the distinguished variable over the fraction field."""
    if P.degree == 0:
        return True
    g = gcd_over_fraction_field(P, P.diff())
    return g.degree == 0


def simple_decompose(P: UniOverPoly) -> UniOverPoly:
    """Square-free part in the distinguished variable, times the content:
    a simple polynomial with the same zero set as P (the content supplies the
    leading-coefficient sheet)."""
    if P.degree == 0:
        return P
    content, primitive = content_primitive(P)
    g = gcd_over_fraction_field(primitive, primitive.diff())
    if g.degree == 0:
        squarefree = primitive
    else:
        sf = mp_divexact(primitive.to_multipoly(), g.to_multipoly())
        _, squarefree = content_primitive(UniOverPoly.from_multipoly(sf, P.var))
    out = UniOverPoly(P.var, [b * content for b in squarefree.coeffs])
    if not is_simple(out):
        raise NotSimpleError("square-free part failed the simplicity check")
    return out


# -- resultants ------------------------------------------------------------

def _bareiss_det(M):
    """Fraction-free determinant of a square MultiPoly matrix."""
    n = len(M)
    if n == 0:
        raise DegenerateError("empty matrix")
    vars = M[0][0].vars
    M = [row[:] for row in M]
    sign = 1
    prev = MultiPoly.one(vars)
    for k in range(n - 1):
        if M[k][k].is_zero:
            for i in range(k + 1, n):
                if not M[i][k].is_zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = mp_divexact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev)
            M[i][k] = MultiPoly.zero(vars)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(P: UniOverPoly, Q: UniOverPoly) -> MultiPoly:
    """Determinant of the Sylvester matrix in the shared distinguished
    variable.  Layout: ascending coefficients, the deg(Q) rows of P first."""
    if P.var != Q.var:
        raise VariableMismatchError(f"distinguished variables differ: {P.var} vs {Q.var}")
    m, n = P.degree, Q.degree
    if m < 1 and n < 1:
        raise DegenerateError("resultant needs positive degree in the variable")
    vars = P.vars
    size = m + n
    zero = MultiPoly.zero(vars)
    rows = []
    for i in range(n):
        rows.append([zero] * i + P.coeffs + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + Q.coeffs + [zero] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant_locus(P: UniOverPoly) -> MultiPoly:
    """Resultant of P with its derivative: vanishes where roots coincide."""
    if P.degree < 1:
        raise DegenerateError("discriminant needs degree >= 1")
    return sylvester_resultant(P, P.diff())


# -- the locus-building transforms ----------------------------------------

def shift_transform(P: MultiPoly, var: str, by: MultiPoly) -> MultiPoly:
    """Substitute var -> var + by."""
    P._check_compatible(by)
    if by.degree(var) > 0:
        raise VariableMismatchError(f"shift amount must not involve {var!r}")
    return P.substitute(var, MultiPoly.variable(P.vars, var) + by)


def reciprocal_transform(P: MultiPoly, var: str, xi: str, z: str) -> MultiPoly:
    """Denominator-cleared substitution var -> xi/z: with M = deg_var(P),
    returns z^M P(var -> xi/z) over the variable set with var replaced by xi
    and z appended."""
    if xi in P.vars.names or z in P.vars.names:
        raise VariableMismatchError("target names collide with existing variables")
    if xi == z:
        raise VariableMismatchError("xi and z must differ")
    i = P.vars.index(var)
    M = P.degree(var)
    if M < 0:
        raise DegenerateError("zero polynomial")
    names = tuple(xi if n == var else n for n in P.vars.names) + (z,)
    vars = VariableSet(names, dof=0)
    terms = {}
    for e, c in P.terms.items():
        key = e[:i] + (e[i],) + e[i + 1:] + (M - e[i],)
        terms[key] = terms.get(key, Fraction(0)) + c
    return MultiPoly(vars, terms)
