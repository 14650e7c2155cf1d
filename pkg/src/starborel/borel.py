"""Borel transform and its star-product counterparts.

The Borel-plane products are defined by conjugation: pull back along the
inverse transform, apply the t-plane product, push forward.  Closed
coefficient formulas are provided alongside as independent cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import UnknownVariableError, VariableMismatchError
from .series import FormalSeries, Truncation, VariableSet
from .star import StarKind, STANDARD, star, transition_T


def borel(f: FormalSeries, new_name: str = "xi") -> FormalSeries:
    """beta: t^n -> xi^n / n!, coefficientwise."""
    g = f.rename_distinguished(new_name)
    terms = {e: c / factorial(e[0]) for e, c in g.terms.items()}
    return FormalSeries(g.vars, g.trunc, terms)


def inverse_borel(fhat: FormalSeries, new_name: str = "t") -> FormalSeries:
    """beta^{-1}: xi^n -> n! t^n, coefficientwise."""
    g = fhat.rename_distinguished(new_name)
    terms = {e: c * factorial(e[0]) for e, c in g.terms.items()}
    return FormalSeries(g.vars, g.trunc, terms)


def borel_star(fhat: FormalSeries, ghat: FormalSeries,
               kind: StarKind = STANDARD) -> FormalSeries:
    """Borel counterpart of the chosen star product, by conjugation."""
    fhat._check_compatible(ghat)
    name = fhat.vars.distinguished
    prod = star(inverse_borel(fhat), inverse_borel(ghat), kind)
    return borel(prod, name)


def _dist_parts(f: FormalSeries) -> list:
    """Coefficient series f_n (in the remaining variables) along the
    distinguished axis, indices 0..deg_t."""
    parts = [{} for _ in range(f.trunc.deg_t + 1)]
    for e, c in f.terms.items():
        parts[e[0]][(0,) + e[1:]] = c
    return [FormalSeries(f.vars, f.trunc, d) for d in parts]


def borel_star_standard_formula(fhat: FormalSeries, ghat: FormalSeries) -> FormalSeries:
    """Closed coefficient form of the standard Borel star at one degree of
    freedom: sum over m, n, s of
    n! m! / ((n+m+s)! s!) (d_p^s f_m)(d_q^s g_n) xi^{m+n+s},
    where f_m, g_n are the xi-coefficients.  Cross-check oracle only.
    """
    fhat._check_compatible(ghat)
    vars = fhat.vars
    if vars.dof != 1:
        raise VariableMismatchError("closed formula is stated for dof 1")
    q, p = vars.q_name(1), vars.p_name(1)
    trunc = fhat.trunc.meet(ghat.trunc)
    out = FormalSeries.zero(vars, trunc)
    fparts = _dist_parts(fhat)
    gparts = _dist_parts(ghat)
    for m, fm in enumerate(fparts):
        if fm.is_zero:
            continue
        for n, gn in enumerate(gparts):
            if gn.is_zero:
                continue
            smax = min(fm.degree(p), gn.degree(q), trunc.deg_t - m - n)
            for s in range(smax + 1):
                coef = Fraction(factorial(n) * factorial(m),
                                factorial(n + m + s) * factorial(s))
                term = fm.diff(p, s, shrink_window=False) * gn.diff(q, s, shrink_window=False)
                term = term * coef
                shifted = {}
                for e, c in term.terms.items():
                    key = (m + n + s,) + e[1:]
                    if trunc.admits(key):
                        shifted[key] = shifted.get(key, Fraction(0)) + c
                out = out + FormalSeries(vars, trunc, shifted)
    return out


def borel_T(fhat: FormalSeries, inverse: bool = False) -> FormalSeries:
    """Borel counterpart of the transition operator, by conjugation."""
    name = fhat.vars.distinguished
    return borel(transition_T(inverse_borel(fhat), inverse=inverse), name)


def hadamard(phi: FormalSeries, psi: FormalSeries) -> FormalSeries:
    """Coefficientwise product: the xi^n coefficients multiply."""
    phi._check_compatible(psi)
    trunc = phi.trunc.meet(psi.trunc)
    by_deg = {}
    for e, c in psi.terms.items():
        by_deg.setdefault(e[0], {})[e[1:]] = c
    terms = {}
    for e, c in phi.terms.items():
        other = by_deg.get(e[0])
        if not other:
            continue
        for rest, d in other.items():
            key = (e[0],) + tuple(a + b for a, b in zip(e[1:], rest))
            if trunc.admits(key):
                terms[key] = terms.get(key, Fraction(0)) + c * d
    return FormalSeries(phi.vars, trunc, terms)


def odot_ij(F: FormalSeries, i: str, j: str, new_name: str = "xi") -> FormalSeries:
    """Diagonal pairing in the variables i and j: prepends a fresh
    distinguished variable xi and returns
    sum over a of (d_i^a d_j^a F) / (a!)^2 xi^a,
    the termwise angular average of the paper-style circle substitution.
    """
    if i == j:
        raise VariableMismatchError("the two pairing variables must differ")
    for name in (i, j):
        if name not in F.vars.names:
            raise UnknownVariableError(f"unknown variable {name!r}")
        if name == F.vars.distinguished:
            raise VariableMismatchError("cannot pair in the distinguished variable")
    if new_name in F.vars.names:
        raise VariableMismatchError(f"variable name {new_name!r} already in use")
    a_max = min(F.degree(i), F.degree(j))
    if a_max < 0:
        a_max = 0
    new_vars = VariableSet((new_name,) + F.vars.names, F.vars.dof)
    new_trunc = Truncation(a_max, F.trunc.deg_t + F.trunc.deg_xy)
    terms = {}
    h = F
    for a in range(a_max + 1):
        if h.is_zero:
            break
        coef = Fraction(1, factorial(a) ** 2)
        for e, c in h.terms.items():
            key = (a,) + e
            if new_trunc.admits(key):
                terms[key] = terms.get(key, Fraction(0)) + c * coef
        h = h.diff(i, shrink_window=False).diff(j, shrink_window=False)
    return FormalSeries(new_vars, new_trunc, terms)
