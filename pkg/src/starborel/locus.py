"""Symbolic candidate singular varieties for convolution-type, Hadamard,
and diagonal-pairing products, with exact and numeric membership tests.

A Variety is an intersection (over groups) of unions of labeled polynomial
zero sets.  The constructions are deliberately supersets of the true
singular sets; tests assert containment, never equality.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DegenerateError,
    NotSimpleError,
    OnVarietyError,
    VariableMismatchError,
)
from .poly import (
    MultiPoly,
    UniOverPoly,
    discriminant_locus,
    is_simple,
)
from .series import VariableSet, as_rat


class Leaf:
    """One labeled polynomial condition {poly = 0}."""

    __slots__ = ("label", "poly")

    def __init__(self, label: str, poly: MultiPoly):
        if poly.is_zero:
            raise DegenerateError(f"leaf {label!r} is identically zero")
        self.label = label
        self.poly = poly

    def is_nonzero_constant(self) -> bool:
        return poly_is_nonzero_constant(self.poly)

    def __str__(self):
        return f'cond "{self.label}": {self.poly}'


def poly_is_nonzero_constant(p: MultiPoly) -> bool:
    return not p.is_zero and p.total_degree() == 0


class Variety:
    """Intersection over groups of unions of leaves."""

    __slots__ = ("vars", "groups")

    def __init__(self, vars: VariableSet, groups):
        self.vars = vars
        cleaned = []
        for group in groups:
            kept = [leaf for leaf in group if not leaf.is_nonzero_constant()]
            cleaned.append(kept)
        self.groups = cleaned

    def contains_exact(self, point: dict) -> bool:
        """Exact membership at a rational point binding every variable."""
        bindings = {k: as_rat(v) for k, v in point.items()}
        for group in self.groups:
            if not any(leaf.poly.evaluate(bindings) == 0 for leaf in group):
                return False
        return True

    def contains_numeric(self, point: dict, tol: float = 1e-9) -> bool:
        """Numeric membership with complex/float bindings."""
        for group in self.groups:
            if not any(abs(complex(leaf.poly.evaluate(point))) <= tol
                       for leaf in group):
                return False
        return True

    def all_leaves(self):
        for group in self.groups:
            yield from group

    def serialize(self) -> str:
        lines = ["intersect {"]
        for group in self.groups:
            lines.append("  union {")
            for leaf in group:
                lines.append(f"    {leaf}")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines)

    def __str__(self):
        return self.serialize()


def _union_ring(a: VariableSet, b: VariableSet) -> VariableSet:
    names = list(a.names)
    for n in b.names:
        if n not in names:
            names.append(n)
    return VariableSet(tuple(names), dof=0)


def _without(vars: VariableSet, name: str) -> VariableSet:
    names = tuple(n for n in vars.names if n != name)
    return VariableSet(names, dof=0)


def conv_locus(P: UniOverPoly, Pbar: MultiPoly) -> Variety:
    """Candidate singular variety of a convolution-type integral whose
    integrand is governed by the simple polynomial P (in its distinguished
    variable) with endpoint branch Pbar.

    Leaves: {leading coefficient = 0}, {P at 0 = 0}, {discriminant = 0},
    and, unless Pbar is identically a root of P (the degenerate case,
    decided by the exact identity P(Pbar) = 0), the endpoint leaf
    {P(Pbar) = 0}.
    """
    var = P.var
    if not is_simple(P):
        raise NotSimpleError(f"polynomial is not square-free in {var!r}")
    ring = _union_ring(P.vars, Pbar.vars)
    Pmp = P.to_multipoly().rehome(ring)
    Pbar_big = Pbar.rehome(ring)
    if Pbar_big.degree(var) > 0:
        raise VariableMismatchError(f"endpoint branch must not involve {var!r}")
    origin = {n: Fraction(0) for n in Pbar.vars.names}
    if Pbar.evaluate(origin) != 0:
        raise DegenerateError("endpoint branch must vanish at the origin")
    locus_vars = _without(ring, var)

    leaves = []
    lead = P.lead.rehome(ring).rehome(locus_vars)
    if not lead.is_zero:
        leaves.append(Leaf("leading coefficient", lead))
    at_zero = Pmp.evaluate_partial({var: 0}).rehome(locus_vars)
    if not at_zero.is_zero:
        leaves.append(Leaf("value at 0", at_zero))
    if P.degree >= 1:
        disc = discriminant_locus(P).rehome(ring).rehome(locus_vars)
        if not disc.is_zero:
            leaves.append(Leaf("discriminant", disc))
    endpoint = Pmp.substitute(var, Pbar_big)
    if not endpoint.is_zero:
        # the endpoint sheet: Pbar is generically not a root of P
        leaves.append(Leaf("endpoint", endpoint.rehome(locus_vars)))
    return Variety(locus_vars, [leaves])


def conv_locus_drop_variable(V: Variety, var: str) -> Variety:
    """Forget a variable no leaf depends on."""
    small = _without(V.vars, var)
    groups = []
    for group in V.groups:
        new = []
        for leaf in group:
            if leaf.poly.degree(var) > 0:
                raise VariableMismatchError(
                    f"leaf {leaf.label!r} depends on {var!r}")
            new.append(Leaf(leaf.label, leaf.poly.rehome(small)))
        groups.append(new)
    return Variety(small, groups)


def hadamard_locus_1d(S_f, S_g, xi: str = "xi") -> Variety:
    """Zero set {xi = 0} union {xi = s*t} over the two singularity sets,
    as a single univariate polynomial leaf."""
    vars = VariableSet((xi,), dof=0)
    x = MultiPoly.variable(vars, xi)
    poly = x
    for s in S_f:
        for t in S_g:
            poly = poly * (x - MultiPoly.constant(vars, as_rat(s) * as_rat(t)))
    return Variety(vars, [[Leaf("origin and products", poly)]])


_H5_NAMES = ("xi1", "xi2", "xi3", "q", "p")


def hadamard_locus_5var(Pf: UniOverPoly, Qg: UniOverPoly) -> Variety:
    """Candidate singular variety in (xi1, xi2, xi3, q, p) for the Hadamard
    pairing of two germs with polynomial singular supports Pf (simple in p,
    over (xi1, q, p)) and Qg (simple in q, over (xi2, q, p)).

    Builds the denominator-cleared family
    W(z) = z^N Pf(xi1, q, p+z) Qg(xi2, q + xi3/z, p),
    then emits the leading z-coefficient, the constant z-coefficient, the
    z-discriminant of W, and the hyperplane {xi3 = 0}.
    """
    if Pf.var != "p" or Qg.var != "q":
        raise VariableMismatchError("expected Pf simple in 'p' and Qg simple in 'q'")
    if not is_simple(Pf):
        raise NotSimpleError("Pf is not square-free in 'p'")
    if not is_simple(Qg):
        raise NotSimpleError("Qg is not square-free in 'q'")
    ring = VariableSet(_H5_NAMES + ("z",), dof=0)
    z = MultiPoly.variable(ring, "z")
    xi3 = MultiPoly.variable(ring, "xi3")
    qv = MultiPoly.variable(ring, "q")
    pv = MultiPoly.variable(ring, "p")

    # Pf(xi1, q, p+z)
    f_shift = Pf.to_multipoly().rehome(ring).substitute("p", pv + z)

    # z^N Qg(xi2, q + xi3/z, p) = sum_k b_k (q z + xi3)^k z^{N-k}
    N = Qg.degree
    core = qv * z + xi3
    g_clear = MultiPoly.zero(ring)
    for k, b in enumerate(Qg.coeffs):
        g_clear = g_clear + b.rehome(ring) * core.pow(k) * z.pow(N - k)

    W = f_shift * g_clear
    if W.is_zero:
        raise DegenerateError("degenerate product")
    locus_vars = VariableSet(_H5_NAMES, dof=0)
    leaves = [Leaf("xi3 = 0", MultiPoly.variable(locus_vars, "xi3"))]
    dz = W.degree("z")
    if dz == 0:
        leaves.append(Leaf("product", W.rehome(locus_vars)))
    else:
        Wu = UniOverPoly.from_multipoly(W, "z")
        leaves.append(Leaf("leading z-coefficient", Wu.lead.rehome(locus_vars)))
        const = Wu.coeffs[0]
        if not const.is_zero:
            leaves.append(Leaf("constant z-coefficient", const.rehome(locus_vars)))
        disc = discriminant_locus(Wu)
        if not disc.is_zero:
            leaves.append(Leaf("z-discriminant", disc.rehome(locus_vars)))
    return Variety(locus_vars, [leaves])


def odot_locus(P: MultiPoly, i: str, j: str, xi: str = "xi", z: str = "z") -> Variety:
    """Candidate singular variety of the diagonal pairing in variables i, j:
    forms Q(z) = z^N P(..., z_i + z, ..., z_j + xi/z, ...) with the minimal
    clearing power N = deg_j(P), then emits the leading and constant
    z-coefficients and the z-discriminant."""
    if i == j:
        raise VariableMismatchError("the two pairing variables must differ")
    if P.is_zero:
        raise DegenerateError("zero polynomial")
    if xi in P.vars.names or z in P.vars.names:
        raise VariableMismatchError("helper names collide with existing variables")
    ring = VariableSet(P.vars.names + (xi, z), dof=0)
    zv = MultiPoly.variable(ring, z)
    xiv = MultiPoly.variable(ring, xi)
    iv = MultiPoly.variable(ring, i)
    jv = MultiPoly.variable(ring, j)

    N = P.degree(j)
    core = jv * zv + xiv
    Q = MultiPoly.zero(ring)
    for k, b in enumerate(P.univariate_coeffs(j)):
        Q = Q + b.rehome(ring) * core.pow(k) * zv.pow(N - k)
    Q = Q.substitute(i, iv + zv)

    locus_vars = VariableSet((xi,) + P.vars.names, dof=0)
    dz = Q.degree(z)
    leaves = []
    if dz == 0:
        leaves.append(Leaf("product", Q.rehome(locus_vars)))
    else:
        Qu = UniOverPoly.from_multipoly(Q, z)
        leaves.append(Leaf("leading z-coefficient", Qu.lead.rehome(locus_vars)))
        const = Qu.coeffs[0]
        if not const.is_zero:
            leaves.append(Leaf("constant z-coefficient", const.rehome(locus_vars)))
        disc = discriminant_locus(Qu)
        if not disc.is_zero:
            leaves.append(Leaf("z-discriminant", disc.rehome(locus_vars)))
    return Variety(locus_vars, [leaves])
