"""Floating-point cross-checks: radius-of-convergence estimates against the
distance to a constructed locus, and a trapezoid-quadrature check of the
contour form of the Hadamard product.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AliasingError, DegenerateError, OnVarietyError
from .locus import Variety
from .series import FormalSeries, as_rat


@dataclass(frozen=True)
class RadiusReport:
    point: tuple
    estimate: float
    method: str
    order_used: int
    locus_distance: float
    relative_gap: float
    verdict: str

    def line(self) -> str:
        pt = "(" + ", ".join(str(v) for v in self.point) + ")"
        return (f"point={pt} estimate={self.estimate:.15g} "
                f"locus={self.locus_distance:.15g} "
                f"gap={self.relative_gap:.15g} verdict={self.verdict}")


def radius_estimate(coeffs, method: str = "ratio") -> float:
    """Radius of convergence from a coefficient list a_0..a_K.

    ratio: mean of |a_k / a_{k+1}| over the last 5 consecutive nonzero pairs.
    root: |a_K|^{-1/K} at the largest nonzero index.
    """
    vals = [float(c) for c in coeffs]
    nonzero = [k for k, v in enumerate(vals) if v != 0.0]
    if len(nonzero) < 8:
        raise DegenerateError("need at least 8 nonzero coefficients")
    if method == "root":
        k = nonzero[-1]
        return abs(vals[k]) ** (-1.0 / k)
    if method != "ratio":
        raise DegenerateError(f"unknown method {method!r}")
    pairs = [(k, k + 1) for k in nonzero if k + 1 in set(nonzero)]
    if len(pairs) < 5:
        raise DegenerateError("too few consecutive nonzero pairs for the ratio method")
    ratios = [abs(vals[a] / vals[b]) for a, b in pairs[-5:]]
    return sum(ratios) / len(ratios)


def radius_spread(coeffs) -> float:
    """Spread (max - min) of the last 5 consecutive ratios; 0 for geometric tails."""
    vals = [float(c) for c in coeffs]
    nonzero = [k for k, v in enumerate(vals) if v != 0.0]
    pairs = [(k, k + 1) for k in nonzero if k + 1 in set(nonzero)]
    if len(pairs) < 5:
        raise DegenerateError("too few consecutive nonzero pairs")
    ratios = [abs(vals[a] / vals[b]) for a, b in pairs[-5:]]
    return max(ratios) - min(ratios)


def locus_distance_xi(V: Variety, point: dict, exclude_origin: bool = True) -> float:
    """Minimum modulus over the roots in the one unbound variable of every
    bound leaf; +inf when every bound leaf is a nonzero constant.

    The origin is excluded by default: the germs under study are regular at 0
    by construction, so a {xi = 0} sheet never bounds the principal disc.
    """
    free = [n for n in V.vars.names if n not in point]
    if len(free) != 1:
        raise DegenerateError(f"expected exactly one unbound variable, got {free}")
    xi = free[0]
    best = math.inf
    for leaf in V.all_leaves():
        bound = leaf.poly.evaluate_partial({k: as_rat(v) for k, v in point.items()})
        coeffs = bound.univariate_coeffs(xi)
        if not coeffs:
            raise OnVarietyError(
                f"leaf {leaf.label!r} vanishes identically at this point")
        if len(coeffs) == 1:
            continue  # nonzero constant in xi: no root
        desc = [float(c.coeff((0,) * len(c.vars.names))) for c in reversed(coeffs)]
        for root in np.roots(desc):
            r = abs(root)
            if exclude_origin and r < 1e-12:
                continue
            best = min(best, r)
    return best


def check_radius_vs_locus(family, V: Variety, points, tol: float,
                          method: str = "ratio") -> list:
    """For each point (bindings of all locus variables except xi) expand the
    family's xi-coefficients, estimate the radius, and compare with the
    distance to the locus.  Pass iff the relative gap is within tol and the
    estimate does not exceed the locus distance beyond tol."""
    reports = []
    for point in points:
        coeffs = family(point)
        est = radius_estimate(coeffs, method)
        dist = locus_distance_xi(V, point)
        if math.isinf(dist):
            gap = math.inf
            verdict = "fail"
        else:
            gap = abs(est - dist) / dist
            verdict = "pass" if (gap <= tol and est <= dist * (1 + tol)) else "fail"
        key = tuple(str(point[n]) for n in sorted(point))
        reports.append(RadiusReport(key, est, method, len(coeffs) - 1, dist,
                                    gap, verdict))
    return reports


def quadrature_hadamard(phi: FormalSeries, psi: FormalSeries, nodes: int) -> list:
    """Trapezoid rule on the unit circle for the contour form of the
    Hadamard product; returns float coefficients c_0..c_min(orders).

    Exact (to rounding) for truncated inputs when the node count exceeds the
    combined truncation order; fewer nodes alias and are rejected."""
    phi._check_compatible(psi)
    a = [float(c) for c in phi.dist_coeff_list()]
    b = [float(c) for c in psi.dist_coeff_list()]
    deg_a = max((k for k, v in enumerate(a) if v), default=0)
    deg_b = max((k for k, v in enumerate(b) if v), default=0)
    if nodes <= deg_a + deg_b:
        raise AliasingError(
            f"{nodes} nodes cannot resolve Fourier content up to {deg_a + deg_b}")
    top = min(len(a), len(b)) - 1
    out = []
    for n in range(top + 1):
        acc = 0.0 + 0.0j
        for j in range(nodes):
            s = 2.0 * math.pi * j / nodes
            z = cmath.exp(1j * s)
            phi_val = sum(ak * z ** k for k, ak in enumerate(a))
            acc += phi_val * cmath.exp(-1j * n * s)
        out.append((acc / nodes * b[n]).real)
    return out


# -- closed-form coefficient families --------------------------------------

def euler_borel_coeffs(q, p, order: int) -> list:
    """xi-coefficients of the Borel image of the Euler-type product series at
    fixed (q, p): the geometric family c^{-k-1} with c = (1-p)(1-q)."""
    c = (1 - as_rat(p)) * (1 - as_rat(q))
    if c == 0:
        raise DegenerateError("degenerate point: (1-p)(1-q) = 0")
    return [c ** (-k - 1) for k in range(order + 1)]


def logstar_borel_coeffs(q, p, order: int) -> list:
    """xi-coefficients (constant term set to 0) of the Borel image of the
    log-log product at fixed (q, p): the dilogarithm family c^{-k}/k^2."""
    c = (1 - as_rat(p)) * (1 - as_rat(q))
    if c == 0:
        raise DegenerateError("degenerate point: (1-p)(1-q) = 0")
    return [Fraction(0)] + [c ** (-k) / Fraction(k * k) for k in range(1, order + 1)]
