"""Acceptance gate: one top-level test per shipped guarantee, each printing a
single PASS/FAIL line (run with -s to see them)."""

import random
import time
from fractions import Fraction
from math import factorial

from starborel import (
    AliasingError,
    FormalSeries,
    Leaf,
    MOYAL,
    MultiPoly,
    STANDARD,
    Truncation,
    UniOverPoly,
    VariableSet,
    Variety,
    borel,
    borel_star,
    borel_T,
    check_radius_vs_locus,
    conv_locus,
    euler_borel_coeffs,
    eval_borel_star_rep,
    eval_formulahigh,
    eval_moyal_rep,
    eval_That_rep,
    gcd_over_fraction_field,
    hadamard,
    hadamard_contour,
    hadamard_locus_1d,
    hadamard_locus_5var,
    is_simple,
    logstar_borel_coeffs,
    moyal_commutator,
    moyal_star,
    quadrature_hadamard,
    simple_decompose,
    standard_star,
    star,
    sylvester_resultant,
    transition_T,
)
from starborel.suites import (
    euler_product_tseries,
    euler_singular_locus,
    log_tseries,
    random_series,
)

SEED = 20240811


def _report(num, name, ok):
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {num} ({name}) failed"


def test_criterion_1_example_suite():
    start = time.monotonic()
    V = VariableSet.phase_space(1)
    T = Truncation(8, 8)
    S = lambda s: FormalSeries.from_string(s, V, T)
    ok = standard_star(S("t*p"), S("t*q")) == S("t^2*p*q + t^3")
    ok &= standard_star(S("t*q"), S("t*p")) == S("t^2*p*q")
    ok &= transition_T(S("t^2*p*q")) == S("t^2*p*q - 1/2*t^3")
    ok &= moyal_commutator(S("p"), S("q")) == S("1")
    V3 = VariableSet.phase_space(3)
    T3 = Truncation(4, 4)
    for i in range(1, 4):
        for j in range(1, 4):
            pi = FormalSeries.variable(V3, T3, V3.p_name(i))
            qj = FormalSeries.variable(V3, T3, V3.q_name(j))
            pj = FormalSeries.variable(V3, T3, V3.p_name(j))
            qi = FormalSeries.variable(V3, T3, V3.q_name(i))
            want = (FormalSeries.one(V3, T3) if i == j
                    else FormalSeries.zero(V3, T3))
            ok &= moyal_commutator(pi, qj) == want
            ok &= moyal_commutator(pi, pj).is_zero
            ok &= moyal_commutator(qi, qj).is_zero
    ok &= (time.monotonic() - start) < 1.0
    _report(1, "example suite, exact, under 1 s", ok)


def test_criterion_2_divergent_series_identities():
    V = VariableSet.phase_space(1)
    T = Truncation(8, 8)
    c = FormalSeries.from_string("1 - p - q + p*q", V, T)  # (1-p)(1-q)
    ok = True

    prod = euler_product_tseries(V, T)
    for k in range(T.deg_t + 1):
        part = FormalSeries(V, T, {(0,) + e[1:]: v
                                   for e, v in prod.terms.items() if e[0] == k})
        ok &= c.pow(k + 1) * part == FormalSeries.constant(V, T, factorial(k))

    Tpad = Truncation(T.deg_t, 2 * T.deg_xy)
    lg = standard_star(log_tseries(V, Tpad, "p"),
                       log_tseries(V, Tpad, "q")).truncate(T)
    for k in range(1, T.deg_t + 1):
        part = FormalSeries(V, T, {(0,) + e[1:]: v
                                   for e, v in lg.terms.items() if e[0] == k})
        ok &= c.pow(k) * part == \
            FormalSeries.constant(V, T, Fraction(factorial(k - 1), k))

    # Borel images: geometric in xi/((1-p)(1-q)), and dilogarithm 1/k^2
    bprod, blg = borel(prod), borel(lg)
    Vx = bprod.vars
    cx = FormalSeries.from_string("1 - p - q + p*q", Vx, T)
    for k in range(T.deg_t + 1):
        part = FormalSeries(Vx, T, {(0,) + e[1:]: v
                                    for e, v in bprod.terms.items() if e[0] == k})
        ok &= cx.pow(k + 1) * part == FormalSeries.one(Vx, T)
    for k in range(1, T.deg_t + 1):
        part = FormalSeries(Vx, T, {(0,) + e[1:]: v
                                    for e, v in blg.terms.items() if e[0] == k})
        ok &= cx.pow(k) * part == \
            FormalSeries.constant(Vx, T, Fraction(1, k * k))
    _report(2, "divergent-series identities through window (8,8)", ok)


def test_criterion_3_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random(SEED)
    count = 50
    Vx = VariableSet.phase_space(1, "xi")
    T = Truncation(6, 5)
    ok = True

    for _ in range(count):
        a = random_series(rng, Vx, T, 4)
        b = random_series(rng, Vx, T, 4)
        ok &= eval_borel_star_rep(a, b) == borel_star(a, b, STANDARD)
    for _ in range(count):
        a = random_series(rng, Vx, T, 4)
        b = random_series(rng, Vx, T, 4)
        ok &= eval_moyal_rep(a, b) == borel_star(a, b, MOYAL)
    for _ in range(count):
        a = random_series(rng, Vx, T, 4)
        ok &= eval_That_rep(a) == borel_T(a)
        ok &= eval_That_rep(a, inverse=True) == borel_T(a, inverse=True)
    for _ in range(count):
        a = random_series(rng, Vx, T, 4)
        b = random_series(rng, Vx, T, 4)
        ok &= eval_formulahigh(a, b, r=1) == borel_star(a, b, STANDARD)

    V2 = VariableSet.phase_space(2, "xi")
    T2 = Truncation(6, 5)
    for _ in range(count):
        a = random_series(rng, V2, T2, 3, max_exp=2)
        b = random_series(rng, V2, T2, 3, max_exp=2)
        ok &= eval_formulahigh(a, b, r=2) == borel_star(a, b, STANDARD)

    Vu = VariableSet(("xi",))
    Tu = Truncation(8, 0)
    for _ in range(count):
        a = FormalSeries(Vu, Tu,
                         {(rng.randrange(9),): Fraction(rng.randrange(-6, 7),
                                                        rng.randrange(1, 4))
                          for _ in range(5)})
        b = FormalSeries(Vu, Tu,
                         {(rng.randrange(9),): Fraction(rng.randrange(-6, 7),
                                                        rng.randrange(1, 4))
                          for _ in range(5)})
        ok &= hadamard_contour(a, b) == hadamard(a, b)

    # pinned regression: (xi p)*(xi q) carries xi^3/3!, not xi^3/2!
    T6 = Truncation(6, 6)
    xp = FormalSeries.from_string("xi*p", Vx, T6)
    xq = FormalSeries.from_string("xi*q", Vx, T6)
    got = eval_borel_star_rep(xp, xq)
    ok &= got.coeff((3, 0, 0)) == Fraction(1, 6)
    ok &= (time.monotonic() - start) < 60.0
    _report(3, "integral representations agree with conjugation, 50 seeds each", ok)


def test_criterion_4_associativity_and_equivalence():
    rng = random.Random(SEED + 1)
    TBIG = Truncation(24, 24)
    ok = True
    triples = pairs = 0
    for dof in (1, 2):
        V = VariableSet.phase_space(dof)
        for _ in range(30):
            f = random_series(rng, V, TBIG, 4)
            g = random_series(rng, V, TBIG, 4)
            h = random_series(rng, V, TBIG, 4)
            for kind in (STANDARD, MOYAL):
                ok &= star(star(f, g, kind), h, kind) == \
                    star(f, star(g, h, kind), kind)
                triples += 1
        for _ in range(30):
            f = random_series(rng, V, TBIG, 4)
            g = random_series(rng, V, TBIG, 4)
            ok &= transition_T(standard_star(f, g)) == \
                moyal_star(transition_T(f), transition_T(g))
            pairs += 1
    ok &= triples >= 100 and pairs + triples >= 160
    _report(4, "associativity and transition equivalence, 100+ seeds, 1-2 dof", ok)


def test_criterion_5_simple_polynomial_calculus():
    Vp = VariableSet(("z1", "z2"))

    def U(text):
        return UniOverPoly.from_multipoly(MultiPoly.from_string(text, Vp), "z1")

    ok = True
    # (z1 - z2)^2 (z1 + 1), expanded, plus a degree-0 input
    fixtures = [U("z1^3 + z1^2 - 2*z1^2*z2 - 2*z1*z2 + z1*z2^2 + z2^2"),
                U("z1^2 - z2"),
                U("z2^2 + 1")]
    rng = random.Random(SEED + 2)
    for P in fixtures:
        S = simple_decompose(P)
        ok &= is_simple(S)
        if S.degree >= 1:
            ok &= gcd_over_fraction_field(S, S.diff()).degree == 0
        Pm, Sm = P.to_multipoly(), S.to_multipoly()
        for _ in range(200):
            pt = {"z1": Fraction(rng.randrange(-20, 21), rng.randrange(1, 8)),
                  "z2": Fraction(rng.randrange(-20, 21), rng.randrange(1, 8))}
            ok &= (Pm.evaluate(pt) == 0) == (Sm.evaluate(pt) == 0)
    ok &= sylvester_resultant(U("z1^2 - z2"), U("2*z1")) == \
        MultiPoly.from_string("-4*z2", Vp)
    _report(5, "square-free calculus and pinned resultant", ok)


def test_criterion_6_singular_loci():
    Vp = VariableSet(("z1", "z2"))
    Vbar = VariableSet(("z", "z2"))

    def U(text):
        return UniOverPoly.from_multipoly(MultiPoly.from_string(text, Vp), "z1")

    zbar = MultiPoly.from_string("z", Vbar)
    rng = random.Random(SEED + 3)
    ok = True

    L1 = conv_locus(U("z2*z1 + 1"), zbar)
    L2 = conv_locus(U("z1^2 + 2*z1 + z1*z2 + z2 + 1"), zbar)
    for _ in range(200):
        z = Fraction(rng.randrange(-8, 9), rng.randrange(1, 5))
        z2 = Fraction(rng.randrange(-8, 9), rng.randrange(1, 5))
        ok &= L1.contains_exact({"z": z, "z2": z2}) == (z2 * (z2 * z + 1) == 0)
        ok &= L2.contains_exact({"z": z, "z2": z2}) == \
            (z2 * (z + 1) * (z + z2 + 1) * (z2 + 1) == 0)

    L3 = conv_locus(U("-z1^2 + 2*z1*z2 - z2^2 - z1 + z2"),
                    MultiPoly.from_string("z2", Vbar))
    ok &= all(L3.contains_exact({"z": Fraction(7), "z2": v}) == (v in (0, 1))
              for v in (Fraction(0), Fraction(1), Fraction(2), Fraction(-1),
                        Fraction(1, 2)))

    H = hadamard_locus_1d([Fraction(1)], [Fraction(1)])
    ok &= (H.contains_exact({"xi": 0}) and H.contains_exact({"xi": 1})
           and not H.contains_exact({"xi": 2}))

    # 5-variable locus of the worked linear-times-quadratic pairing:
    # w1 = 3 - xi1 - q - p,  A = 3 - xi2 - q - p,  B = 4 - xi2 - 2q - p,
    # branch gaps O1 = xi3/A, O2 = 2 xi3/B.  The five membership conditions
    # are A = 0, B = 0, w1 = O1, w1 = O2, O1 = O2.
    Vf = VariableSet(("xi1", "q", "p"))
    Vg = VariableSet(("xi2", "q", "p"))
    Pf = UniOverPoly.from_multipoly(
        MultiPoly.from_string("3 - xi1 - q - p", Vf), "p")
    Qg = UniOverPoly.from_multipoly(
        MultiPoly.from_string(
            "12 - 7*xi2 - 10*q - 7*p + xi2^2 + 3*xi2*q + 2*q^2"
            " + 2*xi2*p + 3*q*p + p^2", Vg), "q")
    L5 = hadamard_locus_5var(Pf, Qg)
    for _ in range(6):
        xi1, q, p, xi3, xi2 = (Fraction(rng.randrange(-8, 9), 4)
                               for _ in range(5))
        w1 = 3 - xi1 - q - p
        A = 3 - xi2 - q - p
        B = 4 - xi2 - 2 * q - p
        points = [
            {"xi1": xi1, "xi2": 3 - q - p, "xi3": xi3, "q": q, "p": p},
            {"xi1": xi1, "xi2": 4 - 2 * q - p, "xi3": xi3, "q": q, "p": p},
            {"xi1": xi1, "xi2": xi2, "xi3": w1 * A, "q": q, "p": p},
            {"xi1": xi1, "xi2": xi2, "xi3": w1 * B / 2, "q": q, "p": p},
            {"xi1": xi1, "xi2": 2 - p, "xi3": xi3, "q": q, "p": p},
        ]
        ok &= all(L5.contains_numeric(pt, 1e-9) for pt in points)
    _report(6, "convolution, Hadamard, and 5-variable loci", ok)


def test_criterion_7_radius_vs_locus():
    start = time.monotonic()
    rng = random.Random(SEED + 4)
    V = euler_singular_locus()
    points = []
    while len(points) < 10:
        q = Fraction(rng.randrange(-3, 4), 10)
        p = Fraction(rng.randrange(-3, 4), 10)
        if (1 - q) * (1 - p) != 0:
            points.append({"q": q, "p": p})

    fam = lambda pt: euler_borel_coeffs(pt["q"], pt["p"], 14)
    reports = check_radius_vs_locus(fam, V, points, 1e-6, method="ratio")
    ok = all(r.verdict == "pass" for r in reports)

    fam2 = lambda pt: logstar_borel_coeffs(pt["q"], pt["p"], 40)
    reports = check_radius_vs_locus(fam2, V, points, 0.1, method="ratio")
    ok &= all(r.verdict == "pass" for r in reports)

    poly = V.groups[0][0].poly
    shifted = Variety(V.vars,
                      [[Leaf("shifted", poly + MultiPoly.one(poly.vars))]])
    reports = check_radius_vs_locus(fam, shifted, points, 1e-6, method="ratio")
    ok &= all(r.verdict == "fail" for r in reports)
    ok &= (time.monotonic() - start) < 30.0
    _report(7, "radius versus locus with negative control", ok)


def test_criterion_8_quadrature_cross_check():
    vars = VariableSet(("xi",))
    trunc = Truncation(6, 0)
    rng = random.Random(SEED + 5)
    a = FormalSeries(vars, trunc, {(k,): Fraction(rng.randrange(-9, 10), 2)
                                   for k in range(7)})
    b = FormalSeries(vars, trunc, {(k,): Fraction(rng.randrange(-9, 10), 2)
                                   for k in range(7)})
    vals = quadrature_hadamard(a, b, 32)
    exact = hadamard(a, b)
    ok = all(abs(vals[k] - float(exact.coeff((k,)) or 0)) < 1e-12
             for k in range(7))
    try:
        quadrature_hadamard(a, b, 4)
        ok = False
    except AliasingError:
        pass
    _report(8, "trapezoid Hadamard quadrature and aliasing guard", ok)
