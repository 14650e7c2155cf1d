import random
from fractions import Fraction

from starborel import (
    MOYAL,
    STANDARD,
    FormalSeries,
    LaurentSlice,
    Truncation,
    VariableSet,
    borel_T,
    borel_star,
    eval_borel_star_rep,
    eval_formulahigh,
    eval_moyal_rep,
    eval_That_rep,
    hadamard,
    hadamard_contour,
)

B1 = VariableSet.phase_space(1, "xi")
B2 = VariableSet.phase_space(2, "xi")
T1 = Truncation(6, 5)
T2 = Truncation(5, 4)


def rand_poly(rng, vars, trunc, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = [rng.randrange(3) for _ in vars.names]
        e[0] = rng.randrange(2)
        terms[tuple(e)] = Fraction(rng.randrange(-5, 6), rng.randrange(1, 3))
    return FormalSeries(vars, trunc, terms)


class TestLaurentSlice:
    def test_residue(self):
        s = LaurentSlice({-1: 3, 0: 7, 2: 1})
        assert s.residue() == 3
        assert s.shift(-1).residue() == 7
        assert s.shift(1).residue() is None

    def test_arithmetic(self):
        a = LaurentSlice({1: 2})
        b = LaurentSlice({-2: 5})
        assert (a * b).residue() == 10
        assert (a + a).shift(-2).residue() == 4


class TestStandardRep:
    def test_matches_borel_star_one_dof(self):
        rng = random.Random(51)
        for _ in range(25):
            f = rand_poly(rng, B1, T1)
            g = rand_poly(rng, B1, T1)
            assert eval_borel_star_rep(f, g) == borel_star(f, g, STANDARD)

    def test_pinned_cubic(self):
        # f = g = xi gives the pure convolution value xi^2/2
        xi = FormalSeries.variable(B1, T1, "xi")
        got = eval_borel_star_rep(xi, xi)
        assert got == borel_star(xi, xi, STANDARD)

    def test_general_r_two_dof(self):
        rng = random.Random(52)
        for _ in range(10):
            f = rand_poly(rng, B2, T2)
            g = rand_poly(rng, B2, T2)
            assert eval_formulahigh(f, g) == borel_star(f, g, STANDARD)

    def test_zero_inputs(self):
        z = FormalSeries.zero(B1, T1)
        f = FormalSeries.variable(B1, T1, "p")
        assert eval_formulahigh(z, f).is_zero
        assert eval_formulahigh(f, z).is_zero


class TestMoyalRep:
    def test_matches_borel_star_one_dof(self):
        rng = random.Random(53)
        for _ in range(25):
            f = rand_poly(rng, B1, T1)
            g = rand_poly(rng, B1, T1)
            assert eval_moyal_rep(f, g) == borel_star(f, g, MOYAL)

    def test_antisymmetric_leading_term(self):
        p = FormalSeries.variable(B1, T1, "p")
        q = FormalSeries.variable(B1, T1, "q")
        comm = eval_moyal_rep(p, q) - eval_moyal_rep(q, p)
        assert comm == FormalSeries.variable(B1, T1, "xi")


class TestThatRep:
    def test_matches_operator(self):
        rng = random.Random(54)
        for _ in range(25):
            f = rand_poly(rng, B1, T1)
            assert eval_That_rep(f) == borel_T(f)
            assert eval_That_rep(f, inverse=True) == borel_T(f, inverse=True)

    def test_roundtrip(self):
        rng = random.Random(55)
        f = rand_poly(rng, B1, T1)
        assert eval_That_rep(eval_That_rep(f), inverse=True) == f


class TestHadamardContour:
    def test_matches_coefficientwise(self):
        vars = VariableSet(("xi",))
        trunc = Truncation(8, 0)
        rng = random.Random(56)
        for _ in range(25):
            a = FormalSeries(vars, trunc,
                             {(k,): Fraction(rng.randrange(-4, 5))
                              for k in range(7)})
            b = FormalSeries(vars, trunc,
                             {(k,): Fraction(rng.randrange(-4, 5))
                              for k in range(7)})
            assert hadamard_contour(a, b) == hadamard(a, b)
