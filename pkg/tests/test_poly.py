import random

import pytest

from cadorder import Polynomial, Variable, canonicalize, discriminant, resultant
from conftest import random_polynomial
from oracles import sylvester_resultant

x, y, z = Variable("x"), Variable("y"), Variable("z")
X, Y, Z = Polynomial.variable(x), Polynomial.variable(y), Polynomial.variable(z)


class TestBasics:
    def test_degree_in(self):
        assert (Y**2 * Z + 1).degree_in(y) == 2
        assert (X**4 + Y).degree_in(z) == 0
        assert Polynomial.zero().degree_in(x) == 0

    def test_total_degree(self):
        assert (Y**2 * Z + 1).total_degree() == 3
        assert Polynomial.constant(7).total_degree() == 0
        assert (X**4 + Y).total_degree() == 4

    def test_coefficients_wrt(self):
        assert (X**2 + Y).coefficients_wrt(x) == [Y, Polynomial.zero(), Polynomial.constant(1)]
        assert (X**2 + Y).coefficients_wrt(y) == [X**2, Polynomial.constant(1)]
        assert Polynomial.constant(5).coefficients_wrt(x) == [Polynomial.constant(5)]

    def test_derivative(self):
        assert (X**2 + Y).derivative(x) == 2 * X
        assert (Y**2 * Z + 1).derivative(y) == 2 * Y * Z
        assert Polynomial.constant(7).derivative(x) == Polynomial.zero()

    def test_equality_ignores_construction_order(self):
        assert X + Y == Y + X
        assert hash(X * Y + 1) == hash(1 + Y * X)


class TestRingLaws:
    def test_random_ring_laws(self):
        rng = random.Random(1)
        for _ in range(100):
            p = random_polynomial(rng, [x, y], max_degree=3, nonzero=False)
            q = random_polynomial(rng, [x, y], max_degree=3, nonzero=False)
            r = random_polynomial(rng, [x, y], max_degree=3, nonzero=False)
            assert (p + q) + r == p + (q + r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r

    def test_leibniz_rule(self):
        rng = random.Random(2)
        for _ in range(100):
            p = random_polynomial(rng, [x, y], max_degree=3)
            q = random_polynomial(rng, [x, y], max_degree=3)
            lhs = (p * q).derivative(x)
            rhs = p.derivative(x) * q + p * q.derivative(x)
            assert lhs == rhs


class TestResultant:
    def test_worked_examples(self):
        assert resultant(X**2 - Y, X - 1, x) == 1 - Y
        assert resultant(X - 1, X - 1, x) == Polynomial.zero()
        assert resultant(X**2 - 2, Polynomial.constant(3), x) == Polynomial.constant(9)

    def test_both_constant_convention(self):
        assert resultant(Polynomial.constant(5), Polynomial.constant(7), x) == Polynomial.constant(1)

    def test_zero_operand(self):
        with pytest.raises(ValueError, match="zero operand"):
            resultant(Polynomial.zero(), X, x)
        with pytest.raises(ValueError, match="zero operand"):
            resultant(X, Polynomial.zero(), x)

    def test_matches_sylvester_determinant(self):
        rng = random.Random(3)
        checked = 0
        while checked < 200:
            p = random_polynomial(rng, [x, y], max_degree=4, max_terms=4)
            q = random_polynomial(rng, [x, y], max_degree=4, max_terms=4)
            if p.degree_in(x) < 1 or q.degree_in(x) < 1:
                continue
            assert resultant(p, q, x) == sylvester_resultant(p, q, x)
            checked += 1

    def test_antisymmetry(self):
        rng = random.Random(4)
        checked = 0
        while checked < 60:
            p = random_polynomial(rng, [x, y], max_degree=3)
            q = random_polynomial(rng, [x, y], max_degree=3)
            dp, dq = p.degree_in(x), q.degree_in(x)
            if dp < 1 or dq < 1:
                continue
            sign = -1 if (dp * dq) % 2 else 1
            assert resultant(p, q, x) == sign * resultant(q, p, x)
            checked += 1

    def test_multiplicativity(self):
        rng = random.Random(5)
        checked = 0
        while checked < 60:
            p = random_polynomial(rng, [x, y], max_degree=3)
            q = random_polynomial(rng, [x, y], max_degree=2)
            r = random_polynomial(rng, [x, y], max_degree=2)
            if min(p.degree_in(x), q.degree_in(x), r.degree_in(x)) < 1:
                continue
            assert resultant(p, q * r, x) == resultant(p, q, x) * resultant(p, r, x)
            checked += 1


class TestDiscriminant:
    def test_worked_examples(self):
        assert discriminant(X**2 + Y, x) == 4 * Y
        assert discriminant(X**2 - 1, x) == Polynomial.constant(-4)

    def test_degree_too_low(self):
        with pytest.raises(ValueError, match="degree too low"):
            discriminant(X + 1, x)


class TestCanonicalize:
    def test_examples(self):
        assert canonicalize(-4 * Y) == Y
        assert canonicalize(6 * X - 9) == 2 * X - 3
        assert canonicalize(Polynomial.zero()) == Polynomial.zero()

    def test_idempotent(self):
        rng = random.Random(6)
        for _ in range(100):
            p = random_polynomial(rng, [x, y, z], max_degree=3, nonzero=False)
            once = canonicalize(p)
            assert canonicalize(once) == once

    def test_positive_leading_coefficient(self):
        rng = random.Random(7)
        for _ in range(50):
            p = random_polynomial(rng, [x, y], max_degree=3)
            c = canonicalize(p)
            assert c.leading_coefficient() > 0
            assert c.content() == 1
