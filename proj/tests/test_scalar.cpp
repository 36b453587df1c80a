#include "doctest.h"

#include <complex>
#include <random>

#include "qmech/scalar.hpp"

using namespace qmech;

namespace {

// Independent draw of a nonzero one-term scalar.
ScalarExpr monomial_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> spow(-3, 3);
    int n = num(rng);
    if (n == 0) n = 2;
    return ScalarExpr::rational(n, den(rng)) * ScalarExpr::s_power(spow(rng));
}

}  // namespace

TEST_CASE("q-integers match their defining sums") {
    const ScalarExpr q2 = ScalarExpr::q_power(2);
    CHECK(qint(0) == ScalarExpr(0));
    CHECK(qint(1) == ScalarExpr(1));
    CHECK(qint(2) == 1 + q2);
    CHECK(qint(3) == 1 + q2 + ScalarExpr::q_power(4));
    CHECK(qint1(3) == 1 + ScalarExpr::q_power(1) + q2);
    CHECK(qint1(1) == ScalarExpr(1));
    CHECK_THROWS_AS(qint(-1), Error);
}

TEST_CASE("q-integer equals its difference-quotient closed form") {
    // [n] = (q^(2n) - 1) / (q^2 - 1), built without the summation code path.
    for (int n = 1; n <= 9; ++n) {
        ScalarExpr closed(Poly::s_power(4 * n) - Poly(1), Poly::s_power(4) - Poly(1));
        CHECK(qint(n) == closed);
    }
    for (int n = 1; n <= 9; ++n) {
        ScalarExpr closed(Poly::s_power(2 * n) - Poly(1), Poly::s_power(2) - Poly(1));
        CHECK(qint1(n) == closed);
    }
}

TEST_CASE("cross-multiplied equality ignores representation") {
    // Same value, triply different num/den pairs.
    ScalarExpr a(Poly(1) - Poly::s_power(8), Poly(1) - Poly::s_power(4));
    ScalarExpr b = 1 + ScalarExpr::q_power(2);
    ScalarExpr m = ScalarExpr::parameter("m");
    CHECK(a == b);
    CHECK(a * m / m == b);
    CHECK_FALSE(a == b + 1);
}

TEST_CASE("field axioms hold on random values") {
    std::mt19937 rng(20240811);
    for (int k = 0; k < 60; ++k) {
        ScalarExpr a = monomial_scalar(rng) + monomial_scalar(rng);
        ScalarExpr b = monomial_scalar(rng) * ScalarExpr::parameter("m");
        ScalarExpr c = monomial_scalar(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == ScalarExpr(1));
            CHECK(b.pow(-2) == (b * b).inverse());
        }
    }
}

TEST_CASE("powers and inverses") {
    ScalarExpr v = (1 + ScalarExpr::q_power(2)) * ScalarExpr::parameter("w");
    CHECK(v.pow(0) == ScalarExpr(1));
    CHECK(v.pow(3) == v * v * v);
    CHECK(v.pow(-1) == v.inverse());
    CHECK(v.pow(-3) * v.pow(3) == ScalarExpr(1));
    CHECK_THROWS_AS(ScalarExpr(0).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(ScalarExpr(1) / ScalarExpr(0), DivisionByZeroError);
    CHECK_THROWS_AS(ScalarExpr::rational(1, 0), DivisionByZeroError);
}

TEST_CASE("imaginary unit squares to minus one") {
    ScalarExpr i = ScalarExpr::imaginary_unit();
    CHECK(i * i == ScalarExpr(-1));
    CHECK(i.inverse() == -i);
}

TEST_CASE("substitutions") {
    ScalarExpr v = qint(4);
    CHECK(v.at_q1() == ScalarExpr(4));
    CHECK(qint(3).subst_s(BigRat(2)) == ScalarExpr(BigRat(1 + 16 + 256)));

    ScalarExpr expr = ScalarExpr::parameter("m") * ScalarExpr::q_power(1) + 1;
    CHECK(expr.subst_param("m", ScalarExpr(2)) == 2 * ScalarExpr::q_power(1) + 1);

    // 1/(q - 1) has no value at q = 1.
    ScalarExpr singular = ScalarExpr(1) / (ScalarExpr::q_power(1) - 1);
    CHECK_THROWS_AS(singular.subst_s(BigRat(1)), SingularEvaluationError);
}

TEST_CASE("linear split recovers both parts") {
    ScalarExpr alpha = qint(3) * ScalarExpr::parameter("m");
    ScalarExpr beta = ScalarExpr::rational(-7, 2) * ScalarExpr::s_power(-3);
    ScalarExpr combined = alpha * ScalarExpr::parameter("d") + beta;
    auto [a, b] = combined.split_linear("d");
    CHECK(a == alpha);
    CHECK(b == beta);

    ScalarExpr quadratic = ScalarExpr::parameter("d").pow(2);
    CHECK_THROWS_AS(quadratic.split_linear("d"), SolveError);
    ScalarExpr in_den = ScalarExpr(1) / ScalarExpr::parameter("d");
    CHECK_THROWS_AS(in_den.split_linear("d"), SolveError);
}

TEST_CASE("numeric evaluation") {
    ScalarExpr e = (1 + ScalarExpr::q_power(2)) / (2 * ScalarExpr::q_power(1));
    double q = 1.7;
    std::complex<double> got = e.eval_numeric({}, q);
    CHECK(std::abs(got - std::complex<double>((1.0 + q * q) / (2.0 * q))) < 1e-12);

    ScalarExpr with_param = ScalarExpr::parameter("m") * ScalarExpr::s_power(2);
    CHECK(std::abs(with_param.eval_numeric({{"m", 3.0}}, 4.0) -
                   std::complex<double>(12.0)) < 1e-12);
    CHECK_THROWS_AS(with_param.eval_numeric({}, 4.0), UnboundParameterError);

    ScalarExpr pole = ScalarExpr(1) / (ScalarExpr::q_power(1) - 1);
    CHECK_THROWS_AS(pole.eval_numeric({}, 1.0), SingularEvaluationError);
    CHECK_THROWS_AS(pole.eval_numeric({}, -2.0), SingularEvaluationError);
}

TEST_CASE("canonical form keeps denominators monic and content-free") {
    // (2 s^-3) / (4 s^-1): value s^-2 / 2; representation must have the
    // lowest s exponent at zero across num and den and a unit-leading den.
    ScalarExpr v(Poly::s_power(-3).scaled(GaussRat(2)),
                 Poly::s_power(-1).scaled(GaussRat(4)));
    CHECK(v == ScalarExpr::rational(1, 2) * ScalarExpr::s_power(-2));
    CHECK(v.den().leading_coeff().is_one());
    CHECK(v.num().content().s_exp >= 0);
    CHECK_THROWS_AS(ScalarExpr(Poly(1), Poly(0)), DivisionByZeroError);
}
