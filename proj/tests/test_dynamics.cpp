#include "doctest.h"

#include <random>
#include <vector>

#include "qmech/dynamics.hpp"

using namespace qmech;

namespace {

const ScalarExpr m = ScalarExpr::parameter("m");
const ScalarExpr w = ScalarExpr::parameter("w");

// Effective mass: 2 m q^(3/2) / (1 + q^2).
ScalarExpr effective_mass() {
    return 2 * m * ScalarExpr::s_power(3) / qint(2);
}

// Effective frequency: w (1 + q^2) / (2 q^2).
ScalarExpr effective_frequency() {
    return w * qint(2) / (2 * ScalarExpr::q_power(2));
}

QPoly random_qpoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> spow(-2, 2);
    QPoly out;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        int n = deg(rng);
        std::uniform_int_distribution<int> rest(0, max_degree - n);
        int mm = rest(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        out.add(n, mm, ScalarExpr(c) * ScalarExpr::s_power(spow(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("free particle moves with the effective mass") {
    HamiltonianSpec spec = HamiltonianSpec::free_particle(m);
    MotionEquations eq = hamilton_equations(spec.to_qpoly());
    CHECK(eq.xdot == QPoly::monomial(0, 1, effective_mass().inverse()));
    CHECK(eq.pdot.is_zero());
    // The coefficient spelled out: (1 + q^2) / (2 m q^(3/2)).
    CHECK(eq.xdot.coeff(0, 1) ==
          qint(2) / (2 * m * ScalarExpr::s_power(3)));
}

TEST_CASE("harmonic oscillator equations") {
    HamiltonianSpec spec = HamiltonianSpec::harmonic(m, w);
    MotionEquations eq = hamilton_equations(spec.to_qpoly());
    ScalarExpr mq = effective_mass();
    ScalarExpr wq = effective_frequency();
    CHECK(eq.xdot == QPoly::monomial(0, 1, mq.inverse()));
    CHECK(eq.pdot == QPoly::monomial(1, 0, -(mq * wq * wq)));
    // Spelled out: m_q w_q^2 = m w^2 (1 + q^2) q^(-5/2) / 2.
    CHECK(mq * wq * wq ==
          m * w * w * qint(2) * ScalarExpr::s_power(-5) / 2);
}

TEST_CASE("the two equation routes agree") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly h = random_qpoly(rng, 5);
        MotionEquations a = hamilton_equations(h);
        MotionEquations b = hamilton_equations_bracket(h);
        CHECK(a.xdot == b.xdot);
        CHECK(a.pdot == b.pdot);
    }
}

TEST_CASE("time derivative routes agree") {
    std::mt19937 rng(60606);
    for (int trial = 0; trial < 60; ++trial) {
        QPoly f = random_qpoly(rng, 4);
        QPoly h = random_qpoly(rng, 4);
        CHECK(time_derivative(f, h) == time_derivative_monomial(f, h));
    }
}

TEST_CASE("force on power potentials") {
    // The left derivative of x^n is [n] q^(-2(n-1)) x^(n-1): the right-hand
    // [n] x^(n-1) plus one q^(-2) per x the differential crosses on its way
    // back.  force multiplies by -q^(-1/2).
    for (int n = 1; n <= 6; ++n) {
        QPoly v = QPoly::monomial(n, 0, ScalarExpr(3));
        ScalarExpr expected = -3 * ScalarExpr::s_power(-1) * qint(n) *
                              ScalarExpr::q_power(-2 * (n - 1));
        CHECK(force(v) == QPoly::monomial(n - 1, 0, expected));
    }
    CHECK(force(QPoly(5)).is_zero());
    // Consistency with the oscillator: force of V_h is exactly pdot.
    HamiltonianSpec osc = HamiltonianSpec::harmonic(m, w);
    QPoly vh = QPoly::monomial(2, 0, m * w * w / 2);
    CHECK(force(vh) == hamilton_equations(osc.to_qpoly()).pdot);
}

TEST_CASE("free Hamiltonian is its own conserved quantity") {
    HamiltonianSpec spec = HamiltonianSpec::free_particle(m);
    QPoly h = spec.to_qpoly();
    CHECK(time_derivative(h, h).is_zero());
    CHECK(find_conserved(spec) == h);
}

TEST_CASE("oscillator effective energy") {
    HamiltonianSpec spec = HamiltonianSpec::harmonic(m, w);
    QPoly e = find_conserved(spec);
    // E = p^2/(2m) + (m w^2 / (2 q^2)) x^2: only the potential term deforms.
    QPoly expected;
    expected.add(0, 2, (2 * m).inverse());
    expected.add(2, 0, m * w * w / (2 * ScalarExpr::q_power(2)));
    CHECK(e == expected);
    CHECK(time_derivative(e, spec.to_qpoly()).is_zero());

    // The Hamiltonian itself is not conserved: its drift is the exact
    // monomial q^(3/2) (q^2 - 1) w^2 (1+q^2)^2 q^(-4) / 4 * x p.
    QPoly h = spec.to_qpoly();
    ScalarExpr drift_coeff = ScalarExpr::s_power(3) *
                             (ScalarExpr::q_power(2) - 1) * w * w *
                             qint(2) * qint(2) * ScalarExpr::q_power(-4) / 4;
    CHECK(time_derivative(h, h) == QPoly::monomial(1, 1, drift_coeff));
}

TEST_CASE("power-law potentials deform coefficient by a fixed q power") {
    // For V = c_n x^n the conserved partner has d_n = c_n q^(4 - 3n).
    for (int n = 1; n <= 8; ++n) {
        ScalarExpr cn = ScalarExpr::parameter("a");
        HamiltonianSpec spec;
        spec.mass = m;
        spec.potential.emplace_back(n, cn);
        QPoly e = find_conserved(spec);
        CHECK(e.coeff(0, 2) == (2 * m).inverse());
        CHECK(e.coeff(n, 0) == cn * ScalarExpr::q_power(4 - 3 * n));
        CHECK(time_derivative(e, spec.to_qpoly()).is_zero());
    }
}

TEST_CASE("mixed potentials solve termwise") {
    HamiltonianSpec spec;
    spec.mass = m;
    std::vector<int> powers = {1, 3, 7};
    for (int n : powers) {
        spec.potential.emplace_back(
            n, ScalarExpr::parameter("c" + std::to_string(n)));
    }
    QPoly e = find_conserved(spec);
    for (int n : powers) {
        ScalarExpr cn = ScalarExpr::parameter("c" + std::to_string(n));
        CHECK(e.coeff(n, 0) == cn * ScalarExpr::q_power(4 - 3 * n));
    }
    CHECK(time_derivative(e, spec.to_qpoly()).is_zero());
    // Setting q = 1 collapses the conserved quantity back onto H itself.
    CHECK(e.at_q1() == spec.to_qpoly().at_q1());
}

TEST_CASE("spec validation") {
    HamiltonianSpec zero_mass;
    zero_mass.mass = ScalarExpr(0);
    CHECK_THROWS_AS(zero_mass.to_qpoly(), Error);

    HamiltonianSpec bad_exponent;
    bad_exponent.mass = ScalarExpr(1);
    bad_exponent.potential.emplace_back(0, ScalarExpr(1));
    CHECK_THROWS_AS(bad_exponent.to_qpoly(), Error);

    HamiltonianSpec zero_coeff;
    zero_coeff.mass = ScalarExpr(1);
    zero_coeff.potential.emplace_back(2, ScalarExpr(0));
    CHECK_THROWS_AS(zero_coeff.to_qpoly(), Error);
}
