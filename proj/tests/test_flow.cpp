#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qmech/flow.hpp"

using namespace qmech;

namespace {

FlowProblem oscillator_problem(double q) {
    FlowProblem prob;
    prob.spec = HamiltonianSpec::harmonic(ScalarExpr::parameter("m"),
                                          ScalarExpr::parameter("w"));
    prob.bindings = {{"m", 1.0}, {"w", 1.0}};
    prob.q_value = q;
    prob.x0 = 1.0;
    prob.p0 = 0.0;
    return prob;
}

}  // namespace

TEST_CASE("undeformed oscillator follows the cosine") {
    FlowProblem prob = oscillator_problem(1.0);
    prob.dt = 1e-3;
    prob.steps = 2000;
    Trajectory traj = integrate(prob);
    REQUIRE(traj.samples.size() == 2001);
    double max_err = 0.0;
    for (const auto& s : traj.samples) {
        max_err = std::max(max_err, std::abs(s.x - std::cos(s.t)));
        max_err = std::max(max_err, std::abs(s.p + std::sin(s.t)));
    }
    CHECK(max_err < 1e-9);
}

TEST_CASE("deformed oscillator conserves the shadow energy, not H") {
    FlowProblem prob = oscillator_problem(1.3);
    prob.dt = 1e-3;
    prob.steps = 4000;
    Trajectory traj = integrate(prob);

    double q = prob.q_value;
    // Shadow coefficients: xdot = inv_mq * p, pdot = -stiffness * x.
    double inv_mq = 0.5 * (std::sqrt(q) + std::pow(q, -1.5));
    double stiffness = 0.5 * (std::pow(q, -0.5) + std::pow(q, -2.5));
    auto shadow_energy = [&](const TrajectorySample& s) {
        return 0.5 * inv_mq * s.p * s.p + 0.5 * stiffness * s.x * s.x;
    };

    double e0 = shadow_energy(traj.samples.front());
    double own_drift = 0.0;
    double eq_drift = 0.0;
    for (const auto& s : traj.samples) {
        own_drift = std::max(own_drift,
                             std::abs(shadow_energy(s) - e0) / std::abs(e0));
        eq_drift = std::max(eq_drift,
                            std::abs(s.eq - traj.samples.front().eq));
    }
    CHECK(own_drift < 1e-8);
    // The recorded deformed energy is a symbolic invariant, not a shadow
    // one; on the shadow flow it oscillates visibly for q away from 1.
    CHECK(eq_drift > 1e-4);

    // The closed-form reference integrates the same shadow system.
    double terr = 0.0;
    for (const auto& s : traj.samples) {
        auto [xr, pr] = analytic_reference(prob, s.t);
        terr = std::max(terr, std::abs(s.x - xr));
        terr = std::max(terr, std::abs(s.p - pr));
    }
    CHECK(terr < 1e-6);
}

TEST_CASE("free particle is exact up to roundoff") {
    FlowProblem prob;
    prob.spec = HamiltonianSpec::free_particle(ScalarExpr::parameter("m"));
    prob.bindings = {{"m", 2.0}};
    prob.q_value = 1.5;
    prob.x0 = 0.25;
    prob.p0 = 1.5;
    prob.dt = 1e-2;
    prob.steps = 500;
    Trajectory traj = integrate(prob);
    double q = prob.q_value;
    double inv_mq = (1.0 + q * q) / (2.0 * 2.0 * std::pow(q, 1.5));
    for (const auto& s : traj.samples) {
        CHECK(std::abs(s.x - (prob.x0 + s.t * inv_mq * prob.p0)) < 1e-10);
        CHECK(std::abs(s.p - prob.p0) < 1e-12);
        auto [xr, pr] = analytic_reference(prob, s.t);
        CHECK(std::abs(s.x - xr) < 1e-10);
        CHECK(std::abs(s.p - pr) < 1e-12);
    }
}

TEST_CASE("step halving shows fourth-order convergence") {
    FlowProblem coarse = oscillator_problem(1.2);
    coarse.dt = 2e-2;
    coarse.steps = 500;
    FlowProblem fine = coarse;
    fine.dt = 1e-2;
    fine.steps = 1000;

    auto endpoint_error = [](const FlowProblem& prob) {
        Trajectory traj = integrate(prob);
        const auto& last = traj.samples.back();
        auto [xr, pr] = analytic_reference(prob, last.t);
        return std::hypot(last.x - xr, last.p - pr);
    };
    double ratio = endpoint_error(coarse) / endpoint_error(fine);
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("oscillator reference hits the quarter and half periods") {
    FlowProblem prob = oscillator_problem(1.0);
    double pi = 3.14159265358979323846;
    auto [xh, ph] = analytic_reference(prob, pi);
    CHECK(std::abs(xh + 1.0) < 1e-12);
    CHECK(std::abs(ph) < 1e-12);
    auto [xq, pq] = analytic_reference(prob, pi / 2);
    CHECK(std::abs(xq) < 1e-12);
    CHECK(std::abs(pq + 1.0) < 1e-12);
}

TEST_CASE("csv output shape") {
    FlowProblem prob = oscillator_problem(1.0);
    prob.dt = 0.5;
    prob.steps = 3;
    Trajectory traj = integrate(prob);
    std::ostringstream oss;
    write_csv(traj, oss);
    std::istringstream iss(oss.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(iss, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "t,x,p,H,Eq");
    // Every data row carries five comma-separated numeric fields that parse
    // back to the recorded values.
    for (std::size_t r = 1; r < lines.size(); ++r) {
        std::istringstream row(lines[r]);
        std::string field;
        std::vector<double> vals;
        while (std::getline(row, field, ',')) vals.push_back(std::strtod(field.c_str(), nullptr));
        REQUIRE(vals.size() == 5);
        const auto& s = traj.samples[r - 1];
        CHECK(vals[0] == s.t);
        CHECK(vals[1] == s.x);
        CHECK(vals[2] == s.p);
        CHECK(vals[3] == s.h);
        CHECK(vals[4] == s.eq);
    }
}

TEST_CASE("invalid problems are rejected") {
    FlowProblem bad_dt = oscillator_problem(1.0);
    bad_dt.dt = 0.0;
    CHECK_THROWS_AS(integrate(bad_dt), Error);
    bad_dt.dt = -1e-3;
    CHECK_THROWS_AS(integrate(bad_dt), Error);

    FlowProblem negative_steps = oscillator_problem(1.0);
    negative_steps.steps = -1;
    CHECK_THROWS_AS(integrate(negative_steps), Error);

    FlowProblem unbound = oscillator_problem(1.0);
    unbound.bindings.erase("w");
    CHECK_THROWS_AS(integrate(unbound), UnboundParameterError);

    // No closed form for a cubic potential.
    FlowProblem cubic = oscillator_problem(1.0);
    cubic.spec.potential.clear();
    cubic.spec.potential.emplace_back(3, ScalarExpr(1));
    CHECK_THROWS_AS(analytic_reference(cubic, 1.0), UnsupportedPotentialError);
    // Nor for a repulsive quadratic one.
    FlowProblem repulsive = oscillator_problem(1.0);
    repulsive.spec.potential.clear();
    repulsive.spec.potential.emplace_back(2, ScalarExpr(-1));
    CHECK_THROWS_AS(analytic_reference(repulsive, 1.0),
                    UnsupportedPotentialError);
}

TEST_CASE("runaway states stop with a finite-range error") {
    FlowProblem blowup;
    blowup.spec.mass = ScalarExpr(1);
    blowup.spec.potential.emplace_back(4, ScalarExpr(-1));  // -x^4, repulsive
    blowup.q_value = 1.0;
    blowup.x0 = 10.0;
    blowup.p0 = 0.0;
    blowup.dt = 0.1;
    blowup.steps = 200;
    CHECK_THROWS_AS(integrate(blowup), NonFiniteStateError);
}
