// End-to-end acceptance checks for the deformed-mechanics engine.  Each
// criterion prints one [PASS]/[FAIL] line with its wall time; the process
// exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmech/cli.hpp"
#include "qmech/dynamics.hpp"
#include "qmech/flow.hpp"
#include "qmech/quantization.hpp"
#include "qmech/realization.hpp"
#include "qmech/symplectic.hpp"

using namespace qmech;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), seconds, detail.empty() ? "" : " — ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool expect(bool cond, std::string& detail, const std::string& message) {
    if (!cond && detail.empty()) detail = message;
    return cond;
}

std::string cli_stdout(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    qmech::cli::run(args, out, err);
    return out.str();
}

QPoly random_qpoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> spow(-2, 2);
    QPoly out;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        int n = deg(rng);
        std::uniform_int_distribution<int> rest(0, max_degree - n);
        int m = rest(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        out.add(n, m, ScalarExpr(c) * ScalarExpr::s_power(spow(rng)));
    }
    return out;
}

ShadowPoly classical_pb(const ShadowPoly& f, const ShadowPoly& g) {
    return f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0);
}

const ScalarExpr kM = ScalarExpr::parameter("m");
const ScalarExpr kW = ScalarExpr::parameter("w");

ScalarExpr effective_mass() { return 2 * kM * ScalarExpr::s_power(3) / qint(2); }
ScalarExpr effective_frequency() {
    return kW * qint(2) / (2 * ScalarExpr::q_power(2));
}

double steady_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

int main() {
    criterion(1, "generator brackets through the command line", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        ok &= expect(cli_stdout({"bracket", "x", "p"}) == "q^(1/2)\n", d,
                     "{x,p} text mismatch");
        ok &= expect(cli_stdout({"bracket", "p", "x"}) == "-q^(-1/2)\n", d,
                     "{p,x} text mismatch");
        ok &= expect(cli_stdout({"bracket", "x", "x"}) == "0\n", d,
                     "{x,x} text mismatch");
        ok &= expect(cli_stdout({"bracket", "p", "p"}) == "0\n", d,
                     "{p,p} text mismatch");
        ok &= expect(steady_seconds(start) < 1.0, d, "exceeded 1 s");
        return ok;
    });

    criterion(2, "broken skew-symmetry of the generator brackets", [](std::string& d) {
        QPoly xp = qpb_direct(QPoly::x(), QPoly::p());
        QPoly px = qpb_direct(QPoly::p(), QPoly::x());
        bool ok = true;
        ok &= expect((xp + ScalarExpr::q_power(1) * px).is_zero(), d,
                     "{x,p} + q {p,x} != 0");
        ok &= expect(xp * px == QPoly(-1), d, "{x,p} {p,x} != -1");
        return ok;
    });

    criterion(3, "free-particle equations of motion", [](std::string& d) {
        QPoly h = HamiltonianSpec::free_particle(kM).to_qpoly();
        MotionEquations eq = hamilton_equations(h);
        bool ok = true;
        ok &= expect(
            eq.xdot == QPoly::monomial(0, 1, effective_mass().inverse()), d,
            "xdot != p / m_q");
        ok &= expect(eq.pdot.is_zero(), d, "pdot != 0");
        ok &= expect(qpb_direct(h, h).is_zero(), d, "{H0,H0} != 0");
        ok &= expect(time_derivative(h, h).is_zero(), d, "dH0/dt != 0");
        return ok;
    });

    criterion(4, "oscillator equations and the exact energy drift", [](std::string& d) {
        QPoly h = HamiltonianSpec::harmonic(kM, kW).to_qpoly();
        MotionEquations eq = hamilton_equations(h);
        ScalarExpr mq = effective_mass();
        ScalarExpr wq = effective_frequency();
        bool ok = true;
        ok &= expect(eq.pdot == QPoly::monomial(1, 0, -(mq * wq * wq)), d,
                     "pdot != -m_q w_q^2 x");
        ok &= expect(eq.xdot == QPoly::monomial(0, 1, mq.inverse()), d,
                     "xdot != p / m_q");
        // dH/dt comes out as q^(1/2) (q^2 - 1) w_q^2 * (p x), normal ordered.
        QPoly expected_drift = ScalarExpr::s_power(1) *
                               (ScalarExpr::q_power(2) - 1) * wq * wq *
                               (QPoly::p() * QPoly::x());
        ok &= expect(time_derivative(h, h) == expected_drift, d,
                     "dH/dt mismatch");
        return ok;
    });

    criterion(5, "conserved deformed energy for polynomial potentials", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        // Harmonic case: the position coefficient is m w^2 / (2 q^2).
        QPoly e = find_conserved(HamiltonianSpec::harmonic(kM, kW));
        ok &= expect(e.coeff(2, 0) == kM * kW * kW / (2 * ScalarExpr::q_power(2)),
                     d, "harmonic x^2 coefficient mismatch");
        // Random potentials up to degree 8 with one symbolic coefficient per
        // power: the conserved partner rescales each by q^(4 - 3n).
        std::mt19937 rng(20250825);
        std::uniform_int_distribution<int> pick(0, 1);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            HamiltonianSpec spec;
            spec.mass = kM;
            for (int n = 1; n <= 8; ++n) {
                if (pick(rng) == 0) continue;
                spec.potential.emplace_back(
                    n, ScalarExpr::parameter("c" + std::to_string(n)));
            }
            if (spec.potential.empty()) {
                spec.potential.emplace_back(5, ScalarExpr::parameter("c5"));
            }
            QPoly energy = find_conserved(spec);
            for (const auto& [n, cn] : spec.potential) {
                ok &= expect(
                    energy.coeff(n, 0) == cn * ScalarExpr::q_power(4 - 3 * n),
                    d, "d_n != c_n q^(4-3n) at n = " + std::to_string(n));
            }
            ok &= expect(
                time_derivative(energy, spec.to_qpoly()).is_zero(), d,
                "substituted bracket does not vanish");
        }
        ok &= expect(steady_seconds(start) < 10.0, d, "exceeded 10 s");
        return ok;
    });

    criterion(6, "bracket route equivalence and the monomial decomposition", [](std::string& d) {
        std::mt19937 rng(64206);
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            QPoly f = random_qpoly(rng, 6);
            QPoly g = random_qpoly(rng, 6);
            ok &= expect(qpb_direct(f, g) == qpb_contract(f, g), d,
                         "direct and contraction routes differ");
        }
        std::uniform_int_distribution<int> deg(0, 6);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int n = deg(rng);
            std::uniform_int_distribution<int> rest(0, 6 - n);
            QPoly mono = QPoly::monomial(n, rest(rng), ScalarExpr(1));
            QPoly h = random_qpoly(rng, 6);
            ok &= expect(
                time_derivative(mono, h) == time_derivative_monomial(mono, h),
                d, "monomial decomposition differs");
        }
        return ok;
    });

    criterion(7, "operator realization replays the algebra", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        Report relations = verify_relations(12);
        bool ok = expect(relations.all_pass(), d, "a defining relation fails");
        std::mt19937 rng(121212);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            QPoly f = random_qpoly(rng, 5);
            Report r = crosscheck_derivative(f, 12);
            ok &= expect(r.all_pass(), d,
                         "derivative cross-check fails on trial " +
                             std::to_string(trial));
        }
        ok &= expect(steady_seconds(start) < 30.0, d, "exceeded 30 s");
        return ok;
    });

    criterion(8, "deformed Heisenberg identities on the truncated basis", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        Report report = verify_heisenberg(20);
        bool ok = expect(report.all_pass(), d, "an identity fails");
        ok &= expect(report.checks.size() >= 5, d,
                     "fewer than five identities checked");
        ok &= expect(steady_seconds(start) < 10.0, d, "exceeded 10 s");
        return ok;
    });

    criterion(9, "classical limit of brackets and operators", [](std::string& d) {
        std::mt19937 rng(19391945);
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            QPoly f = random_qpoly(rng, 4);
            QPoly g = random_qpoly(rng, 4);
            ShadowPoly got = qpb_direct(f, g).at_q1().shadow();
            ShadowPoly expected =
                classical_pb(f.at_q1().shadow(), g.at_q1().shadow());
            ok &= expect(got == expected, d,
                         "bracket does not reduce to the commutative one");
        }
        Mat2 j = jq();
        ok &= expect(j.e[0][1].subst_s(BigRat(1)) == ScalarExpr(1) &&
                         j.e[1][0].subst_s(BigRat(1)) == ScalarExpr(-1) &&
                         j.e[0][0].is_zero() && j.e[1][1].is_zero(),
                     d, "structure matrix does not reduce to the classical unit");
        QuantumOps ops = build_ops(12);
        ok &= expect(!difference_witness(ops.x_tilde.subst_s(BigRat(1)),
                                         ops.x_mult.subst_s(BigRat(1)))
                          .has_value(),
                     d, "position operator does not reduce");
        Op1 plain_momentum = Op1::from_action(ops.basis, -1, [](int k) {
            Op1::Column col;
            if (k > 0)
                col.emplace(k - 1, ScalarExpr(-k) * ScalarExpr::imaginary_unit());
            return col;
        });
        ok &= expect(!difference_witness(ops.p_tilde.subst_s(BigRat(1)),
                                         plain_momentum)
                          .has_value(),
                     d, "momentum operator does not reduce");
        return ok;
    });

    criterion(10, "numeric flow accuracy and convergence order", [](std::string& d) {
        bool ok = true;
        FlowProblem base;
        base.spec = HamiltonianSpec::harmonic(kM, kW);
        base.bindings = {{"m", 1.0}, {"w", 1.0}};
        base.x0 = 1.0;
        base.p0 = 0.0;
        base.dt = 1e-3;
        base.steps = 10000;

        {
            FlowProblem prob = base;
            prob.q_value = 1.0;
            auto start = std::chrono::steady_clock::now();
            Trajectory traj = integrate(prob);
            ok &= expect(steady_seconds(start) < 5.0, d, "undeformed run exceeded 5 s");
            double err = 0.0;
            for (const auto& s : traj.samples) {
                err = std::max(err, std::abs(s.x - std::cos(s.t)));
                err = std::max(err, std::abs(s.p + std::sin(s.t)));
            }
            ok &= expect(err < 1e-8, d, "undeformed trajectory off cos/sin");
        }
        {
            FlowProblem prob = base;
            prob.q_value = 1.2;
            auto start = std::chrono::steady_clock::now();
            Trajectory traj = integrate(prob);
            ok &= expect(steady_seconds(start) < 5.0, d, "deformed run exceeded 5 s");
            double err = 0.0;
            for (const auto& s : traj.samples) {
                auto [xr, pr] = analytic_reference(prob, s.t);
                err = std::max(err, std::abs(s.x - xr));
                err = std::max(err, std::abs(s.p - pr));
            }
            ok &= expect(err < 1e-6, d, "deformed trajectory off the closed form");
        }
        {
            FlowProblem coarse = base;
            coarse.q_value = 1.2;
            coarse.dt = 2e-3;
            coarse.steps = 5000;
            FlowProblem fine = coarse;
            fine.dt = 1e-3;
            fine.steps = 10000;
            auto endpoint_error = [&ok, &d](const FlowProblem& prob) {
                auto start = std::chrono::steady_clock::now();
                Trajectory traj = integrate(prob);
                ok &= expect(steady_seconds(start) < 5.0, d,
                             "convergence run exceeded 5 s");
                const auto& last = traj.samples.back();
                auto [xr, pr] = analytic_reference(prob, last.t);
                return std::hypot(last.x - xr, last.p - pr);
            };
            double ratio = endpoint_error(coarse) / endpoint_error(fine);
            ok &= expect(ratio > 12.0 && ratio < 20.0, d,
                         "halving the step does not improve ~16x (ratio " +
                             std::to_string(ratio) + ")");
        }
        return ok;
    });

    criterion(11, "symplectic invariance, exhaustive and randomized", [](std::string& d) {
        bool ok = true;
        std::mt19937 rng(299792458);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        int tested = 0;
        while (tested < 1000 && ok) {
            BigRat a(num(rng), den(rng));
            BigRat b(num(rng), den(rng));
            BigRat c(num(rng), den(rng));
            if (a == 0) continue;
            BigRat dd = (1 + b * c) / a;
            ++tested;
            QPoly xp = ScalarExpr(a) * QPoly::x() + ScalarExpr(c) * QPoly::p();
            QPoly pp = ScalarExpr(b) * QPoly::x() + ScalarExpr(dd) * QPoly::p();
            ok &= expect(qpb_direct(xp, pp).at_q1() == QPoly(1), d,
                         "{x',p'} != 1 at s = 1");
            ok &= expect(qpb_direct(pp, xp).at_q1() == QPoly(-1), d,
                         "{p',x'} != -1 at s = 1");
            ok &= expect(qpb_direct(xp, xp).at_q1().is_zero(), d,
                         "{x',x'} != 0 at s = 1");
            ok &= expect(qpb_direct(pp, pp).at_q1().is_zero(), d,
                         "{p',p'} != 0 at s = 1");
        }
        for (const auto& set : builtin_relation_sets()) {
            ok &= expect(checks_coincide(set), d,
                         "checks disagree on " + set.name);
            MatrixCheck ctt = check_ctt(set);
            MatrixCheck inv = check_bracket_invariance(set);
            for (const auto& entry : ctt.entries) {
                for (const auto& other : inv.entries) {
                    if (other.row == entry.col && other.col == entry.row) {
                        ok &= expect(other.pass == entry.pass, d,
                                     "verdicts differ on " + set.name);
                    }
                }
            }
        }
        return ok;
    });

    if (g_failures == 0) {
        std::printf("all %d acceptance criteria hold\n", 11);
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
