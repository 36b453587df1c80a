#include "qmech/flow.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qmech {

namespace {

// Numeric image of a shadow polynomial with coefficients evaluated once.
struct CompiledPoly {
    struct Term {
        int n;
        int m;
        double c;
    };
    std::vector<Term> terms;

    double eval(double x, double p) const {
        double acc = 0.0;
        for (const auto& t : terms)
            acc += t.c * std::pow(x, t.n) * std::pow(p, t.m);
        return acc;
    }
};

CompiledPoly compile(const ShadowPoly& poly, const std::map<std::string, double>& bindings,
                     double q_value) {
    CompiledPoly out;
    for (const auto& [key, c] : poly.terms) {
        std::complex<double> v = c.eval_numeric(bindings, q_value);
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
            throw Error("equation coefficient is not real");
        out.terms.push_back({key.first, key.second, v.real()});
    }
    return out;
}

}  // namespace

Trajectory integrate(const FlowProblem& problem) {
    if (!(problem.dt > 0.0)) throw Error("step size must be positive");
    if (problem.steps < 0) throw Error("step count must be nonnegative");

    QPoly h = problem.spec.to_qpoly();
    MotionEquations eqs = hamilton_equations(h);
    QPoly eq_poly = find_conserved(problem.spec);

    CompiledPoly fx = compile(eqs.xdot.shadow(), problem.bindings, problem.q_value);
    CompiledPoly fp = compile(eqs.pdot.shadow(), problem.bindings, problem.q_value);
    CompiledPoly fh = compile(h.shadow(), problem.bindings, problem.q_value);
    CompiledPoly feq = compile(eq_poly.shadow(), problem.bindings, problem.q_value);

    Trajectory traj;
    traj.dt = problem.dt;
    traj.samples.reserve(static_cast<std::size_t>(problem.steps) + 1);

    double x = problem.x0;
    double p = problem.p0;
    double dt = problem.dt;
    traj.samples.push_back({0.0, x, p, fh.eval(x, p), feq.eval(x, p)});

    for (long step = 1; step <= problem.steps; ++step) {
        double k1x = fx.eval(x, p);
        double k1p = fp.eval(x, p);
        double k2x = fx.eval(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
        double k2p = fp.eval(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
        double k3x = fx.eval(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
        double k3p = fp.eval(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
        double k4x = fx.eval(x + dt * k3x, p + dt * k3p);
        double k4p = fp.eval(x + dt * k3x, p + dt * k3p);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if (!std::isfinite(x) || !std::isfinite(p))
            throw NonFiniteStateError("integration left the finite range", step);
        double t = dt * static_cast<double>(step);
        traj.samples.push_back({t, x, p, fh.eval(x, p), feq.eval(x, p)});
    }
    return traj;
}

std::pair<double, double> analytic_reference(const FlowProblem& problem, double t) {
    QPoly h = problem.spec.to_qpoly();
    MotionEquations eqs = hamilton_equations(h);
    CompiledPoly fx = compile(eqs.xdot.shadow(), problem.bindings, problem.q_value);
    CompiledPoly fp = compile(eqs.pdot.shadow(), problem.bindings, problem.q_value);

    // xdot must be exactly p over the effective mass.
    if (fx.terms.size() != 1 || fx.terms[0].n != 0 || fx.terms[0].m != 1 ||
        !(fx.terms[0].c > 0.0))
        throw UnsupportedPotentialError("no closed form for this kinetic term");
    double inv_mq = fx.terms[0].c;

    if (fp.terms.empty()) {  // free particle
        return {problem.x0 + problem.p0 * inv_mq * t, problem.p0};
    }
    // Harmonic case: pdot = -k x with k > 0.
    if (fp.terms.size() != 1 || fp.terms[0].n != 1 || fp.terms[0].m != 0)
        throw UnsupportedPotentialError("no closed form for this potential");
    double k = -fp.terms[0].c;
    if (!(k > 0.0))
        throw UnsupportedPotentialError("no closed form for a repulsive potential");

    double omega = std::sqrt(k * inv_mq);
    double c = std::cos(omega * t);
    double s = std::sin(omega * t);
    double x = problem.x0 * c + problem.p0 * inv_mq / omega * s;
    double p = -problem.x0 * omega / inv_mq * s + problem.p0 * c;
    return {x, p};
}

void write_csv(const Trajectory& trajectory, std::ostream& out) {
    out << "t,x,p,H,Eq\n";
    char buf[512];
    for (const auto& s : trajectory.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g", s.t, s.x,
                      s.p, s.h, s.eq);
        out << buf << "\n";
    }
}

}  // namespace qmech
