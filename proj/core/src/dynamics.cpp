#include "qmech/dynamics.hpp"

#include <set>

namespace qmech {

namespace {
// Prefix for solver-internal unknowns; '#' is rejected by the expression
// parser, so user parameters can never collide with these.
const char* kUnknownPrefix = "#d";
}  // namespace

QPoly HamiltonianSpec::to_qpoly() const {
    if (mass.is_zero()) throw Error("Hamiltonian mass must be nonzero");
    QPoly h = QPoly::monomial(0, 2, ScalarExpr::rational(1, 2) / mass);
    for (const auto& [n, c] : potential) {
        if (n < 1) throw Error("potential exponents must be >= 1");
        if (c.is_zero()) throw Error("potential coefficients must be nonzero");
        h.add(n, 0, c);
    }
    return h;
}

HamiltonianSpec HamiltonianSpec::free_particle(const ScalarExpr& mass) {
    HamiltonianSpec s;
    s.mass = mass;
    return s;
}

HamiltonianSpec HamiltonianSpec::harmonic(const ScalarExpr& mass, const ScalarExpr& w) {
    HamiltonianSpec s;
    s.mass = mass;
    s.potential.emplace_back(2, ScalarExpr::rational(1, 2) * mass * w * w);
    return s;
}

MotionEquations hamilton_equations(const QPoly& h) {
    MotionEquations eq;
    eq.xdot = ScalarExpr::s_power(1) * partial_left(h, Dir::P);
    eq.pdot = -(ScalarExpr::s_power(-1) * partial_left(h, Dir::X));
    return eq;
}

MotionEquations hamilton_equations_bracket(const QPoly& h) {
    MotionEquations eq;
    eq.xdot = qpb_direct(QPoly::x(), h);
    eq.pdot = qpb_direct(QPoly::p(), h);
    return eq;
}

QPoly time_derivative(const QPoly& f, const QPoly& h) { return qpb_direct(f, h); }

QPoly time_derivative_monomial(const QPoly& f, const QPoly& h) {
    QPoly xdot = qpb_direct(QPoly::x(), h);
    QPoly pdot = qpb_direct(QPoly::p(), h);
    QPoly r;
    for (const auto& [key, c] : f.terms()) {
        auto [n, m] = key;
        if (n >= 1)
            r = r + (c * qint(n)) * (xdot * QPoly::monomial(n - 1, m, ScalarExpr(1)));
        if (m >= 1) {
            ScalarExpr f2 = c * ScalarExpr::q_power(n) * qint(m);
            r = r + f2 * (pdot * QPoly::monomial(n, m - 1, ScalarExpr(1)));
        }
    }
    return r;
}

QPoly force(const QPoly& v) {
    return -(ScalarExpr::s_power(-1) * partial_left(v, Dir::X));
}

QPoly find_conserved(const HamiltonianSpec& spec) {
    QPoly h = spec.to_qpoly();
    QPoly ansatz = QPoly::monomial(0, 2, ScalarExpr::rational(1, 2) / spec.mass);
    std::vector<std::string> unknowns;
    for (const auto& [n, c] : spec.potential) {
        (void)c;
        std::string name = kUnknownPrefix + std::to_string(n);
        ansatz.add(n, 0, ScalarExpr::parameter(name));
        unknowns.push_back(name);
    }

    QPoly bracket = qpb_direct(ansatz, h);

    std::map<std::string, ScalarExpr> solution;
    for (const auto& [key, coeff] : bracket.terms()) {
        std::vector<std::string> present;
        for (const auto& name : coeff.parameter_names())
            if (name.rfind(kUnknownPrefix, 0) == 0) present.push_back(name);
        if (present.empty()) {
            // No unknown left to absorb a nonzero condition.
            throw SolveError("conservation condition on x^" +
                             std::to_string(key.first) + " p^" +
                             std::to_string(key.second) + " has no free coefficient");
        }
        if (present.size() > 1)
            throw SolveError("conservation conditions are not diagonal");
        const std::string& name = present.front();
        auto [alpha, beta] = coeff.split_linear(name);
        if (alpha.is_zero()) throw SolveError("degenerate condition for " + name);
        ScalarExpr value = -(beta / alpha);
        auto it = solution.find(name);
        if (it == solution.end()) {
            solution.emplace(name, value);
        } else if (!(it->second == value)) {
            throw SolveError("inconsistent conditions for " + name);
        }
    }
    for (const auto& name : unknowns)
        if (solution.find(name) == solution.end())
            throw SolveError("coefficient " + name + " is unconstrained");

    QPoly result;
    for (const auto& [key, c] : ansatz.terms()) {
        ScalarExpr v = c;
        for (const auto& [name, value] : solution)
            if (v.depends_on(name)) v = v.subst_param(name, value);
        result.add(key.first, key.second, v);
    }

    if (!qpb_direct(result, h).is_zero())
        throw SolveError("solved candidate fails the conservation bracket");
    return result;
}

}  // namespace qmech
