#ifndef QMECH_FLOW_HPP
#define QMECH_FLOW_HPP

// Numeric integration of the deformed equations of motion.  The symbolic
// equations are noncommutative; what is integrated is their commutative
// shadow: numeric coefficients are evaluated exactly once, then a fixed-step
// classical RK4 scheme advances (x, p).  Alongside the state the sampler
// records the Hamiltonian value H and the conserved deformed energy Eq, so
// drift in either is visible per sample.

#include <iosfwd>
#include <vector>

#include "qmech/dynamics.hpp"

namespace qmech {

struct TrajectorySample {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
    double h = 0.0;   // Hamiltonian evaluated on the shadow state
    double eq = 0.0;  // conserved deformed energy on the shadow state
};

struct Trajectory {
    double dt = 0.0;
    std::vector<TrajectorySample> samples;  // includes the initial state
};

struct FlowProblem {
    HamiltonianSpec spec;
    std::map<std::string, double> bindings;  // parameter values (m, w, ...)
    double q_value = 1.0;
    double x0 = 0.0;
    double p0 = 0.0;
    double dt = 1e-3;
    long steps = 0;
};

// Fixed-step RK4 over the shadow of hamilton_equations(spec).  Throws
// NonFiniteStateError when the state leaves the finite range and
// SingularEvaluationError/UnboundParameterError on bad coefficient data.
Trajectory integrate(const FlowProblem& problem);

// Closed-form reference for the free particle and the harmonic oscillator
// (effective mass and frequency included).  Throws UnsupportedPotentialError
// for anything else.
std::pair<double, double> analytic_reference(const FlowProblem& problem, double t);

// CSV with header t,x,p,H,Eq and 17 significant digits per value.
void write_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace qmech

#endif
