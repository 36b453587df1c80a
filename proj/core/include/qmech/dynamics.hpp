#ifndef QMECH_DYNAMICS_HPP
#define QMECH_DYNAMICS_HPP

// Deformed Hamilton dynamics: equations of motion, the evolution bracket and
// the conserved effective energy for kinetic-plus-potential Hamiltonians.

#include <string>
#include <utility>
#include <vector>

#include "qmech/calculus.hpp"

namespace qmech {

// H = p^2/(2 mass) + sum_n c_n x^n with exact symbolic coefficients.
// Potential exponents must be >= 1 and coefficients nonzero.
struct HamiltonianSpec {
    ScalarExpr mass{1};
    std::vector<std::pair<int, ScalarExpr>> potential;

    // Throws Error on zero mass, exponent < 1 or zero coefficient.
    QPoly to_qpoly() const;

    static HamiltonianSpec free_particle(const ScalarExpr& mass);
    // V = (1/2) mass w^2 x^2.
    static HamiltonianSpec harmonic(const ScalarExpr& mass, const ScalarExpr& w);
};

struct MotionEquations {
    QPoly xdot;
    QPoly pdot;
};

// xdot = q^(1/2) (D_p H)^L , pdot = -q^(-1/2) (D_x H)^L.  These equal
// {x,H}_q and {p,H}_q; the bracket route is kept separate for cross checks.
MotionEquations hamilton_equations(const QPoly& h);
MotionEquations hamilton_equations_bracket(const QPoly& h);

// df/dt = {f,H}_q for time-independent f (explicit time dependence is not
// expressible in QPoly, so the del f/del t term is identically zero).
QPoly time_derivative(const QPoly& f, const QPoly& h);

// Same derivative through the monomial decomposition
//   {x^n p^m, H} = [n] {x,H} x^(n-1) p^m + q^n [m] {p,H} x^n p^(m-1),
// an independent route used for verification.
QPoly time_derivative_monomial(const QPoly& f, const QPoly& h);

// Deformed force -q^(-1/2) (D_x V)^L.
QPoly force(const QPoly& v);

// Solves {E,H}_q = 0 for E = p^2/(2 mass) + sum_n d_n x^n by linear
// elimination of the d_n, substitutes the solution back and re-verifies the
// bracket vanishes.  Throws SolveError when the conditions are not a
// solvable diagonal linear system.
QPoly find_conserved(const HamiltonianSpec& spec);

}  // namespace qmech

#endif
