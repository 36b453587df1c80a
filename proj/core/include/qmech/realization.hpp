#ifndef QMECH_REALIZATION_HPP
#define QMECH_REALIZATION_HPP

// Operator realization of the plane algebra and its calculus on ordinary
// two-variable polynomials:
//   x   -> multiplication by x
//   p   -> p * D_x                    (D_x f)(x,p) = f(qx, p)
//   del_x -> Jackson derivative in x  (step q^2)
//   del_p -> Jackson derivative in p, composed with D_x
// All five operators act on the truncated basis x^a p^b, a+b <= truncation,
// with exact symbolic matrix entries.  verify_relations replays the algebra
// relations on that basis; crosscheck_derivative replays the calculus.

#include "qmech/linop.hpp"
#include "qmech/qpoly.hpp"
#include "qmech/report.hpp"

namespace qmech {

enum class PlaneOp : unsigned char { X, P, DerivX, DerivP, Dilate };

Op2 realize(PlaneOp which, int truncation);

// Image of a normal-ordered polynomial, x-powers composed after p-powers.
Op2 realize_qpoly(const QPoly& f, int truncation);

// Coefficient vector of a commutative polynomial over the truncated basis.
// Throws DegreeOverflowError when the degree exceeds the truncation.
std::vector<ScalarExpr> shadow_vector(const ShadowPoly& f, const Basis2& basis);

// Replays the defining relations (plane exchange, deformed Leibniz rules,
// derivative exchange, dilatation exchange) on the truncated basis.  Each
// failing check names the first basis monomial where the relation breaks.
Report verify_relations(int truncation);

// Checks that the realized Jackson operators reproduce partial_right of f,
// and that the realized f applied to 1 reproduces f itself.
Report crosscheck_derivative(const QPoly& f, int truncation);

}  // namespace qmech

#endif
