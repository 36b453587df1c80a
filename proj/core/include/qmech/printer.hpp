#ifndef QMECH_PRINTER_HPP
#define QMECH_PRINTER_HPP

// Canonical text rendering.  The output grammar matches the expression
// parser: q carries the deformation (s^2 prints as q, odd powers of s print
// as half-integer powers like q^(1/2)), generators print with explicit
// exponents, and single-monomial denominators are folded into negative
// exponents.  Printing then reparsing reproduces the same value; rendering
// is deterministic (fixed term and factor order).

#include <string>

#include "qmech/calculus.hpp"
#include "qmech/dynamics.hpp"

namespace qmech {

std::string to_text(const ScalarExpr& value);
std::string to_text(const QPoly& value);
std::string to_text(const QOneForm& value);
std::string to_text(const QVector& value);
std::string to_text(const MotionEquations& value);

}  // namespace qmech

#endif
