#ifndef QMECH_JSON_IO_HPP
#define QMECH_JSON_IO_HPP

// Machine-readable output.  Every function returns a pretty-printed JSON
// document (two-space indent, trailing newline) with deterministic key and
// term order.  Exact values are encoded as strings ("3/2", never floats).

#include <string>
#include <vector>

#include "qmech/calculus.hpp"
#include "qmech/dynamics.hpp"
#include "qmech/report.hpp"

namespace qmech {

std::string scalar_to_json(const ScalarExpr& value);
std::string qpoly_to_json(const QPoly& value);
std::string one_form_to_json(const QOneForm& value);
std::string vector_to_json(const QVector& value);
std::string motion_to_json(const MotionEquations& value);
std::string report_to_json(const Report& report);
std::string reports_to_json(const std::vector<Report>& reports);

}  // namespace qmech

#endif
