#ifndef QMECH_VERIFY_HPP
#define QMECH_VERIFY_HPP

// Self-check suites, one per module, runnable from the CLI.  Every suite is
// deterministic: randomized checks draw from a fixed-seed generator, so two
// runs with the same options produce byte-identical reports.

#include <string>
#include <vector>

#include "qmech/report.hpp"
#include "qmech/symplectic.hpp"

namespace qmech {

struct VerifyOptions {
    // Bounds the degree of randomly drawn polynomials.
    int max_degree = 6;
    unsigned seed = 987654321;
    // Basis truncations for the operator suites.
    int realization_truncation = 12;
    int quantization_truncation = 20;
    // When empty the builtin candidates are checked; a caller may supply
    // loaded relation sets instead (the suite then runs the generic checks
    // only, since expectations are tied to the builtin family).
    std::vector<RelationSet> relation_sets;
};

// Suite names in report order.
std::vector<std::string> verify_suite_names();

// Runs one suite; throws Error on an unknown name.
Report verify_suite(const std::string& name, const VerifyOptions& options);

// Runs every suite, reports sorted by suite name.
std::vector<Report> verify_all(const VerifyOptions& options);

}  // namespace qmech

#endif
