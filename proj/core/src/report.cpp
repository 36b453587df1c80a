#include "qmech/report.hpp"

#include <sstream>

namespace qmech {

std::string render_text(const Report& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << "/" << c.name;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    return out.str();
}

}  // namespace qmech
