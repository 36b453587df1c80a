#ifndef QMECH_REPORT_HPP
#define QMECH_REPORT_HPP

// Uniform pass/fail reporting for the verification entry points.

#include <string>
#include <vector>

namespace qmech {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness or context, empty when passing is obvious
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Renders "[PASS] suite/check  detail" lines, one per check.
std::string render_text(const Report& report);

}  // namespace qmech

#endif
