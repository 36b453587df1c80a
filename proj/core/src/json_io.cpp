#include "qmech/json_io.hpp"

#include <json.hpp>

#include <sstream>

#include "qmech/printer.hpp"

namespace qmech {
namespace {

using nlohmann::json;

std::string rat_string(const BigRat& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

json poly_json(const Poly& poly) {
    json terms = json::array();
    for (const auto& term : poly.terms()) {
        json t;
        t["re"] = rat_string(term.second.re);
        t["im"] = rat_string(term.second.im);
        t["s"] = term.first.s_exp;
        json params = json::object();
        for (const auto& kv : term.first.params) params[kv.first] = kv.second;
        t["params"] = params;
        terms.push_back(std::move(t));
    }
    return terms;
}

json scalar_json(const ScalarExpr& value) {
    json out;
    out["num"] = poly_json(value.num());
    out["den"] = poly_json(value.den());
    out["text"] = to_text(value);
    return out;
}

json qpoly_json(const QPoly& value) {
    json out;
    json terms = json::array();
    for (const auto& term : value.terms()) {
        json t;
        t["n"] = term.first.first;
        t["m"] = term.first.second;
        t["coeff"] = scalar_json(term.second);
        terms.push_back(std::move(t));
    }
    out["terms"] = terms;
    out["text"] = to_text(value);
    return out;
}

json report_json(const Report& report) {
    json out;
    out["suite"] = report.suite;
    json checks = json::array();
    for (const auto& check : report.checks) {
        json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        c["detail"] = check.detail;
        checks.push_back(std::move(c));
    }
    out["checks"] = checks;
    out["all_pass"] = report.all_pass();
    return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string scalar_to_json(const ScalarExpr& value) { return dump(scalar_json(value)); }

std::string qpoly_to_json(const QPoly& value) { return dump(qpoly_json(value)); }

std::string one_form_to_json(const QOneForm& value) {
    json out;
    out["side"] = value.side == Side::Right ? "right" : "left";
    out["dx"] = qpoly_json(value.cx);
    out["dp"] = qpoly_json(value.cp);
    return dump(out);
}

std::string vector_to_json(const QVector& value) {
    json out;
    out["del_x"] = qpoly_json(value.cx);
    out["del_p"] = qpoly_json(value.cp);
    return dump(out);
}

std::string motion_to_json(const MotionEquations& value) {
    json out;
    out["xdot"] = qpoly_json(value.xdot);
    out["pdot"] = qpoly_json(value.pdot);
    return dump(out);
}

std::string report_to_json(const Report& report) { return dump(report_json(report)); }

std::string reports_to_json(const std::vector<Report>& reports) {
    json out;
    json list = json::array();
    bool all = true;
    for (const auto& report : reports) {
        list.push_back(report_json(report));
        all = all && report.all_pass();
    }
    out["reports"] = list;
    out["all_pass"] = all;
    return dump(out);
}

}  // namespace qmech
