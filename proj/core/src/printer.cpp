#include "qmech/printer.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qmech {
namespace {

std::string rat_text(const BigRat& r) {
    std::ostringstream os;
    os << r;  // prints "n" or "n/d"
    return os.str();
}

// Exponent as it appears after '^': bare non-negative integers, otherwise a
// parenthesized (possibly half-integer) value.
std::string q_exponent_text(int s_exp) {
    std::ostringstream os;
    if (s_exp % 2 == 0) {
        int e = s_exp / 2;
        if (e >= 0) {
            os << e;
        } else {
            os << '(' << e << ')';
        }
    } else {
        os << '(' << s_exp << "/2)";
    }
    return os.str();
}

std::string int_exponent_text(int e) {
    std::ostringstream os;
    if (e >= 0) {
        os << e;
    } else {
        os << '(' << e << ')';
    }
    return os.str();
}

// One polynomial term as (sign, factor-product).  `shift` is a monomial
// divided out of every term (used to fold single-monomial denominators into
// negative exponents), so exponents may go negative here.
struct TermText {
    bool negative = false;
    std::string body;
};

TermText term_text(const Mono& mono, const GaussRat& coeff, const Mono* shift) {
    TermText out;
    std::vector<std::string> factors;

    GaussRat c = coeff;
    if (c.im == 0) {
        out.negative = c.re < 0;
        BigRat mag = out.negative ? BigRat(-c.re) : c.re;
        if (mag != 1) factors.push_back(rat_text(mag));
    } else if (c.re == 0) {
        out.negative = c.im < 0;
        BigRat mag = out.negative ? BigRat(-c.im) : c.im;
        if (mag == 1) {
            factors.push_back("i");
        } else {
            factors.push_back(rat_text(mag) + "*i");
        }
    } else {
        // Mixed complex coefficient: keep it in one parenthesized factor.
        std::ostringstream os;
        os << '(' << rat_text(c.re) << (c.im < 0 ? "-" : "+");
        BigRat mag = c.im < 0 ? BigRat(-c.im) : c.im;
        if (mag != 1) os << rat_text(mag) << '*';
        os << "i)";
        factors.push_back(os.str());
    }

    int s_exp = mono.s_exp - (shift ? shift->s_exp : 0);
    if (s_exp != 0) {
        if (s_exp == 2) {
            factors.push_back("q");
        } else {
            factors.push_back("q^" + q_exponent_text(s_exp));
        }
    }

    std::map<std::string, int> params = mono.params;
    if (shift) {
        for (const auto& kv : shift->params) params[kv.first] -= kv.second;
    }
    for (const auto& kv : params) {
        if (kv.second == 0) continue;
        if (kv.second == 1) {
            factors.push_back(kv.first);
        } else {
            factors.push_back(kv.first + "^" + int_exponent_text(kv.second));
        }
    }

    if (factors.empty()) {
        BigRat mag = out.negative ? BigRat(c.im == 0 ? -c.re : -c.im)
                                  : (c.im == 0 ? c.re : c.im);
        factors.push_back(rat_text(mag));
    }

    std::string joined;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) joined += '*';
        joined += factors[k];
    }
    out.body = joined;
    return out;
}

// Renders a polynomial, largest monomial first, optionally dividing every
// term by `shift`.
std::string poly_text(const Poly& p, const Mono* shift) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        TermText t = term_text(it->first, it->second, shift);
        if (first) {
            if (t.negative) out += '-';
            first = false;
        } else {
            out += t.negative ? " - " : " + ";
        }
        out += t.body;
    }
    return out;
}

bool needs_sum_parens(const std::string& text) {
    // A rendered sum contains " + " or " - "; products never do.
    return text.find(' ') != std::string::npos;
}

}  // namespace

std::string to_text(const ScalarExpr& value) {
    if (value.den().is_one()) {
        return poly_text(value.num(), nullptr);
    }
    if (value.den().size() == 1) {
        // Canonical form makes the single denominator coefficient exactly 1,
        // so the whole denominator folds into negative exponents.
        return poly_text(value.num(), &value.den().leading_monomial());
    }
    std::string num = poly_text(value.num(), nullptr);
    if (needs_sum_parens(num)) num = "(" + num + ")";
    return num + "/(" + poly_text(value.den(), nullptr) + ")";
}

std::string to_text(const QPoly& value) {
    if (value.is_zero()) return "0";

    // Descending by total degree, then by x exponent.
    std::vector<QPoly::Key> keys;
    for (const auto& kv : value.terms()) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), [](const QPoly::Key& a, const QPoly::Key& b) {
        int da = a.first + a.second;
        int db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });

    std::string out;
    bool first = true;
    for (const auto& key : keys) {
        ScalarExpr c = value.coeff(key.first, key.second);
        std::string gens;
        if (key.first > 0) gens += "x^" + std::to_string(key.first);
        if (key.second > 0) {
            if (!gens.empty()) gens += '*';
            gens += "p^" + std::to_string(key.second);
        }

        bool negative = false;
        std::string coeff_text;
        bool minus_one = (c == ScalarExpr(-1));
        if (!gens.empty() && (c.is_one() || minus_one)) {
            negative = minus_one;
        } else {
            coeff_text = to_text(c);
            if (needs_sum_parens(coeff_text)) {
                coeff_text = "(" + coeff_text + ")";
            } else if (!coeff_text.empty() && coeff_text[0] == '-') {
                negative = true;
                coeff_text = coeff_text.substr(1);
            }
        }

        std::string body = coeff_text;
        if (!gens.empty()) {
            if (!body.empty()) body += '*';
            body += gens;
        }

        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::string to_text(const QOneForm& value) {
    std::string cx = to_text(value.cx);
    std::string cp = to_text(value.cp);
    if (value.side == Side::Right) {
        return "dx*(" + cx + ") + dp*(" + cp + ")";
    }
    return "(" + cx + ")*dx + (" + cp + ")*dp";
}

std::string to_text(const QVector& value) {
    return "(" + to_text(value.cx) + ")*del_x + (" + to_text(value.cp) + ")*del_p";
}

std::string to_text(const MotionEquations& value) {
    return "dx/dt = " + to_text(value.xdot) + "\ndp/dt = " + to_text(value.pdot) + "\n";
}

}  // namespace qmech
