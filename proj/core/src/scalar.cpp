#include "qmech/scalar.hpp"

#include <algorithm>

namespace qmech {

namespace {

// Exact rational power with negative exponents allowed (base != 0 then).
BigRat rat_pow(const BigRat& base, int k) {
    if (k == 0) return BigRat(1);
    bool neg = k < 0;
    unsigned n = neg ? static_cast<unsigned>(-(long long)k) : static_cast<unsigned>(k);
    if (neg && base == 0) throw DivisionByZeroError("0 raised to a negative power");
    BigRat acc(1);
    BigRat b = base;
    while (n > 0) {
        if (n & 1u) acc *= b;
        b *= b;
        n >>= 1u;
    }
    if (neg) acc = BigRat(1) / acc;
    return acc;
}

}  // namespace

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero coefficient");
    BigRat n2 = re * re + im * im;
    return GaussRat(re / n2, -im / n2);
}

std::complex<double> GaussRat::to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
}

Mono operator*(const Mono& a, const Mono& b) {
    Mono r = a;
    r.s_exp += b.s_exp;
    for (const auto& [name, e] : b.params) {
        int& slot = r.params[name];
        slot += e;
        if (slot == 0) r.params.erase(name);
    }
    return r;
}

Poly::Poly(GaussRat c) {
    if (!c.is_zero()) terms_.emplace(Mono{}, std::move(c));
}

Poly Poly::s_power(int k) {
    Poly r;
    r.terms_.emplace(Mono{k, {}}, GaussRat(1));
    return r;
}

Poly Poly::parameter(const std::string& name, int exponent) {
    Poly r;
    if (exponent == 0) return Poly(1L);
    Mono m;
    m.params[name] = exponent;
    r.terms_.emplace(std::move(m), GaussRat(1));
    return r;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

const Mono& Poly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
    return terms_.rbegin()->first;
}

const GaussRat& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::divided_by(const Mono& m) const {
    Poly r;
    for (const auto& [mono, c] : terms_) {
        Mono nm;
        nm.s_exp = mono.s_exp - m.s_exp;
        nm.params = mono.params;
        for (const auto& [name, e] : m.params) {
            int& slot = nm.params[name];
            slot -= e;
            if (slot < 0) throw Error("monomial division with remainder");
            if (slot == 0) nm.params.erase(name);
        }
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Mono Poly::content() const {
    Mono c;
    if (terms_.empty()) return c;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        (void)v;
        if (first) {
            c = m;
            first = false;
            continue;
        }
        c.s_exp = std::min(c.s_exp, m.s_exp);
        for (auto it = c.params.begin(); it != c.params.end();) {
            auto found = m.params.find(it->first);
            if (found == m.params.end()) {
                it = c.params.erase(it);
            } else {
                it->second = std::min(it->second, found->second);
                ++it;
            }
        }
    }
    return c;
}

Poly Poly::pow(unsigned n) const {
    Poly acc(1L);
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

bool Poly::depends_on(const std::string& name) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.params.count(name) != 0) return true;
    }
    return false;
}

std::set<std::string> Poly::parameter_names() const {
    std::set<std::string> names;
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (const auto& [name, e] : m.params) {
            (void)e;
            names.insert(name);
        }
    }
    return names;
}

std::map<int, Poly> Poly::collect(const std::string& name) const {
    std::map<int, Poly> out;
    for (const auto& [m, c] : terms_) {
        Mono stripped = m;
        int deg = 0;
        auto it = stripped.params.find(name);
        if (it != stripped.params.end()) {
            deg = it->second;
            stripped.params.erase(it);
        }
        out[deg].add_term(stripped, c);
    }
    return out;
}

Poly Poly::subst_s(const BigRat& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        BigRat f = rat_pow(value, m.s_exp);
        Mono nm = m;
        nm.s_exp = 0;
        r.add_term(nm, c * GaussRat(f));
    }
    return r;
}

std::complex<double> Poly::eval(const std::map<std::string, double>& bindings,
                                std::complex<double> s_value) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        t *= std::pow(s_value, m.s_exp);
        for (const auto& [name, e] : m.params) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw UnboundParameterError(name);
            t *= std::pow(std::complex<double>(it->second, 0.0), e);
        }
        acc += t;
    }
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator-(const Poly& a) { return a.scaled(GaussRat(-1)); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ScalarExpr::ScalarExpr(const BigRat& v) : num_(Poly(GaussRat(v))), den_(Poly(1)) {}

ScalarExpr::ScalarExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("zero denominator");
    canonicalize();
}

ScalarExpr ScalarExpr::rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    return ScalarExpr(BigRat(BigInt(num), BigInt(den)));
}

void ScalarExpr::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // Strip the common monomial content (per-variable minimum across num
    // and den together; for s that also shifts the lowest power to 0).
    Mono cn = num_.content();
    Mono cd = den_.content();
    Mono common;
    common.s_exp = std::min(cn.s_exp, cd.s_exp);
    for (const auto& [name, e] : cn.params) {
        auto it = cd.params.find(name);
        if (it != cd.params.end()) common.params[name] = std::min(e, it->second);
    }
    if (!common.is_unit()) {
        num_ = num_.divided_by(common);
        den_ = den_.divided_by(common);
    }
    const GaussRat& lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ScalarExpr ScalarExpr::pow(int k) const {
    if (k == 0) return ScalarExpr(1);
    if (k > 0) return ScalarExpr(num_.pow(static_cast<unsigned>(k)),
                                 den_.pow(static_cast<unsigned>(k)));
    if (is_zero()) throw DivisionByZeroError("0 raised to a negative power");
    unsigned n = static_cast<unsigned>(-(long long)k);
    return ScalarExpr(den_.pow(n), num_.pow(n));
}

ScalarExpr ScalarExpr::inverse() const { return pow(-1); }

bool ScalarExpr::depends_on(const std::string& name) const {
    return num_.depends_on(name) || den_.depends_on(name);
}

std::set<std::string> ScalarExpr::parameter_names() const {
    std::set<std::string> names = num_.parameter_names();
    auto d = den_.parameter_names();
    names.insert(d.begin(), d.end());
    return names;
}

ScalarExpr ScalarExpr::subst_s(const BigRat& value) const {
    Poly n = num_.subst_s(value);
    Poly d = den_.subst_s(value);
    if (d.is_zero())
        throw SingularEvaluationError("denominator vanishes under the s substitution");
    return ScalarExpr(std::move(n), std::move(d));
}

ScalarExpr ScalarExpr::subst_param(const std::string& name, const ScalarExpr& value) const {
    auto fold = [&](const Poly& p) {
        ScalarExpr acc(0);
        for (const auto& [deg, coeff] : p.collect(name))
            acc = acc + ScalarExpr(coeff) * value.pow(deg);
        return acc;
    };
    ScalarExpr n = fold(num_);
    ScalarExpr d = fold(den_);
    return n / d;
}

std::pair<ScalarExpr, ScalarExpr> ScalarExpr::split_linear(const std::string& name) const {
    if (den_.depends_on(name))
        throw SolveError("parameter " + name + " appears in a denominator");
    auto parts = num_.collect(name);
    Poly alpha;
    Poly beta;
    for (const auto& [deg, coeff] : parts) {
        if (deg == 0)
            beta = coeff;
        else if (deg == 1)
            alpha = coeff;
        else
            throw SolveError("parameter " + name + " appears with degree " +
                             std::to_string(deg));
    }
    return {ScalarExpr(alpha, den_), ScalarExpr(beta, den_)};
}

std::complex<double> ScalarExpr::eval_numeric(const std::map<std::string, double>& bindings,
                                              double q_value) const {
    if (!(q_value > 0.0))
        throw SingularEvaluationError("q must be a positive real for evaluation");
    std::complex<double> s_value(std::sqrt(q_value), 0.0);
    std::complex<double> n = num_.eval(bindings, s_value);
    std::complex<double> d = den_.eval(bindings, s_value);
    if (std::abs(d) == 0.0)
        throw SingularEvaluationError("denominator vanishes at the evaluation point");
    return n / d;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a) {
    ScalarExpr r = a;
    r.num_ = -r.num_;
    return r;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by the zero scalar");
    return ScalarExpr(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

ScalarExpr qint(int n) {
    if (n < 0) throw Error("qint expects n >= 0");
    Poly p;
    for (int k = 0; k < n; ++k) p.add_term(Mono{4 * k, {}}, GaussRat(1));
    return ScalarExpr(p);
}

ScalarExpr qint1(int n) {
    if (n < 0) throw Error("qint1 expects n >= 0");
    Poly p;
    for (int k = 0; k < n; ++k) p.add_term(Mono{2 * k, {}}, GaussRat(1));
    return ScalarExpr(p);
}

}  // namespace qmech
