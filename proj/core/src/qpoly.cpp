#include "qmech/qpoly.hpp"

#include <algorithm>

namespace qmech {

void ShadowPoly::add(int n, int m, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(n, m);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

ShadowPoly ShadowPoly::partial(int dir) const {
    ShadowPoly r;
    for (const auto& [key, c] : terms) {
        auto [n, m] = key;
        if (dir == 0) {
            if (n > 0) r.add(n - 1, m, ScalarExpr(n) * c);
        } else {
            if (m > 0) r.add(n, m - 1, ScalarExpr(m) * c);
        }
    }
    return r;
}

std::complex<double> ShadowPoly::eval(double x, double p,
                                      const std::map<std::string, double>& bindings,
                                      double q_value) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [key, c] : terms) {
        auto [n, m] = key;
        std::complex<double> t = c.eval_numeric(bindings, q_value);
        t *= std::pow(x, n) * std::pow(p, m);
        acc += t;
    }
    return acc;
}

ShadowPoly operator+(const ShadowPoly& a, const ShadowPoly& b) {
    ShadowPoly r = a;
    for (const auto& [key, c] : b.terms) r.add(key.first, key.second, c);
    return r;
}

ShadowPoly operator-(const ShadowPoly& a, const ShadowPoly& b) {
    ShadowPoly r = a;
    for (const auto& [key, c] : b.terms) r.add(key.first, key.second, -c);
    return r;
}

ShadowPoly operator*(const ShadowPoly& a, const ShadowPoly& b) {
    ShadowPoly r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

bool operator==(const ShadowPoly& a, const ShadowPoly& b) {
    return (a - b).is_zero();
}

QPoly QPoly::monomial(int n, int m, const ScalarExpr& c) {
    if (n < 0 || m < 0) throw Error("negative generator exponent");
    QPoly r;
    r.add(n, m, c);
    return r;
}

bool QPoly::is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

ScalarExpr QPoly::coeff(int n, int m) const {
    auto it = terms_.find({n, m});
    if (it == terms_.end()) return ScalarExpr(0);
    return it->second;
}

int QPoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) {
        (void)c;
        deg = std::max(deg, key.first + key.second);
    }
    return deg;
}

void QPoly::add(int n, int m, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(n, m);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

QPoly QPoly::pow(unsigned k) const {
    QPoly acc(1);
    for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

QPoly QPoly::subst_s(const BigRat& value) const {
    QPoly r;
    for (const auto& [key, c] : terms_) r.add(key.first, key.second, c.subst_s(value));
    return r;
}

ShadowPoly QPoly::shadow() const {
    ShadowPoly r;
    for (const auto& [key, c] : terms_) r.add(key.first, key.second, c);
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, c);
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, -c);
    return r;
}

QPoly operator-(const QPoly& a) {
    QPoly r;
    for (const auto& [key, c] : a.terms_) r.add(key.first, key.second, -c);
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // (x^a p^b)(x^c p^d): move p^b left past x^c, one q per swap.
            ScalarExpr factor = ScalarExpr::q_power(ka.second * kb.first);
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb * factor);
        }
    }
    return r;
}

QPoly operator*(const ScalarExpr& c, const QPoly& a) {
    QPoly r;
    for (const auto& [key, v] : a.terms_) r.add(key.first, key.second, c * v);
    return r;
}

QPoly operator*(const QPoly& a, const ScalarExpr& c) { return c * a; }

bool operator==(const QPoly& a, const QPoly& b) { return (a - b).is_zero(); }

QPoly normal_order(const FreeWord& word) {
    // Count inversions: every pair (i < j) with letters[i] = P, letters[j] = X
    // contributes one factor of q when the word is sorted to x-first form.
    long swaps = 0;
    long ps_seen = 0;
    int n = 0;
    int m = 0;
    for (Gen g : word.letters) {
        if (g == Gen::P) {
            ++ps_seen;
            ++m;
        } else {
            swaps += ps_seen;
            ++n;
        }
    }
    if (word.prefactor.is_zero()) return QPoly();
    return QPoly::monomial(n, m,
                           word.prefactor * ScalarExpr::q_power(static_cast<int>(swaps)));
}

}  // namespace qmech
