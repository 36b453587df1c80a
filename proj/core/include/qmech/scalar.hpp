#ifndef QMECH_SCALAR_HPP
#define QMECH_SCALAR_HPP

// Exact scalar arithmetic for the deformation coefficients.
//
// Every coefficient in the engine lives in the field of rational functions
// over the Gaussian rationals in one deformation unit s = q^(1/2) plus an
// arbitrary set of named parameters (m, w, c3, ...).  Powers of q are even
// powers of s, so a single integer exponent per monomial covers both.
// Arithmetic is exact: big-integer rationals, no floating point, no rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmech/errors.hpp"

namespace qmech {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Gaussian rational a + b*i with exact components.
struct GaussRat {
    BigRat re{0};
    BigRat im{0};

    GaussRat() = default;
    GaussRat(BigRat r) : re(std::move(r)) {}          // NOLINT(implicit)
    GaussRat(long r) : re(r) {}                       // NOLINT(implicit)
    GaussRat(BigRat r, BigRat i_) : re(std::move(r)), im(std::move(i_)) {}

    static GaussRat i() { return GaussRat(BigRat(0), BigRat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    // Throws DivisionByZeroError on zero.
    GaussRat inverse() const;

    std::complex<double> to_complex() const;

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// One monomial: s^s_exp * prod(params).  Parameter exponents are kept
// strictly positive; the s exponent may be any integer (Laurent in s).
struct Mono {
    int s_exp = 0;
    std::map<std::string, int> params;

    bool is_unit() const { return s_exp == 0 && params.empty(); }

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.s_exp == b.s_exp && a.params == b.params;
    }
    friend bool operator<(const Mono& a, const Mono& b) {
        if (a.s_exp != b.s_exp) return a.s_exp < b.s_exp;
        return a.params < b.params;
    }
    friend Mono operator*(const Mono& a, const Mono& b);
};

// Sparse polynomial over GaussRat, Laurent in s, polynomial in parameters.
class Poly {
  public:
    using Terms = std::map<Mono, GaussRat>;

    Poly() = default;
    explicit Poly(GaussRat c);
    explicit Poly(long c) : Poly(GaussRat(c)) {}

    static Poly s_power(int k);
    static Poly parameter(const std::string& name, int exponent = 1);
    static Poly imaginary_unit() { return Poly(GaussRat::i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // Largest monomial in the fixed order, and its coefficient.
    const Mono& leading_monomial() const;
    const GaussRat& leading_coeff() const;

    void add_term(const Mono& m, const GaussRat& c);

    Poly scaled(const GaussRat& c) const;
    // Exact division by a monomial; parameter exponents must stay >= 0.
    Poly divided_by(const Mono& m) const;
    // Per-variable minimum exponent over all terms (variables missing from
    // any term contribute 0, except s which may go negative).
    Mono content() const;

    Poly pow(unsigned n) const;

    bool depends_on(const std::string& name) const;
    std::set<std::string> parameter_names() const;
    // Splits into coefficient polynomials by the exponent of one parameter.
    std::map<int, Poly> collect(const std::string& name) const;

    // s := value (exact).  Throws DivisionByZeroError when value == 0 meets
    // a negative s exponent.
    Poly subst_s(const BigRat& value) const;

    std::complex<double> eval(const std::map<std::string, double>& bindings,
                              std::complex<double> s_value) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    Terms terms_;
};

// Rational function num/den in canonical form:
//   - den is never zero; num == 0 forces den == 1;
//   - the common monomial content of num and den is removed (in particular
//     the smallest s exponent across both is 0);
//   - the leading coefficient of den is exactly 1.
// Equality is decided by cross multiplication, which is exact on this
// representation without any multivariate gcd.
class ScalarExpr {
  public:
    ScalarExpr() : num_(), den_(Poly(1)) {}
    ScalarExpr(long v) : num_(Poly(v)), den_(Poly(1)) {}  // NOLINT(implicit)
    explicit ScalarExpr(const BigRat& v);
    explicit ScalarExpr(const GaussRat& v) : num_(Poly(v)), den_(Poly(1)) {}
    explicit ScalarExpr(Poly num) : num_(std::move(num)), den_(Poly(1)) {}
    ScalarExpr(Poly num, Poly den);  // throws DivisionByZeroError

    static ScalarExpr s_power(int k) { return ScalarExpr(Poly::s_power(k)); }
    static ScalarExpr q_power(int k) { return s_power(2 * k); }
    static ScalarExpr parameter(const std::string& name) {
        return ScalarExpr(Poly::parameter(name));
    }
    static ScalarExpr imaginary_unit() { return ScalarExpr(GaussRat::i()); }
    static ScalarExpr rational(long num, long den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // pow with negative exponent inverts; throws DivisionByZeroError on 0.
    ScalarExpr pow(int k) const;
    ScalarExpr inverse() const;

    bool depends_on(const std::string& name) const;
    std::set<std::string> parameter_names() const;

    ScalarExpr subst_s(const BigRat& value) const;
    ScalarExpr at_q1() const { return subst_s(BigRat(1)); }
    ScalarExpr subst_param(const std::string& name, const ScalarExpr& value) const;

    // Writes *this as alpha*name + beta with alpha, beta free of `name`.
    // Throws SolveError when the dependence is not linear or sits in den.
    std::pair<ScalarExpr, ScalarExpr> split_linear(const std::string& name) const;

    std::complex<double> eval_numeric(const std::map<std::string, double>& bindings,
                                      double q_value) const;

    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) {
        return !(a == b);
    }

  private:
    void canonicalize();

    Poly num_;
    Poly den_;
};

// q-basic number [n] = 1 + q^2 + ... + q^(2(n-1)), n >= 0.
ScalarExpr qint(int n);
// One-dimensional step-q variant 1 + q + ... + q^(n-1), n >= 0.
ScalarExpr qint1(int n);

}  // namespace qmech

#endif
