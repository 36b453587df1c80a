#ifndef QMECH_QPOLY_HPP
#define QMECH_QPOLY_HPP

// Polynomials on the quantum plane with the exchange relation p x = q x p.
// Everything is kept normal ordered: a QPoly is a finite sum of x^n p^m
// monomials with ScalarExpr coefficients.  Multiplying two ordered monomials
// costs one scalar factor per transposition:
//   (x^a p^b) (x^c p^d) = q^(b*c) x^(a+c) p^(b+d).

#include <map>
#include <utility>
#include <vector>

#include "qmech/scalar.hpp"

namespace qmech {

enum class Gen : unsigned char { X, P };

// A free word in the generators with a scalar prefactor, before ordering.
struct FreeWord {
    ScalarExpr prefactor{1};
    std::vector<Gen> letters;
};

// Commutative image of a QPoly (s = 1 semantics is the classical plane, but
// the shadow keeps symbolic coefficients so callers pick when to evaluate).
struct ShadowPoly {
    std::map<std::pair<int, int>, ScalarExpr> terms;

    bool is_zero() const { return terms.empty(); }
    void add(int n, int m, const ScalarExpr& c);
    // Classical partial derivative in x (dir 0) or p (dir 1).
    ShadowPoly partial(int dir) const;

    std::complex<double> eval(double x, double p,
                              const std::map<std::string, double>& bindings,
                              double q_value) const;

    friend ShadowPoly operator+(const ShadowPoly& a, const ShadowPoly& b);
    friend ShadowPoly operator-(const ShadowPoly& a, const ShadowPoly& b);
    friend ShadowPoly operator*(const ShadowPoly& a, const ShadowPoly& b);
    friend bool operator==(const ShadowPoly& a, const ShadowPoly& b);
};

class QPoly {
  public:
    using Key = std::pair<int, int>;  // (n, m) for x^n p^m
    using Terms = std::map<Key, ScalarExpr>;

    QPoly() = default;
    explicit QPoly(const ScalarExpr& c) { add(0, 0, c); }
    QPoly(long c) : QPoly(ScalarExpr(c)) {}  // NOLINT(implicit)

    static QPoly x() { return monomial(1, 0, ScalarExpr(1)); }
    static QPoly p() { return monomial(0, 1, ScalarExpr(1)); }
    static QPoly monomial(int n, int m, const ScalarExpr& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    // Coefficient of x^n p^m (zero scalar when the term is absent).
    ScalarExpr coeff(int n, int m) const;
    ScalarExpr scalar_part() const { return coeff(0, 0); }
    // Max n + m over the support; -1 for the zero polynomial.
    int total_degree() const;

    void add(int n, int m, const ScalarExpr& c);

    QPoly pow(unsigned k) const;
    QPoly subst_s(const BigRat& value) const;
    QPoly at_q1() const { return subst_s(BigRat(1)); }

    ShadowPoly shadow() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const ScalarExpr& c, const QPoly& a);
    friend QPoly operator*(const QPoly& a, const ScalarExpr& c);
    friend bool operator==(const QPoly& a, const QPoly& b);
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  private:
    Terms terms_;
};

// Orders a free word into the canonical x-before-p form, collecting one
// factor of q for every p that moves left past an x.
QPoly normal_order(const FreeWord& word);

}  // namespace qmech

#endif
