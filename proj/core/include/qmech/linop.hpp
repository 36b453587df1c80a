#ifndef QMECH_LINOP_HPP
#define QMECH_LINOP_HPP

// Degree-truncated linear operators with exact ScalarExpr entries, shared by
// the plane realization (two variables) and the quantization module (one
// variable).  An operator knows how far it can raise total degree, so a
// composition only claims validity on the subspace where no intermediate
// result escapes the truncation.  Comparisons are exact on that subspace.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qmech/scalar.hpp"

namespace qmech {

// Monomial basis x^n, 0 <= n <= truncation.
struct Basis1 {
    int truncation = 0;
    int size() const { return truncation + 1; }
    int degree(int index) const { return index; }
};

// Monomial basis x^a p^b, a + b <= truncation, grouped by total degree.
struct Basis2 {
    int truncation = 0;
    int size() const { return (truncation + 1) * (truncation + 2) / 2; }
    int index(int a, int b) const;
    std::pair<int, int> exponents(int index) const;
    int degree(int index) const { return exponents(index).first + exponents(index).second; }
};

template <class Basis>
class SparseOp {
  public:
    using Column = std::map<int, ScalarExpr>;  // row index -> entry

    SparseOp(const Basis& basis, int raise, int domain_max)
        : basis_(basis), raise_(raise), domain_max_(domain_max),
          cols_(static_cast<std::size_t>(basis.size())) {}

    // Builds columns from an action on basis vectors.  `raise` must bound the
    // degree shift of every output term.
    static SparseOp from_action(const Basis& basis, int raise,
                                const std::function<Column(int)>& act) {
        SparseOp op(basis, raise, basis.truncation - std::max(raise, 0));
        for (int i = 0; i < basis.size(); ++i) {
            if (basis.degree(i) > op.domain_max_) continue;
            for (auto& [row, v] : act(i))
                if (!v.is_zero()) op.cols_[i].emplace(row, v);
        }
        return op;
    }

    static SparseOp identity(const Basis& basis) {
        SparseOp op(basis, 0, basis.truncation);
        for (int i = 0; i < basis.size(); ++i) op.cols_[i].emplace(i, ScalarExpr(1));
        return op;
    }

    const Basis& basis() const { return basis_; }
    int raise() const { return raise_; }
    // Largest source degree whose column is fully represented.
    int domain_max() const { return domain_max_; }
    const Column& column(int i) const { return cols_[static_cast<std::size_t>(i)]; }

    SparseOp scaled(const ScalarExpr& c) const {
        SparseOp r(basis_, raise_, domain_max_);
        if (c.is_zero()) return r;
        for (std::size_t i = 0; i < cols_.size(); ++i)
            for (const auto& [row, v] : cols_[i]) r.cols_[i].emplace(row, c * v);
        return r;
    }

    SparseOp subst_s(const BigRat& value) const {
        SparseOp r(basis_, raise_, domain_max_);
        for (std::size_t i = 0; i < cols_.size(); ++i)
            for (const auto& [row, v] : cols_[i]) {
                ScalarExpr sv = v.subst_s(value);
                if (!sv.is_zero()) r.cols_[i].emplace(row, sv);
            }
        return r;
    }

    // Applies the operator to a coefficient vector over the basis.  The
    // vector may only populate degrees within the operator's domain.
    std::vector<ScalarExpr> apply(const std::vector<ScalarExpr>& vec) const {
        std::vector<ScalarExpr> out(static_cast<std::size_t>(basis_.size()),
                                    ScalarExpr(0));
        for (int i = 0; i < basis_.size(); ++i) {
            const ScalarExpr& c = vec[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (basis_.degree(i) > domain_max_)
                throw DegreeOverflowError("vector exceeds the operator domain");
            for (const auto& [row, v] : cols_[static_cast<std::size_t>(i)]) {
                std::size_t r = static_cast<std::size_t>(row);
                out[r] = out[r] + v * c;
            }
        }
        return out;
    }

    // First basis index inside the domain with a nonzero column, if any.
    std::optional<int> nonzero_witness() const {
        for (int i = 0; i < basis_.size(); ++i) {
            if (basis_.degree(i) > domain_max_) continue;
            if (!cols_[static_cast<std::size_t>(i)].empty()) return i;
        }
        return std::nullopt;
    }

    friend SparseOp operator+(const SparseOp& a, const SparseOp& b) {
        SparseOp r(a.basis_, std::max(a.raise_, b.raise_),
                   std::min(a.domain_max_, b.domain_max_));
        for (int i = 0; i < a.basis_.size(); ++i) {
            if (a.basis_.degree(i) > r.domain_max_) continue;
            Column& col = r.cols_[static_cast<std::size_t>(i)];
            col = a.cols_[static_cast<std::size_t>(i)];
            for (const auto& [row, v] : b.cols_[static_cast<std::size_t>(i)]) {
                auto it = col.find(row);
                if (it == col.end()) {
                    col.emplace(row, v);
                } else {
                    it->second = it->second + v;
                    if (it->second.is_zero()) col.erase(it);
                }
            }
        }
        return r;
    }

    friend SparseOp operator-(const SparseOp& a, const SparseOp& b) {
        return a + b.scaled(ScalarExpr(-1));
    }

    // Composition a(b(.)): valid where b's column is valid and every row of
    // it still lies inside a's domain.
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b) {
        SparseOp r(a.basis_, a.raise_ + b.raise_,
                   std::min(b.domain_max_, a.domain_max_ - b.raise_));
        for (int i = 0; i < a.basis_.size(); ++i) {
            if (a.basis_.degree(i) > r.domain_max_) continue;
            Column& col = r.cols_[static_cast<std::size_t>(i)];
            for (const auto& [mid, v] : b.cols_[static_cast<std::size_t>(i)]) {
                for (const auto& [row, w] : a.cols_[static_cast<std::size_t>(mid)]) {
                    auto it = col.find(row);
                    if (it == col.end()) {
                        col.emplace(row, w * v);
                    } else {
                        it->second = it->second + w * v;
                        if (it->second.is_zero()) col.erase(it);
                    }
                }
            }
        }
        return r;
    }

  private:
    Basis basis_;
    int raise_;
    int domain_max_;
    std::vector<Column> cols_;
};

using Op1 = SparseOp<Basis1>;
using Op2 = SparseOp<Basis2>;

// First basis index (within the common domain) where a and b differ.
template <class Basis>
std::optional<int> difference_witness(const SparseOp<Basis>& a, const SparseOp<Basis>& b) {
    return (a - b).nonzero_witness();
}

}  // namespace qmech

#endif
