#include "qmech/realization.hpp"

#include <sstream>

#include "qmech/calculus.hpp"

namespace qmech {

namespace {

std::string monomial_name(const Basis2& basis, int index) {
    auto [a, b] = basis.exponents(index);
    std::ostringstream out;
    out << "x^" << a << " p^" << b;
    return out.str();
}

// Adds a named A == B check, reporting the first differing basis monomial.
void add_equality_check(Report& report, const std::string& name, const Op2& a,
                        const Op2& b) {
    auto witness = difference_witness(a, b);
    if (!witness) {
        report.add(name, true);
    } else {
        report.add(name, false,
                   "first failing monomial " + monomial_name(a.basis(), *witness));
    }
}

}  // namespace

Op2 realize(PlaneOp which, int truncation) {
    Basis2 basis{truncation};
    switch (which) {
        case PlaneOp::X:
            return Op2::from_action(basis, 1, [basis](int i) {
                auto [a, b] = basis.exponents(i);
                return Op2::Column{{basis.index(a + 1, b), ScalarExpr(1)}};
            });
        case PlaneOp::P:
            // p D_x: the dilatation contributes q^a before p raises b.
            return Op2::from_action(basis, 1, [basis](int i) {
                auto [a, b] = basis.exponents(i);
                return Op2::Column{{basis.index(a, b + 1), ScalarExpr::q_power(a)}};
            });
        case PlaneOp::DerivX:
            // Jackson derivative, step q^2: x^a -> [a] x^(a-1).
            return Op2::from_action(basis, -1, [basis](int i) {
                auto [a, b] = basis.exponents(i);
                if (a == 0) return Op2::Column{};
                return Op2::Column{{basis.index(a - 1, b), qint(a)}};
            });
        case PlaneOp::DerivP:
            return Op2::from_action(basis, -1, [basis](int i) {
                auto [a, b] = basis.exponents(i);
                if (b == 0) return Op2::Column{};
                return Op2::Column{
                    {basis.index(a, b - 1), ScalarExpr::q_power(a) * qint(b)}};
            });
        case PlaneOp::Dilate:
            return Op2::from_action(basis, 0, [basis](int i) {
                auto [a, b] = basis.exponents(i);
                (void)b;
                return Op2::Column{{i, ScalarExpr::q_power(a)}};
            });
    }
    throw Error("unknown plane operator");
}

Op2 realize_qpoly(const QPoly& f, int truncation) {
    Basis2 basis{truncation};
    Op2 xo = realize(PlaneOp::X, truncation);
    Op2 po = realize(PlaneOp::P, truncation);
    Op2 acc(basis, 0, truncation);  // zero operator
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        auto [n, m] = key;
        Op2 term = Op2::identity(basis);
        for (int k = 0; k < m; ++k) term = po * term;
        for (int k = 0; k < n; ++k) term = xo * term;
        term = term.scaled(c);
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

std::vector<ScalarExpr> shadow_vector(const ShadowPoly& f, const Basis2& basis) {
    std::vector<ScalarExpr> v(static_cast<std::size_t>(basis.size()), ScalarExpr(0));
    for (const auto& [key, c] : f.terms) {
        auto [a, b] = key;
        if (a + b > basis.truncation)
            throw DegreeOverflowError("polynomial exceeds the truncated basis");
        v[static_cast<std::size_t>(basis.index(a, b))] = c;
    }
    return v;
}

Report verify_relations(int truncation) {
    Report report;
    report.suite = "realization";
    Basis2 basis{truncation};

    Op2 X = realize(PlaneOp::X, truncation);
    Op2 P = realize(PlaneOp::P, truncation);
    Op2 DX = realize(PlaneOp::DerivX, truncation);
    Op2 DP = realize(PlaneOp::DerivP, truncation);
    Op2 DIL = realize(PlaneOp::Dilate, truncation);
    Op2 I = Op2::identity(basis);

    ScalarExpr q = ScalarExpr::q_power(1);
    ScalarExpr q2 = ScalarExpr::q_power(2);

    add_equality_check(report, "p.x == q x.p", P * X, (X * P).scaled(q));
    add_equality_check(report, "dx.x == 1 + q^2 x.dx", DX * X, I + (X * DX).scaled(q2));
    add_equality_check(report, "dx.p == q p.dx", DX * P, (P * DX).scaled(q));
    add_equality_check(report, "dp.x == q x.dp", DP * X, (X * DP).scaled(q));
    add_equality_check(report, "dp.p == 1 + q^2 p.dp + (q^2-1) x.dx", DP * P,
                       I + (P * DP).scaled(q2) + (X * DX).scaled(q2 - ScalarExpr(1)));
    add_equality_check(report, "dp.dx == q^(-1) dx.dp", DP * DX,
                       (DX * DP).scaled(ScalarExpr::q_power(-1)));
    add_equality_check(report, "dx.Dil == q Dil.dx", DX * DIL, (DIL * DX).scaled(q));

    return report;
}

Report crosscheck_derivative(const QPoly& f, int truncation) {
    Report report;
    report.suite = "realization";
    Basis2 basis{truncation};
    if (f.total_degree() > truncation)
        throw DegreeOverflowError("polynomial degree exceeds the truncation");

    auto vec = shadow_vector(f.shadow(), basis);
    auto check_vectors = [&](const std::string& name,
                             const std::vector<ScalarExpr>& got,
                             const std::vector<ScalarExpr>& want) {
        for (int i = 0; i < basis.size(); ++i) {
            if (!(got[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)])) {
                report.add(name, false,
                           "first failing monomial " + monomial_name(basis, i));
                return;
            }
        }
        report.add(name, true);
    };

    check_vectors("realized del_x matches partial_right in x",
                  realize(PlaneOp::DerivX, truncation).apply(vec),
                  shadow_vector(partial_right(f, Dir::X).shadow(), basis));
    check_vectors("realized del_p matches partial_right in p",
                  realize(PlaneOp::DerivP, truncation).apply(vec),
                  shadow_vector(partial_right(f, Dir::P).shadow(), basis));

    std::vector<ScalarExpr> unit(static_cast<std::size_t>(basis.size()), ScalarExpr(0));
    unit[0] = ScalarExpr(1);
    check_vectors("realized polynomial applied to 1 reproduces it",
                  realize_qpoly(f, truncation).apply(unit), vec);

    return report;
}

}  // namespace qmech
