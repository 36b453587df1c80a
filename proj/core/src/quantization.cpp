#include "qmech/quantization.hpp"

#include <sstream>

#include "qmech/calculus.hpp"

namespace qmech {

namespace {

void add_zero_check(Report& report, const std::string& name, const Op1& op) {
    auto witness = op.nonzero_witness();
    if (!witness) {
        report.add(name, true);
    } else {
        report.add(name, false, "first failing monomial x^" + std::to_string(*witness));
    }
}

}  // namespace

QuantumOps build_ops(int truncation) {
    Basis1 basis{truncation};
    ScalarExpr i = ScalarExpr::imaginary_unit();

    Op1 x_mult = Op1::from_action(basis, 1, [basis](int n) {
        return Op1::Column{{n + 1, ScalarExpr(1)}};
    });
    Op1 deriv = Op1::from_action(basis, -1, [](int n) {
        if (n == 0) return Op1::Column{};
        return Op1::Column{{n - 1, qint1(n)}};
    });
    Op1 lambda = Op1::from_action(basis, 0, [](int n) {
        return Op1::Column{{n, ScalarExpr::s_power(-1 - 2 * n)}};
    });
    Op1 lambda_inv = Op1::from_action(basis, 0, [](int n) {
        return Op1::Column{{n, ScalarExpr::s_power(1 + 2 * n)}};
    });

    Op1 momentum_raw = deriv.scaled(-i);
    Op1 momentum_raw_adj = (lambda * deriv).scaled(-(i * ScalarExpr::s_power(-1)));
    Op1 p_tilde = (momentum_raw + momentum_raw_adj).scaled(ScalarExpr::rational(1, 2));
    // 2q/(1+q)
    ScalarExpr xfactor = (ScalarExpr(2) * ScalarExpr::q_power(1)) /
                         (ScalarExpr(1) + ScalarExpr::q_power(1));
    Op1 x_tilde = x_mult.scaled(xfactor);

    return QuantumOps{basis,      x_mult,          deriv,   lambda, lambda_inv,
                      momentum_raw, momentum_raw_adj, x_tilde, p_tilde};
}

Op1 qcommutator(const Op1& a, const Op1& b) {
    return (a * b).scaled(ScalarExpr::s_power(1)) -
           (b * a).scaled(ScalarExpr::s_power(-1));
}

Report verify_heisenberg(int truncation) {
    Report report;
    report.suite = "quantization";
    QuantumOps ops = build_ops(truncation);
    Op1 I = Op1::identity(ops.basis);
    ScalarExpr i = ScalarExpr::imaginary_unit();

    add_zero_check(report, "[x~,p~]_q == i Lambda",
                   qcommutator(ops.x_tilde, ops.p_tilde) - ops.lambda.scaled(i));
    add_zero_check(report, "Lambda x~ == q^(-1) x~ Lambda",
                   ops.lambda * ops.x_tilde -
                       (ops.x_tilde * ops.lambda).scaled(ScalarExpr::q_power(-1)));
    add_zero_check(report, "Lambda p~ == q p~ Lambda",
                   ops.lambda * ops.p_tilde -
                       (ops.p_tilde * ops.lambda).scaled(ScalarExpr::q_power(1)));
    add_zero_check(report, "[p~,x~]_q == -i Lambda^(-1)",
                   qcommutator(ops.p_tilde, ops.x_tilde) + ops.lambda_inv.scaled(i));
    add_zero_check(report, "[x~,p~]_q [p~,x~]_q == 1",
                   qcommutator(ops.x_tilde, ops.p_tilde) *
                           qcommutator(ops.p_tilde, ops.x_tilde) -
                       I);
    // Lambda = q^(-1/2) (1 + (q-1) X del)^(-1), checked multiplicatively.
    add_zero_check(report, "(1 + (q-1) x del) Lambda == q^(-1/2)",
                   (I + (ops.x_mult * ops.deriv)
                            .scaled(ScalarExpr::q_power(1) - ScalarExpr(1))) *
                           ops.lambda -
                       I.scaled(ScalarExpr::s_power(-1)));
    add_zero_check(report, "Lambda Lambda^(-1) == 1",
                   ops.lambda * ops.lambda_inv - I);

    // q -> 1 reduction: x~ -> x, p~ -> -i d/dx, Lambda -> 1.
    BigRat one(1);
    add_zero_check(report, "x~ at q=1 is multiplication by x",
                   (ops.x_tilde - ops.x_mult).subst_s(one));
    add_zero_check(report, "p~ at q=1 is -i d/dx",
                   (ops.p_tilde - ops.deriv.scaled(-i)).subst_s(one));
    add_zero_check(report, "Lambda at q=1 is the identity",
                   (ops.lambda - I).subst_s(one));

    return report;
}

CorrespondenceTable correspondence_table(int truncation) {
    CorrespondenceTable table;
    QuantumOps ops = build_ops(truncation);
    ScalarExpr i = ScalarExpr::imaginary_unit();

    QPoly bracket_xp = qpb_direct(QPoly::x(), QPoly::p());
    QPoly bracket_px = qpb_direct(QPoly::p(), QPoly::x());

    // {x,p}_q = q^(1/2)  <->  [x~,p~]_q = i Lambda
    {
        CorrespondenceRow row;
        row.classical = "{x,p}_q = q^(1/2)";
        row.substitution = "q^(1/2) -> i*Lambda";
        row.quantum = "[x~,p~]_q = i*Lambda";
        bool classical_ok =
            bracket_xp == QPoly(ScalarExpr::s_power(1));
        bool quantum_ok = !(qcommutator(ops.x_tilde, ops.p_tilde) -
                            ops.lambda.scaled(i))
                               .nonzero_witness()
                               .has_value();
        row.matches = classical_ok && quantum_ok;
        table.rows.push_back(row);
    }
    // {p,x}_q = -q^(-1/2)  <->  [p~,x~]_q = -i Lambda^(-1)
    {
        CorrespondenceRow row;
        row.classical = "{p,x}_q = -q^(-1/2)";
        row.substitution = "q^(-1/2) -> i*Lambda^(-1)";
        row.quantum = "[p~,x~]_q = -i*Lambda^(-1)";
        bool classical_ok =
            bracket_px == QPoly(-ScalarExpr::s_power(-1));
        bool quantum_ok = !(qcommutator(ops.p_tilde, ops.x_tilde) +
                            ops.lambda_inv.scaled(i))
                               .nonzero_witness()
                               .has_value();
        row.matches = classical_ok && quantum_ok;
        table.rows.push_back(row);
    }
    // Product pair: the signs disagree by design (i^2 = -1 on the quantum side).
    {
        CorrespondenceRow row;
        row.classical = "{x,p}_q * {p,x}_q = -1";
        row.substitution = "(i*Lambda) * (-i*Lambda^(-1)) = +1";
        row.quantum = "[x~,p~]_q * [p~,x~]_q = +1";
        bool classical_ok =
            (bracket_xp * bracket_px) == QPoly(ScalarExpr(-1));
        bool quantum_ok = !(qcommutator(ops.x_tilde, ops.p_tilde) *
                                qcommutator(ops.p_tilde, ops.x_tilde) -
                            Op1::identity(ops.basis))
                               .nonzero_witness()
                               .has_value();
        row.matches = false;
        std::ostringstream note;
        note << "structurally different: classical product is -1, operator product is +1"
             << " (sign absorbed by i^2); both sides verified "
             << (classical_ok && quantum_ok ? "true" : "FALSE");
        row.note = note.str();
        table.rows.push_back(row);
    }
    return table;
}

std::string heisenberg_equation_text(const std::string& op_name,
                                     const std::string& ham_name) {
    std::ostringstream out;
    out << "d(" << op_name << ")/dt = i*[" << op_name << ", " << ham_name
        << "]_q + del(" << op_name << ")/del(t)";
    return out.str();
}

}  // namespace qmech
