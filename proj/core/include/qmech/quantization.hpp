#ifndef QMECH_QUANTIZATION_HPP
#define QMECH_QUANTIZATION_HPP

// One-dimensional canonical quantization side: position and momentum act on
// truncated polynomials in a single variable, with the step-q derivative
//   del(x^n) = (1 + q + ... + q^(n-1)) x^(n-1)
// and the dilatator Lambda acting diagonally as q^(-1/2-n).  The physical
// pair is
//   x~ = (2q/(1+q)) X ,   p~ = (P + P*)/2 ,
//   P = -i del ,          P* = -i q^(-1/2) Lambda del .
// verify_heisenberg replays the deformed commutator identities exactly on
// the truncated basis; correspondence_table lines them up with the bracket
// relations of the plane under the substitution q^(1/2) -> i*Lambda.

#include "qmech/linop.hpp"
#include "qmech/report.hpp"

namespace qmech {

struct QuantumOps {
    Basis1 basis;
    Op1 x_mult;      // multiplication by x
    Op1 deriv;       // step-q derivative
    Op1 lambda;      // dilatator
    Op1 lambda_inv;
    Op1 momentum_raw;     // P = -i del
    Op1 momentum_raw_adj; // P* = -i q^(-1/2) Lambda del
    Op1 x_tilde;
    Op1 p_tilde;
};

QuantumOps build_ops(int truncation);

// q-deformed commutator q^(1/2) a b - q^(-1/2) b a.
Op1 qcommutator(const Op1& a, const Op1& b);

// Replays the deformed Heisenberg identities on the truncated basis:
// the commutator pair, the Lambda exchange rules, the inverse-product
// identity, the resolvent form of Lambda and the q->1 reduction.
Report verify_heisenberg(int truncation);

struct CorrespondenceRow {
    std::string classical;     // bracket statement on the plane
    std::string quantum;       // operator statement
    std::string substitution;  // classical side after q^(1/2) -> i*Lambda
    bool matches = false;      // operator check confirms the substitution
    std::string note;
};

struct CorrespondenceTable {
    std::vector<CorrespondenceRow> rows;
};

// Both sides computed, not quoted: the classical column is evaluated with
// qpb_direct, the quantum column on the truncated operators.
CorrespondenceTable correspondence_table(int truncation);

// Formal evolution statement for an operator against a Hamiltonian; the
// explicit-time term is appended verbatim.
std::string heisenberg_equation_text(const std::string& op_name,
                                     const std::string& ham_name);

}  // namespace qmech

#endif
