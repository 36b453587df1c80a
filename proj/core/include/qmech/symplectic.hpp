#ifndef QMECH_SYMPLECTIC_HPP
#define QMECH_SYMPLECTIC_HPP

// Symplectic transformations of the quantum plane.
//
// A linear change of generators x' = x*a + p*c, p' = x*b + p*d has entries
// a, b, c, d that commute with x and p but not with each other.  Candidate
// commutation rules for the entries are modelled as rewrite systems on words
// over {a, b, c, d} and tested against two requirements:
//
//   * check_ctt        : T fulfils the defining matrix identity
//                        sum_{r,s} T[r][i] C[r][s] T[s][j] = C[i][j]
//                        with C = cq() the structure matrix at deformation
//                        q^(1/2);
//   * check_bracket_invariance : the q-Poisson brackets of (x', p') reproduce
//                        the structure constants {x,p} = q^(1/2),
//                        {p,x} = -q^(-1/2), i.e. the entries of jq().
//
// Because jq() is minus the transpose of cq(), the invariance residual at
// (i,j) is exactly minus the matrix-identity residual at (j,i) before any
// rewriting
// (checks_coincide verifies this inside the word algebra), so the two checks
// accept exactly the same transformations.  check_plane additionally tests
// whether the images keep the plane relation p'x' = q x'p'; that is a
// diagnostic, not a requirement — it singles out the mirror exchange
// convention and is incompatible with check_ctt for non-diagonal entries.

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qmech/report.hpp"
#include "qmech/scalar.hpp"

namespace qmech {

struct Mat2 {
    std::array<std::array<ScalarExpr, 2>, 2> e;
};

// The deformed symplectic unit: jq[i][j] = {x^i, x^j}, i.e.
// [[0, q^(1/2)], [-q^(-1/2), 0]].  At s = 1 it is exactly the classical
// unit [[0, 1], [-1, 0]].
Mat2 jq();
// Defining-relation matrix at deformation q^(1/2): [[0, q^(-1/2)], [-q^(1/2), 0]].
// Identically minus the transpose of jq().
Mat2 cq();

// A word in the transformation entries; letters are 'a', 'b', 'c', 'd'.
using TWord = std::string;

// Finite linear combination of words with exact scalar coefficients.
class TElem {
  public:
    using Terms = std::map<TWord, ScalarExpr>;

    TElem() = default;
    static TElem word(const TWord& w, const ScalarExpr& c = ScalarExpr(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const TWord& w, const ScalarExpr& c);

    TElem scaled(const ScalarExpr& c) const;
    // s := value in every coefficient (terms whose coefficient vanishes drop).
    TElem subst_s(const BigRat& value) const;

    friend TElem operator+(const TElem& a, const TElem& b);
    friend TElem operator-(const TElem& a, const TElem& b);
    friend TElem operator*(const TElem& a, const TElem& b);
    friend bool operator==(const TElem& a, const TElem& b) {
        return a.terms_ == b.terms_;
    }

  private:
    Terms terms_;
};

struct RewriteRule {
    TWord lhs;
    std::vector<std::pair<ScalarExpr, TWord>> rhs;
};

struct RelationSet {
    std::string name;
    std::vector<RewriteRule> rules;

    // Throws Error unless every rule rewrites to strictly smaller words in
    // the length-then-lex order (that guarantees termination) and uses only
    // the letters a..d with nonzero coefficients.
    void validate() const;
};

enum class ReduceStrategy {
    LeftmostFirst,   // smallest position, first matching rule
    RightmostLast,   // largest position, last matching rule
};

// Rewrites to normal form.  Throws ReductionBudgetError when more than
// `step_budget` single-rule applications are needed.
TElem reduce(const TElem& e, const RelationSet& relations,
             ReduceStrategy strategy = ReduceStrategy::LeftmostFirst,
             long step_budget = 200000);

// Reduces every word up to max_length under both strategies and reports the
// first disagreement (a local-confluence witness search by exhaustion).
bool strategies_agree(const RelationSet& relations, int max_length,
                      std::string* counterexample = nullptr);

struct EntryResidual {
    int row = 0;
    int col = 0;
    TElem residual;
    bool pass = false;
};

struct MatrixCheck {
    std::string check_name;
    std::string relation_set;
    std::vector<EntryResidual> entries;

    bool all_pass() const;
    Report to_report() const;
};

MatrixCheck check_ctt(const RelationSet& relations);
MatrixCheck check_bracket_invariance(const RelationSet& relations);
// Residuals of p'x' - q x'p' against the basis x^2, x*p, p^2 (rows 0..2).
MatrixCheck check_plane(const RelationSet& relations);

// Verifies inside the word algebra that the invariance residual at (i, j)
// is minus the matrix-identity residual at (j, i) for this relation set.
bool checks_coincide(const RelationSet& relations);

// The candidate rule sets shipped with the library (also installed as JSON
// under share/qmech/relations).  A two-parameter Manin-style family: the
// exchange deformation mu and the determinant normalization vary; running
// the checkers over the family identifies which member satisfies the matrix
// identity (manin-q-det-q) and which preserves the plane relation instead
// (manin-qinv-det-qinv).
std::vector<RelationSet> builtin_relation_sets();

// JSON serialization; coefficients are scalar expressions in q.
RelationSet relation_set_from_json(const std::string& json_text);
std::string relation_set_to_json(const RelationSet& relations);
RelationSet load_relation_set(std::istream& in);

}  // namespace qmech

#endif
