#include "qmech/symplectic.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "qmech/expr.hpp"
#include "qmech/printer.hpp"

namespace qmech {
namespace {

const ScalarExpr kQ = ScalarExpr::q_power(1);

bool valid_letter(char c) { return c >= 'a' && c <= 'd'; }

// Strict length-then-lex order on words; rewriting must decrease it.
bool word_smaller(const TWord& a, const TWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// The entry matrix: T[row][col], row = old generator, col = new generator,
// so x' = x*a + p*c and p' = x*b + p*d.
const char* const kEntry[2][2] = {{"a", "b"}, {"c", "d"}};

TElem raw_ctt_residual(int i, int j) {
    Mat2 c = cq();
    TElem out;
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            if (c.e[r][s].is_zero()) continue;
            out.add(std::string(kEntry[r][i]) + kEntry[s][j], c.e[r][s]);
        }
    }
    out.add("", -c.e[i][j]);
    return out;
}

// {x'^i, x'^j} - {x^i, x^j} expanded over the entry words.  Bilinearity
// puts the second argument's entry word on the left (the bracket formula
// contracts the derivative of g on its first index), and jq[r][s] is the
// generator bracket {x^r, x^s}.
TElem raw_invariance_residual(int i, int j) {
    Mat2 jm = jq();
    TElem out;
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            if (jm.e[r][s].is_zero()) continue;
            out.add(std::string(kEntry[s][j]) + kEntry[r][i], jm.e[r][s]);
        }
    }
    out.add("", -jm.e[i][j]);
    return out;
}

MatrixCheck run_matrix_check(const std::string& name, const RelationSet& relations,
                             TElem (*raw)(int, int)) {
    relations.validate();
    MatrixCheck out;
    out.check_name = name;
    out.relation_set = relations.name;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EntryResidual entry;
            entry.row = i;
            entry.col = j;
            entry.residual = reduce(raw(i, j), relations);
            entry.pass = entry.residual.is_zero();
            out.entries.push_back(std::move(entry));
        }
    }
    return out;
}

std::string residual_text(const TElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : e.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + to_text(term.second) + ")*";
        out += term.first.empty() ? "1" : term.first;
    }
    return out;
}

ScalarExpr coeff_from_json(const nlohmann::json& value) {
    if (!value.is_string()) throw Error("relation coefficient must be a string");
    ParseOptions options;
    return parse_scalar(value.get<std::string>(), options);
}

}  // namespace

Mat2 jq() {
    Mat2 m;
    m.e[0][0] = ScalarExpr(0);
    m.e[0][1] = ScalarExpr::s_power(1);
    m.e[1][0] = -ScalarExpr::s_power(-1);
    m.e[1][1] = ScalarExpr(0);
    return m;
}

Mat2 cq() {
    Mat2 m;
    m.e[0][0] = ScalarExpr(0);
    m.e[0][1] = ScalarExpr::s_power(-1);
    m.e[1][0] = -ScalarExpr::s_power(1);
    m.e[1][1] = ScalarExpr(0);
    return m;
}

TElem TElem::word(const TWord& w, const ScalarExpr& c) {
    TElem out;
    out.add(w, c);
    return out;
}

void TElem::add(const TWord& w, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

TElem TElem::scaled(const ScalarExpr& c) const {
    TElem out;
    for (const auto& term : terms_) out.add(term.first, term.second * c);
    return out;
}

TElem TElem::subst_s(const BigRat& value) const {
    TElem out;
    for (const auto& term : terms_) out.add(term.first, term.second.subst_s(value));
    return out;
}

TElem operator+(const TElem& a, const TElem& b) {
    TElem out = a;
    for (const auto& term : b.terms_) out.add(term.first, term.second);
    return out;
}

TElem operator-(const TElem& a, const TElem& b) {
    TElem out = a;
    for (const auto& term : b.terms_) out.add(term.first, -term.second);
    return out;
}

TElem operator*(const TElem& a, const TElem& b) {
    TElem out;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            out.add(ta.first + tb.first, ta.second * tb.second);
        }
    }
    return out;
}

void RelationSet::validate() const {
    if (name.empty()) throw Error("relation set needs a name");
    for (const auto& rule : rules) {
        if (rule.lhs.empty()) throw Error("relation set '" + name + "': empty lhs");
        for (char c : rule.lhs) {
            if (!valid_letter(c)) {
                throw Error("relation set '" + name + "': lhs letter out of a..d");
            }
        }
        for (const auto& term : rule.rhs) {
            if (term.first.is_zero()) {
                throw Error("relation set '" + name + "': zero coefficient in rhs");
            }
            for (char c : term.second) {
                if (!valid_letter(c)) {
                    throw Error("relation set '" + name + "': rhs letter out of a..d");
                }
            }
            if (!word_smaller(term.second, rule.lhs)) {
                throw Error("relation set '" + name + "': rule '" + rule.lhs +
                            "' does not decrease the word order");
            }
        }
    }
}

namespace {

struct Redex {
    bool found = false;
    TWord word;
    std::size_t pos = 0;
    std::size_t rule = 0;
};

bool matches_at(const TWord& w, std::size_t pos, const TWord& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    return w.compare(pos, lhs.size(), lhs) == 0;
}

Redex find_redex(const TElem& e, const RelationSet& relations, ReduceStrategy strategy) {
    Redex out;
    if (strategy == ReduceStrategy::LeftmostFirst) {
        for (const auto& term : e.terms()) {
            const TWord& w = term.first;
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                for (std::size_t r = 0; r < relations.rules.size(); ++r) {
                    if (matches_at(w, pos, relations.rules[r].lhs)) {
                        out.found = true;
                        out.word = w;
                        out.pos = pos;
                        out.rule = r;
                        return out;
                    }
                }
            }
        }
        return out;
    }
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const TWord& w = it->first;
        for (std::size_t pos = w.size(); pos-- > 0;) {
            for (std::size_t r = relations.rules.size(); r-- > 0;) {
                if (matches_at(w, pos, relations.rules[r].lhs)) {
                    out.found = true;
                    out.word = w;
                    out.pos = pos;
                    out.rule = r;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

TElem reduce(const TElem& e, const RelationSet& relations, ReduceStrategy strategy,
             long step_budget) {
    TElem cur = e;
    long steps = 0;
    for (;;) {
        Redex redex = find_redex(cur, relations, strategy);
        if (!redex.found) return cur;
        if (++steps > step_budget) {
            throw ReductionBudgetError("rewriting exceeded " +
                                       std::to_string(step_budget) + " steps");
        }
        const RewriteRule& rule = relations.rules[redex.rule];
        ScalarExpr coeff = cur.terms().at(redex.word);
        cur.add(redex.word, -coeff);
        TWord prefix = redex.word.substr(0, redex.pos);
        TWord suffix = redex.word.substr(redex.pos + rule.lhs.size());
        for (const auto& term : rule.rhs) {
            cur.add(prefix + term.second + suffix, coeff * term.first);
        }
    }
}

bool strategies_agree(const RelationSet& relations, int max_length,
                      std::string* counterexample) {
    relations.validate();
    std::vector<TWord> frontier{TWord()};
    for (int len = 0; len <= max_length; ++len) {
        for (const TWord& w : frontier) {
            TElem e = TElem::word(w);
            TElem left = reduce(e, relations, ReduceStrategy::LeftmostFirst);
            TElem right = reduce(e, relations, ReduceStrategy::RightmostLast);
            if (!(left == right)) {
                if (counterexample) *counterexample = w;
                return false;
            }
        }
        if (len == max_length) break;
        std::vector<TWord> next;
        next.reserve(frontier.size() * 4);
        for (const TWord& w : frontier) {
            for (char c = 'a'; c <= 'd'; ++c) next.push_back(w + c);
        }
        frontier = std::move(next);
    }
    return true;
}

bool MatrixCheck::all_pass() const {
    for (const auto& entry : entries) {
        if (!entry.pass) return false;
    }
    return true;
}

Report MatrixCheck::to_report() const {
    Report report;
    report.suite = check_name + "/" + relation_set;
    for (const auto& entry : entries) {
        std::string name;
        if (check_name == "plane-preservation") {
            static const char* const kRow[3] = {"x^2", "x*p", "p^2"};
            name = std::string("coefficient of ") + kRow[entry.row];
        } else {
            name = "entry(" + std::to_string(entry.row + 1) + "," +
                   std::to_string(entry.col + 1) + ")";
        }
        std::string detail = entry.pass ? "residual 0"
                                        : "residual " + residual_text(entry.residual);
        report.add(name, entry.pass, detail);
    }
    return report;
}

MatrixCheck check_ctt(const RelationSet& relations) {
    return run_matrix_check("matrix-identity", relations, &raw_ctt_residual);
}

MatrixCheck check_bracket_invariance(const RelationSet& relations) {
    return run_matrix_check("bracket-invariance", relations, &raw_invariance_residual);
}

MatrixCheck check_plane(const RelationSet& relations) {
    relations.validate();
    // p'x' - q x'p' expanded over the ordered basis x^2, xp, p^2 of the
    // plane: row 0 is the x^2 coefficient ba - q ab, row 1 the xp
    // coefficient bc + q da - q ad - q^2 cb, row 2 the p^2 coefficient
    // dc - q cd.
    TElem rows[3];
    rows[0].add("ba", ScalarExpr(1));
    rows[0].add("ab", -kQ);
    rows[1].add("bc", ScalarExpr(1));
    rows[1].add("da", kQ);
    rows[1].add("ad", -kQ);
    rows[1].add("cb", -(kQ * kQ));
    rows[2].add("dc", ScalarExpr(1));
    rows[2].add("cd", -kQ);

    MatrixCheck out;
    out.check_name = "plane-preservation";
    out.relation_set = relations.name;
    for (int i = 0; i < 3; ++i) {
        EntryResidual entry;
        entry.row = i;
        entry.col = 0;
        entry.residual = reduce(rows[i], relations);
        entry.pass = entry.residual.is_zero();
        out.entries.push_back(std::move(entry));
    }
    return out;
}

bool checks_coincide(const RelationSet& relations) {
    relations.validate();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            TElem sum = raw_invariance_residual(i, j) + raw_ctt_residual(j, i);
            if (!reduce(sum, relations).is_zero()) return false;
        }
    }
    return true;
}

std::vector<RelationSet> builtin_relation_sets() {
    const ScalarExpr q = kQ;
    const ScalarExpr one(1);

    auto rule = [](const TWord& lhs,
                   std::vector<std::pair<ScalarExpr, TWord>> rhs) {
        RewriteRule r;
        r.lhs = lhs;
        r.rhs = std::move(rhs);
        return r;
    };

    // Manin-style exchange rules at deformation mu:
    //   ba = mu^(-1) ab,  ca = mu^(-1) ac,  db = mu^(-1) bd,
    //   dc = mu^(-1) cd,  cb = bc,          da = ad - (mu - mu^(-1)) bc,
    // optionally closed by a determinant normalization bc -> det_c*(ad - 1).
    auto manin = [&](const std::string& name, const ScalarExpr& mu,
                     const ScalarExpr* det_coeff) {
        ScalarExpr mui = mu.inverse();
        RelationSet set;
        set.name = name;
        set.rules = {
            rule("ba", {{mui, "ab"}}),
            rule("ca", {{mui, "ac"}}),
            rule("da", {{one, "ad"}, {-(mu - mui), "bc"}}),
            rule("cb", {{one, "bc"}}),
            rule("db", {{mui, "bd"}}),
            rule("dc", {{mui, "cd"}}),
        };
        if (mu == one) set.rules[2] = rule("da", {{one, "ad"}});
        if (det_coeff) {
            set.rules.push_back(rule("bc", {{*det_coeff, "ad"}, {-*det_coeff, ""}}));
        }
        return set;
    };

    const ScalarExpr qi = q.inverse();
    const ScalarExpr sq = ScalarExpr::s_power(1);
    const ScalarExpr sqi = ScalarExpr::s_power(-1);

    std::vector<RelationSet> out;
    // mu = q with quantum determinant ad - q bc = 1: the member that
    // satisfies the defining matrix identity (and hence bracket invariance).
    out.push_back(manin("manin-q-det-q", q, &qi));
    // Mirror convention mu = q^(-1) with ad - q^(-1) bc = 1: fails the
    // matrix identity but preserves the plane relation.
    out.push_back(manin("manin-qinv-det-qinv", qi, &q));
    // mu = q without any determinant normalization: the off-diagonal
    // residuals exhibit the normalization that is missing.
    out.push_back(manin("manin-q-det-none", q, nullptr));
    // mu = q with the undeformed determinant ad - bc = 1: the wrong
    // normalization; the off-diagonal residuals do not vanish (and the rule
    // set is not confluent, which strategies_agree detects at length 3).
    out.push_back(manin("manin-q-det-1", q, &one));
    // mu = q^(1/2): wrong deformation level, every entry fails.
    out.push_back(manin("manin-sqrtq-det-sqrtq", sq, &sqi));
    // Commuting entries with determinant 1: the classical limit; passes
    // exactly at q = 1.
    out.push_back(manin("commutative-det", one, &one));

    for (const auto& set : out) set.validate();
    return out;
}

RelationSet relation_set_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw Error(std::string("relation set JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("rules")) {
        throw Error("relation set JSON needs 'name' and 'rules'");
    }
    RelationSet out;
    out.name = doc.at("name").get<std::string>();
    for (const auto& jrule : doc.at("rules")) {
        RewriteRule rule;
        rule.lhs = jrule.at("lhs").get<std::string>();
        for (const auto& jterm : jrule.at("rhs")) {
            rule.rhs.emplace_back(coeff_from_json(jterm.at("coeff")),
                                  jterm.at("word").get<std::string>());
        }
        out.rules.push_back(std::move(rule));
    }
    out.validate();
    return out;
}

std::string relation_set_to_json(const RelationSet& relations) {
    nlohmann::json doc;
    doc["name"] = relations.name;
    doc["rules"] = nlohmann::json::array();
    for (const auto& rule : relations.rules) {
        nlohmann::json jrule;
        jrule["lhs"] = rule.lhs;
        jrule["rhs"] = nlohmann::json::array();
        for (const auto& term : rule.rhs) {
            nlohmann::json jterm;
            jterm["coeff"] = to_text(term.first);
            jterm["word"] = term.second;
            jrule["rhs"].push_back(std::move(jterm));
        }
        doc["rules"].push_back(std::move(jrule));
    }
    return doc.dump(2) + "\n";
}

RelationSet load_relation_set(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return relation_set_from_json(buffer.str());
}

}  // namespace qmech
