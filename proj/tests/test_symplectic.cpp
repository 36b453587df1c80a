#include "doctest.h"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmech/calculus.hpp"
#include "qmech/symplectic.hpp"

using namespace qmech;

namespace {

const RelationSet& builtin(const std::string& name) {
    static const std::vector<RelationSet> sets = builtin_relation_sets();
    for (const auto& set : sets)
        if (set.name == name) return set;
    throw Error("missing builtin relation set: " + name);
}

std::map<std::pair<int, int>, bool> pass_map(const MatrixCheck& check) {
    std::map<std::pair<int, int>, bool> out;
    for (const auto& entry : check.entries)
        out[{entry.row, entry.col}] = entry.pass;
    return out;
}

}  // namespace

TEST_CASE("structure matrices") {
    Mat2 j = jq();
    Mat2 c = cq();
    CHECK(j.e[0][0] == ScalarExpr(0));
    CHECK(j.e[0][1] == ScalarExpr::s_power(1));
    CHECK(j.e[1][0] == -ScalarExpr::s_power(-1));
    CHECK(j.e[1][1] == ScalarExpr(0));
    // jq is minus the transpose of cq, and its entries are the generator
    // brackets themselves.
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(j.e[i][k] == -c.e[k][i]);
    QPoly gens[2] = {QPoly::x(), QPoly::p()};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            CHECK(qpb_direct(gens[i], gens[k]) == QPoly(j.e[i][k]));
    // At s = 1 both collapse to the classical unit.
    CHECK(j.e[0][1].subst_s(BigRat(1)) == ScalarExpr(1));
    CHECK(j.e[1][0].subst_s(BigRat(1)) == ScalarExpr(-1));
}

TEST_CASE("word algebra") {
    TElem ab = TElem::word("ab");
    TElem cd = TElem::word("cd", ScalarExpr(2));
    TElem sum = ab + cd;
    CHECK(sum.terms().size() == 2);
    CHECK((sum - ab) == cd);
    CHECK((ab * cd).terms().count("abcd") == 1);
    CHECK(ab.scaled(ScalarExpr(0)).is_zero());
    TElem cancel = ab + TElem::word("ab", ScalarExpr(-1));
    CHECK(cancel.is_zero());
    // Substitution drops terms whose coefficient vanishes.
    TElem weighted = TElem::word("a", ScalarExpr::s_power(2) - 1);
    CHECK(weighted.subst_s(BigRat(1)).is_zero());
}

TEST_CASE("reduction reaches normal form") {
    RelationSet swap_set;
    swap_set.name = "toy";
    RewriteRule r;
    r.lhs = "ba";
    r.rhs = {{ScalarExpr::q_power(1), "ab"}};
    swap_set.rules = {r};
    swap_set.validate();

    TElem input = TElem::word("bba");
    TElem got = reduce(input, swap_set);
    TElem expected = TElem::word("abb", ScalarExpr::q_power(2));
    CHECK(got == expected);

    // A one-step budget cannot finish the two required rewrites.
    CHECK_THROWS_AS(reduce(input, swap_set, ReduceStrategy::LeftmostFirst, 1),
                    ReductionBudgetError);
}

TEST_CASE("rule validation rejects malformed sets") {
    RelationSet bad_letter;
    bad_letter.name = "bad";
    bad_letter.rules = {{"ez", {{ScalarExpr(1), "a"}}}};
    CHECK_THROWS_AS(bad_letter.validate(), Error);

    RelationSet growing;
    growing.name = "growing";
    growing.rules = {{"ab", {{ScalarExpr(1), "abc"}}}};
    CHECK_THROWS_AS(growing.validate(), Error);

    RelationSet not_smaller;
    not_smaller.name = "loop";
    not_smaller.rules = {{"ab", {{ScalarExpr(1), "ab"}}}};
    CHECK_THROWS_AS(not_smaller.validate(), Error);

    RelationSet zero_coeff;
    zero_coeff.name = "zero";
    zero_coeff.rules = {{"ba", {{ScalarExpr(0), "ab"}}}};
    CHECK_THROWS_AS(zero_coeff.validate(), Error);
}

TEST_CASE("builtin candidates and their verdicts") {
    std::vector<RelationSet> sets = builtin_relation_sets();
    REQUIRE(sets.size() == 6);
    std::vector<std::string> names;
    names.reserve(sets.size());
    for (const auto& set : sets) names.push_back(set.name);
    CHECK(names == std::vector<std::string>{
                       "manin-q-det-q", "manin-qinv-det-qinv",
                       "manin-q-det-none", "manin-q-det-1",
                       "manin-sqrtq-det-sqrtq", "commutative-det"});

    // The quantum-determinant member passes both defining checks but does
    // not preserve the plane relation.
    const RelationSet& good = builtin("manin-q-det-q");
    CHECK(check_ctt(good).all_pass());
    CHECK(check_bracket_invariance(good).all_pass());
    CHECK_FALSE(check_plane(good).all_pass());

    // The mirror member preserves the plane relation but fails the matrix
    // identity.
    const RelationSet& mirror = builtin("manin-qinv-det-qinv");
    CHECK(check_plane(mirror).all_pass());
    CHECK_FALSE(check_ctt(mirror).all_pass());

    // Without a determinant rule only the diagonal entries can vanish.
    MatrixCheck none = check_ctt(builtin("manin-q-det-none"));
    auto entries = pass_map(none);
    CHECK(entries.at({0, 0}));
    CHECK(entries.at({1, 1}));
    CHECK_FALSE(entries.at({0, 1}));
    CHECK_FALSE(entries.at({1, 0}));
}

TEST_CASE("the two defining checks coincide on every candidate") {
    for (const auto& set : builtin_relation_sets()) {
        INFO(set.name);
        CHECK(checks_coincide(set));
        // Same content, transposed: pass(i,j) of one check is pass(j,i) of
        // the other.
        auto ctt = pass_map(check_ctt(set));
        auto inv = pass_map(check_bracket_invariance(set));
        for (const auto& [pos, ok] : ctt) {
            CHECK(inv.at({pos.second, pos.first}) == ok);
        }
    }
}

TEST_CASE("commutative entries pass exactly in the classical limit") {
    MatrixCheck classical = check_ctt(builtin("commutative-det"));
    bool some_fail = false;
    for (const auto& entry : classical.entries) {
        if (!entry.pass) some_fail = true;
        CHECK(entry.residual.subst_s(BigRat(1)).is_zero());
    }
    CHECK(some_fail);
}

TEST_CASE("rewrite strategies agree where the set is confluent") {
    CHECK(strategies_agree(builtin("manin-q-det-q"), 5));
    CHECK(strategies_agree(builtin("manin-qinv-det-qinv"), 4));
    // The undeformed determinant rule conflicts with the mu = q exchange;
    // exhaustion finds the first ambiguous word at length 3.
    std::string witness;
    CHECK_FALSE(strategies_agree(builtin("manin-q-det-1"), 3, &witness));
    CHECK(witness == "bca");
}

TEST_CASE("classical symplectic matrices leave the s = 1 bracket invariant") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    int tested = 0;
    while (tested < 100) {
        BigRat a(num(rng), den(rng));
        BigRat b(num(rng), den(rng));
        BigRat c(num(rng), den(rng));
        if (a == 0) continue;
        BigRat d = (1 + b * c) / a;
        ++tested;
        QPoly xp = ScalarExpr(a) * QPoly::x() + ScalarExpr(c) * QPoly::p();
        QPoly pp = ScalarExpr(b) * QPoly::x() + ScalarExpr(d) * QPoly::p();
        CHECK(qpb_direct(xp, pp).at_q1() == QPoly(1));
        CHECK(qpb_direct(pp, xp).at_q1() == QPoly(-1));
        CHECK(qpb_direct(xp, xp).at_q1().is_zero());
        CHECK(qpb_direct(pp, pp).at_q1().is_zero());
    }
}

TEST_CASE("reports name their entries") {
    Report r = check_ctt(builtin("manin-q-det-q")).to_report();
    REQUIRE(r.checks.size() == 4);
    CHECK(r.checks[0].name == "entry(1,1)");
    CHECK(r.checks[3].name == "entry(2,2)");
    Report pl = check_plane(builtin("manin-qinv-det-qinv")).to_report();
    REQUIRE(pl.checks.size() == 3);
    CHECK(pl.checks[0].name == "coefficient of x^2");
    CHECK(pl.checks[1].name == "coefficient of x*p");
    CHECK(pl.checks[2].name == "coefficient of p^2");
}

TEST_CASE("json serialization round trips and matches the shipped files") {
    for (const auto& set : builtin_relation_sets()) {
        std::string json = relation_set_to_json(set);
        RelationSet back = relation_set_from_json(json);
        CHECK(back.name == set.name);
        REQUIRE(back.rules.size() == set.rules.size());
        CHECK(relation_set_to_json(back) == json);

        std::ifstream in(std::string(QMECH_RELATIONS_DIR) + "/" + set.name +
                         ".json");
        REQUIRE(in.good());
        RelationSet shipped = load_relation_set(in);
        CHECK(relation_set_to_json(shipped) == json);
    }
}
