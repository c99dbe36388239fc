#include <random>

#include <doctest.h>

#include "common.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"
#include "qtalg/mcg.hpp"

using namespace qtalg;
using qtalg::test::algebra;
using qtalg::test::images;

namespace {

void check_action(Mcg& m, const char* word, int g, const char* want) {
    Engine& e = m.engine();
    NormalElement got = m.apply(parse_mcg_word(word), NormalElement::gen(g));
    CHECK_MESSAGE(got == e.canonical(parse_free(want)), word, "(", gen_name(g), ") = ", e.str(got));
}

}  // namespace

TEST_CASE("mapping class words") {
    McgWord w = parse_mcg_word("d1 d2^-1 I I");
    REQUIRE(w.size() == 4);
    CHECK(w[1] == McgLetter{2, true});
    CHECK(mcg_word_str(w) == "d1 d2^-1 I I");
    CHECK_THROWS_AS(parse_mcg_word("d6"), SyntaxError);
    CHECK_THROWS_AS(parse_mcg_word("d1^2"), SyntaxError);
    CHECK(parse_mcg_word("  ").empty());
}

TEST_CASE("displayed twist images") {
    Engine e(algebra(), Mode::QT);
    Mcg m(e, images());
    check_action(m, "d1", O2, "q^(1/4)*O1*O2 - q^(1/2)*O12");
    check_action(m, "d1 d2 d1", O1, "O2");
    check_action(m, "d1 d2 d1", O6, "O345");
    check_action(m, "d1 d4", O3, "O34");
    check_action(m, "d1 d4", O5, "q^(1/4)*O4*O5 - q^(1/2)*O45");
    check_action(m, "d3", O4, "q^(1/4)*O3*O4 - q^(1/2)*O34");
    check_action(m, "d1 d3", O2, "q^(1/4)*O1*O23 - q^(1/2)*O123");
    check_action(m, "d5 d4 d3 d2 d1", O1, "O6");
    check_action(m, "d5 d4 d3 d2 d1", O2, "O1");
    check_action(m, "I", O1, "O2");
}

TEST_CASE("twists are algebra automorphisms") {
    Engine e(algebra(), Mode::QT);
    Mcg m(e, images());
    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
        NormalElement a = NormalElement::monomial(random_basis_monomial(e, rng, 5));
        NormalElement b = NormalElement::monomial(random_basis_monomial(e, rng, 5));
        for (const char* w : {"d1", "d2^-1", "I"}) {
            McgWord l = parse_mcg_word(w);
            CHECK(m.apply(l, e.multiply(a, b)) == e.multiply(m.apply(l, a), m.apply(l, b)));
        }
        CHECK(m.apply(parse_mcg_word("d3^-1 d3"), a) == a);
    }
}

TEST_CASE("group relations") {
    for (Mode md : {Mode::QT, Mode::Q1T}) {
        Report r = verify_mcg_relations(algebra(), images(), md, 2);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
}

TEST_CASE("the defining ideal is invariant") {
    Report r = verify_ideal_invariance(algebra(), images(), Mode::QT, 2);
    CHECK_MESSAGE(r.ok(), r.summary());
    CHECK(r.checks.size() == 3 * (61 + 105 + 18 + 1));
}
