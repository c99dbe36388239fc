#include <doctest.h>

#include "common.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"
#include "qtalg/poisson.hpp"

using namespace qtalg;
using qtalg::test::algebra;
using qtalg::test::images;

TEST_CASE("limit coefficient") {
    // (q^(1/2) - 1) -> derivative 2 in q^(1/4), times 1/4
    CHECK(classical_coefficient(QTLaurent::q(2) - QTLaurent(1)) == QTLaurent(Rational(1, 2)));
    CHECK(classical_coefficient(QTLaurent::monomial(1, 2, 2) - QTLaurent::monomial(1, -2, 2)) == QTLaurent::t(2));
    CHECK_THROWS_AS(classical_coefficient(QTLaurent::q(1)), NotDivisible);
}

TEST_CASE("generator brackets") {
    Poisson p(algebra(), false);
    Engine& e = p.engine();
    CHECK(e.str(p.bracket_gen(O2, O1)) == "1/2*O1*O2 - O12");
    CHECK(p.bracket_gen(O3, O1).is_zero());
    CHECK(p.bracket_gen(O12, O12).is_zero());
    Monomial b = Monomial::gen(O1) + Monomial::gen(O4);
    CHECK(p.bracket_basis(b, b).is_zero());
    NormalElement jac = p.bracket(NormalElement::gen(O1), p.bracket_gen(O2, O3)) +
                        p.bracket(NormalElement::gen(O2), p.bracket_gen(O3, O1)) +
                        p.bracket(NormalElement::gen(O3), p.bracket_gen(O1, O2));
    CHECK(jac.is_zero());
}

TEST_CASE("equivariance under I") {
    Poisson p(algebra(), false);
    Mcg m(p.engine(), images());
    McgLetter I{0, false};
    CHECK(p.bracket_gen(O2, O3) == m.apply(I, p.bracket_gen(O1, O2)));
}

TEST_CASE("limit and derivation extensions agree") {
    Poisson p(algebra(), false);
    Engine& e = p.engine();
    NormalElement a = e.canonical(parse_free("O1*O2 + t*O45")), b = e.canonical(parse_free("O3*O6 - O12"));
    CHECK(p.bracket(a, b) == p.bracket_leibniz(a, b));
    CHECK((p.bracket(a, b) + p.bracket(b, a)).is_zero());
}

TEST_CASE("t = 1 bracket is the specialization") {
    Poisson p(algebra(), false), p1(algebra(), true);
    for (int j = 0; j < kNumGens; ++j)
        for (int k = 0; k < j; ++k)
            CHECK(p1.bracket_gen(j, k) == p.bracket_gen(j, k).specialize(Laurent::Spec::t_to_1));
}

TEST_CASE("bracket suites") {
    for (bool t1 : {false, true}) {
        Report r = verify_poisson(algebra(), images(), t1, {}, 2);
        CHECK_MESSAGE(r.ok(), r.summary());
        CHECK(r.checks.size() == 105 * 5 + 455 + 100);
    }
}
