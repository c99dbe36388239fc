#include <random>

#include <doctest.h>

#include "common.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"
#include "qtalg/qdiff.hpp"

using namespace qtalg;
using qtalg::test::algebra;

TEST_CASE("operator composition") {
    QDiffOperator x = multiplication_op(0);
    QDiffOperator d = QDiffOperator::term({1, 0, 0}, XRational(1));
    // delta_12 X12 = q^(1/2) X12 delta_12 on the X12 part
    QDiffOperator dx = compose(d, x);
    QDiffOperator want = QDiffOperator::term({1, 0, 0}, XRational(Laurent::monomial(1, 2, 0, 1) + Laurent::monomial(1, -2, 0, -1)));
    CHECK(dx == want);
    QDiffOperator a = hamiltonian(1), b = hamiltonian(2), c = multiplication_op(2);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(QDiffOperator::identity(), a) == a);
    CHECK(a.cycle(3) == a);
    CHECK(compose(a, b).cycle() == compose(a.cycle(), b.cycle()));
}

TEST_CASE("explicit Laurent forms and cyclic images") {
    QDiffRep rep;
    CHECK(rep.gen(O12) == explicit_o12());
    CHECK(rep.gen(O23) == explicit_o23());
    CHECK(rep.gen(O123) == explicit_o123());
    CHECK(rep.gen(O34) == explicit_o12().cycle());
    CHECK(rep.gen(O56) == explicit_o12().cycle(2));
    CHECK(rep.gen(O345) == explicit_o123().cycle());
    CHECK(rep.gen(O234) == explicit_o123().cycle(2));
    CHECK(rep.gen(O12) != explicit_o12().cycle());
    // commutator images have no q-singular denominators left
    for (int g = 0; g < kNumGens; ++g) CHECK_NOTHROW(ClassicalImage::from_operator(rep.gen(g)));
}

TEST_CASE("the representation is multiplicative") {
    auto alg = algebra();
    Engine e(alg, Mode::QT);
    QDiffRep rep;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 15; ++i) {
        NormalElement a = NormalElement::monomial(random_basis_monomial(e, rng, 5));
        NormalElement b = NormalElement::monomial(random_basis_monomial(e, rng, 5));
        CHECK(rep.element(e.multiply(a, b)) == compose(rep.element(a), rep.element(b)));
    }
    CHECK_FALSE(rep.element(parse_free("O2*O1 - O1*O2")).is_zero());
    CHECK(rep.element(parse_free("O2*O1 - q^(1/2)*O1*O2 + (q^(3/4) - q^(-1/4))*O12")).is_zero());
}

TEST_CASE("relators map to zero") {
    QDiffOptions opt;
    Report r = verify_representation(algebra(), opt, 2);
    CHECK_MESSAGE(r.ok(), r.summary());
    opt.only = "g4";
    Report one = verify_representation(algebra(), opt, 1);
    CHECK(one.checks.size() == 1);
    CHECK(one.ok());
}

TEST_CASE("classical limit") {
    Report r = verify_classical(algebra(), 2);
    CHECK_MESSAGE(r.ok(), r.summary());
    ClassicalImage o1 = classical_image(O1), o3 = classical_image(O3);
    CHECK(o1 * o3 == o3 * o1);
    CHECK((o1.leading_power() == Shift{1, 0, 1}));
    CHECK((classical_image(O5).leading_power() == Shift{0, 1, 1}));
    CHECK_FALSE(classical_eval(NormalElement::gen(O1)).is_zero());
}
