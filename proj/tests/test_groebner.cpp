#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "common.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"

using namespace qtalg;
using qtalg::test::algebra;

TEST_CASE("transcription counts") {
    Report r = verify_table(*algebra());
    CHECK(r.ok());
    CHECK(algebra()->order().natural());
}

TEST_CASE("g4 tail") {
    Engine qt(algebra(), Mode::QT), qt1(algebra(), Mode::QT1);
    CHECK(qt.str(qt.canonical(parse_free("O34*O45"))) ==
          "q^(1/2)*O4*O345 + q^(-1/2)*O3*O5 - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*O1");
    CHECK(qt1.str(qt1.canonical(parse_free("O34*O45"))) == "O4*O345 + O3*O5 - 2*O1");
}

TEST_CASE("defining relations reduce to zero") {
    for (Mode m : {Mode::QT, Mode::SKEIN, Mode::Q1T, Mode::QT1}) {
        CHECK(verify_defining(algebra(), m, Defining::Eta, 1).ok());
        CHECK(verify_defining(algebra(), m, Defining::Rho, 1).ok());
        CHECK(verify_defining(algebra(), m, Defining::Casimir, 1).ok());
    }
}

TEST_CASE("a perturbed relation does not reduce to zero") {
    Engine e(algebra(), Mode::QT);
    FreeElement eta = algebra()->etas().front().element;
    CHECK(e.canonical(eta).is_zero());
    CHECK_FALSE(e.canonical(eta + FreeElement::gen(O1)).is_zero());
    CHECK_FALSE(e.canonical(parse_free("O2*O1 - O1*O2")).is_zero());
}

TEST_CASE("reduction strategies agree") {
    Report r = verify_strategies(algebra(), 200, 12, 99, 2);
    CHECK(r.ok());
    CHECK(r.checks.size() == 200);
}

TEST_CASE("multiplication is associative on basis elements") {
    Engine e(algebra(), Mode::QT);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        NormalElement a = NormalElement::monomial(random_basis_monomial(e, rng, 6));
        NormalElement b = NormalElement::monomial(random_basis_monomial(e, rng, 6));
        NormalElement c = NormalElement::monomial(random_basis_monomial(e, rng, 6));
        CHECK(e.multiply(e.multiply(a, b), c) == e.multiply(a, e.multiply(b, c)));
    }
}

TEST_CASE("structure constants specialize flatly") {
    Report r = verify_flatness(algebra(), 500, 8, 5, 2);
    CHECK(r.ok());
}

TEST_CASE("reduced elements lie in the basis") {
    Engine e(algebra(), Mode::SKEIN);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
        NormalElement x = e.canonical(FreeElement::word(random_word(rng, 12)));
        for (const auto& [m, c] : x.terms()) CHECK(e.is_basis(m));
    }
}

TEST_CASE("mode names") {
    CHECK(mode_from_name("skein") == Mode::SKEIN);
    CHECK_THROWS_AS(mode_from_name("q"), DomainError);
}

TEST_CASE("bundle regenerates from the text transcriptions") {
    std::string out = "qtalg_bundle_test.json";
    std::string cmd = std::string(QTALG_MAKE_BUNDLE) + " " + data_dir() + " " + out + " > /dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    auto read = [](const std::string& p) {
        std::ifstream f(p);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    };
    CHECK(read(out) == read(data_dir() + "/bundle.json"));
    std::remove(out.c_str());
}
