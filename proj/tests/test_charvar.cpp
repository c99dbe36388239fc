#include <random>

#include <doctest.h>

#include "common.hpp"
#include "qtalg/charvar.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"

using namespace qtalg;
using qtalg::test::algebra;
using qtalg::test::charvar;
using qtalg::test::images;

TEST_CASE("prime field") {
    CHECK(is_prime(1000003));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(1000001));
    for (std::uint64_t p : {7ULL, 13ULL, 17ULL, 97ULL, 257ULL}) {
        Fp f{p};
        for (std::uint64_t a = 0; a < p; ++a) {
            bool brute = false;
            for (std::uint64_t x = 0; x < p; ++x) brute = brute || f.mul(x, x) == a;
            auto r = f.sqrt(a);
            CHECK(r.has_value() == brute);
            if (r) CHECK(f.mul(*r, *r) == a);
        }
    }
    Fp f{1000003};
    CHECK(f.mul(f.inv(12345), 12345) == 1);
    CHECK_THROWS_AS(f.inv(0), DomainError);
}

TEST_CASE("group words") {
    GroupWord w = parse_group_word("X1.Y2^2.X2^-1");
    REQUIRE(w.size() == 3);
    CHECK(w[1] == GroupLetter{3, 2});
    CHECK(group_word_str(w) == "X1.Y2^2.X2^-1");
    CHECK(trace_key(parse_group_word("X1.Y1")) == trace_key(parse_group_word("Y1.X1")));
    CHECK(trace_key(parse_group_word("X1.Y1")) == trace_key(parse_group_word("Y1^-1.X1^-1")));
    CHECK(trace_key(parse_group_word("X1.Y2.Y2^-1.Y1")) == trace_key(parse_group_word("X1.Y1")));
    CHECK(trace_key(parse_group_word("X1.Y1")) != trace_key(parse_group_word("X1.Y1^-1")));
    CHECK_THROWS_AS(parse_group_word("X3"), SyntaxError);
}

TEST_CASE("sampled representations") {
    std::mt19937_64 rng(1);
    SurfaceRep r = sample_rep(10007, rng);
    CHECK(r.satisfies_relation());
    Fp f{10007};
    for (const auto& m : r.m) CHECK(sl2_det(f, m) == 1);
    CHECK(SurfaceRep::trivial(10007).satisfies_relation());
    // [X1, Y1] = 1 has trace 2 and is rejected
    CHECK_FALSE(complete_rep(f, sl2_identity(), sl2_identity(), rng).has_value());
    CHECK_THROWS_AS(sample_rep(10007, rng, 0), RetryExhausted);
    CHECK_THROWS_AS(sample_rep(10, rng), DomainError);
}

TEST_CASE("trace coordinates") {
    CharVariety cv(charvar());
    SurfaceRep triv = SurfaceRep::trivial(1000003);
    for (auto v : cv.psi_eval(triv)) CHECK(v == 2);
    Fp f{1000003};
    std::mt19937_64 rng(4);
    SurfaceRep r = sample_rep(f.p, rng);
    TraceAssignment a = cv.psi_eval(r);
    CHECK(a[O4] == sl2_trace(f, r.m[2]));
    // Phi(tau[Y1.X2.Y2]) = O34 + O1*O45 - O5*O345
    FreeElement phi = parse_free("O34 + O1*O45 - O5*O345");
    CHECK(CharVariety::eval_free(phi, cv.psi_eval(triv), f) == 2);
    CHECK(CharVariety::eval_free(phi, a, f) == cv.trace(r, "Y1.X2.Y2"));
    // d1 on O2: tau[X1.Y1] = tau[X1] tau[Y1] - tau[Y1.X1^-1]
    CHECK(cv.trace(r, "X1.Y1") == f.sub(f.mul(a[O2], a[O1]), a[O12]));
    CHECK(sl2_trace(f, r.eval(apply_map(cv.pi1_action(1), cv.psi_word(O1)))) == a[O1]);
}

TEST_CASE("commutative Casimir on the trivial representation") {
    Engine e(algebra(), Mode::QT1);
    TraceAssignment twos;
    twos.fill(2);
    NormalElement c = e.normal_order(algebra()->data().casimir.element);
    CHECK(CharVariety::eval_element(c, twos, Fp{1000003}) == 0);
    // not every polynomial vanishes there
    CHECK(CharVariety::eval_element(e.canonical(parse_free("O1*O2 - 1")), twos, Fp{1000003}) == 3);
}

TEST_CASE("finite-field suites") {
    Report triv = verify_trivial(algebra(), charvar(), 1000003);
    CHECK_MESSAGE(triv.ok(), triv.summary());
    Report sym = verify_symbolic_roundtrip(algebra(), charvar());
    CHECK_MESSAGE(sym.ok(), sym.summary());
    SampleOptions o;
    o.n = 20;
    o.seed = 3;
    Report s = verify_on_reps(algebra(), charvar(), images(), o, 2);
    CHECK_MESSAGE(s.ok(), s.summary());
    // scheduling does not change the result
    Report s1 = verify_on_reps(algebra(), charvar(), images(), o, 1);
    REQUIRE(s1.checks.size() == s.checks.size());
    for (std::size_t i = 0; i < s.checks.size(); ++i) CHECK(s1.checks[i].detail == s.checks[i].detail);
}
