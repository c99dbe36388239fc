// runs the ten acceptance criteria and prints one line per criterion
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qtalg/charvar.hpp"
#include "qtalg/groebner.hpp"
#include "qtalg/mcg.hpp"
#include "qtalg/poisson.hpp"
#include "qtalg/qdiff.hpp"

using namespace qtalg;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t passed = 0, total = 0;
    std::string first_failure;

    void take(const Report& r) {
        for (const auto& c : r.checks) {
            ++total;
            if (c.ok) {
                ++passed;
            } else if (ok) {
                ok = false;
                first_failure = r.suite + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
            }
        }
        if (r.checks.empty()) {
            ok = false;
            if (first_failure.empty()) first_failure = r.suite + ": no checks ran";
        }
    }
};

}  // namespace

int main() {
    const int threads = default_threads();
    const std::uint64_t seed = 1;
    std::shared_ptr<const Algebra> alg;
    ImageTable images;
    CharvarData cd;
    try {
        alg = Algebra::load(data_dir());
        images = load_images(data_dir() + "/mcg.txt");
        cd = load_charvar(data_dir() + "/charvar.txt");
    } catch (const std::exception& e) {
        std::printf("could not load data: %s\n", e.what());
        for (int i = 1; i <= 10; ++i) std::printf("criterion %d: FAIL (no data)\n", i);
        return 1;
    }

    std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"bundle transcription", [&](Outcome& o) { o.take(verify_table(*alg)); }},
        {"defining ideal vanishes in QT",
         [&](Outcome& o) {
             for (Defining d : {Defining::Eta, Defining::Rho, Defining::Casimir})
                 o.take(verify_defining(alg, Mode::QT, d, threads));
         }},
        {"Groebner closure and reduction strategies",
         [&](Outcome& o) {
             o.take(verify_closure(alg, Mode::QT, threads));
             o.take(verify_strategies(alg, 200, 12, seed, threads));
         }},
        {"specialization flatness", [&](Outcome& o) { o.take(verify_flatness(alg, 500, 8, seed, threads)); }},
        {"mapping class group action",
         [&](Outcome& o) {
             for (Mode m : {Mode::QT, Mode::Q1T}) {
                 o.take(verify_mcg_relations(alg, images, m, threads));
                 o.take(verify_ideal_invariance(alg, images, m, threads));
             }
         }},
        {"q-difference representation", [&](Outcome& o) { o.take(verify_representation(alg, {}, threads)); }},
        {"classical limit", [&](Outcome& o) { o.take(verify_classical(alg, threads)); }},
        {"Poisson bracket",
         [&](Outcome& o) {
             PoissonOptions po;
             po.seed = seed;
             for (bool t1 : {false, true}) o.take(verify_poisson(alg, images, t1, po, threads));
         }},
        {"character variety on sampled representations",
         [&](Outcome& o) {
             SampleOptions so;
             so.p = 1000003;
             so.n = 100;
             so.seed = seed;
             o.take(verify_on_reps(alg, cd, images, so, threads));
             o.take(verify_symbolic_roundtrip(alg, cd));
         }},
        {"trivial representation", [&](Outcome& o) { o.take(verify_trivial(alg, cd, 1000003)); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.first_failure = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        std::printf("criterion %zu: %s %s, %zu/%zu checks, %.2f s%s%s\n", i + 1, o.ok ? "PASS" : "FAIL",
                    criteria[i].first, o.passed, o.total, secs, o.ok ? "" : ", first failure: ",
                    o.first_failure.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
