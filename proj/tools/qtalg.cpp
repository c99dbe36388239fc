// command line front end: reduce, mul, bracket, act, verify, sample
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtalg/charvar.hpp"
#include "qtalg/errors.hpp"
#include "qtalg/expr.hpp"
#include "qtalg/groebner.hpp"
#include "qtalg/mcg.hpp"
#include "qtalg/poisson.hpp"
#include "qtalg/qdiff.hpp"

using namespace qtalg;
using nlohmann::json;

namespace {

struct Globals {
    bool json = false;
    int threads = 0;
    std::uint64_t seed = 1;
    std::string data;
    std::string algebra = "qt";
};

json element_json(const Engine& e, const NormalElement& x) {
    json terms = json::array();
    for (const auto& [m, c] : e.sorted(x)) {
        json mono = json::array();
        for (int g = 0; g < kNumGens; ++g) mono.push_back(m[g]);
        terms.push_back({{"monomial", mono}, {"coeff", laurent_to_json(c)}});
    }
    return {{"algebra", mode_name(e.mode())}, {"terms", terms}};
}

void print_element(const Globals& g, const Engine& e, const NormalElement& x) {
    if (g.json) std::cout << element_json(e, x).dump() << "\n";
    else std::cout << e.str(x) << "\n";
}

int print_reports(const Globals& g, const std::vector<Report>& reports) {
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        if (g.json) {
            arr.push_back(r.to_json());
            continue;
        }
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.summary() << "\n";
        for (const auto& c : r.checks)
            if (!c.ok) std::cout << "  failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    if (g.json) std::cout << json{{"ok", ok}, {"reports", arr}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

std::string dir(const Globals& g) { return g.data.empty() ? data_dir() : g.data; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations in the genus two algebra A_{q,t} and its specializations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--threads", g.threads, "worker threads (default $QTALG_THREADS or all cores)");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--data", g.data, "data directory (default $QTALG_DATA or the built-in one)");

    std::string e1, e2, word, suite, only;
    bool t1 = false, skip_casimir = false;
    std::uint64_t prime = 1000003;
    int count = 100;
    const std::vector<std::string> algebras = {"qt", "skein", "q1t", "qt1"};

    auto* reduce = app.add_subcommand("reduce", "canonical form of an expression");
    reduce->add_option("--algebra", g.algebra)->check(CLI::IsMember(algebras));
    reduce->add_option("expr", e1)->required();

    auto* mul = app.add_subcommand("mul", "canonical form of a product");
    mul->add_option("--algebra", g.algebra)->check(CLI::IsMember(algebras));
    mul->add_option("e1", e1)->required();
    mul->add_option("e2", e2)->required();

    auto* bracket = app.add_subcommand("bracket", "Poisson bracket in A_{q=1,t}");
    bracket->add_flag("--t1", t1, "specialize t = 1");
    bracket->add_option("e1", e1)->required();
    bracket->add_option("e2", e2)->required();

    auto* act = app.add_subcommand("act", "apply a mapping class word such as \"d1 d2^-1 I\"");
    act->add_option("--algebra", g.algebra)->check(CLI::IsMember(algebras));
    act->add_option("word", word)->required();
    act->add_option("expr", e1)->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"table", "jrel", "casimir", "groebner", "mcg", "qdiff", "poisson", "charvar", "all"}));
    verify->add_flag("--skip-casimir", skip_casimir, "qdiff: skip the Casimir operator");
    verify->add_option("--only", only, "qdiff: check a single relator such as g4");
    verify->add_option("--p", prime, "charvar: prime");
    verify->add_option("--n", count, "charvar: number of samples");

    auto* sample = app.add_subcommand("sample", "finite-field checks on sampled surface group representations");
    sample->add_option("--p", prime, "prime");
    sample->add_option("--n", count, "number of samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    int threads = g.threads > 0 ? g.threads : default_threads();

    try {
        auto alg = Algebra::load(dir(g));
        if (*reduce || *mul) {
            Engine eng(alg, mode_from_name(g.algebra));
            NormalElement x = eng.canonical(parse_free(e1));
            if (*mul) x = eng.multiply(x, eng.canonical(parse_free(e2)));
            print_element(g, eng, x);
            return 0;
        }
        if (*bracket) {
            Poisson p(alg, t1);
            Engine& eng = p.engine();
            NormalElement x = p.bracket(eng.canonical(parse_free(e1)), eng.canonical(parse_free(e2)));
            print_element(g, eng, x);
            return 0;
        }
        ImageTable images = load_images(dir(g) + "/mcg.txt");
        if (*act) {
            Engine eng(alg, mode_from_name(g.algebra));
            Mcg m(eng, images);
            McgWord w = parse_mcg_word(word);
            print_element(g, eng, m.apply(w, eng.canonical(parse_free(e1))));
            return 0;
        }
        std::vector<Report> reps;
        auto want = [&](const char* s) { return suite == s || suite == "all"; };
        const Mode all_modes[] = {Mode::QT, Mode::SKEIN, Mode::Q1T, Mode::QT1};
        SampleOptions so;
        so.p = prime;
        so.n = count;
        so.seed = g.seed;
        if (*sample) {
            CharvarData cd = load_charvar(dir(g) + "/charvar.txt");
            reps.push_back(verify_on_reps(alg, cd, images, so, threads));
            return print_reports(g, reps);
        }
        if (want("table")) {
            reps.push_back(verify_table(*alg));
            for (Mode m : all_modes) reps.push_back(verify_defining(alg, m, Defining::Eta, threads));
        }
        if (want("jrel"))
            for (Mode m : all_modes) reps.push_back(verify_defining(alg, m, Defining::Rho, threads));
        if (want("casimir"))
            for (Mode m : all_modes) reps.push_back(verify_defining(alg, m, Defining::Casimir, threads));
        if (want("groebner")) {
            for (Mode m : all_modes) reps.push_back(verify_closure(alg, m, threads));
            reps.push_back(verify_strategies(alg, 200, 12, g.seed, threads));
            reps.push_back(verify_flatness(alg, 500, 8, g.seed, threads));
        }
        if (want("mcg")) {
            for (Mode m : {Mode::QT, Mode::Q1T}) {
                reps.push_back(verify_mcg_relations(alg, images, m, threads));
                reps.push_back(verify_ideal_invariance(alg, images, m, threads));
            }
        }
        if (want("qdiff")) {
            QDiffOptions qo;
            qo.skip_casimir = skip_casimir;
            if (!only.empty()) qo.only = only;
            reps.push_back(verify_representation(alg, qo, threads));
            if (!qo.only) reps.push_back(verify_classical(alg, threads));
        }
        if (want("poisson")) {
            PoissonOptions po;
            po.seed = g.seed;
            for (bool t : {false, true}) reps.push_back(verify_poisson(alg, images, t, po, threads));
        }
        if (want("charvar")) {
            CharvarData cd = load_charvar(dir(g) + "/charvar.txt");
            reps.push_back(verify_trivial(alg, cd, so.p));
            reps.push_back(verify_symbolic_roundtrip(alg, cd));
            reps.push_back(verify_on_reps(alg, cd, images, so, threads));
        }
        return print_reports(g, reps);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
