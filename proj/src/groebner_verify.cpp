#include <memory>

#include "qtalg/errors.hpp"
#include "qtalg/groebner.hpp"

namespace qtalg {

Word random_word(std::mt19937_64& rng, int max_weight) {
    // weights drawn from the upper half so that most words need real rewriting
    std::uniform_int_distribution<int> gen(0, kNumGens - 1), wt(std::max(1, max_weight / 2), std::max(1, max_weight));
    int target = wt(rng), w = 0;
    Word out;
    for (int tries = 0; tries < 64 && w < target; ++tries) {
        int g = gen(rng);
        if (w + gen_weight(g) > target) continue;
        out.push_back(static_cast<std::uint8_t>(g));
        w += gen_weight(g);
    }
    if (out.empty()) out.push_back(O1);
    return out;
}

Report verify_table(const Algebra& alg) {
    Report r;
    r.suite = "transcription";
    const auto& d = alg.data();
    r.add("105 table entries", d.table.size() == 105, std::to_string(d.table.size()));
    r.add("61 g-relators", d.g.size() == 61, std::to_string(d.g.size()));
    r.add("18 rho-relators", d.rho.size() == 18, std::to_string(d.rho.size()));
    r.add("one Casimir", !d.casimir.element.is_zero());
    bool pairs = true;
    for (int j = 0; j < kNumGens; ++j)
        for (int k = 0; k < j; ++k) pairs = pairs && alg.table().entry(j, k).row == j;
    r.add("every generator pair J > K has an entry", pairs);
    for (const auto& g : alg.relators()) {
        QTLaurent c = g.full.coeff(g.lead);
        r.add("lead coefficient of " + g.name, c.is_one(), c.str());
    }
    r.add("order calibration", true, alg.calibration_log());
    return r;
}

namespace {

template <class F>
Report run_engine_tasks(std::shared_ptr<const Algebra> alg, Mode mode, int n, int threads, F body) {
    std::vector<Check> out(n);
    std::vector<std::unique_ptr<Engine>> ws(std::max(1, threads));
    parallel_for(n, threads, [&](int i, int w) {
        if (!ws[w]) ws[w] = std::make_unique<Engine>(alg, mode);
        out[i] = body(*ws[w], i);
    });
    Report r;
    r.checks = std::move(out);
    return r;
}

}  // namespace

Report verify_defining(std::shared_ptr<const Algebra> alg, Mode mode, Defining which, int threads) {
    std::vector<const NamedElement*> items;
    const char* what = "";
    switch (which) {
        case Defining::Eta:
            for (const auto& e : alg->etas()) items.push_back(&e);
            what = "table relations";
            break;
        case Defining::Rho:
            for (const auto& e : alg->data().rho) items.push_back(&e);
            what = "J-relations";
            break;
        case Defining::Casimir:
            items.push_back(&alg->data().casimir);
            what = "Casimir";
            break;
    }
    Report r = run_engine_tasks(alg, mode, static_cast<int>(items.size()), threads, [&](Engine& e, int i) {
        NormalElement x = e.canonical(items[i]->element);
        return Check{"reduce(" + items[i]->name + ") = 0", x.is_zero(), x.is_zero() ? "" : e.str(x)};
    });
    r.suite = std::string(what) + " (" + mode_name(mode) + ")";
    return r;
}

Report verify_closure(std::shared_ptr<const Algebra> alg, Mode mode, int threads) {
    int nrel = static_cast<int>(alg->relators().size());
    Report r = run_engine_tasks(alg, mode, nrel * kNumGens * 2, threads, [&](Engine& e, int i) {
        const Relator& g = e.relators()[i / (kNumGens * 2)];
        int k = (i / 2) % kNumGens;
        bool left = i % 2 == 0;
        NormalElement o = NormalElement::gen(k);
        NormalElement x = left ? e.multiply(o, g.full) : e.multiply(g.full, o);
        std::string name = left ? std::string(gen_name(k)) + "*" + g.name : g.name + "*" + gen_name(k);
        return Check{"reduce(" + name + ") = 0", x.is_zero(), x.is_zero() ? "" : e.str(x)};
    });
    r.suite = std::string("Groebner closure (") + mode_name(mode) + ")";
    return r;
}

Report verify_strategies(std::shared_ptr<const Algebra> alg, int n, int max_weight, std::uint64_t seed, int threads) {
    std::vector<FreeElement> els;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), qpow(-4, 4);
    for (int i = 0; i < n; ++i) {
        FreeElement f;
        int k = nterms(rng);
        for (int j = 0; j < k; ++j) {
            int c = coef(rng);
            f.add(random_word(rng, max_weight), QTLaurent::monomial(c ? c : 1, qpow(rng), qpow(rng)));
        }
        els.push_back(f);
    }
    Report r = run_engine_tasks(alg, Mode::QT, n, threads, [&](Engine& e, int i) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(i) + 1};
        std::mt19937_64 local(seq);
        NormalElement a = e.canonical(els[i]);
        NormalElement b = e.reduce_random(e.orderer().normal_order_naive(els[i], &local), local);
        bool ok = a == b;
        return Check{"random element " + std::to_string(i), ok, ok ? "" : e.str(a) + " vs " + e.str(b)};
    });
    r.suite = "reduction strategies";
    return r;
}

Report verify_flatness(std::shared_ptr<const Algebra> alg, int n, int max_weight, std::uint64_t seed, int threads) {
    std::vector<std::pair<Monomial, Monomial>> pairs;
    {
        Engine probe(alg, Mode::QT);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < n; ++i) {
            Monomial a = random_basis_monomial(probe, rng, max_weight);
            pairs.emplace_back(a, random_basis_monomial(probe, rng, max_weight));
        }
    }
    struct Worker {
        std::unique_ptr<Engine> qt, sk, q1, qt1;
    };
    std::vector<Worker> ws(std::max(1, threads));
    std::vector<Check> out(n);
    parallel_for(n, threads, [&](int i, int wi) {
        auto& w = ws[wi];
        if (!w.qt) {
            w.qt = std::make_unique<Engine>(alg, Mode::QT);
            w.sk = std::make_unique<Engine>(alg, Mode::SKEIN);
            w.q1 = std::make_unique<Engine>(alg, Mode::Q1T);
            w.qt1 = std::make_unique<Engine>(alg, Mode::QT1);
        }
        const auto& [a, b] = pairs[i];
        std::string name = a.str() + " * " + b.str();
        NormalElement A = NormalElement::monomial(a), B = NormalElement::monomial(b);
        NormalElement p;
        try {
            p = w.qt->multiply(A, B);
        } catch (const NonLaurentCoefficient& ex) {
            out[i] = {name, false, ex.what()};
            return;
        }
        std::string bad;
        for (Engine* e : {w.sk.get(), w.q1.get(), w.qt1.get()}) {
            NormalElement want = e->multiply(A, B);
            if (e->from_qt(p) != want) bad += std::string(bad.empty() ? "" : ", ") + mode_name(e->mode());
        }
        out[i] = {name, bad.empty(), bad.empty() ? "" : "specialization differs in " + bad};
    });
    Report r;
    r.suite = "specialization flatness";
    r.checks = std::move(out);
    return r;
}

}  // namespace qtalg
