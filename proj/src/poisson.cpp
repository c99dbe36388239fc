#include "qtalg/poisson.hpp"

#include <functional>

#include "qtalg/errors.hpp"

namespace qtalg {

QTLaurent classical_coefficient(const QTLaurent& c) {
    if (!c.specialize(Laurent::Spec::q_to_1).is_zero())
        throw NotDivisible("commutator coefficient " + c.str() + " does not vanish at q = 1");
    QTLaurent d = c.div_exact(QTLaurent::q(1) - QTLaurent(1));
    return d.specialize(Laurent::Spec::q_to_1) * Rational(1, 4);
}

Poisson::Poisson(std::shared_ptr<const Algebra> alg, bool t1)
    : alg_(alg), t1_(t1), qt_(alg, Mode::QT), cm_(alg, t1 ? Mode::QT1 : Mode::Q1T) {}

const NormalElement& Poisson::bracket_basis(const Monomial& a, const Monomial& b) {
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    NormalElement r;
    if (a != b) {
        NormalElement x = NormalElement::monomial(a), y = NormalElement::monomial(b);
        NormalElement comm = qt_.multiply(x, y) - qt_.multiply(y, x);
        for (const auto& [m, c] : comm.terms()) {
            QTLaurent v = classical_coefficient(c);
            if (t1_) v = v.specialize(Laurent::Spec::t_to_1);
            r.add(m, v);
        }
        r = cm_.reduce(r);
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

NormalElement Poisson::bracket(const NormalElement& a, const NormalElement& b) {
    NormalElement x = cm_.reduce(cm_.from_qt(a)), y = cm_.reduce(cm_.from_qt(b));
    NormalElement r;
    for (const auto& [m, c] : x.terms())
        for (const auto& [n, d] : y.terms()) r.add_scaled(bracket_basis(m, n), c * d);
    return r;
}

NormalElement Poisson::gen_monomial(int g, const Monomial& m) {
    NormalElement r;
    for (int i = 0; i < kNumGens; ++i) {
        if (!m[i]) continue;
        Monomial rest = m;
        rest.dec(i);
        NormalElement part = cm_.multiply(NormalElement::monomial(rest), bracket_gen(g, i));
        r.add_scaled(part, QTLaurent(m[i]));
    }
    return r;
}

NormalElement Poisson::bracket_leibniz(const NormalElement& a, const NormalElement& b) {
    NormalElement x = cm_.reduce(cm_.from_qt(a)), y = cm_.reduce(cm_.from_qt(b));
    NormalElement r;
    for (const auto& [m, c] : x.terms()) {
        for (const auto& [n, d] : y.terms()) {
            for (int j = 0; j < kNumGens; ++j) {
                if (!m[j]) continue;
                Monomial rest = m;
                rest.dec(j);
                NormalElement part = cm_.multiply(NormalElement::monomial(rest), gen_monomial(j, n));
                r.add_scaled(part, c * d * QTLaurent(m[j]));
            }
        }
    }
    return r;
}

namespace {

struct Worker {
    std::unique_ptr<Poisson> p;
    std::unique_ptr<Mcg> mcg;
};

}  // namespace

Report verify_poisson(std::shared_ptr<const Algebra> alg, const ImageTable& images, bool t1,
                      const PoissonOptions& opt, int threads) {
    using Task = std::function<Check(Worker&)>;
    std::vector<Task> tasks;
    auto G = [](int g) { return NormalElement::gen(g); };
    auto pair_name = [](int j, int k) { return std::string("{") + gen_name(j) + "," + gen_name(k) + "}"; };

    for (const auto& e : alg->table().entries()) {
        int j = e.row, k = e.col;
        tasks.push_back([=](Worker& w) -> Check {
            try {
                NormalElement x = G(j), y = G(k);
                NormalElement comm = w.p->qt_engine().multiply(x, y) - w.p->qt_engine().multiply(y, x);
                for (const auto& [m, c] : comm.terms()) classical_coefficient(c);
                return {"divisibility of [" + std::string(gen_name(j)) + "," + gen_name(k) + "]", true, ""};
            } catch (const NotDivisible& ex) {
                return {"divisibility of [" + std::string(gen_name(j)) + "," + gen_name(k) + "]", false, ex.what()};
            }
        });
        tasks.push_back([=](Worker& w) -> Check {
            Engine& cm = w.p->engine();
            NormalElement want = cm.multiply(G(k), G(j)) * QTLaurent(Rational(-e.c, 2));
            want.add_scaled(cm.canonical(e.x), QTLaurent(e.sign));
            NormalElement got = w.p->bracket_gen(j, k);
            bool ok = got == want;
            return {"table value of " + pair_name(j, k), ok, ok ? "" : cm.str(got) + " != " + cm.str(want)};
        });
        tasks.push_back([=](Worker& w) -> Check {
            NormalElement s = w.p->bracket_gen(j, k) + w.p->bracket_gen(k, j);
            return {"antisymmetry of " + pair_name(j, k), s.is_zero(), s.is_zero() ? "" : w.p->engine().str(s)};
        });
        const McgLetter letters[] = {{1, false}, {0, false}};
        for (const auto& l : letters) {
            tasks.push_back([=](Worker& w) -> Check {
                NormalElement lhs = w.p->bracket(w.mcg->image(l, j), w.mcg->image(l, k));
                NormalElement rhs = w.mcg->apply(l, w.p->bracket_gen(j, k));
                bool ok = lhs == rhs;
                return {mcg_word_str({l}) + "-equivariance of " + pair_name(j, k), ok,
                        ok ? "" : w.p->engine().str(lhs - rhs)};
            });
        }
    }
    for (int a = 0; a < kNumGens; ++a)
        for (int b = a + 1; b < kNumGens; ++b)
            for (int c = b + 1; c < kNumGens; ++c)
                tasks.push_back([=](Worker& w) -> Check {
                    auto& p = *w.p;
                    NormalElement s = p.bracket(G(a), p.bracket_gen(b, c)) + p.bracket(G(b), p.bracket_gen(c, a)) +
                                      p.bracket(G(c), p.bracket_gen(a, b));
                    return {"Jacobi on (" + std::string(gen_name(a)) + "," + gen_name(b) + "," + gen_name(c) + ")",
                            s.is_zero(), s.is_zero() ? "" : p.engine().str(s)};
                });
    {
        // triples drawn up front so the result does not depend on scheduling
        Engine probe(alg, t1 ? Mode::QT1 : Mode::Q1T);
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < opt.leibniz_samples; ++i) {
            Monomial a = random_basis_monomial(probe, rng, 4), b = random_basis_monomial(probe, rng, 4),
                     c = random_basis_monomial(probe, rng, 4);
            tasks.push_back([=](Worker& w) -> Check {
                auto& p = *w.p;
                Engine& cm = p.engine();
                NormalElement A = NormalElement::monomial(a), B = NormalElement::monomial(b),
                              C = NormalElement::monomial(c);
                NormalElement lhs = p.bracket(A, cm.multiply(B, C));
                NormalElement rhs = cm.multiply(p.bracket(A, B), C) + cm.multiply(B, p.bracket(A, C));
                NormalElement lb = p.bracket_leibniz(A, B);
                bool ok = lhs == rhs && lb == p.bracket(A, B);
                std::string name = "Leibniz on (" + a.str() + ", " + b.str() + ", " + c.str() + ")";
                return {name, ok, ok ? "" : lhs == rhs ? "limit and derivation brackets differ" : cm.str(lhs - rhs)};
            });
        }
    }

    std::vector<Check> out(tasks.size());
    std::vector<Worker> ws(std::max(1, threads));
    parallel_for(static_cast<int>(tasks.size()), threads, [&](int i, int wi) {
        auto& w = ws[wi];
        if (!w.p) {
            w.p = std::make_unique<Poisson>(alg, t1);
            w.mcg = std::make_unique<Mcg>(w.p->engine(), images);
        }
        out[i] = tasks[i](w);
    });
    Report r;
    r.suite = std::string("Poisson bracket (") + (t1 ? "t = 1" : "q = 1") + ")";
    r.checks = std::move(out);
    return r;
}

}  // namespace qtalg
