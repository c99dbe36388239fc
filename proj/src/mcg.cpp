#include "qtalg/mcg.hpp"

#include <cctype>
#include <memory>
#include <sstream>

#include "qtalg/errors.hpp"

namespace qtalg {

McgWord parse_mcg_word(const std::string& s) {
    McgWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    while (i < s.size()) {
        McgLetter l;
        std::size_t at = i;
        if (s[i] == 'I') {
            l.twist = 0;
            ++i;
        } else if (s[i] == 'd' && i + 1 < s.size() && s[i + 1] >= '1' && s[i + 1] <= '5') {
            l.twist = s[i + 1] - '0';
            i += 2;
        } else {
            throw SyntaxError(at, "d1..d5 or I", "unknown mapping class letter");
        }
        if (i < s.size() && s[i] == '^') {
            if (s.compare(i, 3, "^-1") != 0) throw SyntaxError(i, "'^-1'", "only inverses are allowed as powers");
            l.inverse = true;
            i += 3;
        }
        if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])))
            throw SyntaxError(i, "whitespace", "letters must be separated by spaces");
        w.push_back(l);
        skip();
    }
    return w;
}

std::string mcg_word_str(const McgWord& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += " ";
        s += l.twist == 0 ? "I" : "d" + std::to_string(l.twist);
        if (l.inverse) s += "^-1";
    }
    return s;
}

Mcg::Mcg(Engine& e, const ImageTable& images) : eng_(e) {
    auto section = [&](const char* name) -> const std::map<int, FreeElement>& {
        auto it = images.find(name);
        if (it == images.end()) throw DataError(std::string("missing image section [") + name + "]");
        return it->second;
    };
    for (int g = 0; g < kNumGens; ++g) {
        img_[0][g] = NormalElement::gen(perm_I(g));
        img_[1][g] = NormalElement::gen(perm_I_inv(g));
    }
    ready_[0] = ready_[1] = true;
    const auto& d1 = section("d1");
    const auto& d1i = section("d1_inv");
    for (int g = 0; g < kNumGens; ++g) {
        auto a = d1.find(g), b = d1i.find(g);
        img_[2][g] = a == d1.end() ? NormalElement::gen(g) : eng_.canonical(a->second);
        img_[3][g] = b == d1i.end() ? NormalElement::gen(g) : eng_.canonical(b->second);
    }
    ready_[2] = ready_[3] = true;
    // d_i = I^{i-1} d1 I^{1-i}
    for (int i = 2; i <= 5; ++i) {
        for (int inv = 0; inv < 2; ++inv) {
            McgWord w;
            for (int k = 1; k < i; ++k) w.push_back({0, false});
            w.push_back({1, inv == 1});
            for (int k = 1; k < i; ++k) w.push_back({0, true});
            int slot = 2 * i + inv;
            for (int g = 0; g < kNumGens; ++g) img_[slot][g] = apply(w, NormalElement::gen(g));
            ready_[slot] = true;
        }
    }
}

const NormalElement& Mcg::mono_image(int letter, const Monomial& m) {
    auto& memo = memo_[letter];
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    NormalElement r(QTLaurent(1));
    for (int g = 0; g < kNumGens; ++g)
        for (int k = 0; k < m[g]; ++k) r = eng_.multiply(r, img_[letter][g]);
    return memo.emplace(m, std::move(r)).first->second;
}

NormalElement Mcg::apply(const McgLetter& l, const NormalElement& e) {
    if (!ready_[l.index()]) throw Error("mapping class images not built");
    NormalElement r;
    for (const auto& [m, c] : e.terms()) r.add_scaled(mono_image(l.index(), m), c);
    return r;
}

NormalElement Mcg::apply(const McgWord& w, const NormalElement& e) {
    NormalElement cur = e;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

NormalElement Mcg::apply_free(const McgLetter& l, const FreeElement& e) {
    NormalElement r;
    for (const auto& [w, c] : e.terms()) {
        NormalElement p(QTLaurent(1));
        for (auto g : w) p = eng_.multiply(p, img_[l.index()][g]);
        r.add_scaled(p, to_mode(c, eng_.mode()));
    }
    return r;
}

namespace {

struct Worker {
    std::unique_ptr<Engine> eng;
    std::unique_ptr<Mcg> mcg;
};

Worker& worker(std::vector<Worker>& ws, int w, const std::shared_ptr<const Algebra>& alg, const ImageTable& images,
               Mode mode) {
    auto& x = ws[w];
    if (!x.eng) {
        x.eng = std::make_unique<Engine>(alg, mode);
        x.mcg = std::make_unique<Mcg>(*x.eng, images);
    }
    return x;
}

}  // namespace

Report verify_mcg_relations(std::shared_ptr<const Algebra> alg, const ImageTable& images, Mode mode, int threads) {
    struct Item {
        std::string name;
        McgWord lhs, rhs;
        int g;
    };
    std::vector<Item> items;
    auto W = [](const char* s) { return parse_mcg_word(s); };
    const std::vector<std::pair<std::string, std::pair<McgWord, McgWord>>> rels = {
        {"d1 d2 d1 = d2 d1 d2", {W("d1 d2 d1"), W("d2 d1 d2")}},
        {"d1 d3 = d3 d1", {W("d1 d3"), W("d3 d1")}},
        {"d1 d4 = d4 d1", {W("d1 d4"), W("d4 d1")}},
        {"d5 d4 d3 d2 d1 = I^-1", {W("d5 d4 d3 d2 d1"), W("I^-1")}},
    };
    for (const auto& [name, lr] : rels)
        for (int g = O1; g <= O6; ++g) items.push_back({name, lr.first, lr.second, g});
    for (int g = 0; g < kNumGens; ++g) {
        items.push_back({"I^6 = id", W("I I I I I I"), {}, g});
        items.push_back({"d1^-1 d1 = id", W("d1^-1 d1"), {}, g});
        items.push_back({"d1 d1^-1 = id", W("d1 d1^-1"), {}, g});
    }
    std::vector<Check> out(items.size());
    std::vector<Worker> ws(std::max(1, threads));
    parallel_for(static_cast<int>(items.size()), threads, [&](int i, int w) {
        auto& x = worker(ws, w, alg, images, mode);
        const auto& it = items[i];
        NormalElement g = NormalElement::gen(it.g);
        NormalElement a = x.mcg->apply(it.lhs, g), b = x.mcg->apply(it.rhs, g);
        bool ok = a == b;
        out[i] = {it.name + " on " + gen_name(it.g), ok,
                  ok ? "" : x.eng->str(a) + " != " + x.eng->str(b)};
    });
    Report r;
    r.suite = std::string("mcg relations (") + mode_name(mode) + ")";
    r.checks = std::move(out);
    if (mode_commutative(mode)) {
        // specialized images against the separately transcribed commutative tables
        Engine e(alg, mode);
        Mcg m(e, images);
        for (auto [sec, slot] : {std::pair{"d1_q1", 2}, std::pair{"d1_inv_q1", 3}}) {
            auto it = images.find(sec);
            if (it == images.end()) continue;
            for (int g = 0; g < kNumGens; ++g) {
                auto f = it->second.find(g);
                NormalElement want = f == it->second.end() ? NormalElement::gen(g) : e.canonical(f->second);
                bool ok = m.image(McgLetter{1, slot == 3}, g) == want;
                r.add(std::string(sec) + " table on " + gen_name(g), ok);
            }
        }
    }
    return r;
}

Report verify_ideal_invariance(std::shared_ptr<const Algebra> alg, const ImageTable& images, Mode mode, int threads,
                               bool defining) {
    struct Item {
        std::string name;
        const FreeElement* free = nullptr;
        const NormalElement* normal = nullptr;
    };
    std::vector<Item> rel;
    for (const auto& g : alg->relators()) rel.push_back({g.name, nullptr, &g.full});
    if (defining) {
        for (const auto& e : alg->etas()) rel.push_back({e.name, &e.element, nullptr});
        for (const auto& e : alg->data().rho) rel.push_back({e.name, &e.element, nullptr});
        rel.push_back({alg->data().casimir.name, &alg->data().casimir.element, nullptr});
    }
    const McgLetter letters[] = {{1, false}, {1, true}, {0, false}};
    const char* lname[] = {"d1", "d1^-1", "I"};
    int n = static_cast<int>(rel.size()) * 3;
    std::vector<Check> out(n);
    std::vector<Worker> ws(std::max(1, threads));
    parallel_for(n, threads, [&](int i, int w) {
        auto& x = worker(ws, w, alg, images, mode);
        const auto& it = rel[i / 3];
        const McgLetter& l = letters[i % 3];
        FreeElement f = it.free ? *it.free : FreeElement::from_normal(*it.normal);
        NormalElement r = x.eng->reduce(x.mcg->apply_free(l, f));
        out[i] = {std::string(lname[i % 3]) + "(" + it.name + ")", r.is_zero(), r.is_zero() ? "" : x.eng->str(r)};
    });
    Report r;
    r.suite = std::string("ideal invariance (") + mode_name(mode) + ")";
    r.checks = std::move(out);
    return r;
}

}  // namespace qtalg
