#include "qtalg/qdiff.hpp"

#include <sstream>

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

Shift add_shift(const Shift& a, const Shift& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

// v in (12, 23, 13) order; 12 -> 23 -> 13 -> 12
Shift cycle_shift(const Shift& v) { return {v[2], v[0], v[1]}; }

XLaurent xmono(const Shift& e, const Rational& c = Rational(1), int q = 0, int t = 0) {
    return Laurent::monomial(c, q, t, e[0], e[1], e[2]);
}

XLaurent xvar(int var, int power) {
    Shift e{};
    e[var] = power;
    return xmono(e);
}

std::string shift_str(const Shift& v, const char* sym) {
    static const char* names[] = {"12", "23", "13"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (!v[i]) continue;
        if (!s.empty()) s += "*";
        s += std::string(sym) + names[i];
        if (v[i] != 1) s += "^" + (v[i] < 0 ? "(" + std::to_string(v[i]) + ")" : std::to_string(v[i]));
    }
    return s;
}

// sum_{a,b} ab pre (1 - t^{1/2} X_k X_i^a X_j^b)(1 - t^{1/2} X_k^-1 X_i^a X_j^b)
//            / (X_i^{ea a} X_j^{eb b} (X_i - X_i^-1)(X_j - X_j^-1)) delta_i^a delta_j^b
QDiffOperator four_term(int i, int j, int k, const QTLaurent& pre, int ea, int eb) {
    QDiffOperator r;
    XLaurent di = xvar(i, 1) - xvar(i, -1), dj = xvar(j, 1) - xvar(j, -1);
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            Shift base{};
            base[i] = a;
            base[j] = b;
            Shift up = base, down = base;
            up[k] = 1;
            down[k] = -1;
            XLaurent num = pre * (XLaurent(1) - xmono(up, 1, 0, 2)) * (XLaurent(1) - xmono(down, 1, 0, 2));
            num *= Rational(a * b);
            Shift dm{};
            dm[i] = -ea * a;
            dm[j] = -eb * b;
            XRational f(num * xmono(dm));
            f.div_laurent(di);
            f.div_laurent(dj);
            r.add(base, f);
        }
    }
    return r;
}

}  // namespace

QDiffOperator QDiffOperator::term(const Shift& v, const XRational& f) {
    QDiffOperator r;
    r.add(v, f);
    return r;
}

void QDiffOperator::add(const Shift& v, const XRational& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(v, f);
    if (fresh) return;
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

QDiffOperator QDiffOperator::operator-() const {
    QDiffOperator r;
    for (const auto& [v, f] : terms_) r.terms_.emplace(v, -f);
    return r;
}

QDiffOperator& QDiffOperator::operator+=(const QDiffOperator& o) {
    for (const auto& [v, f] : o.terms_) add(v, f);
    return *this;
}

QDiffOperator& QDiffOperator::operator-=(const QDiffOperator& o) {
    for (const auto& [v, f] : o.terms_) add(v, -f);
    return *this;
}

QDiffOperator& QDiffOperator::operator*=(const QTLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [v, f] : terms_) f.mul_laurent(c);
    return *this;
}

QDiffOperator compose(const QDiffOperator& a, const QDiffOperator& b) {
    QDiffOperator r;
    for (const auto& [v, f] : a.terms_)
        for (const auto& [w, g] : b.terms_) r.add(add_shift(v, w), f * g.shift(v[0], v[1], v[2]));
    r.simplify();
    return r;
}

QDiffOperator QDiffOperator::cycle(int times) const {
    times = ((times % 3) + 3) % 3;
    QDiffOperator r;
    for (const auto& [v, f] : terms_) {
        Shift w = v;
        for (int i = 0; i < times; ++i) w = cycle_shift(w);
        r.terms_.emplace(w, f.cycle_x(times));
    }
    return r;
}

void QDiffOperator::simplify() {
    for (auto& [v, f] : terms_) f.simplify();
}

std::string QDiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        std::string d = shift_str(it->first, "d");
        if (!d.empty()) s += "*" + d;
    }
    return s;
}

QDiffOperator op_q_commutator(const QDiffOperator& a, const QDiffOperator& b) {
    QDiffOperator r = compose(a, b) * QTLaurent::q(1) - compose(b, a) * QTLaurent::q(-1);
    QDiffOperator out;
    XLaurent d = QTLaurent::q(2) - QTLaurent::q(-2);
    for (const auto& [v, f] : r.terms()) {
        XRational g = f;
        g.div_laurent(d);
        g.simplify();
        out.add(v, g);
    }
    return out;
}

QDiffOperator hamiltonian(int i) {
    QTLaurent pre = QTLaurent::t(-2);
    switch (i) {
        case 1: return four_term(0, 2, 1, pre, 1, 1);
        case 2: return four_term(0, 1, 2, pre, 1, 1);
        case 3: return four_term(2, 1, 0, pre, 1, 1);
    }
    throw Error("hamiltonian index must be 1, 2 or 3");
}

QDiffOperator multiplication_op(int var) {
    return QDiffOperator::multiplication(XRational(xvar(var, 1) + xvar(var, -1)));
}

QDiffOperator explicit_o12() { return four_term(0, 2, 1, QTLaurent::monomial(1, 1, -2), 0, 1); }
QDiffOperator explicit_o23() { return four_term(0, 1, 2, QTLaurent::monomial(1, -1, -2), 2, 1); }
QDiffOperator explicit_o123() { return four_term(1, 2, 0, QTLaurent::t(-2), 2, 0); }

QDiffOperator laurent_form(int g) {
    switch (g) {
        case O1: return hamiltonian(1);
        case O2: return multiplication_op(0);
        case O3: return hamiltonian(2);
        case O4: return multiplication_op(1);
        case O5: return hamiltonian(3);
        case O6: return multiplication_op(2);
        case O12: return explicit_o12();
        case O23: return explicit_o23();
        case O34: return explicit_o12().cycle(1);
        case O45: return explicit_o23().cycle(1);
        case O56: return explicit_o12().cycle(2);
        case O61: return explicit_o23().cycle(2);
        case O123: return explicit_o123();
        case O234: return explicit_o123().cycle(2);
        case O345: return explicit_o123().cycle(1);
    }
    throw Error("generator index out of range");
}

QDiffRep::QDiffRep() {
    for (int i = 1; i <= 6; ++i) gens_[single(i)] = laurent_form(single(i));
    for (int i = 1; i <= 6; ++i) gens_[pair_gen(i)] = op_q_commutator(gens_[single(i)], gens_[single(i + 1)]);
    for (int i = 1; i <= 3; ++i)
        gens_[triple_gen(i)] = op_q_commutator(gens_[pair_gen(i)], gens_[single(i + 2)]);
}

const QDiffOperator& QDiffRep::pair(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = pairs_.find(key); it != pairs_.end()) return it->second;
    return pairs_.emplace(key, compose(gens_[a], gens_[b])).first->second;
}

QDiffOperator QDiffRep::word(const Word& w) {
    if (w.empty()) return QDiffOperator::identity();
    if (w.size() == 1) return gens_[w[0]];
    std::size_t n = w.size();
    // pairs from the right, then compose leftwards
    QDiffOperator r = n % 2 ? gens_[w[n - 1]] : pair(w[n - 2], w[n - 1]);
    std::size_t i = n % 2 ? n - 1 : n - 2;
    while (i >= 2) {
        r = compose(pair(w[i - 2], w[i - 1]), r);
        i -= 2;
    }
    if (i == 1) r = compose(gens_[w[0]], r);
    return r;
}

QDiffOperator QDiffRep::element(const NormalElement& e) {
    QDiffOperator r;
    for (const auto& [m, c] : e.terms()) r += word(monomial_word(m)) * c;
    r.simplify();
    return r;
}

QDiffOperator QDiffRep::element(const FreeElement& e) {
    QDiffOperator r;
    for (const auto& [w, c] : e.terms()) r += word(w) * c;
    r.simplify();
    return r;
}

ClassicalImage::ClassicalImage(const XRational& f) { add({0, 0, 0}, f); }

ClassicalImage ClassicalImage::from_operator(const QDiffOperator& op) {
    ClassicalImage r;
    for (const auto& [v, f] : op.terms()) r.add(v, f.specialize(Laurent::Spec::q_to_1));
    return r;
}

void ClassicalImage::add(const Shift& v, const XRational& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(v, f);
    if (fresh) return;
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

ClassicalImage& ClassicalImage::operator+=(const ClassicalImage& o) {
    for (const auto& [v, f] : o.terms_) add(v, f);
    return *this;
}

ClassicalImage& ClassicalImage::operator*=(const QTLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [v, f] : terms_) f.mul_laurent(c);
    return *this;
}

ClassicalImage operator*(const ClassicalImage& a, const ClassicalImage& b) {
    ClassicalImage r;
    for (const auto& [v, f] : a.terms_)
        for (const auto& [w, g] : b.terms_) r.add(add_shift(v, w), f * g);
    for (auto& [v, f] : r.terms_) f.simplify();
    return r;
}

ClassicalImage operator-(const ClassicalImage& a, const ClassicalImage& b) {
    ClassicalImage r = a;
    for (const auto& [v, f] : b.terms_) r.add(v, -f);
    return r;
}

ClassicalImage ClassicalImage::specialize(Laurent::Spec s) const {
    ClassicalImage r;
    for (const auto& [v, f] : terms_) r.add(v, f.specialize(s));
    return r;
}

Shift ClassicalImage::leading_power() const {
    if (terms_.empty()) throw Error("leading power of zero");
    auto key = [](const Shift& v) { return std::array<int, 3>{v[0], v[2], v[1]}; };
    Shift best = terms_.begin()->first;
    for (const auto& [v, f] : terms_)
        if (key(v) > key(best)) best = v;
    return best;
}

std::string ClassicalImage::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        std::string d = shift_str(it->first, "P");
        if (!d.empty()) s += "*" + d;
    }
    return s;
}

ClassicalImage classical_image(int g) { return ClassicalImage::from_operator(laurent_form(g)); }

ClassicalImage classical_eval(const NormalElement& e) {
    static const std::array<ClassicalImage, kNumGens> img = [] {
        std::array<ClassicalImage, kNumGens> a;
        for (int g = 0; g < kNumGens; ++g) a[g] = classical_image(g);
        return a;
    }();
    ClassicalImage r;
    for (const auto& [m, c] : e.terms()) {
        ClassicalImage p{XRational(1)};
        for (int g = 0; g < kNumGens; ++g)
            for (int k = 0; k < m[g]; ++k) p = p * img[g];
        p *= c.specialize(Laurent::Spec::q_to_1);
        r += p;
    }
    return r;
}

namespace {

std::string gen_list_name(const char* head, int g) { return std::string(head) + gen_name(g); }

bool selected(const QDiffOptions& opt, const std::string& name) { return !opt.only || *opt.only == name; }

}  // namespace

Report verify_representation(std::shared_ptr<const Algebra> alg, const QDiffOptions& opt, int threads) {
    Report r;
    r.suite = "q-difference representation";
    QDiffRep rep;
    auto eq = [&](const std::string& name, const QDiffOperator& a, const QDiffOperator& b) {
        if (!selected(opt, name)) return;
        bool ok = a == b;
        r.add(name, ok, ok ? "" : "difference " + (a - b).str());
    };
    eq("Laurent form of O12", rep.gen(O12), explicit_o12());
    eq("Laurent form of O23", rep.gen(O23), explicit_o23());
    eq("Laurent form of O123", rep.gen(O123), explicit_o123());
    for (int g : {O34, O45, O56, O61, O234, O345}) eq(gen_list_name("cyclic form of ", g), rep.gen(g), laurent_form(g));
    // O456 = O123 and its rotations by the alternative chains
    for (int i = 4; i <= 6; ++i)
        eq(gen_list_name("chain form of ", triple_gen(i)), op_q_commutator(rep.gen(pair_gen(i)), rep.gen(single(i + 2))),
           rep.gen(triple_gen(i)));

    struct Item {
        std::string name;
        const FreeElement* free = nullptr;
        const NormalElement* normal = nullptr;
    };
    std::vector<Item> items;
    for (const auto& e : alg->etas())
        if (e.name.size() > 4 && e.name.compare(e.name.size() - 4, 4, ",O1)") == 0 && selected(opt, e.name))
            items.push_back({e.name, &e.element, nullptr});
    for (const auto& g : alg->relators())
        if (selected(opt, g.name)) items.push_back({g.name, nullptr, &g.full});
    if (!opt.skip_casimir && selected(opt, alg->data().casimir.name))
        items.push_back({alg->data().casimir.name, &alg->data().casimir.element, nullptr});

    std::vector<Check> out(items.size());
    std::vector<std::unique_ptr<QDiffRep>> reps(std::max(1, threads));
    parallel_for(static_cast<int>(items.size()), threads, [&](int i, int w) {
        if (!reps[w]) reps[w] = std::make_unique<QDiffRep>();
        const auto& it = items[i];
        QDiffOperator op = it.free ? reps[w]->element(*it.free) : reps[w]->element(*it.normal);
        out[i] = {"image of " + it.name + " vanishes", op.is_zero(), op.is_zero() ? "" : op.str()};
    });
    r.checks.insert(r.checks.end(), out.begin(), out.end());
    return r;
}

namespace {

// the t = 1 images of O1, O3, O5 as printed, built term by term
ClassicalImage tilde_hamiltonian(int i, int j, int k) {
    ClassicalImage r;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            Shift e{};
            e[i] = a;
            e[j] = b;
            Shift up = e, down = e;
            up[k] = 1;
            down[k] = -1;
            XLaurent num = (XLaurent(1) - xmono(up)) * (XLaurent(1) - xmono(down)) * Rational(a * b);
            XLaurent den = xmono(e) * (xvar(i, 1) - xvar(i, -1)) * (xvar(j, 1) - xvar(j, -1));
            r.add(e, XRational::fraction(num, den));
        }
    }
    return r;
}

}  // namespace

Report verify_classical(std::shared_ptr<const Algebra> alg, int threads) {
    Report r;
    r.suite = "classical limit of the representation";
    QDiffRep rep;
    for (int g = 0; g < kNumGens; ++g) {
        ClassicalImage a = classical_image(g), b = ClassicalImage::from_operator(rep.gen(g));
        r.add(gen_list_name("q -> 1 of commutator image of ", g), a == b, a == b ? "" : (a - b).str());
    }
    const std::pair<int, std::array<int, 3>> ham[] = {{O1, {0, 2, 1}}, {O3, {0, 1, 2}}, {O5, {2, 1, 0}}};
    const Shift lead[] = {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    for (int n = 0; n < 3; ++n) {
        auto [g, idx] = ham[n];
        ClassicalImage t1 = classical_image(g).specialize(Laurent::Spec::t_to_1);
        ClassicalImage want = tilde_hamiltonian(idx[0], idx[1], idx[2]);
        r.add(gen_list_name("t = 1 image of ", g), t1 == want, t1 == want ? "" : (t1 - want).str());
        Shift lp = t1.leading_power();
        r.add(gen_list_name("leading power of ", g), lp == lead[n], shift_str(lp, "P"));
    }
    for (int n = 0; n < 3; ++n) {
        int g = single(2 * n + 2);
        ClassicalImage want{XRational(xvar(n, 1) + xvar(n, -1))};
        bool ok = classical_image(g).specialize(Laurent::Spec::t_to_1) == want;
        r.add(gen_list_name("t = 1 image of ", g), ok);
    }

    struct Item {
        std::string name;
        NormalElement e;
    };
    std::vector<Item> items;
    Engine eng(alg, Mode::Q1T);
    for (const auto& g : alg->relators()) items.push_back({g.name, g.full.specialize(Laurent::Spec::q_to_1)});
    for (const auto& e : alg->data().rho) items.push_back({e.name, eng.normal_order(e.element)});
    items.push_back({alg->data().casimir.name, eng.normal_order(alg->data().casimir.element)});
    std::vector<Check> out(items.size() * 2);
    parallel_for(static_cast<int>(items.size()), threads, [&](int i, int) {
        ClassicalImage c = classical_eval(items[i].e);
        out[2 * i] = {"classical image of " + items[i].name + " vanishes", c.is_zero(), c.is_zero() ? "" : c.str()};
        ClassicalImage c1 = c.specialize(Laurent::Spec::t_to_1);
        out[2 * i + 1] = {"t = 1 image of " + items[i].name + " vanishes", c1.is_zero(), ""};
    });
    r.checks.insert(r.checks.end(), out.begin(), out.end());
    return r;
}

}  // namespace qtalg
