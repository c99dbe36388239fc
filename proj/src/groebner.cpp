#include "qtalg/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "qtalg/errors.hpp"

namespace qtalg {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::QT: return "qt";
        case Mode::SKEIN: return "skein";
        case Mode::Q1T: return "q1t";
        case Mode::QT1: return "qt1";
    }
    return "?";
}

Mode mode_from_name(const std::string& s) {
    if (s == "qt") return Mode::QT;
    if (s == "skein") return Mode::SKEIN;
    if (s == "q1t") return Mode::Q1T;
    if (s == "qt1") return Mode::QT1;
    throw DomainError("unknown algebra '" + s + "' (expected qt, skein, q1t or qt1)");
}

bool mode_commutative(Mode m) { return m == Mode::Q1T || m == Mode::QT1; }

std::optional<Laurent::Spec> mode_spec(Mode m) {
    switch (m) {
        case Mode::QT: return std::nullopt;
        case Mode::SKEIN: return Laurent::Spec::t_to_q;
        case Mode::Q1T: return Laurent::Spec::q_to_1;
        case Mode::QT1: return Laurent::Spec::both_to_1;
    }
    return std::nullopt;
}

QTLaurent to_mode(const QTLaurent& c, Mode m) {
    auto s = mode_spec(m);
    return s ? c.specialize(*s) : c;
}

MonomialOrder::MonomialOrder() {
    for (int i = 0; i < kNumGens; ++i) scan_[i] = kNumGens - 1 - i;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa > wb ? 1 : -1;
    for (int v : scan_)
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    return 0;
}

bool MonomialOrder::natural() const { return scan_ == MonomialOrder().scan_; }

std::string MonomialOrder::str() const {
    std::string s;
    for (int v : scan_) s += std::string(s.empty() ? "" : " ") + gen_name(v);
    return s;
}

MonomialOrder calibrate_order(const std::vector<Relator>& relators, std::string* log) {
    auto check = [&](const MonomialOrder& o, std::string* why) {
        for (const auto& r : relators)
            for (const auto& [m, c] : r.full.terms())
                if (m != r.lead && !o.greater(r.lead, m)) {
                    if (why) *why = r.name + ": " + m.str() + " is not below " + r.lead.str();
                    return false;
                }
        return true;
    };
    MonomialOrder nat;
    std::string why;
    if (check(nat, &why)) {
        if (log) *log = "natural ranking: " + nat.str();
        return nat;
    }
    // pairs of equal weight that the tie-break has to decide
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (const auto& r : relators)
        for (const auto& [m, c] : r.full.terms()) {
            if (m == r.lead) continue;
            if (m.weight() > r.lead.weight())
                throw CalibrationError(r.name + ": " + m.str() + " outweighs the first-listed monomial");
            if (m.weight() == r.lead.weight()) pairs.emplace_back(r.lead, m);
        }
    std::array<int, kNumGens> scan{};
    std::array<bool, kNumGens> used{};
    for (int pos = 0; pos < kNumGens; ++pos) {
        int pick = -1;
        for (int v = kNumGens - 1; v >= 0 && pick < 0; --v) {
            if (used[v]) continue;
            bool safe = true;
            for (const auto& [l, m] : pairs)
                if (l[v] > m[v]) safe = false;
            if (safe) pick = v;
        }
        if (pick < 0) throw CalibrationError("no ranking makes every first-listed monomial leading (" + why + ")");
        used[pick] = true;
        scan[pos] = pick;
        std::erase_if(pairs, [&](const auto& p) { return p.first[pick] < p.second[pick]; });
    }
    MonomialOrder o(scan);
    if (!check(o, &why)) throw CalibrationError(why);
    if (log) *log = "natural ranking fails (" + why + "); calibrated ranking: " + o.str();
    return o;
}

Algebra::Algebra(AlgebraData d) : data_(std::move(d)), table_(data_) {
    if (data_.g.size() != 61) throw DataError("expected 61 Groebner relators, got " + std::to_string(data_.g.size()));
    if (data_.rho.size() != 18) throw DataError("expected 18 J-relators, got " + std::to_string(data_.rho.size()));
    if (data_.casimir.element.is_zero()) throw DataError("missing Casimir relator");

    NormalOrderer ord(table_, std::nullopt, false);
    for (const auto& g : data_.g) {
        Relator r;
        r.name = g.name;
        r.full = ord.normal_order(g.element);
        if (!std::is_sorted(g.lead.begin(), g.lead.end()))
            throw DataError(g.name + ": first-listed monomial is not normally ordered");
        r.lead = sorted_monomial(g.lead);
        if (!r.full.coeff(r.lead).is_one()) throw DataError(g.name + ": lead coefficient is not 1");
        g_.push_back(std::move(r));
    }
    order_ = calibrate_order(g_, &calib_log_);

    for (const auto& e : table_.entries()) {
        FreeElement oj = FreeElement::gen(e.row), ok = FreeElement::gen(e.col);
        FreeElement eta = oj * ok * QTLaurent::q(e.c) - ok * oj * QTLaurent::q(-e.c);
        QTLaurent s = q_half_diff();
        if (e.sign > 0) s = -s;
        eta += e.x * s;
        etas_.push_back({std::string("eta(") + gen_name(e.row) + "," + gen_name(e.col) + ")", eta, {}});
    }
}

std::shared_ptr<const Algebra> Algebra::load(const std::string& dir) {
    return std::make_shared<const Algebra>(load_bundle(dir + "/bundle.json"));
}

Engine::Engine(std::shared_ptr<const Algebra> alg, Mode mode)
    : alg_(std::move(alg)), mode_(mode), orderer_(alg_->table(), mode_spec(mode), mode_commutative(mode)) {
    for (const auto& r : alg_->relators()) {
        Relator s = r;
        s.full = from_qt(r.full);
        if (!s.full.coeff(s.lead).is_one()) throw DataError(r.name + ": lead coefficient lost in specialization");
        by_support_.emplace_back(s.lead.support(), static_cast<int>(rel_.size()));
        rel_.push_back(std::move(s));
    }
}

int Engine::find_relator(const Monomial& m) const {
    std::uint16_t s = m.support();
    for (const auto& [sup, i] : by_support_)
        if ((sup & ~s) == 0 && m.divisible_by(rel_[i].lead)) return i;
    return -1;
}

NormalElement Engine::from_qt(const NormalElement& e) const {
    auto s = mode_spec(mode_);
    return s ? e.specialize(*s) : e;
}

FreeElement Engine::from_qt(const FreeElement& e) const {
    auto s = mode_spec(mode_);
    return s ? e.specialize(*s) : e;
}

NormalElement Engine::step(const Monomial& m, int r) {
    const Relator& rel = rel_[r];
    Monomial mu = m - rel.lead;
    NormalElement p = orderer_.mul(mu, rel.full);
    QTLaurent c = p.coeff(m);
    // mu * g_r = q^{M/2} m + lower; the leading coefficient has to be a unit
    if (!c.is_monomial())
        throw NonLaurentCoefficient("leading coefficient " + c.str() + " of " + mu.str() + "*" + rel.name +
                                    " is not a unit");
    const auto& t = c.terms()[0];
    QTLaurent inv = QTLaurent::monomial(Rational(1) / t.c, -Laurent::qexp(t.key), -Laurent::texp(t.key));
    p.add(m, -c);
    return p * (-inv);
}

const NormalElement& Engine::nf(const Monomial& m) {
    if (auto it = nf_.find(m); it != nf_.end()) return it->second;
    // explicit stack; every dependency is strictly lower in the order
    std::vector<std::pair<Monomial, std::optional<NormalElement>>> stack;
    stack.emplace_back(m, std::nullopt);
    while (!stack.empty()) {
        auto& [top, pending] = stack.back();
        if (nf_.count(top)) {
            stack.pop_back();
            continue;
        }
        if (!pending) {
            int r = find_relator(top);
            if (r < 0) {
                nf_.emplace(top, NormalElement::monomial(top));
                stack.pop_back();
                continue;
            }
            pending = step(top, r);
        }
        std::vector<Monomial> need;
        for (const auto& [u, c] : pending->terms())
            if (!nf_.count(u)) need.push_back(u);
        if (need.empty()) {
            NormalElement out;
            for (const auto& [u, c] : pending->terms()) out.add_scaled(nf_.at(u), c);
            Monomial key = top;
            stack.pop_back();
            nf_.emplace(key, std::move(out));
            continue;
        }
        for (const auto& u : need) stack.emplace_back(u, std::nullopt);
    }
    return nf_.at(m);
}

NormalElement Engine::reduce(const NormalElement& e) {
    NormalElement out;
    for (const auto& [m, c] : e.terms()) out.add_scaled(nf(m), c);
    return out;
}

NormalElement Engine::reduce_random(const NormalElement& e, std::mt19937_64& rng) {
    NormalElement cur = e;
    for (;;) {
        std::vector<Monomial> red;
        for (const auto& [m, c] : cur.terms())
            if (!is_basis(m)) red.push_back(m);
        if (red.empty()) return cur;
        // unordered_map iteration order is not canonical; sort before drawing
        std::sort(red.begin(), red.end());
        Monomial m = red[std::uniform_int_distribution<std::size_t>(0, red.size() - 1)(rng)];
        std::vector<int> rs;
        for (int i = 0; i < static_cast<int>(rel_.size()); ++i)
            if (m.divisible_by(rel_[i].lead)) rs.push_back(i);
        int r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
        QTLaurent c = cur.coeff(m);
        cur.add(m, -c);
        cur.add_scaled(step(m, r), c);
    }
}

NormalElement Engine::multiply(const NormalElement& a, const NormalElement& b) {
    return reduce(orderer_.mul(a, b));
}

NormalElement Engine::power(const NormalElement& a, int n) {
    NormalElement r = NormalElement(QTLaurent(1));
    for (int i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

std::vector<std::pair<Monomial, QTLaurent>> Engine::sorted(const NormalElement& e) const {
    const MonomialOrder& o = order();
    return e.sorted([&o](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
}

std::string Engine::str(const NormalElement& e) const { return element_str(sorted(e)); }

std::string element_str(const std::vector<std::pair<Monomial, QTLaurent>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        bool neg;
        std::string body;
        if (c.is_monomial()) {
            neg = c.lead_coeff().sign() < 0;
            body = (neg ? -c : c).str();
        } else {
            neg = c.lead_coeff().sign() < 0;
            body = "(" + (neg ? -c : c).str() + ")";
        }
        std::string term;
        if (m.is_unit()) term = body;
        else if (body == "1") term = m.str();
        else term = body + "*" + m.str();
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

Monomial random_basis_monomial(const Engine& e, std::mt19937_64& rng, int max_weight) {
    std::uniform_int_distribution<int> gen(0, kNumGens - 1), wt(1, std::max(1, max_weight));
    for (;;) {
        int target = wt(rng);
        Monomial m;
        for (int tries = 0; tries < 64 && m.weight() < target; ++tries) {
            int g = gen(rng);
            if (m.weight() + gen_weight(g) > target) continue;
            m.inc(g);
            if (!e.is_basis(m)) m.dec(g);
        }
        if (!m.is_unit()) return m;
    }
}

}  // namespace qtalg
