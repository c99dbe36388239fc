#include "qtalg/algebra.hpp"

#include <algorithm>

#include "qtalg/errors.hpp"

namespace qtalg {

QTLaurent q_half_diff() { return QTLaurent::q(2) - QTLaurent::q(-2); }

CommutationTable::CommutationTable(const AlgebraData& d) : c_(d.c), entries_(d.table) {
    if (entries_.size() != 105)
        throw DataError("normal ordering table has " + std::to_string(entries_.size()) + " entries, expected 105");
    for (const auto& e : entries_) {
        if (e.row <= e.col) throw DataError("table entry with row before column");
        if (idx_[e.row][e.col]) throw DataError("duplicate table entry");
        if (c_[e.row][e.col] != e.c || c_[e.col][e.row] != -e.c) throw DataError("c_matrix disagrees with rhs");
        idx_[e.row][e.col] = &e;
    }
    for (int j = 0; j < kNumGens; ++j) {
        if (c_[j][j] != 0) throw DataError("c_matrix diagonal must vanish");
        for (int k = 0; k < j; ++k)
            if (!idx_[j][k]) throw DataError(std::string("missing table entry ") + gen_name(j) + " " + gen_name(k));
    }
}

NormalOrderer::NormalOrderer(const CommutationTable& t, std::optional<Laurent::Spec> spec, bool commutative)
    : table_(t), spec_(spec), commutative_(commutative) {
    for (int j = 0; j < kNumGens; ++j) {
        for (int k = 0; k < j; ++k) {
            int c = t.c(j, k);
            swap_[j][k] = coeff(QTLaurent::q(-2 * c));
            if (!t.x(j, k).is_zero()) {
                QTLaurent s = QTLaurent::q(-c) * q_half_diff();
                if (t.sign(j, k) < 0) s = -s;
                corr_[j][k] = coeff(s);
            }
        }
    }
}

const NormalElement& NormalOrderer::xn(int j, int k) {
    auto& slot = xn_[j][k];
    if (!slot) {
        FreeElement x = table_.x(j, k);
        if (spec_) x = x.specialize(*spec_);
        NormalElement r = normal_order(x);
        slot = std::move(r);
    }
    return *slot;
}

const NormalElement& NormalOrderer::left(int g, const Monomial& m) {
    Monomial key = m;
    key.e[kNumGens] = static_cast<std::uint8_t>(g + 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    NormalElement r;
    int k = m.min_index();
    if (k < 0 || g <= k) {
        Monomial n = m;
        n.inc(g);
        r.add(n, QTLaurent(1));
    } else {
        // O_g O_k m' = q^{-c/2} O_k (O_g m') + s q^{-c/4}(q^{1/2}-q^{-1/2}) X m'
        Monomial rest = m;
        rest.dec(k);
        NormalElement inner = left(g, rest);
        for (const auto& [u, c] : inner.terms()) r.add_scaled(left(k, u), c);
        if (!swap_[g][k].is_one()) r *= swap_[g][k];
        if (!corr_[g][k].is_zero()) r.add_scaled(mul(xn(g, k), rest), corr_[g][k]);
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

NormalElement NormalOrderer::mul(const Monomial& a, const Monomial& b) {
    if (commutative_) return NormalElement::monomial(a + b);
    NormalElement cur = NormalElement::monomial(b);
    for (int g = kNumGens - 1; g >= 0; --g) {
        for (int n = 0; n < a[g]; ++n) {
            NormalElement next;
            for (const auto& [u, c] : cur.terms()) next.add_scaled(left(g, u), c);
            cur = std::move(next);
        }
    }
    return cur;
}

NormalElement NormalOrderer::mul(const Monomial& a, const NormalElement& b) {
    NormalElement r;
    for (const auto& [v, d] : b.terms()) r.add_scaled(mul(a, v), d);
    return r;
}

NormalElement NormalOrderer::mul(const NormalElement& a, const Monomial& b) {
    NormalElement r;
    for (const auto& [u, c] : a.terms()) r.add_scaled(mul(u, b), c);
    return r;
}

NormalElement NormalOrderer::mul(const NormalElement& a, const NormalElement& b) {
    NormalElement r;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms()) r.add_scaled(mul(u, v), c * d);
    return r;
}

NormalElement NormalOrderer::word(const Word& w) {
    if (commutative_) return NormalElement::monomial(sorted_monomial(w));
    NormalElement cur = NormalElement::monomial(Monomial::unit());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        NormalElement next;
        for (const auto& [u, c] : cur.terms()) next.add_scaled(left(*it, u), c);
        cur = std::move(next);
    }
    return cur;
}

NormalElement NormalOrderer::normal_order(const FreeElement& e) {
    NormalElement r;
    for (const auto& [w, c] : e.terms()) r.add_scaled(word(w), coeff(c));
    return r;
}

NormalElement NormalOrderer::normal_order_naive(const FreeElement& e, std::mt19937_64* rng, long long* steps) {
    FreeElement cur = e;
    if (spec_) cur = cur.specialize(*spec_);
    long long n = 0;
    for (;;) {
        FreeElement next;
        bool changed = false;
        for (const auto& [w, c] : cur.terms()) {
            std::vector<std::size_t> inv;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    inv.push_back(i);
                    if (!rng) break;
                }
            if (inv.empty()) {
                next.add(w, c);
                continue;
            }
            changed = true;
            ++n;
            std::size_t i = rng ? inv[std::uniform_int_distribution<std::size_t>(0, inv.size() - 1)(*rng)] : inv[0];
            int j = w[i], k = w[i + 1];
            if (commutative_) {
                Word s = w;
                std::swap(s[i], s[i + 1]);
                next.add(s, c);
                continue;
            }
            Word s = w;
            std::swap(s[i], s[i + 1]);
            next.add(s, c * swap_[j][k]);
            if (corr_[j][k].is_zero()) continue;
            FreeElement x = table_.x(j, k);
            if (spec_) x = x.specialize(*spec_);
            Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 2, w.end());
            next += FreeElement::word(pre) * x * FreeElement::word(post) * (c * corr_[j][k]);
        }
        cur = std::move(next);
        if (!changed) break;
        if (n > 100000000) throw Error("normal ordering did not terminate");
    }
    if (steps) *steps = n;
    NormalElement r;
    for (const auto& [w, c] : cur.terms()) r.add(sorted_monomial(w), c);
    return r;
}

std::pair<Monomial, int> NormalOrderer::leading_power(const Word& w) {
    Monomial m = sorted_monomial(w);
    QTLaurent c = word(w).coeff(m);
    if (!c.is_monomial() || !c.terms()[0].c.is_one() || Laurent::texp(c.lead_key()) != 0 ||
        Laurent::qexp(c.lead_key()) % 2 != 0)
        throw NonLaurentCoefficient("leading coefficient of " + word_str(w) + " is not a power of q^(1/2)");
    return {m, Laurent::qexp(c.lead_key()) / 2};
}

NormalElement NormalOrderer::q_commutator(const NormalElement& a, const NormalElement& b, int j) {
    NormalElement d = mul(a, b) * coeff(QTLaurent::q(j)) - mul(b, a) * coeff(QTLaurent::q(-j));
    QTLaurent den = coeff(q_half_diff());
    return d.map_coeffs([&](const QTLaurent& c) { return c.div_exact(den); });
}

}  // namespace qtalg
