#include "qtalg/element.hpp"

#include <algorithm>

namespace qtalg {

NormalElement::NormalElement(const QTLaurent& scalar) {
    if (!scalar.is_zero()) terms_.emplace(Monomial::unit(), scalar);
}

NormalElement NormalElement::monomial(const Monomial& m, const QTLaurent& c) {
    NormalElement r;
    r.add(m, c);
    return r;
}

QTLaurent NormalElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QTLaurent() : it->second;
}

void NormalElement::add(const Monomial& m, const QTLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void NormalElement::add_scaled(const NormalElement& o, const QTLaurent& c, const Rational& r) {
    if (c.is_zero() || r.is_zero()) return;
    bool trivial = c.is_one() && r.is_one();
    for (const auto& [m, v] : o.terms_) {
        if (trivial) {
            add(m, v);
        } else {
            QTLaurent x = v * c;
            if (!r.is_one()) x *= r;
            add(m, x);
        }
    }
}

NormalElement NormalElement::operator-() const {
    NormalElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

NormalElement& NormalElement::operator*=(const QTLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const NormalElement& a, const NormalElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

NormalElement NormalElement::map_coeffs(const std::function<QTLaurent(const QTLaurent&)>& f) const {
    NormalElement r;
    for (const auto& [m, c] : terms_) r.add(m, f(c));
    return r;
}

NormalElement NormalElement::specialize(Laurent::Spec s) const {
    return map_coeffs([s](const QTLaurent& c) { return c.specialize(s); });
}

int NormalElement::max_weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

std::vector<std::pair<Monomial, QTLaurent>> NormalElement::sorted(
    const std::function<bool(const Monomial&, const Monomial&)>& greater) const {
    std::vector<std::pair<Monomial, QTLaurent>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return greater(x.first, y.first); });
    return v;
}

FreeElement::FreeElement(const QTLaurent& scalar) {
    if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

FreeElement FreeElement::word(const Word& w, const QTLaurent& c) {
    FreeElement r;
    r.add(w, c);
    return r;
}

FreeElement FreeElement::from_normal(const NormalElement& e) {
    FreeElement r;
    for (const auto& [m, c] : e.terms()) r.add(monomial_word(m), c);
    return r;
}

void FreeElement::add(const Word& w, const QTLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator-() const {
    FreeElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const QTLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement r;
    for (const auto& [u, c] : a.terms_) {
        for (const auto& [v, d] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add(w, c * d);
        }
    }
    return r;
}

bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

FreeElement FreeElement::map_coeffs(const std::function<QTLaurent(const QTLaurent&)>& f) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
}

FreeElement FreeElement::map_letters(const std::function<int(int)>& f) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) {
        Word v;
        v.reserve(w.size());
        for (auto g : w) v.push_back(static_cast<std::uint8_t>(f(g)));
        r.add(v, c);
    }
    return r;
}

FreeElement FreeElement::specialize(Laurent::Spec s) const {
    return map_coeffs([s](const QTLaurent& c) { return c.specialize(s); });
}

bool FreeElement::is_normal() const {
    for (const auto& [w, c] : terms_)
        if (!std::is_sorted(w.begin(), w.end())) return false;
    return true;
}

Monomial sorted_monomial(const Word& w) {
    Monomial m;
    for (auto g : w) m.inc(g);
    return m;
}

Word monomial_word(const Monomial& m) {
    Word w;
    for (int i = 0; i < kNumGens; ++i)
        for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<std::uint8_t>(i));
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (auto g : w) {
        if (!s.empty()) s += "*";
        s += gen_name(g);
    }
    return s.empty() ? "1" : s;
}

}  // namespace qtalg
