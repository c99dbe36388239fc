#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtalg/gens.hpp"
#include "qtalg/laurent.hpp"

namespace qtalg {

using Word = std::vector<std::uint8_t>;

// Linear combination of normally ordered monomials.
class NormalElement {
public:
    using Map = std::unordered_map<Monomial, QTLaurent, MonomialHash>;

    NormalElement() = default;
    NormalElement(const QTLaurent& scalar);
    static NormalElement monomial(const Monomial& m, const QTLaurent& c = QTLaurent(1));
    static NormalElement gen(int g) { return monomial(Monomial::gen(g)); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    QTLaurent coeff(const Monomial& m) const;

    void add(const Monomial& m, const QTLaurent& c);
    void add_scaled(const NormalElement& o, const QTLaurent& c, const Rational& r = Rational(1));

    NormalElement operator-() const;
    NormalElement& operator+=(const NormalElement& o);
    NormalElement& operator-=(const NormalElement& o);
    NormalElement& operator*=(const QTLaurent& c);
    friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
    friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
    friend NormalElement operator*(NormalElement a, const QTLaurent& c) { return a *= c; }
    friend bool operator==(const NormalElement& a, const NormalElement& b);
    friend bool operator!=(const NormalElement& a, const NormalElement& b) { return !(a == b); }

    NormalElement map_coeffs(const std::function<QTLaurent(const QTLaurent&)>& f) const;
    NormalElement specialize(Laurent::Spec s) const;
    int max_weight() const;

    // terms sorted by a strict "greater" comparator
    std::vector<std::pair<Monomial, QTLaurent>> sorted(
        const std::function<bool(const Monomial&, const Monomial&)>& greater) const;

private:
    Map terms_;
};

// Linear combination of words in the free algebra.
class FreeElement {
public:
    using Map = std::map<Word, QTLaurent>;

    FreeElement() = default;
    FreeElement(const QTLaurent& scalar);
    static FreeElement word(const Word& w, const QTLaurent& c = QTLaurent(1));
    static FreeElement gen(int g) { return word(Word{static_cast<std::uint8_t>(g)}); }
    static FreeElement from_normal(const NormalElement& e);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word& w, const QTLaurent& c);

    FreeElement operator-() const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    FreeElement& operator*=(const QTLaurent& c);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(FreeElement a, const QTLaurent& c) { return a *= c; }
    friend bool operator==(const FreeElement& a, const FreeElement& b);
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    FreeElement map_coeffs(const std::function<QTLaurent(const QTLaurent&)>& f) const;
    FreeElement map_letters(const std::function<int(int)>& f) const;
    FreeElement specialize(Laurent::Spec s) const;
    // every word is already in nondecreasing order
    bool is_normal() const;

private:
    Map terms_;
};

Monomial sorted_monomial(const Word& w);
Word monomial_word(const Monomial& m);
std::string word_str(const Word& w);

}  // namespace qtalg
