#pragma once

#include <array>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>

#include "qtalg/data.hpp"
#include "qtalg/element.hpp"

namespace qtalg {

// c_{J,K} and the signed right-hand sides of the normal ordering table
class CommutationTable {
public:
    explicit CommutationTable(const AlgebraData& d);

    int c(int j, int k) const { return c_[j][k]; }
    // for j > k: sign s and X with [O_j, O_k]_{q^c} = s X
    int sign(int j, int k) const { return entry(j, k).sign; }
    const FreeElement& x(int j, int k) const { return entry(j, k).x; }
    const TableEntry& entry(int j, int k) const { return *idx_[j][k]; }
    const std::vector<TableEntry>& entries() const { return entries_; }

private:
    std::array<std::array<int, kNumGens>, kNumGens> c_{};
    std::vector<TableEntry> entries_;
    std::array<std::array<const TableEntry*, kNumGens>, kNumGens> idx_{};
};

// Rewrites products of generators into the spanning set O1^n1 ... O345^n15.
// One instance caches products O_g * m; it is not thread safe, use one per worker.
class NormalOrderer {
public:
    // spec: coefficient specialization applied to the table (t_to_q for the skein algebra)
    // commutative: products are plain exponent addition
    NormalOrderer(const CommutationTable& t, std::optional<Laurent::Spec> spec, bool commutative);

    bool commutative() const { return commutative_; }

    NormalElement mul(const Monomial& a, const Monomial& b);
    NormalElement mul(const Monomial& a, const NormalElement& b);
    NormalElement mul(const NormalElement& a, const Monomial& b);
    NormalElement mul(const NormalElement& a, const NormalElement& b);
    NormalElement word(const Word& w);
    NormalElement normal_order(const FreeElement& e);

    // adjacent-pair rewriting, leftmost pair first or a random pair when rng is given
    NormalElement normal_order_naive(const FreeElement& e, std::mt19937_64* rng = nullptr,
                                     long long* steps = nullptr);

    // sorted monomial and M with word = q^{M/2} m + lower terms
    std::pair<Monomial, int> leading_power(const Word& w);

    // (q^{j/4} a b - q^{-j/4} b a) / (q^{1/2} - q^{-1/2})
    NormalElement q_commutator(const NormalElement& a, const NormalElement& b, int j);

    std::size_t cache_size() const { return memo_.size(); }

private:
    // O_g * m
    const NormalElement& left(int g, const Monomial& m);
    const NormalElement& xn(int j, int k);
    QTLaurent coeff(const QTLaurent& c) const { return spec_ ? c.specialize(*spec_) : c; }

    const CommutationTable& table_;
    std::optional<Laurent::Spec> spec_;
    bool commutative_;
    // q^{-c/2} and s q^{-c/4}(q^{1/2} - q^{-1/2}) per ordered pair
    std::array<std::array<QTLaurent, kNumGens>, kNumGens> swap_, corr_;
    std::array<std::array<std::optional<NormalElement>, kNumGens>, kNumGens> xn_;
    std::unordered_map<Monomial, NormalElement, MonomialHash> memo_;
};

// (q^{1/2} - q^{-1/2})
QTLaurent q_half_diff();

}  // namespace qtalg
