#pragma once

#include <array>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtalg/algebra.hpp"
#include "qtalg/data.hpp"
#include "qtalg/report.hpp"

namespace qtalg {

enum class Mode { QT, SKEIN, Q1T, QT1 };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);  // qt, skein, q1t, qt1
bool mode_commutative(Mode m);
// coefficient specialization taking QT data into the mode
std::optional<Laurent::Spec> mode_spec(Mode m);
QTLaurent to_mode(const QTLaurent& c, Mode m);

// Weighted degree reverse lexicographic order. Ties in weight are broken by
// scanning variables in `scan` order; at the first differing exponent the
// monomial with the smaller exponent is the greater one.
class MonomialOrder {
public:
    MonomialOrder();  // natural ranking: O345 scanned first, O1 last
    explicit MonomialOrder(const std::array<int, kNumGens>& scan) : scan_(scan) {}

    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    const std::array<int, kNumGens>& scan() const { return scan_; }
    bool natural() const;
    std::string str() const;

private:
    std::array<int, kNumGens> scan_;
};

struct Relator {
    std::string name;
    Monomial lead;
    NormalElement full;  // lead has coefficient 1
};

// natural order if it works, otherwise a greedy search; CalibrationError if none exists
MonomialOrder calibrate_order(const std::vector<Relator>& relators, std::string* log = nullptr);

// Immutable shared data: table, order, Groebner basis and defining relators.
class Algebra {
public:
    explicit Algebra(AlgebraData d);
    static std::shared_ptr<const Algebra> load(const std::string& dir);

    const AlgebraData& data() const { return data_; }
    const CommutationTable& table() const { return table_; }
    const MonomialOrder& order() const { return order_; }
    const std::string& calibration_log() const { return calib_log_; }
    const std::vector<Relator>& relators() const { return g_; }
    // eta_{J,K} = q^{c/4} O_J O_K - q^{-c/4} O_K O_J - s (q^{1/2} - q^{-1/2}) X
    const std::vector<NamedElement>& etas() const { return etas_; }

private:
    AlgebraData data_;
    CommutationTable table_;
    MonomialOrder order_;
    std::string calib_log_;
    std::vector<Relator> g_;
    std::vector<NamedElement> etas_;
};

// Reduction engine for one algebra mode. Holds caches; one per worker.
class Engine {
public:
    Engine(std::shared_ptr<const Algebra> alg, Mode mode);

    Mode mode() const { return mode_; }
    const Algebra& algebra() const { return *alg_; }
    const MonomialOrder& order() const { return alg_->order(); }
    NormalOrderer& orderer() { return orderer_; }
    const std::vector<Relator>& relators() const { return rel_; }

    bool is_basis(const Monomial& m) const { return find_relator(m) < 0; }
    // first relator whose lead divides m, or -1
    int find_relator(const Monomial& m) const;

    NormalElement reduce(const NormalElement& e);
    // reduce a random reducible monomial with a random applicable relator, no caching
    NormalElement reduce_random(const NormalElement& e, std::mt19937_64& rng);

    // coefficients of QT-valued input are specialized into the mode first
    NormalElement from_qt(const NormalElement& e) const;
    FreeElement from_qt(const FreeElement& e) const;

    NormalElement normal_order(const FreeElement& e) { return orderer_.normal_order(from_qt(e)); }
    NormalElement canonical(const FreeElement& e) { return reduce(normal_order(e)); }
    NormalElement multiply(const NormalElement& a, const NormalElement& b);
    NormalElement power(const NormalElement& a, int n);

    std::vector<std::pair<Monomial, QTLaurent>> sorted(const NormalElement& e) const;
    std::string str(const NormalElement& e) const;

    std::size_t cache_size() const { return nf_.size(); }

private:
    // one rewriting step of a reducible monomial with relator r
    NormalElement step(const Monomial& m, int r);
    const NormalElement& nf(const Monomial& m);

    std::shared_ptr<const Algebra> alg_;
    Mode mode_;
    NormalOrderer orderer_;
    std::vector<Relator> rel_;
    std::vector<std::pair<std::uint16_t, int>> by_support_;  // lead support, relator index
    std::unordered_map<Monomial, NormalElement, MonomialHash> nf_;
};

// uniform-ish random basis monomial of weight in [1, max_weight]
Monomial random_basis_monomial(const Engine& e, std::mt19937_64& rng, int max_weight);

// text rendering of an element in descending order
std::string element_str(const std::vector<std::pair<Monomial, QTLaurent>>& terms);

// transcription checks: counts, lead coefficients, order calibration
Report verify_table(const Algebra& alg);

enum class Defining { Eta, Rho, Casimir };
// reduce(eta), reduce(rho_i) or reduce(Casimir) vanish in the mode
Report verify_defining(std::shared_ptr<const Algebra> alg, Mode mode, Defining which, int threads);
// reduce(O_K g_i) = reduce(g_i O_K) = 0 for all 15 x 61 pairs
Report verify_closure(std::shared_ptr<const Algebra> alg, Mode mode, int threads);
// memoized normal ordering and reduction against the pair rewriter with random choices
Report verify_strategies(std::shared_ptr<const Algebra> alg, int n, int max_weight, std::uint64_t seed, int threads);
// QT products of basis pairs specialize to the products of the specialized algebras
Report verify_flatness(std::shared_ptr<const Algebra> alg, int n, int max_weight, std::uint64_t seed, int threads);

// random word of weight in [max_weight / 2, max_weight]
Word random_word(std::mt19937_64& rng, int max_weight);

}  // namespace qtalg
