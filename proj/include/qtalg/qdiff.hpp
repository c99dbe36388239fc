#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "qtalg/groebner.hpp"
#include "qtalg/report.hpp"
#include "qtalg/xrational.hpp"

namespace qtalg {

// powers of delta_12, delta_23, delta_13 (or P_12, P_23, P_13)
using Shift = std::array<int, 3>;

// sum of f_v(X) * delta^v with rational coefficients
class QDiffOperator {
public:
    using Map = std::map<Shift, XRational>;

    QDiffOperator() = default;
    static QDiffOperator multiplication(const XRational& f) { return term({0, 0, 0}, f); }
    static QDiffOperator term(const Shift& v, const XRational& f);
    static QDiffOperator identity() { return multiplication(XRational(1)); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Shift& v, const XRational& f);

    QDiffOperator operator-() const;
    QDiffOperator& operator+=(const QDiffOperator& o);
    QDiffOperator& operator-=(const QDiffOperator& o);
    QDiffOperator& operator*=(const QTLaurent& c);
    friend QDiffOperator operator+(QDiffOperator a, const QDiffOperator& b) { return a += b; }
    friend QDiffOperator operator-(QDiffOperator a, const QDiffOperator& b) { return a -= b; }
    friend QDiffOperator operator*(QDiffOperator a, const QTLaurent& c) { return a *= c; }
    // (f d^v)(g d^w) = f shift(g, v) d^{v+w}
    friend QDiffOperator compose(const QDiffOperator& a, const QDiffOperator& b);
    friend bool operator==(const QDiffOperator& a, const QDiffOperator& b) { return (a - b).is_zero(); }

    // X and delta indices 12 -> 23 -> 13 -> 12
    QDiffOperator cycle(int times = 1) const;
    void simplify();
    std::string str() const;

private:
    Map terms_;
};

// (q^{1/4} A B - q^{-1/4} B A) / (q^{1/2} - q^{-1/2})
QDiffOperator op_q_commutator(const QDiffOperator& a, const QDiffOperator& b);

// Images of O1..O6 and the displayed Laurent forms of O12, O23, O123.
QDiffOperator hamiltonian(int i);  // i = 1, 2, 3: the operators for O1, O3, O5
QDiffOperator multiplication_op(int var);  // var 0, 1, 2: X12, X23, X13 plus inverse
QDiffOperator explicit_o12();
QDiffOperator explicit_o23();
QDiffOperator explicit_o123();
// Laurent form of any generator: explicit formulas and their cyclic images
QDiffOperator laurent_form(int g);

// Homomorphism A_{q,t} -> q-difference operators. Images of the nine
// composite generators come from q-commutator chains.
class QDiffRep {
public:
    QDiffRep();
    const QDiffOperator& gen(int g) const { return gens_[g]; }
    QDiffOperator word(const Word& w);
    QDiffOperator element(const NormalElement& e);
    QDiffOperator element(const FreeElement& e);

private:
    const QDiffOperator& pair(int a, int b);
    std::array<QDiffOperator, kNumGens> gens_;
    std::map<std::pair<int, int>, QDiffOperator> pairs_;
};

// Commutative limit: delta -> P, q -> 1. Coefficients are t-dependent rational functions.
class ClassicalImage {
public:
    using Map = std::map<Shift, XRational>;
    ClassicalImage() = default;
    explicit ClassicalImage(const XRational& f);
    // QSingular if a denominator vanishes at q = 1
    static ClassicalImage from_operator(const QDiffOperator& op);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Shift& v, const XRational& f);
    ClassicalImage& operator+=(const ClassicalImage& o);
    ClassicalImage& operator*=(const QTLaurent& c);
    friend ClassicalImage operator*(const ClassicalImage& a, const ClassicalImage& b);
    friend ClassicalImage operator-(const ClassicalImage& a, const ClassicalImage& b);
    friend bool operator==(const ClassicalImage& a, const ClassicalImage& b) { return (a - b).is_zero(); }
    ClassicalImage specialize(Laurent::Spec s) const;
    // largest shift in lex order of (P12, P13, P23) exponents
    Shift leading_power() const;
    std::string str() const;

private:
    Map terms_;
};

ClassicalImage classical_image(int g);
// evaluate a commutative element at the classical images
ClassicalImage classical_eval(const NormalElement& e);

struct QDiffOptions {
    bool skip_casimir = false;
    std::optional<std::string> only;  // e.g. "g4"
};

Report verify_representation(std::shared_ptr<const Algebra> alg, const QDiffOptions& opt, int threads);
Report verify_classical(std::shared_ptr<const Algebra> alg, int threads);

}  // namespace qtalg
