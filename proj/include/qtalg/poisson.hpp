#pragma once

#include <map>
#include <memory>
#include <random>

#include "qtalg/groebner.hpp"
#include "qtalg/mcg.hpp"
#include "qtalg/report.hpp"

namespace qtalg {

// c / (q^{1/4} - 1) at q^{1/4} = 1, times 1/4; NotDivisible if c(q = 1) != 0
QTLaurent classical_coefficient(const QTLaurent& c);

// Bracket on A_{q=1,t} (or its t = 1 specialization) from QT structure constants.
class Poisson {
public:
    Poisson(std::shared_ptr<const Algebra> alg, bool t1);

    Mode mode() const { return t1_ ? Mode::QT1 : Mode::Q1T; }
    Engine& engine() { return cm_; }
    Engine& qt_engine() { return qt_; }

    // limit of (b1 b2 - b2 b1)/(q^{1/4} - 1)/4 for basis monomials
    const NormalElement& bracket_basis(const Monomial& a, const Monomial& b);
    // bilinear extension over canonical forms in mode()
    NormalElement bracket(const NormalElement& a, const NormalElement& b);
    // biderivation extension from the generator brackets
    NormalElement bracket_leibniz(const NormalElement& a, const NormalElement& b);
    NormalElement bracket_gen(int j, int k) { return bracket_basis(Monomial::gen(j), Monomial::gen(k)); }

private:
    // {O_g, m} by derivation in the second slot
    NormalElement gen_monomial(int g, const Monomial& m);

    std::shared_ptr<const Algebra> alg_;
    bool t1_;
    Engine qt_, cm_;
    std::map<std::pair<Monomial, Monomial>, NormalElement> memo_;
};

struct PoissonOptions {
    int leibniz_samples = 100;
    std::uint64_t seed = 1;
};

Report verify_poisson(std::shared_ptr<const Algebra> alg, const ImageTable& images, bool t1,
                      const PoissonOptions& opt, int threads);

}  // namespace qtalg
