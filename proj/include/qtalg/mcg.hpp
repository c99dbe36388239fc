#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qtalg/groebner.hpp"
#include "qtalg/report.hpp"

namespace qtalg {

// d1..d5 (twist = 1..5) or I (twist = 0), possibly inverted
struct McgLetter {
    int twist = 0;
    bool inverse = false;
    int index() const { return twist * 2 + (inverse ? 1 : 0); }
    friend bool operator==(const McgLetter&, const McgLetter&) = default;
};
using McgWord = std::vector<McgLetter>;

// "d1 d2^-1 I I"; throws SyntaxError
McgWord parse_mcg_word(const std::string& s);
std::string mcg_word_str(const McgWord& w);

// Automorphisms of one algebra mode. Generator images of d1 and d1^-1 come
// from data; I is the permutation and d_i = I^{i-1} d1 I^{1-i}.
class Mcg {
public:
    Mcg(Engine& e, const ImageTable& images);

    Engine& engine() { return eng_; }
    const NormalElement& image(const McgLetter& l, int g) const { return img_[l.index()][g]; }

    NormalElement apply(const McgLetter& l, const NormalElement& e);
    // letters act right to left: w = l1 l2 ... ln gives l1(l2(...ln(e)))
    NormalElement apply(const McgWord& w, const NormalElement& e);
    // image of a free-algebra element, word by word; not reduced before mapping
    NormalElement apply_free(const McgLetter& l, const FreeElement& e);

private:
    const NormalElement& mono_image(int letter, const Monomial& m);

    Engine& eng_;
    std::array<std::array<NormalElement, kNumGens>, 12> img_;
    std::array<bool, 12> ready_{};
    std::array<std::unordered_map<Monomial, NormalElement, MonomialHash>, 12> memo_;
};

Report verify_mcg_relations(std::shared_ptr<const Algebra> alg, const ImageTable& images, Mode mode, int threads);
// applies d1, d1^-1 and I to every g_i, eta, rho and the Casimir and reduces
Report verify_ideal_invariance(std::shared_ptr<const Algebra> alg, const ImageTable& images, Mode mode,
                               int threads, bool defining = true);

}  // namespace qtalg
