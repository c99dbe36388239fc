#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtalg/data.hpp"
#include "qtalg/expr.hpp"
#include "qtalg/groebner.hpp"
#include "qtalg/report.hpp"

namespace qtalg {

// arithmetic in F_p, p < 2^62
struct Fp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t pow(std::uint64_t b, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // DomainError for 0
    std::uint64_t from(long long v) const;
    bool is_square(std::uint64_t a) const;
    // Tonelli-Shanks; nullopt for non-residues
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;
};

bool is_prime(std::uint64_t n);

// row-major [[a, b], [c, d]]
using SL2 = std::array<std::uint64_t, 4>;

SL2 sl2_identity();
SL2 sl2_mul(const Fp& f, const SL2& x, const SL2& y);
SL2 sl2_inv(const Fp& f, const SL2& x);  // adjugate, det 1 assumed
std::uint64_t sl2_trace(const Fp& f, const SL2& x);
std::uint64_t sl2_det(const Fp& f, const SL2& x);

// letters 0..3 = X1, Y1, X2, Y2 with signed powers
struct GroupLetter {
    int letter;
    int power;
    friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};
using GroupWord = std::vector<GroupLetter>;

// "X1.Y2^-1.X2^2"; SyntaxError otherwise
GroupWord parse_group_word(const std::string& s);
std::string group_word_str(const GroupWord& w);
// free and cyclic reduction, then the least rotation of the word or its inverse;
// equal keys mean equal traces under every SL(2) representation
std::string trace_key(const GroupWord& w);

struct SurfaceRep {
    std::uint64_t p = 0;
    std::array<SL2, 4> m;  // X1, Y1, X2, Y2

    SL2 eval(const GroupWord& w) const;
    // X1 Y1 X1^-1 Y1^-1 X2 Y2 X2^-1 Y2^-1 == 1
    bool satisfies_relation() const;
    static SurfaceRep trivial(std::uint64_t p);
};

// Fricke-identity construction; RetryExhausted when the budget runs out
SurfaceRep sample_rep(std::uint64_t p, std::mt19937_64& rng, int retries = 1000);
// finds X2, Y2 for given X1, Y1; nullopt when [X1, Y1] has trace +-2 or the tries run out
std::optional<SurfaceRep> complete_rep(const Fp& f, const SL2& x1, const SL2& y1, std::mt19937_64& rng,
                                       int tries = 64);

// Theta(X) = sub(X) on the letters; images of the four letters
using GroupMap = std::array<GroupWord, 4>;
GroupWord apply_map(const GroupMap& m, const GroupWord& w);

using TraceAssignment = std::array<std::uint64_t, kNumGens>;

// Trace coordinates, Phi, identities and relations of the character variety.
class CharVariety {
public:
    explicit CharVariety(const CharvarData& d);

    const GroupWord& psi_word(int g) const { return psi_[g]; }
    TraceAssignment psi_eval(const SurfaceRep& r) const;
    std::uint64_t trace(const SurfaceRep& r, const std::string& word) const;
    std::uint64_t eval_trace_expr(const Expr& e, const SurfaceRep& r) const;
    // value of a commutative q = t = 1 element at a trace assignment
    static std::uint64_t eval_element(const NormalElement& e, const TraceAssignment& a, const Fp& f);
    static std::uint64_t eval_free(const FreeElement& e, const TraceAssignment& a, const Fp& f);

    struct PhiEntry {
        std::string word;
        GroupWord gw;
        FreeElement image;
    };
    struct Identity {
        std::string word;
        GroupWord gw;
        ExprPtr expr;
    };
    const std::vector<PhiEntry>& phi() const { return phi_; }
    const std::vector<Identity>& identities() const { return ids_; }
    const std::vector<std::pair<std::string, ExprPtr>>& relations() const { return rels_; }
    // McgLetter twist (0 = I, 1..5) -> action on letters
    const GroupMap& pi1_action(int twist) const { return pi1_[twist]; }

    // iota(Psi(O_g)) written through the 14 trace generators, then Phi applied
    FreeElement phi_iota_psi(int g) const;

private:
    FreeElement phi_of_trace(const std::string& word) const;
    std::array<GroupWord, kNumGens> psi_;
    std::vector<PhiEntry> phi_;
    std::vector<Identity> ids_;
    std::vector<std::pair<std::string, ExprPtr>> rels_;
    std::array<GroupMap, 6> pi1_;
};

struct SampleOptions {
    std::uint64_t p = 1000003;
    int n = 100;
    std::uint64_t seed = 1;
};

// sampled checks of relators, r0/r1, identities, Phi round-trips and twist equivariance
Report verify_on_reps(std::shared_ptr<const Algebra> alg, const CharvarData& cd, const ImageTable& images,
                      const SampleOptions& opt, int threads);
// the all-2 assignment of the trivial representation
Report verify_trivial(std::shared_ptr<const Algebra> alg, const CharvarData& cd, std::uint64_t p);
// Phi(iota(Psi(O_J))) reduces to O_J in QT1
Report verify_symbolic_roundtrip(std::shared_ptr<const Algebra> alg, const CharvarData& cd);

}  // namespace qtalg
