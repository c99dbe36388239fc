#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qtalg/rational.hpp"

namespace qtalg {

// Sparse Laurent polynomial over Q in five variables:
//   q^{1/4}, t^{1/4}, X12, X23, X13.
// Exponents are packed into one 64-bit key, 12 bits per field with a bias,
// X fields in the high bits so that the key order is lex (X12, X23, X13, q, t).
// QTLaurent is the X-free part; XLaurent uses all five.
class Laurent {
public:
    using Key = std::uint64_t;
    enum Var { VT = 0, VQ = 1, V13 = 2, V23 = 3, V12 = 4 };
    static constexpr int kVars = 5;
    static constexpr int kBits = 12;
    static constexpr int kBias = 2048;
    static constexpr int kLimit = 1000;  // per-field bound on |exponent|

    struct Term {
        Key key;
        Rational c;
    };

    Laurent() = default;
    Laurent(long long c);
    Laurent(const Rational& c);

    static Key pack(int a, int b, int x12 = 0, int x23 = 0, int x13 = 0);
    static Key unit_key();
    static int field(Key k, int var) {
        return int((k >> (kBits * var)) & ((Key(1) << kBits) - 1)) - kBias;
    }
    static int qexp(Key k) { return field(k, VQ); }
    static int texp(Key k) { return field(k, VT); }
    static Key mul_keys(Key a, Key b) { return a + b - unit_key(); }
    static Key div_keys(Key a, Key b) { return a - b + unit_key(); }

    // c * q^{a/4} t^{b/4} X12^x12 X23^x23 X13^x13
    static Laurent monomial(const Rational& c, int a, int b, int x12 = 0, int x23 = 0, int x13 = 0);
    static Laurent from_key(const Rational& c, Key k);
    static Laurent q(int quarters) { return monomial(1, quarters, 0); }
    static Laurent t(int quarters) { return monomial(1, 0, quarters); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool has_x() const;
    // coefficient of the constant monomial
    Rational constant_term() const;
    Rational coeff(Key k) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const Rational& r);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Rational& r) { return a *= r; }
    friend bool operator==(const Laurent& a, const Laurent& b);
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // this += c * m * o
    void add_scaled(const Laurent& o, const Rational& c, Key m);
    Laurent mul_key(Key m) const;

    // x / d when the quotient is Laurent; NotDivisible otherwise
    Laurent div_exact(const Laurent& d) const;
    // as div_exact but returns false instead of throwing
    bool try_div_exact(const Laurent& d, Laurent& out) const;

    enum class Spec { q_to_1, t_to_1, both_to_1, t_to_q };
    Laurent specialize(Spec s) const;
    // X_ij -> q^{v_ij/2} X_ij
    Laurent shift(int v12, int v23, int v13) const;
    // evaluate q^{1/4} -> 1 of c / (q^{1/4} - 1), requires c(q^{1/4}=1) = 0
    Laurent q_derivative_at_1() const;
    // swap variables X12 -> X23 -> X13 -> X12 (applied `times` times)
    Laurent cycle_x(int times = 1) const;

    Key lead_key() const { return terms_.back().key; }
    const Rational& lead_coeff() const { return terms_.back().c; }
    // per-variable minimum exponent over the support
    std::array<int, kVars> min_exps() const;

    // canonical text; X variables are printed too if present
    std::string str() const;
    std::size_t hash() const;

    // value in F_p at the given residues of q^{1/4}, t^{1/4}, X12, X23, X13
    std::uint64_t eval_mod(std::uint64_t p, const std::array<std::uint64_t, kVars>& vals) const;

private:
    void normalize();  // sort keys ascending, merge, drop zeros
    static void check_range(const Laurent& a);
    std::vector<Term> terms_;  // ascending by key
};

using QTLaurent = Laurent;
using XLaurent = Laurent;

std::string format_q_power(const char* var, int quarters);

}  // namespace qtalg
