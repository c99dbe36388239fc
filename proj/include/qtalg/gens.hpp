#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace qtalg {

constexpr int kNumGens = 15;

// fixed generator sequence; the index is the position in normal order
enum Gen : int {
    O1, O2, O3, O4, O5, O6,
    O12, O23, O34, O45, O56, O61,
    O123, O234, O345
};

const char* gen_name(int g);
int gen_weight(int g);
std::optional<int> gen_from_name(std::string_view s);

// cyclic index helpers, i taken mod 6 into 1..6
int cyc(int i);
// O_i, i in 1..6 (cyclic)
int single(int i);
// O_{i,i+1} (cyclic); pair(6) = O61
int pair_gen(int i);
// O_{i,i+1,i+2} (cyclic); O456 = O123, O561 = O234, O612 = O345
int triple_gen(int i);

// order-6 permutation I on generators
int perm_I(int g);
int perm_I_inv(int g);

// Exponent vector of a normally ordered monomial O1^n1 ... O345^n15.
struct Monomial {
    std::array<std::uint8_t, 16> e{};

    static Monomial unit() { return Monomial{}; }
    static Monomial gen(int g, int power = 1);

    int operator[](int i) const { return e[i]; }
    void set(int i, int v);
    void inc(int i, int by = 1);
    void dec(int i, int by = 1);
    bool is_unit() const;
    int weight() const;
    int degree() const;
    int min_index() const;  // -1 for the unit
    std::uint16_t support() const;
    bool divisible_by(const Monomial& d) const;
    Monomial operator+(const Monomial& o) const;
    Monomial operator-(const Monomial& o) const;  // requires divisibility

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

    std::string str() const;  // "O1^2*O3", "1" for the unit
    std::size_t hash() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qtalg
