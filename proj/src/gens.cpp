#include "qtalg/gens.hpp"

#include <cstring>

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

const char* const kNames[kNumGens] = {"O1",  "O2",  "O3",  "O4",  "O5",   "O6",   "O12", "O23",
                                      "O34", "O45", "O56", "O61", "O123", "O234", "O345"};

}  // namespace

const char* gen_name(int g) { return kNames[g]; }

int gen_weight(int g) {
    if (g < 6) return 2;
    if (g < 12) return 3;
    return 4;
}

std::optional<int> gen_from_name(std::string_view s) {
    for (int i = 0; i < kNumGens; ++i)
        if (s == kNames[i]) return i;
    return std::nullopt;
}

int cyc(int i) { return ((i - 1) % 6 + 6) % 6 + 1; }

int single(int i) { return O1 + cyc(i) - 1; }

int pair_gen(int i) { return O12 + cyc(i) - 1; }

int triple_gen(int i) { return O123 + (cyc(i) - 1) % 3; }

int perm_I(int g) {
    if (g < 6) return (g + 1) % 6;
    if (g < 12) return 6 + (g - 6 + 1) % 6;
    return 12 + (g - 12 + 1) % 3;
}

int perm_I_inv(int g) {
    if (g < 6) return (g + 5) % 6;
    if (g < 12) return 6 + (g - 6 + 5) % 6;
    return 12 + (g - 12 + 2) % 3;
}

Monomial Monomial::gen(int g, int power) {
    Monomial m;
    m.set(g, power);
    return m;
}

void Monomial::set(int i, int v) {
    if (v < 0 || v > 255) throw DomainError("monomial exponent out of range");
    e[i] = static_cast<std::uint8_t>(v);
}

void Monomial::inc(int i, int by) { set(i, e[i] + by); }

void Monomial::dec(int i, int by) { set(i, e[i] - by); }

bool Monomial::is_unit() const {
    for (int i = 0; i < kNumGens; ++i)
        if (e[i]) return false;
    return true;
}

int Monomial::weight() const {
    int w = 0;
    for (int i = 0; i < kNumGens; ++i) w += e[i] * gen_weight(i);
    return w;
}

int Monomial::degree() const {
    int d = 0;
    for (int i = 0; i < kNumGens; ++i) d += e[i];
    return d;
}

int Monomial::min_index() const {
    for (int i = 0; i < kNumGens; ++i)
        if (e[i]) return i;
    return -1;
}

std::uint16_t Monomial::support() const {
    std::uint16_t s = 0;
    for (int i = 0; i < kNumGens; ++i)
        if (e[i]) s |= std::uint16_t(1u << i);
    return s;
}

bool Monomial::divisible_by(const Monomial& d) const {
    for (int i = 0; i < kNumGens; ++i)
        if (d.e[i] > e[i]) return false;
    return true;
}

Monomial Monomial::operator+(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumGens; ++i) r.set(i, e[i] + o.e[i]);
    return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumGens; ++i) r.set(i, e[i] - o.e[i]);
    return r;
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < kNumGens; ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += kNames[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
    std::uint64_t a, b;
    std::memcpy(&a, e.data(), 8);
    std::memcpy(&b, e.data() + 8, 8);
    std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
    h ^= (b + 0x632be59bd9b4e019ULL) * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
}

}  // namespace qtalg
