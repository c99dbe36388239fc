#include "qtalg/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

constexpr Laurent::Key kMask = (Laurent::Key(1) << Laurent::kBits) - 1;

std::uint64_t powmod(std::uint64_t b, long long e, std::uint64_t p) {
    if (e < 0) {
        // Fermat inverse
        b = powmod(b, static_cast<long long>(p - 2), p);
        e = -e;
    }
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % p);
        b = static_cast<std::uint64_t>((unsigned __int128)b * b % p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Laurent::Key Laurent::pack(int a, int b, int x12, int x23, int x13) {
    int f[kVars];
    f[VT] = b;
    f[VQ] = a;
    f[V13] = x13;
    f[V23] = x23;
    f[V12] = x12;
    Key k = 0;
    for (int i = 0; i < kVars; ++i) {
        if (f[i] > kLimit || f[i] < -kLimit) throw DomainError("Laurent exponent out of range");
        k |= Key(f[i] + kBias) << (kBits * i);
    }
    return k;
}

Laurent::Key Laurent::unit_key() {
    static const Key u = [] {
        Key k = 0;
        for (int i = 0; i < kVars; ++i) k |= Key(kBias) << (kBits * i);
        return k;
    }();
    return u;
}

Laurent::Laurent(long long c) {
    if (c != 0) terms_.push_back({unit_key(), Rational(c)});
}

Laurent::Laurent(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({unit_key(), c});
}

Laurent Laurent::monomial(const Rational& c, int a, int b, int x12, int x23, int x13) {
    return from_key(c, pack(a, b, x12, x23, x13));
}

Laurent Laurent::from_key(const Rational& c, Key k) {
    Laurent r;
    if (!c.is_zero()) r.terms_.push_back({k, c});
    return r;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].key == unit_key() && terms_[0].c.is_one();
}

bool Laurent::has_x() const {
    for (const auto& t : terms_)
        if (field(t.key, V12) || field(t.key, V23) || field(t.key, V13)) return true;
    return false;
}

Rational Laurent::constant_term() const { return coeff(unit_key()); }

Rational Laurent::coeff(Key k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.key < key; });
    if (it != terms_.end() && it->key == k) return it->c;
    return Rational(0);
}

void Laurent::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Rational c = std::move(terms_[i].c);
        while (j < terms_.size() && terms_[j].key == terms_[i].key) {
            c += terms_[j].c;
            ++j;
        }
        if (!c.is_zero()) {
            terms_[w].key = terms_[i].key;
            terms_[w].c = std::move(c);
            ++w;
        }
        i = j;
    }
    terms_.resize(w);
}

void Laurent::check_range(const Laurent& a) {
    for (const auto& t : a.terms_) {
        for (int i = 0; i < kVars; ++i) {
            int e = field(t.key, i);
            if (e > kLimit || e < -kLimit) throw DomainError("Laurent exponent out of range");
        }
    }
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) out.push_back({terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    return *this += -o;
}

Laurent& Laurent::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= r;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Laurent::check_range(a);
    Laurent::check_range(b);
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Laurent& s = a.terms_.size() == 1 ? a : b;
        const Laurent& o = a.terms_.size() == 1 ? b : a;
        const auto& st = s.terms_[0];
        r.terms_.reserve(o.terms_.size());
        // key order is preserved under multiplication by a monomial
        for (const auto& t : o.terms_) r.terms_.push_back({Laurent::mul_keys(st.key, t.key), st.c * t.c});
        return r;
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.push_back({Laurent::mul_keys(x.key, y.key), x.c * y.c});
    r.normalize();
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const Laurent& a, const Laurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

Laurent Laurent::mul_key(Key m) const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mul_keys(t.key, m), t.c});
    return r;
}

void Laurent::add_scaled(const Laurent& o, const Rational& c, Key m) {
    if (c.is_zero() || o.is_zero()) return;
    Laurent tmp;
    tmp.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) tmp.terms_.push_back({mul_keys(t.key, m), t.c * c});
    *this += tmp;
}

std::array<int, Laurent::kVars> Laurent::min_exps() const {
    std::array<int, kVars> m{};
    if (terms_.empty()) return m;
    for (int i = 0; i < kVars; ++i) m[i] = field(terms_[0].key, i);
    for (const auto& t : terms_)
        for (int i = 0; i < kVars; ++i) m[i] = std::min(m[i], field(t.key, i));
    return m;
}

namespace {

Laurent::Key key_of(const std::array<int, Laurent::kVars>& e) {
    return Laurent::pack(e[Laurent::VQ], e[Laurent::VT], e[Laurent::V12], e[Laurent::V23], e[Laurent::V13]);
}

bool divides(Laurent::Key d, Laurent::Key k) {
    for (int i = 0; i < Laurent::kVars; ++i)
        if (Laurent::field(d, i) > Laurent::field(k, i)) return false;
    return true;
}

}  // namespace

bool Laurent::try_div_exact(const Laurent& d, Laurent& out) const {
    if (d.is_zero()) throw DomainError("division by zero Laurent polynomial");
    out = Laurent();
    if (is_zero()) return true;
    if (d.terms_.size() == 1) {
        const auto& dt = d.terms_[0];
        Rational inv = Rational(1) / dt.c;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({div_keys(t.key, dt.key), t.c * inv});
        return true;
    }
    // reduce to polynomials without monomial content
    Key md = key_of(d.min_exps());
    Key mx = key_of(min_exps());
    Laurent dp, xp;
    dp.terms_.reserve(d.terms_.size());
    for (const auto& t : d.terms_) dp.terms_.push_back({div_keys(t.key, md), t.c});
    xp.terms_.reserve(terms_.size());
    for (const auto& t : terms_) xp.terms_.push_back({div_keys(t.key, mx), t.c});

    const Key dl = dp.lead_key();
    const Rational dinv = Rational(1) / dp.lead_coeff();
    std::map<Key, Rational> rem;
    for (const auto& t : xp.terms_) rem.emplace(t.key, t.c);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        Key kr = it->first;
        if (!divides(dl, kr)) return false;
        Key kq = div_keys(kr, dl);
        Rational c = it->second * dinv;
        for (const auto& t : dp.terms_) {
            Key k = mul_keys(kq, t.key);
            auto f = rem.find(k);
            Rational v = t.c * c;
            if (f == rem.end()) {
                rem.emplace(k, -v);
            } else {
                f->second -= v;
                if (f->second.is_zero()) rem.erase(f);
            }
        }
        q.push_back({kq, std::move(c)});
    }
    Key shift = div_keys(mx, md);
    out.terms_.reserve(q.size());
    for (auto& t : q) out.terms_.push_back({mul_keys(t.key, shift), std::move(t.c)});
    out.normalize();
    return true;
}

Laurent Laurent::div_exact(const Laurent& d) const {
    Laurent out;
    if (!try_div_exact(d, out)) throw NotDivisible("Laurent quotient " + str() + " / " + d.str() + " is not Laurent");
    return out;
}

Laurent Laurent::specialize(Spec s) const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        int a = field(t.key, VQ), b = field(t.key, VT);
        switch (s) {
            case Spec::q_to_1: a = 0; break;
            case Spec::t_to_1: b = 0; break;
            case Spec::both_to_1: a = b = 0; break;
            case Spec::t_to_q: a += b; b = 0; break;
        }
        Key k = t.key & ~((kMask << (kBits * VQ)) | (kMask << (kBits * VT)));
        k |= Key(a + kBias) << (kBits * VQ);
        k |= Key(b + kBias) << (kBits * VT);
        r.terms_.push_back({k, t.c});
    }
    r.normalize();
    return r;
}

Laurent Laurent::shift(int v12, int v23, int v13) const {
    if (v12 == 0 && v23 == 0 && v13 == 0) return *this;
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        int dq = 2 * (v12 * field(t.key, V12) + v23 * field(t.key, V23) + v13 * field(t.key, V13));
        r.terms_.push_back({mul_keys(t.key, pack(dq, 0)), t.c});
    }
    r.normalize();
    return r;
}

Laurent Laurent::q_derivative_at_1() const {
    Laurent r;
    for (const auto& t : terms_) {
        int a = field(t.key, VQ);
        if (a == 0) continue;
        Key k = div_keys(t.key, pack(a, 0));
        r.terms_.push_back({k, t.c * Rational(a)});
    }
    r.normalize();
    return r;
}

Laurent Laurent::cycle_x(int times) const {
    times = ((times % 3) + 3) % 3;
    if (times == 0) return *this;
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        int e12 = field(t.key, V12), e23 = field(t.key, V23), e13 = field(t.key, V13);
        for (int i = 0; i < times; ++i) {
            // X12 -> X23, X23 -> X13, X13 -> X12
            int n12 = e13, n23 = e12, n13 = e23;
            e12 = n12;
            e23 = n23;
            e13 = n13;
        }
        r.terms_.push_back({pack(field(t.key, VQ), field(t.key, VT), e12, e23, e13), t.c});
    }
    r.normalize();
    return r;
}

std::string format_q_power(const char* var, int quarters) {
    if (quarters == 0) return "";
    std::string v(var);
    int g = std::gcd(quarters < 0 ? -quarters : quarters, 4);
    int n = quarters / g, d = 4 / g;
    if (d == 1) {
        if (n == 1) return v;
        if (n < 0) return v + "^(" + std::to_string(n) + ")";
        return v + "^" + std::to_string(n);
    }
    return v + "^(" + std::to_string(n) + "/" + std::to_string(d) + ")";
}

namespace {

std::string x_power(const char* var, int e) {
    if (e == 0) return "";
    std::string v(var);
    if (e == 1) return v;
    if (e < 0) return v + "^(" + std::to_string(e) + ")";
    return v + "^" + std::to_string(e);
}

}  // namespace

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Key k = it->key;
        std::vector<std::string> parts;
        for (auto s : {format_q_power("q", field(k, VQ)), format_q_power("t", field(k, VT)),
                       x_power("X12", field(k, V12)), x_power("X23", field(k, V23)),
                       x_power("X13", field(k, V13))})
            if (!s.empty()) parts.push_back(s);
        Rational c = it->c;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        std::string body;
        if (!c.is_one() || parts.empty()) body = c.str();
        for (const auto& p : parts) body += (body.empty() ? "" : "*") + p;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::size_t Laurent::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h ^= std::hash<Key>()(t.key) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        std::size_t hc = t.c.is_small() ? std::hash<long long>()(t.c.small_num() * 31 + t.c.small_den())
                                        : std::hash<std::string>()(t.c.str());
        h ^= hc + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::uint64_t Laurent::eval_mod(std::uint64_t p, const std::array<std::uint64_t, kVars>& vals) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
        std::uint64_t v = t.c.mod(p);
        for (int i = 0; i < kVars; ++i) {
            int e = field(t.key, i);
            if (e) v = static_cast<std::uint64_t>((unsigned __int128)v * powmod(vals[i], e, p) % p);
        }
        acc = (acc + v) % p;
    }
    return acc;
}

}  // namespace qtalg
