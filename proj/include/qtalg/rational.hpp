#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qtalg {

// Exact rational. Values that fit in int64 num/den stay inline; anything
// larger lives in a GMP mpq and is demoted again when it shrinks.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : n_(v) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    int sign() const;
    bool is_small() const { return !big_; }
    long long small_num() const { return n_; }
    long long small_den() const { return d_; }

    mpq_class to_mpq() const;
    std::string num_str() const;
    std::string den_str() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    // residue modulo a prime p; throws DomainError if the denominator vanishes mod p
    std::uint64_t mod(std::uint64_t p) const;

private:
    void set_big(mpq_class q);
    void set_small128(__int128 n, __int128 d);

    long long n_ = 0;
    long long d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qtalg
