#include "qtalg/rational.hpp"

#include <climits>
#include <limits>
#include <numeric>
#include <ostream>

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

constexpr __int128 kMax = std::numeric_limits<long long>::max();
constexpr __int128 kMin = -kMax;  // keep symmetric so negation never overflows

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class from128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DomainError("zero denominator");
    set_small128(n, d);
}

Rational::Rational(const mpq_class& q) { set_big(q); }

void Rational::set_small128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (n > kMax || n < kMin || d > kMax) {
        mpq_class q(from128(n), from128(d));
        big_ = std::make_unique<mpq_class>(std::move(q));
        return;
    }
    big_.reset();
    n_ = static_cast<long long>(n);
    d_ = static_cast<long long>(d);
}

void Rational::set_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
        big_.reset();
        n_ = n.get_si();
        d_ = d.get_si();
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(s), 1);
    } else {
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw DomainError("zero denominator");
        q = mpq_class(mpz_class(s.substr(0, slash)), d);
    }
    return Rational(q);
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
    return q;
}

std::string Rational::num_str() const {
    if (big_) return big_->get_num().get_str();
    return std::to_string(n_);
}

std::string Rational::den_str() const {
    if (big_) return big_->get_den().get_str();
    return std::to_string(d_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == o.d_) {
            set_small128(static_cast<__int128>(n_) + o.n_, d_);
        } else {
            set_small128(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                         static_cast<__int128>(d_) * o.d_);
        }
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == o.d_) {
            set_small128(static_cast<__int128>(n_) - o.n_, d_);
        } else {
            set_small128(static_cast<__int128>(n_) * o.d_ - static_cast<__int128>(o.n_) * d_,
                         static_cast<__int128>(d_) * o.d_);
        }
        return *this;
    }
    set_big(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            __int128 p = static_cast<__int128>(n_) * o.n_;
            if (p <= kMax && p >= kMin) {
                n_ = static_cast<long long>(p);
                return *this;
            }
        }
        set_small128(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (!big_ && !o.big_) {
        set_small128(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
        return *this;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits is never stored big
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

std::uint64_t Rational::mod(std::uint64_t p) const {
    mpz_class P(static_cast<unsigned long>(p));
    mpq_class q = to_mpq();
    mpz_class n = q.get_num() % P;
    if (n < 0) n += P;
    mpz_class d = q.get_den() % P;
    if (d == 0) throw DomainError("denominator vanishes modulo p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (n * inv) % P;
    return r.get_ui();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qtalg
