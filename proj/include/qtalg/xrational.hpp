#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtalg/laurent.hpp"

namespace qtalg {

// Rational function num / prod f_i^{e_i} in X12, X23, X13 over QTLaurent.
// Denominator factors are kept separately, each normalized (no monomial
// content, lead coefficient 1); units are pushed into the numerator.
// Equality is by cross multiplication, i.e. a zero test of the difference.
class XRational {
public:
    XRational() = default;
    XRational(const XLaurent& num) : num_(num) {}
    XRational(long long c) : num_(c) {}
    static XRational fraction(const XLaurent& num, const XLaurent& den);

    const XLaurent& num() const { return num_; }
    const std::vector<std::pair<XLaurent, int>>& den_factors() const { return den_; }
    XLaurent den() const;

    bool is_zero() const { return num_.is_zero(); }

    XRational operator-() const;
    XRational& operator+=(const XRational& o);
    XRational& operator-=(const XRational& o);
    XRational& operator*=(const XRational& o);
    friend XRational operator+(XRational a, const XRational& b) { return a += b; }
    friend XRational operator-(XRational a, const XRational& b) { return a -= b; }
    friend XRational operator*(XRational a, const XRational& b) { return a *= b; }
    friend bool operator==(const XRational& a, const XRational& b) { return (a - b).is_zero(); }
    friend bool operator!=(const XRational& a, const XRational& b) { return !(a == b); }

    XRational& mul_laurent(const XLaurent& c);
    // divide by a polynomial; it becomes a denominator factor
    XRational& div_laurent(const XLaurent& d);

    XRational shift(int v12, int v23, int v13) const;
    XRational specialize(Laurent::Spec s) const;  // QSingular if a factor vanishes
    XRational cycle_x(int times = 1) const;

    // cancel denominator factors that divide the numerator exactly
    void simplify();

    std::string str() const;

private:
    void add_factor(XLaurent f, int e);
    XLaurent num_;
    std::vector<std::pair<XLaurent, int>> den_;
};

}  // namespace qtalg
