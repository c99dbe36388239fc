#include "qtalg/xrational.hpp"

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

XLaurent power(const XLaurent& f, int e) {
    XLaurent r(1);
    for (int i = 0; i < e; ++i) r *= f;
    return r;
}

Laurent::Key key_of(const std::array<int, Laurent::kVars>& e) {
    return Laurent::pack(e[Laurent::VQ], e[Laurent::VT], e[Laurent::V12], e[Laurent::V23], e[Laurent::V13]);
}

}  // namespace

XRational XRational::fraction(const XLaurent& num, const XLaurent& den) {
    if (den.is_zero()) throw DomainError("zero denominator");
    XRational r(num);
    r.add_factor(den, 1);
    return r;
}

void XRational::add_factor(XLaurent f, int e) {
    if (e == 0) return;
    if (f.is_zero()) throw DomainError("zero denominator");
    // pull out monomial content and leading coefficient as a unit
    Laurent::Key m = key_of(f.min_exps());
    Laurent content = Laurent::from_key(1, m);
    Laurent fp = f.div_exact(content);
    Rational lc = fp.lead_coeff();
    fp *= Rational(1) / lc;
    Laurent unit_inv = Laurent::from_key(Rational(1) / lc, Laurent::div_keys(Laurent::unit_key(), m));
    num_ *= power(unit_inv, e);
    if (fp.is_one()) return;
    for (auto& [g, k] : den_) {
        if (g == fp) {
            k += e;
            return;
        }
    }
    den_.emplace_back(std::move(fp), e);
}

XLaurent XRational::den() const {
    XLaurent d(1);
    for (const auto& [f, e] : den_) d *= power(f, e);
    return d;
}

XRational XRational::operator-() const {
    XRational r = *this;
    r.num_ = -r.num_;
    return r;
}

XRational& XRational::operator+=(const XRational& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    // common multiple of the two factor lists
    std::vector<std::pair<XLaurent, int>> lcm = den_;
    XLaurent mine(1), theirs(1);
    for (const auto& [g, k] : o.den_) {
        bool found = false;
        for (auto& [f, e] : lcm) {
            if (f == g) {
                found = true;
                if (k > e) {
                    mine *= power(f, k - e);
                    e = k;
                } else if (e > k) {
                    theirs *= power(f, e - k);
                }
                break;
            }
        }
        if (!found) {
            lcm.emplace_back(g, k);
            mine *= power(g, k);
        }
    }
    for (const auto& [f, e] : den_) {
        bool found = false;
        for (const auto& [g, k] : o.den_)
            if (f == g) found = true;
        if (!found) theirs *= power(f, e);
    }
    num_ = num_ * mine + o.num_ * theirs;
    den_ = std::move(lcm);
    if (num_.is_zero()) den_.clear();
    return *this;
}

XRational& XRational::operator-=(const XRational& o) { return *this += -o; }

XRational& XRational::operator*=(const XRational& o) {
    num_ *= o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [g, k] : o.den_) {
        bool found = false;
        for (auto& [f, e] : den_) {
            if (f == g) {
                e += k;
                found = true;
                break;
            }
        }
        if (!found) den_.emplace_back(g, k);
    }
    return *this;
}

XRational& XRational::mul_laurent(const XLaurent& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
    return *this;
}

XRational& XRational::div_laurent(const XLaurent& d) {
    add_factor(d, 1);
    return *this;
}

XRational XRational::shift(int v12, int v23, int v13) const {
    XRational r(num_.shift(v12, v23, v13));
    for (const auto& [f, e] : den_) r.add_factor(f.shift(v12, v23, v13), e);
    return r;
}

XRational XRational::specialize(Laurent::Spec s) const {
    XRational r(num_.specialize(s));
    for (const auto& [f, e] : den_) {
        XLaurent g = f.specialize(s);
        if (g.is_zero()) throw QSingular("denominator factor " + f.str() + " vanishes under specialization");
        r.add_factor(g, e);
    }
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

XRational XRational::cycle_x(int times) const {
    XRational r(num_.cycle_x(times));
    for (const auto& [f, e] : den_) r.add_factor(f.cycle_x(times), e);
    return r;
}

void XRational::simplify() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, e] : den_) {
        XLaurent q;
        while (e > 0 && num_.try_div_exact(f, q)) {
            num_ = std::move(q);
            --e;
        }
    }
    std::erase_if(den_, [](const auto& fe) { return fe.second == 0; });
}

std::string XRational::str() const {
    if (den_.empty()) return num_.str();
    std::string d;
    for (const auto& [f, e] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.str() + ")";
        if (e > 1) d += "^" + std::to_string(e);
    }
    return "(" + num_.str() + ")/(" + d + ")";
}

}  // namespace qtalg
