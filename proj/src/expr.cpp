#include "qtalg/expr.hpp"

#include <cctype>

#include "qtalg/errors.hpp"

namespace qtalg {

namespace {

class Parser {
public:
    Parser(std::string_view s, const ParseOptions& o) : s_(s), opt_(o) {}

    ExprPtr run() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("'+', '-', '*' or end of input", "unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected, const std::string& msg) const {
        throw SyntaxError(pos_, expected, msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    long long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("integer", "expected a number");
        if (pos_ - start > 18) {
            pos_ = start;
            fail("integer", "number too long");
        }
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("integer", "expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    ExprPtr expr() {
        auto sum = std::make_shared<Expr>();
        sum->kind = Expr::Sum;
        skip();
        sum->offset = pos_;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        sum->kids.push_back(term());
        sum->signs.push_back(sign);
        for (;;) {
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            sum->kids.push_back(term());
            sum->signs.push_back(sign);
        }
        if (sum->kids.size() == 1 && sum->signs[0] == 1) return sum->kids[0];
        return sum;
    }

    ExprPtr term() {
        auto prod = std::make_shared<Expr>();
        prod->kind = Expr::Product;
        skip();
        prod->offset = pos_;
        prod->kids.push_back(factor());
        while (eat('*')) prod->kids.push_back(factor());
        if (prod->kids.size() == 1) return prod->kids[0];
        return prod;
    }

    ExprPtr factor() {
        auto base = atom();
        if (!eat('^')) return base;
        auto pw = std::make_shared<Expr>();
        pw->kind = Expr::Power;
        pw->offset = pos_;
        pw->kids.push_back(base);
        if (eat('(')) {
            int sign = eat('-') ? -1 : 1;
            long long n = integer();
            long long d = 1;
            if (eat('/')) {
                skip();
                std::size_t at = pos_;
                d = integer();
                if (d != 1 && d != 2 && d != 4) {
                    pos_ = at;
                    fail("'1', '2' or '4'", "exponent denominator must be 1, 2 or 4");
                }
            }
            if (!eat(')')) fail("')'", "unterminated exponent");
            pw->exp_num = static_cast<int>(sign * n);
            pw->exp_den = static_cast<int>(d);
        } else {
            int sign = eat('-') ? -1 : 1;
            pw->exp_num = static_cast<int>(sign * integer());
            pw->exp_den = 1;
        }
        if (peek('^')) fail("operator", "chained exponent");
        return pw;
    }

    ExprPtr atom() {
        skip();
        auto a = std::make_shared<Expr>();
        a->offset = pos_;
        if (pos_ >= s_.size()) fail("generator, q, t, number or '('", "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!eat(')')) fail("')'", "unbalanced parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string n = digits();
            std::string d = "1";
            // a '/' directly followed by a digit makes a rational literal
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                d = digits();
            }
            a->kind = Expr::Number;
            try {
                a->num = Rational::parse(n + "/" + d);
            } catch (const DomainError&) {
                fail("nonzero denominator", "zero denominator");
            }
            return a;
        }
        if (opt_.allow_tau && s_.substr(pos_, 4) == "tau[") {
            pos_ += 4;
            std::size_t close = s_.find(']', pos_);
            if (close == std::string_view::npos) fail("']'", "unterminated trace atom");
            std::string w;
            for (char ch : s_.substr(pos_, close - pos_))
                if (!std::isspace(static_cast<unsigned char>(ch))) w += ch;
            pos_ = close + 1;
            a->kind = Expr::Tau;
            a->tau = w;
            return a;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string_view ident = s_.substr(start, pos_ - start);
        if (ident == "q") {
            a->kind = Expr::Q;
            return a;
        }
        if (ident == "t") {
            a->kind = Expr::T;
            return a;
        }
        if (auto g = gen_from_name(ident)) {
            a->kind = Expr::Gen;
            a->gen = *g;
            return a;
        }
        pos_ = start;
        if (ident.empty()) fail("generator, q, t, number or '('", "unexpected character");
        fail("generator O1..O6, O12..O61, O123, O234, O345", "unknown identifier '" + std::string(ident) + "'");
    }

    std::string_view s_;
    ParseOptions opt_;
    std::size_t pos_ = 0;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

std::uint64_t powmod(std::uint64_t b, long long e, std::uint64_t p) {
    if (e < 0) {
        if (b % p == 0) throw DomainError("inverse of zero modulo p");
        b = powmod(b, static_cast<long long>(p - 2), p);
        e = -e;
    }
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

ExprPtr parse_expr(std::string_view src, const ParseOptions& opt) { return Parser(src, opt).run(); }

FreeElement to_free(const Expr& e, const TauResolver& tau) {
    switch (e.kind) {
        case Expr::Number: return FreeElement(QTLaurent(e.num));
        case Expr::Q: return FreeElement(QTLaurent::q(4));
        case Expr::T: return FreeElement(QTLaurent::t(4));
        case Expr::Gen: return FreeElement::gen(e.gen);
        case Expr::Tau:
            if (tau) return tau(e.tau);
            throw SyntaxError(e.offset, "algebra expression", "trace atom outside a trace expression");
        case Expr::Neg: return -to_free(*e.kids[0], tau);
        case Expr::Sum: {
            FreeElement r;
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                FreeElement k = to_free(*e.kids[i], tau);
                if (e.signs[i] < 0) r -= k;
                else r += k;
            }
            return r;
        }
        case Expr::Product: {
            FreeElement r(QTLaurent(1));
            for (const auto& k : e.kids) r = r * to_free(*k, tau);
            return r;
        }
        case Expr::Power: {
            FreeElement b = to_free(*e.kids[0], tau);
            if (e.exp_den == 1 && e.exp_num >= 0) {
                FreeElement r(QTLaurent(1));
                for (int i = 0; i < e.exp_num; ++i) r = r * b;
                return r;
            }
            // fractional or negative powers only of scalar monomials
            const auto& t = b.terms();
            if (t.size() != 1 || !t.begin()->first.empty() || !t.begin()->second.is_monomial())
                throw SyntaxError(e.offset, "nonnegative integer exponent",
                                  "negative or fractional power of a non-monomial");
            const auto& term = t.begin()->second.terms()[0];
            int a = Laurent::qexp(term.key), bb = Laurent::texp(term.key);
            if ((a * e.exp_num) % e.exp_den != 0 || (bb * e.exp_num) % e.exp_den != 0)
                throw SyntaxError(e.offset, "quarter-integral exponent", "exponent is not a multiple of 1/4");
            Rational c(1);
            if (!term.c.is_one()) {
                if (e.exp_den != 1) throw SyntaxError(e.offset, "integer exponent", "fractional power of a number");
                Rational base = e.exp_num < 0 ? Rational(1) / term.c : term.c;
                for (int i = 0; i < std::abs(e.exp_num); ++i) c *= base;
            }
            return FreeElement(
                QTLaurent::monomial(c, a * e.exp_num / e.exp_den, bb * e.exp_num / e.exp_den));
        }
    }
    return FreeElement();
}

FreeElement parse_free(std::string_view src) { return to_free(*parse_expr(src)); }

std::uint64_t eval_mod(const Expr& e, const ModEnv& env) {
    const std::uint64_t p = env.p;
    switch (e.kind) {
        case Expr::Number: return e.num.mod(p);
        case Expr::Q: return powmod(env.q4, 4, p);
        case Expr::T: return powmod(env.t4, 4, p);
        case Expr::Gen: return env.gen(e.gen) % p;
        case Expr::Tau: return env.tau(e.tau) % p;
        case Expr::Neg: return (p - eval_mod(*e.kids[0], env)) % p;
        case Expr::Sum: {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                std::uint64_t v = eval_mod(*e.kids[i], env);
                r = (r + (e.signs[i] < 0 ? p - v : v)) % p;
            }
            return r;
        }
        case Expr::Product: {
            std::uint64_t r = 1 % p;
            for (const auto& k : e.kids) r = mulmod(r, eval_mod(*k, env), p);
            return r;
        }
        case Expr::Power: {
            const Expr& b = *e.kids[0];
            if (b.kind == Expr::Q || b.kind == Expr::T) {
                long long n = 4LL * e.exp_num;
                if (n % e.exp_den != 0) throw SyntaxError(e.offset, "quarter-integral exponent", "bad exponent");
                return powmod(b.kind == Expr::Q ? env.q4 : env.t4, n / e.exp_den, p);
            }
            if (e.exp_den != 1) throw SyntaxError(e.offset, "integer exponent", "fractional power");
            return powmod(eval_mod(b, env), e.exp_num, p);
        }
    }
    return 0;
}

}  // namespace qtalg
