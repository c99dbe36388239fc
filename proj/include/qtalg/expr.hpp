#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qtalg/element.hpp"
#include "qtalg/rational.hpp"

namespace qtalg {

// Parsed expression tree.
struct Expr {
    enum Kind { Sum, Product, Power, Neg, Gen, Q, T, Number, Tau };
    Kind kind = Number;
    std::vector<std::shared_ptr<Expr>> kids;
    std::vector<int> signs;  // Sum: sign of each summand
    int gen = -1;
    Rational num;
    int exp_num = 1, exp_den = 1;  // Power
    std::string tau;  // Tau: group word such as "X1.Y2^-1"
    std::size_t offset = 0;
};
using ExprPtr = std::shared_ptr<Expr>;

struct ParseOptions {
    bool allow_tau = false;  // accept tau[...] atoms (trace expressions)
};

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := atom ('^' exponent)?
// atom := generator | 'q' | 't' | integer ['/' integer] | '(' expr ')'
// exponent := ['-'] integer | '(' ['-'] integer ['/' ('1'|'2'|'4')] ')'
ExprPtr parse_expr(std::string_view src, const ParseOptions& opt = {});

// evaluate in the free algebra; q and t are central scalars.
// tau atoms are substituted through the resolver when one is given.
using TauResolver = std::function<FreeElement(const std::string&)>;
FreeElement to_free(const Expr& e, const TauResolver& tau = {});
FreeElement parse_free(std::string_view src);

// commutative evaluation modulo p; gens and tau atoms resolved by callbacks
struct ModEnv {
    std::uint64_t p = 0;
    std::uint64_t q4 = 1, t4 = 1;  // values of q^{1/4}, t^{1/4}
    std::function<std::uint64_t(int)> gen;
    std::function<std::uint64_t(const std::string&)> tau;
};
std::uint64_t eval_mod(const Expr& e, const ModEnv& env);

}  // namespace qtalg
