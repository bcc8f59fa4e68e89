#pragma once

#include <map>
#include <memory>

#include "cr/series.hpp"

namespace cr {

struct ParseError : std::runtime_error {
    int line, col;
    std::string msg;  // without the position prefix
    ParseError(int l, int c, const std::string& m)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + m),
          line(l), col(c), msg(m) {}
};

// Expression tree over rationals, i, named variables/parameters, + - * / ^
// and sqrt.  Exponents are literal nonnegative integers.
struct Expr {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow, Sqrt };
    Kind kind;
    mpz_class num;
    std::string name;
    std::shared_ptr<const Expr> a, b;
    int power = 0;
    int line = 1, col = 1;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);

using ParamMap = std::map<std::string, Gaussian>;

// Exact rational-function value; sqrt is rejected here.
RatFn eval_ratfn(const ExprPtr& e, const SpacePtr& sp, const ParamMap& params);
// Truncated-series value; sqrt allowed when the constant term is a square.
TruncSeries eval_series(const ExprPtr& e, const SpacePtr& sp, const ParamMap& params, int order);
// Scalar value; any variable reference is an error.
Gaussian eval_constant(const ExprPtr& e, const ParamMap& params);

}  // namespace cr
