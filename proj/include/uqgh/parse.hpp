#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uqgh/pbw.hpp"

namespace uqgh {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t offset_)
        : std::runtime_error(message + " (at byte " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    size_t offset;
};

// Surface syntax AST. Terms are separated by + and -, products are written
// by juxtaposition or *, ^ takes an integer exponent, / divides by a
// scalar-valued subexpression. Precedence: ^ > juxtaposition, *, / > unary
// minus > +, -. Products preserve the written order.
struct Expression {
    enum class Kind { Number, QSymbol, Generator, Sum, Negate, Product, Quotient, Power };
    Kind kind = Kind::Number;
    Rational number{0};
    Gen gen = Gen::E;        // Kind::Generator (E, F, K, G, H only)
    long exponent = 0;       // Kind::Power
    std::vector<Expression> kids;
};

Expression parse(std::string_view text);  // throws ParseError

// evaluate into PBW normal form; division requires a scalar divisor and
// negative powers require an invertible base
AlgebraElement evaluate(const Expression& e);

AlgebraElement parse_element(std::string_view text);
// as parse_element, but the result must be a scalar
RatFunc parse_scalar(std::string_view text);

inline std::string render(const AlgebraElement& a) { return a.to_string(); }

}  // namespace uqgh
