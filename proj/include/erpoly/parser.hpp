#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "erpoly/bipoly.hpp"

namespace erpoly {

/// Syntax error with the byte offset of the offending position and a
/// human-readable description of what was expected there.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " +
                             std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Abstract syntax over rationals, x, y, + - * ^ and unary minus.
struct PolyExpr {
    enum class Kind { Literal, VarX, VarY, Add, Sub, Mul, Pow, Neg };
    Kind kind = Kind::Literal;
    Rat value;              // Literal
    unsigned exponent = 0;  // Pow
    std::vector<PolyExpr> children;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nonneg-int)?
///   atom   := rational | 'x' | 'y' | '(' expr ')' | '-' atom
/// Whitespace-insensitive; implicit multiplication is rejected.
PolyExpr parse_poly(const std::string& text);

/// Total on well-formed trees; print-then-parse of a lowered BiPoly is the
/// identity on coefficients.
BiPoly lower(const PolyExpr& e);

inline BiPoly parse_bipoly(const std::string& text) {
    return lower(parse_poly(text));
}

}  // namespace erpoly
