#include "erpoly/parser.hpp"

#include <cctype>

namespace erpoly {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    PolyExpr run() {
        PolyExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("'+', '-', '*', '^' or end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error(pos_, expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Int integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("an integer");
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    PolyExpr expr() {
        PolyExpr lhs = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            PolyExpr node;
            node.kind = c == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub;
            node.children.push_back(std::move(lhs));
            node.children.push_back(term());
            lhs = std::move(node);
        }
    }

    PolyExpr term() {
        PolyExpr lhs = factor();
        while (eat('*')) {
            PolyExpr node;
            node.kind = PolyExpr::Kind::Mul;
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    PolyExpr factor() {
        PolyExpr base = atom();
        if (!eat('^')) return base;
        PolyExpr node;
        node.kind = PolyExpr::Kind::Pow;
        node.exponent = static_cast<unsigned>(integer());
        node.children.push_back(std::move(base));
        return node;
    }

    PolyExpr atom() {
        char c = peek();
        PolyExpr node;
        if (c == '-') {
            ++pos_;
            node.kind = PolyExpr::Kind::Neg;
            node.children.push_back(atom());
            return node;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            node.kind = c == 'x' ? PolyExpr::Kind::VarX : PolyExpr::Kind::VarY;
            return node;
        }
        if (c == '(') {
            ++pos_;
            node = expr();
            if (!eat(')')) fail("')'");
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            Int den = 1;
            if (eat('/')) den = integer();
            if (den == 0) fail("a nonzero denominator");
            node.kind = PolyExpr::Kind::Literal;
            node.value = Rat(num) / Rat(den);
            return node;
        }
        fail("a rational, 'x', 'y', '(' or '-'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(const std::string& text) { return Parser(text).run(); }

BiPoly lower(const PolyExpr& e) {
    switch (e.kind) {
        case PolyExpr::Kind::Literal: return BiPoly(e.value);
        case PolyExpr::Kind::VarX: return BiPoly::monomial(Rat(1), 1, 0);
        case PolyExpr::Kind::VarY: return BiPoly::monomial(Rat(1), 0, 1);
        case PolyExpr::Kind::Add: return lower(e.children[0]) + lower(e.children[1]);
        case PolyExpr::Kind::Sub: return lower(e.children[0]) - lower(e.children[1]);
        case PolyExpr::Kind::Mul: return lower(e.children[0]) * lower(e.children[1]);
        case PolyExpr::Kind::Pow: return lower(e.children[0]).pow(e.exponent);
        case PolyExpr::Kind::Neg: return -lower(e.children[0]);
    }
    return BiPoly::zero();
}

}  // namespace erpoly
