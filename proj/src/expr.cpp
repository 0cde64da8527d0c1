#include "vbf/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbf {

namespace {

struct Token {
    enum Kind { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rational value;    // Number
    std::string name;  // Var
    std::size_t pos = 0;
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos) +
                                ": " + what);
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const auto digits_from = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t num_end = digits_from(i);
            std::size_t end = num_end;
            // '/' glued between digits is a rational literal, not an operator
            if (end < text.size() && text[end] == '/') {
                const std::size_t den_end = digits_from(end + 1);
                if (den_end == end + 1) fail(end, "expected digits after '/'");
                end = den_end;
            }
            tokens.push_back({Token::Number,
                              Rational::parse(std::string(text.substr(i, end - i))), "", i});
            i = end;
            continue;
        }
        if ((c == 'x' || c == 'y') && i + 1 < text.size() && text[i + 1] >= '1' &&
            text[i + 1] <= '9') {
            tokens.push_back({Token::Var, Rational(0), std::string(text.substr(i, 2)), i});
            i += 2;
            continue;
        }
        switch (c) {
            case '+': tokens.push_back({Token::Plus, Rational(0), "", i}); break;
            case '-': tokens.push_back({Token::Minus, Rational(0), "", i}); break;
            case '*': tokens.push_back({Token::Star, Rational(0), "", i}); break;
            case '^': tokens.push_back({Token::Caret, Rational(0), "", i}); break;
            case '(': tokens.push_back({Token::LParen, Rational(0), "", i}); break;
            case ')': tokens.push_back({Token::RParen, Rational(0), "", i}); break;
            default: fail(i, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    tokens.push_back({Token::End, Rational(0), "", text.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, VarContext ctx) : tokens_(std::move(tokens)), ctx_(std::move(ctx)) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        if (peek().kind != Token::End) fail(peek().pos, "trailing input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }

    MultiPoly expression() {
        MultiPoly p = term();
        while (true) {
            if (accept(Token::Plus))
                p += term();
            else if (accept(Token::Minus))
                p -= term();
            else
                return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (accept(Token::Star)) p *= factor();
        return p;
    }

    MultiPoly factor() {
        bool negate = false;
        if (accept(Token::Minus))
            negate = true;
        else
            accept(Token::Plus);
        MultiPoly base = primary();
        if (accept(Token::Caret)) {
            const Token& e = peek();
            if (e.kind != Token::Number || !e.value.is_integer() || e.value.sign() < 0)
                fail(e.pos, "exponent must be a nonnegative integer");
            advance();
            base = base.pow(static_cast<int>(e.value.num_long()));
        }
        return negate ? -base : base;
    }

    MultiPoly primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Number:
                advance();
                return MultiPoly::constant(ctx_, t.value);
            case Token::Var: {
                advance();
                const auto it = std::find(ctx_->begin(), ctx_->end(), t.name);
                return MultiPoly::variable(ctx_, static_cast<int>(it - ctx_->begin()));
            }
            case Token::LParen: {
                advance();
                MultiPoly p = expression();
                if (!accept(Token::RParen)) fail(peek().pos, "expected ')'");
                return p;
            }
            default:
                fail(t.pos, "expected a number, variable or '('");
        }
    }

    std::vector<Token> tokens_;
    VarContext ctx_;
    std::size_t at_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text) {
    std::vector<Token> tokens = tokenize(text);
    std::set<std::string> names;
    for (const Token& t : tokens)
        if (t.kind == Token::Var) names.insert(t.name);
    if (names.empty()) fail(0, "polynomial must mention at least one variable");
    const VarContext ctx = make_context(std::vector<std::string>(names.begin(), names.end()));
    return Parser(std::move(tokens), ctx).parse();
}

}  // namespace vbf
