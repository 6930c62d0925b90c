#pragma once

// Expression grammar over a ring's generators:
//
//   expr     := term (('+' | '-') term)*
//   term     := '-' term | circ
//   circ     := product ('o' product)?          -- 'o' does NOT chain
//   product  := postfix ('*' postfix)*
//   postfix  := atom suffix* ('^' INT)?
//   suffix   := '\''  |  '^(' INT (',' INT)* ')'
//   atom     := INT ('/' INT)? | NAME | '(' expr ')'
//
// Precedence is therefore: derivative suffix, then '*', then 'o', then unary
// minus, then binary '+'/'-'. The circle product is nonassociative, so
// "x o y o z" is rejected outright rather than silently grouped. '/' exists
// only inside rational literals. Errors carry the byte offset of the
// offending token.

#include "novikov/novikov_algebra.hpp"
#include "novikov/ring.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind {
        Literal,     // rational constant
        Generator,   // name
        Derivative,  // child differentiated (primes or explicit multi-index)
        Power,       // child ^ power
        Product,     // left * right
        Circ,        // left o right
        Negate,      // - child
        Add,         // left + right
        Subtract,    // left - right
    };

    Kind kind;
    std::size_t offset = 0;
    Rational literal;
    std::string name;
    std::vector<int> orders;  // Derivative: {r} for primes, full multi-index otherwise
    bool primes = false;      // Derivative came from ' suffixes (needs m = 1)
    int power = 0;
    ExprPtr left;
    ExprPtr right;
};

namespace detail {

struct Token {
    enum class Kind { Number, Name, Circ, Plus, Minus, Star, Slash, Caret, Prime, Comma, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> lex(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) {
                ++i;
            }
            tokens.push_back({Token::Kind::Number, input.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) {
                ++i;
            }
            std::string word = input.substr(start, i - start);
            tokens.push_back({word == "o" ? Token::Kind::Circ : Token::Kind::Name, std::move(word), start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '\'': kind = Token::Kind::Prime; break;
            case ',': kind = Token::Kind::Comma; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        tokens.push_back({kind, input.substr(start, 1), start});
        ++i;
    }
    tokens.push_back({Token::Kind::End, "", input.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!at(Token::Kind::End)) {
            throw ParseError("unexpected token '" + peek().text + "'", peek().offset);
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(Token::Kind k) const { return peek().kind == k; }

    const Token& take() { return tokens_[pos_++]; }

    const Token& expect(Token::Kind k, const char* what) {
        if (!at(k)) {
            throw ParseError(std::string("expected ") + what, peek().offset);
        }
        return take();
    }

    static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    int read_int(const char* what) {
        const Token& t = expect(Token::Kind::Number, what);
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            throw ParseError("integer out of range", t.offset);
        }
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            const Token& op = take();
            ExprPtr right = term();
            ExprNode n;
            n.kind = op.kind == Token::Kind::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Subtract;
            n.offset = op.offset;
            n.left = std::move(left);
            n.right = std::move(right);
            left = node(std::move(n));
        }
        return left;
    }

    ExprPtr term() {
        if (at(Token::Kind::Minus)) {
            const Token& op = take();
            ExprNode n;
            n.kind = ExprNode::Kind::Negate;
            n.offset = op.offset;
            n.left = term();
            return node(std::move(n));
        }
        return circ_expr();
    }

    ExprPtr circ_expr() {
        ExprPtr left = product();
        if (!at(Token::Kind::Circ)) {
            return left;
        }
        const Token& op = take();
        ExprPtr right = product();
        if (at(Token::Kind::Circ)) {
            throw ParseError("'o' is nonassociative; parenthesize the chain", peek().offset);
        }
        ExprNode n;
        n.kind = ExprNode::Kind::Circ;
        n.offset = op.offset;
        n.left = std::move(left);
        n.right = std::move(right);
        return node(std::move(n));
    }

    ExprPtr product() {
        ExprPtr left = postfix();
        while (at(Token::Kind::Star)) {
            const Token& op = take();
            ExprPtr right = postfix();
            ExprNode n;
            n.kind = ExprNode::Kind::Product;
            n.offset = op.offset;
            n.left = std::move(left);
            n.right = std::move(right);
            left = node(std::move(n));
        }
        return left;
    }

    ExprPtr postfix() {
        ExprPtr e = atom();
        while (true) {
            if (at(Token::Kind::Prime)) {
                const Token& t = take();
                int count = 1;
                while (at(Token::Kind::Prime)) {
                    take();
                    ++count;
                }
                ExprNode n;
                n.kind = ExprNode::Kind::Derivative;
                n.offset = t.offset;
                n.orders = {count};
                n.primes = true;
                n.left = std::move(e);
                e = node(std::move(n));
                continue;
            }
            if (at(Token::Kind::Caret) && tokens_[pos_ + 1].kind == Token::Kind::LParen) {
                const Token& t = take();  // ^
                take();                   // (
                std::vector<int> orders;
                orders.push_back(read_int("a derivative order"));
                while (at(Token::Kind::Comma)) {
                    take();
                    orders.push_back(read_int("a derivative order"));
                }
                expect(Token::Kind::RParen, "')'");
                ExprNode n;
                n.kind = ExprNode::Kind::Derivative;
                n.offset = t.offset;
                n.orders = std::move(orders);
                n.primes = false;
                n.left = std::move(e);
                e = node(std::move(n));
                continue;
            }
            break;
        }
        if (at(Token::Kind::Caret)) {
            const Token& t = take();
            int p = read_int("an exponent");
            ExprNode n;
            n.kind = ExprNode::Kind::Power;
            n.offset = t.offset;
            n.power = p;
            n.left = std::move(e);
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr atom() {
        if (at(Token::Kind::Number)) {
            const Token& t = take();
            BigInt numerator(t.text);
            BigInt denominator(1);
            if (at(Token::Kind::Slash)) {
                take();
                const Token& d = expect(Token::Kind::Number, "a denominator");
                denominator = BigInt(d.text);
                if (denominator == 0) {
                    throw ParseError("zero denominator", d.offset);
                }
            }
            ExprNode n;
            n.kind = ExprNode::Kind::Literal;
            n.offset = t.offset;
            n.literal = Rational(numerator, denominator);
            return node(std::move(n));
        }
        if (at(Token::Kind::Name)) {
            const Token& t = take();
            ExprNode n;
            n.kind = ExprNode::Kind::Generator;
            n.offset = t.offset;
            n.name = t.text;
            return node(std::move(n));
        }
        if (at(Token::Kind::LParen)) {
            take();
            ExprPtr e = expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        throw ParseError("expected a number, generator, or '('", peek().offset);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse(const std::string& input) {
    return detail::Parser(detail::lex(input)).run();
}

/// Evaluates an AST in the differential-polynomial realization: 'o' is the
/// circle product f·g', and a bare constant is the polynomial constant (the
/// formal Novikov unit only appears when a caller reinterprets the result
/// via NovikovElement::from_polynomial).
inline DiffPolynomial eval_expr(const ExprPtr& e, const RingPtr& ring) {
    switch (e->kind) {
        case ExprNode::Kind::Literal:
            return DiffPolynomial::constant(ring, e->literal);
        case ExprNode::Kind::Generator: {
            for (int i = 0; i < ring->generators; ++i) {
                if (ring->names[static_cast<std::size_t>(i)] == e->name) {
                    return DiffPolynomial::generator(ring, i);
                }
            }
            throw ParseError("unknown generator '" + e->name + "'", e->offset);
        }
        case ExprNode::Kind::Derivative: {
            DiffPolynomial f = eval_expr(e->left, ring);
            if (e->primes) {
                if (ring->derivations != 1) {
                    throw ParseError("prime notation needs a single derivation; use ^(i1,...,im)",
                                     e->offset);
                }
                return f.derivative(e->orders);
            }
            if (static_cast<int>(e->orders.size()) != ring->derivations) {
                throw ParseError("multi-index length must equal the number of derivations",
                                 e->offset);
            }
            return f.derivative(e->orders);
        }
        case ExprNode::Kind::Power:
            return eval_expr(e->left, ring).pow(e->power);
        case ExprNode::Kind::Product:
            return eval_expr(e->left, ring) * eval_expr(e->right, ring);
        case ExprNode::Kind::Circ: {
            if (ring->derivations != 1) {
                throw ParseError("'o' needs a single derivation", e->offset);
            }
            return circ(eval_expr(e->left, ring), eval_expr(e->right, ring));
        }
        case ExprNode::Kind::Negate:
            return -eval_expr(e->left, ring);
        case ExprNode::Kind::Add:
            return eval_expr(e->left, ring) + eval_expr(e->right, ring);
        case ExprNode::Kind::Subtract:
            return eval_expr(e->left, ring) - eval_expr(e->right, ring);
    }
    throw std::logic_error("eval_expr: unhandled node kind");
}

inline DiffPolynomial eval_expr(const std::string& input, const RingPtr& ring) {
    return eval_expr(parse(input), ring);
}

} // namespace novikov
