#include "motzeta/expr_parser.hpp"

#include <cctype>
#include <limits>

namespace motzeta::expr {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all() {
        NodePtr n = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr make(Node::Kind k, std::size_t at) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->position = at;
        return n;
    }

    NodePtr binary(Node::Kind k, std::size_t at, NodePtr a, NodePtr b) {
        NodePtr n = make(k, at);
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expression() {
        NodePtr left = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return left;
            std::size_t at = pos_++;
            left = binary(c == '+' ? Node::Kind::Add : Node::Kind::Sub, at, std::move(left), term());
        }
    }

    NodePtr term() {
        NodePtr left = unary();
        while (peek() == '*') {
            std::size_t at = pos_++;
            left = binary(Node::Kind::Mul, at, std::move(left), unary());
        }
        return left;
    }

    NodePtr unary() {
        if (peek() == '-') {
            std::size_t at = pos_++;
            NodePtr n = make(Node::Kind::Neg, at);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        while (peek() == '^') {
            std::size_t at = pos_++;
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            skip_space();
            std::string digits = read_digits();
            if (digits.empty()) fail("expected integer exponent after '^'");
            Integer e(digits);
            if (e > Integer(std::numeric_limits<std::int32_t>::max())) fail("exponent too large");
            NodePtr n = make(Node::Kind::Pow, at);
            n->exponent = negative ? -e.get_si() : e.get_si();
            n->lhs = std::move(base);
            base = std::move(n);
        }
        return base;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    NodePtr primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            NodePtr inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            NodePtr n = make(Node::Kind::Integer, at);
            n->value = Integer(read_digits());
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            NodePtr n = make(Node::Kind::Identifier, at);
            n->name = std::string(text_.substr(start, pos_ - start));
            return n;
        }
        if (c == '\0') fail("unexpected end of expression");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class Ring, class Atom>
Ring evaluate(const Node& n, const Atom& atom) {
    switch (n.kind) {
        case Node::Kind::Integer: return Ring(n.value);
        case Node::Kind::Identifier: return atom(n);
        case Node::Kind::Neg: return -evaluate<Ring>(*n.lhs, atom);
        case Node::Kind::Add: return evaluate<Ring>(*n.lhs, atom) + evaluate<Ring>(*n.rhs, atom);
        case Node::Kind::Sub: return evaluate<Ring>(*n.lhs, atom) - evaluate<Ring>(*n.rhs, atom);
        case Node::Kind::Mul: return evaluate<Ring>(*n.lhs, atom) * evaluate<Ring>(*n.rhs, atom);
        case Node::Kind::Pow: {
            Ring base = evaluate<Ring>(*n.lhs, atom);
            if (n.exponent < 0 && !base.as_unit())
                throw ParseError("negative exponent applied to a non-unit", n.position);
            return base.pow(n.exponent);
        }
    }
    throw Error("corrupt expression tree");
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).parse_all(); }

GrothElement parse_groth(std::string_view text) {
    NodePtr root = parse(text);
    return evaluate<GrothElement>(*root, [](const Node& id) {
        if (id.name == "L") return GrothElement::lefschetz(1);
        return GrothElement::symbol(id.name);
    });
}

LaurentPoly parse_laurent(std::string_view text, const std::string& var) {
    NodePtr root = parse(text);
    return evaluate<LaurentPoly>(*root, [&](const Node& id) {
        if (id.name != var) throw ParseError("unknown identifier '" + id.name + "', expected '" + var + "'", id.position);
        return LaurentPoly::monomial(Integer(1), 1);
    });
}

}  // namespace motzeta::expr
