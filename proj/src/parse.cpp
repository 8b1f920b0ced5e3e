#include "uqgh/parse.hpp"

#include <cctype>

namespace uqgh {

namespace {

struct Token {
    enum class Kind { Int, QSym, Gen, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    size_t offset;
    Rational number{0};
    Gen gen = Gen::E;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        const char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            tok_.kind = Token::Kind::Int;
            tok_.number = Rational(std::string(text_.substr(pos_, end - pos_)));
            pos_ = end;
            return;
        }
        ++pos_;
        switch (ch) {
            case '+': tok_.kind = Token::Kind::Plus; return;
            case '-': tok_.kind = Token::Kind::Minus; return;
            case '*': tok_.kind = Token::Kind::Star; return;
            case '/': tok_.kind = Token::Kind::Slash; return;
            case '^': tok_.kind = Token::Kind::Caret; return;
            case '(': tok_.kind = Token::Kind::LParen; return;
            case ')': tok_.kind = Token::Kind::RParen; return;
            case 'q': tok_.kind = Token::Kind::QSym; return;
            case 'E': tok_.kind = Token::Kind::Gen; tok_.gen = Gen::E; return;
            case 'F': tok_.kind = Token::Kind::Gen; tok_.gen = Gen::F; return;
            case 'K': tok_.kind = Token::Kind::Gen; tok_.gen = Gen::K; return;
            case 'g': tok_.kind = Token::Kind::Gen; tok_.gen = Gen::G; return;
            case 'h': tok_.kind = Token::Kind::Gen; tok_.gen = Gen::H; return;
            default:
                throw ParseError(std::string("unknown symbol '") + ch + "'", tok_.offset);
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Expression run() {
        Expression e = parse_sum();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", lex_.peek().offset);
        return e;
    }

private:
    static bool starts_atom(Token::Kind k) {
        return k == Token::Kind::Int || k == Token::Kind::QSym || k == Token::Kind::Gen ||
               k == Token::Kind::LParen;
    }

    Expression parse_sum() {
        Expression acc = parse_signed();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) break;
            const bool minus = lex_.take().kind == Token::Kind::Minus;
            Expression rhs = parse_signed();
            if (minus) {
                Expression neg;
                neg.kind = Expression::Kind::Negate;
                neg.kids.push_back(std::move(rhs));
                rhs = std::move(neg);
            }
            if (acc.kind != Expression::Kind::Sum) {
                Expression sum;
                sum.kind = Expression::Kind::Sum;
                sum.kids.push_back(std::move(acc));
                acc = std::move(sum);
            }
            acc.kids.push_back(std::move(rhs));
        }
        return acc;
    }

    Expression parse_signed() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            Expression neg;
            neg.kind = Expression::Kind::Negate;
            neg.kids.push_back(parse_signed());
            return neg;
        }
        return parse_product();
    }

    Expression parse_product() {
        Expression acc = parse_power();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star || starts_atom(k)) {
                if (k == Token::Kind::Star) lex_.take();
                Expression prod;
                prod.kind = Expression::Kind::Product;
                prod.kids.push_back(std::move(acc));
                prod.kids.push_back(parse_power());
                acc = std::move(prod);
            } else if (k == Token::Kind::Slash) {
                lex_.take();
                Expression quot;
                quot.kind = Expression::Kind::Quotient;
                quot.kids.push_back(std::move(acc));
                quot.kids.push_back(parse_power());
                acc = std::move(quot);
            } else {
                break;
            }
        }
        return acc;
    }

    Expression parse_power() {
        Expression base = parse_atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        const size_t caret_at = lex_.take().offset;
        bool negative = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Token::Kind::Int)
            throw ParseError("expected integer exponent after '^'", lex_.peek().offset);
        const Token t = lex_.take();
        if (!t.number.get_num().fits_slong_p())
            throw ParseError("exponent too large", t.offset);
        long e = t.number.get_num().get_si();
        if (negative) e = -e;
        if (e < 0 && base.kind == Expression::Kind::Generator &&
            (base.gen == Gen::E || base.gen == Gen::F))
            throw ParseError("E, F are not invertible", caret_at);
        Expression pow;
        pow.kind = Expression::Kind::Power;
        pow.exponent = e;
        pow.kids.push_back(std::move(base));
        return pow;
    }

    Expression parse_atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Int: {
                lex_.take();
                Expression e;
                e.kind = Expression::Kind::Number;
                e.number = t.number;
                return e;
            }
            case Token::Kind::QSym: {
                lex_.take();
                Expression e;
                e.kind = Expression::Kind::QSymbol;
                return e;
            }
            case Token::Kind::Gen: {
                lex_.take();
                Expression e;
                e.kind = Expression::Kind::Generator;
                e.gen = t.gen;
                return e;
            }
            case Token::Kind::LParen: {
                lex_.take();
                Expression e = parse_sum();
                if (lex_.peek().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", lex_.peek().offset);
                lex_.take();
                return e;
            }
            default:
                throw ParseError("expected a number, generator, 'q' or '('", t.offset);
        }
    }

    Lexer lex_;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

AlgebraElement evaluate(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Number:
            return AlgebraElement::scalar(RatFunc(e.number));
        case Expression::Kind::QSymbol:
            return AlgebraElement::scalar(RatFunc::q_power(1));
        case Expression::Kind::Generator:
            return AlgebraElement::generator(e.gen);
        case Expression::Kind::Sum: {
            AlgebraElement out;
            for (const auto& k : e.kids) out += evaluate(k);
            return out;
        }
        case Expression::Kind::Negate:
            return -evaluate(e.kids[0]);
        case Expression::Kind::Product: {
            AlgebraElement out = AlgebraElement::one();
            for (const auto& k : e.kids) out = multiply(out, evaluate(k));
            return out;
        }
        case Expression::Kind::Quotient: {
            const AlgebraElement num = evaluate(e.kids[0]);
            const AlgebraElement den = evaluate(e.kids[1]);
            if (!den.is_scalar()) throw std::domain_error("cannot divide by a non-scalar");
            const RatFunc d = den.scalar_part();
            if (d.is_zero()) throw std::domain_error("division by zero");
            return num * d.inv();
        }
        case Expression::Kind::Power:
            return evaluate(e.kids[0]).pow(e.exponent);
    }
    return {};
}

AlgebraElement parse_element(std::string_view text) { return evaluate(parse(text)); }

RatFunc parse_scalar(std::string_view text) {
    const AlgebraElement a = parse_element(text);
    if (!a.is_scalar()) throw std::domain_error("expected a scalar in q, got: " + a.to_string());
    return a.scalar_part();
}

}  // namespace uqgh
