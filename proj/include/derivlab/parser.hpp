#ifndef DERIVLAB_PARSER_HPP
#define DERIVLAB_PARSER_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "polynomial.hpp"

namespace derivlab {

// Grammar (whitespace-insensitive):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := rational | ident | '(' expr ')'
//   rational := nat ['/' nat]        (binds tighter than '*')
// Implicit multiplication is not allowed; '^' exponents must be >= 0.

namespace detail {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    Rational value;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            Integer num = read_integer();
            // Lookahead for a rational literal p/q.
            std::size_t save_pos = pos_;
            int save_line = line_, save_col = col_;
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                advance();
                skip_ws();
                if (pos_ >= src_.size() ||
                    !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw parse_error("expected denominator after '/'", line_, col_);
                Integer den = read_integer();
                if (den == 0)
                    throw parse_error("zero denominator", t.line, t.col);
                t.value = Rational(num, den);
            } else {
                pos_ = save_pos;
                line_ = save_line;
                col_ = save_col;
                t.value = Rational(num);
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                t.text += src_[pos_];
                advance();
            }
            return t;
        }
        if (std::string("+-*^()").find(c) != std::string::npos) {
            t.kind = Token::Op;
            t.text = c;
            advance();
            return t;
        }
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line_, col_);
    }

private:
    Integer read_integer() {
        std::string digits;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits += src_[pos_];
            advance();
        }
        return Integer(digits);
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class PolyParser {
public:
    PolyParser(const std::string& src, ContextPtr ctx)
        : lex_(src), ctx_(std::move(ctx)) {
        cur_ = lex_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != detail::Token::End)
            throw parse_error("unexpected trailing input", cur_.line, cur_.col);
        return p;
    }

private:
    bool is_op(const char* s) const {
        return cur_.kind == Token::Op && cur_.text == s;
    }
    void bump() { cur_ = lex_.next(); }
    void expect_op(const char* s) {
        if (!is_op(s))
            throw parse_error(std::string("expected '") + s + "'", cur_.line,
                              cur_.col);
        bump();
    }

    Polynomial expr() {
        bool neg = false;
        if (is_op("-")) {
            neg = true;
            bump();
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (is_op("+") || is_op("-")) {
            bool minus = cur_.text == "-";
            bump();
            Polynomial q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (is_op("*")) {
            bump();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        if (is_op("^")) {
            bump();
            if (is_op("-"))
                throw parse_error("negative exponent", cur_.line, cur_.col);
            if (cur_.kind != Token::Number || !is_integer(cur_.value))
                throw parse_error("expected non-negative integer exponent",
                                  cur_.line, cur_.col);
            unsigned e = static_cast<unsigned>(rat_num(cur_.value));
            bump();
            p = p.pow(e);
        }
        return p;
    }

    Polynomial atom() {
        if (cur_.kind == Token::Number) {
            Polynomial p = Polynomial::constant(ctx_, cur_.value);
            bump();
            return p;
        }
        if (cur_.kind == Token::Ident) {
            auto idx = ctx_->find(cur_.text);
            if (!idx)
                throw parse_error("unknown identifier '" + cur_.text + "'",
                                  cur_.line, cur_.col);
            bump();
            return Polynomial::variable(ctx_, *idx);
        }
        if (is_op("(")) {
            bump();
            Polynomial p = expr();
            expect_op(")");
            return p;
        }
        throw parse_error("expected number, identifier or '('", cur_.line,
                          cur_.col);
    }

    Lexer lex_;
    ContextPtr ctx_;
    Token cur_;
};

} // namespace detail

inline Polynomial parse_poly(const std::string& text, ContextPtr ctx) {
    return detail::PolyParser(text, std::move(ctx)).parse();
}

// Canonical rendering; round-trips through parse_poly. Terms are printed
// from the graded-lex largest monomial down.
inline std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const ContextPtr& ctx = p.context();
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        std::vector<std::string> parts;
        if (coeff != 1 || monomial_total_degree(m) == 0)
            parts.push_back(to_string(coeff));
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            std::string part = ctx->name(v);
            if (m[v] > 1) part += "^" + std::to_string(m[v]);
            parts.push_back(std::move(part));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

// Derivation specs look like
//   vars: x, y1, y2; x' = 1; y1' = x*y1 + 1; y2' = x^2*y2 + x
// with one rule per variable; the first declared variable is distinguished.
inline Derivation parse_derivation(const std::string& text) {
    // Split on ';' (poly grammar never contains one).
    std::vector<std::string> segments;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            segments.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    segments.push_back(cur);

    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        std::size_t b = s.find_last_not_of(" \t\r\n");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };

    std::string head = trim(segments.front());
    if (head.rfind("vars:", 0) != 0)
        throw parse_error("derivation spec must start with 'vars:'", 1, 1);
    std::string varlist = head.substr(5);
    std::vector<std::string> names;
    std::string name;
    for (char c : varlist + ",") {
        if (c == ',') {
            name = trim(name);
            if (name.empty())
                throw parse_error("empty variable name in vars list", 1, 1);
            names.push_back(name);
            name.clear();
        } else {
            name += c;
        }
    }
    ContextPtr ctx = make_context(names, 0);

    std::vector<bool> seen(ctx->arity(), false);
    std::vector<Polynomial> images(ctx->arity(), Polynomial::zero(ctx));
    for (std::size_t s = 1; s < segments.size(); ++s) {
        std::string rule = trim(segments[s]);
        if (rule.empty()) continue;
        std::size_t eq = rule.find('=');
        if (eq == std::string::npos)
            throw parse_error("rule missing '='", 1, 1);
        std::string lhs = trim(rule.substr(0, eq));
        if (lhs.size() < 2 || lhs.back() != '\'')
            throw parse_error("rule left side must be <var>'", 1, 1);
        std::string var = trim(lhs.substr(0, lhs.size() - 1));
        auto idx = ctx->find(var);
        if (!idx) throw unknown_variable(var);
        if (seen[*idx])
            throw parse_error("duplicate rule for " + var, 1, 1);
        seen[*idx] = true;
        images[*idx] = parse_poly(rule.substr(eq + 1), ctx);
    }
    for (std::size_t v = 0; v < ctx->arity(); ++v)
        if (!seen[v])
            throw parse_error("missing rule for " + ctx->name(v), 1, 1);
    return Derivation(ctx, std::move(images));
}

inline std::string render(const Derivation& D) {
    std::ostringstream os;
    os << "vars: ";
    for (std::size_t v = 0; v < D.context()->arity(); ++v) {
        if (v) os << ", ";
        os << D.context()->name(v);
    }
    for (std::size_t v = 0; v < D.context()->arity(); ++v)
        os << "; " << D.context()->name(v) << "' = " << render(D.image(v));
    return os.str();
}

} // namespace derivlab

#endif
