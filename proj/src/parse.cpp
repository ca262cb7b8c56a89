#include "monodesc/parse.hpp"

#include <cctype>
#include <vector>

namespace monodesc {

namespace {

struct Token {
    enum Kind { LB, RB, LP, RP, COMMA, PLUS, MINUS, STAR, SLASH, CARET, INT, I, Z, END };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::END, "", line, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits += s_[pos_];
                advance();
            }
            if (pos_ < s_.size() && s_[pos_] == '.')
                throw ParseError("decimal literals are not part of the grammar; use p/q", line_, col_);
            return {Token::INT, digits, line, col};
        }
        advance();
        switch (c) {
            case '[': return {Token::LB, "[", line, col};
            case ']': return {Token::RB, "]", line, col};
            case '(': return {Token::LP, "(", line, col};
            case ')': return {Token::RP, ")", line, col};
            case ',': return {Token::COMMA, ",", line, col};
            case '+': return {Token::PLUS, "+", line, col};
            case '-': return {Token::MINUS, "-", line, col};
            case '*': return {Token::STAR, "*", line, col};
            case '/': return {Token::SLASH, "/", line, col};
            case '^': return {Token::CARET, "^", line, col};
            case 'i': return {Token::I, "i", line, col};
            case 'z': return {Token::Z, "z", line, col};
            default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { shift(); }

    RFMat system() {
        expect(Token::LB, "expected '['");
        std::vector<std::vector<RatFunc>> rows;
        rows.push_back(row());
        while (cur_.kind == Token::COMMA) {
            shift();
            rows.push_back(row());
        }
        expect(Token::RB, "expected ']' or ','");
        size_t w = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != w) throw ParseError("ragged matrix rows", cur_.line, cur_.col);
        RFMat m(static_cast<int>(rows.size()), static_cast<int>(w));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < w; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        return m;
    }

    RatFunc entry() { return expr(); }

    void expect_end() {
        if (cur_.kind != Token::END) throw ParseError("trailing input", cur_.line, cur_.col);
    }

private:
    Lexer lex_;
    Token cur_;

    void shift() { cur_ = lex_.next(); }
    void expect(Token::Kind k, const char* msg) {
        if (cur_.kind != k) throw ParseError(msg, cur_.line, cur_.col);
        shift();
    }

    std::vector<RatFunc> row() {
        expect(Token::LB, "expected '['");
        std::vector<RatFunc> out;
        out.push_back(expr());
        while (cur_.kind == Token::COMMA) {
            shift();
            out.push_back(expr());
        }
        expect(Token::RB, "expected ']' or ','");
        return out;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (cur_.kind == Token::PLUS || cur_.kind == Token::MINUS) {
            bool plus = cur_.kind == Token::PLUS;
            shift();
            RatFunc rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (cur_.kind == Token::STAR || cur_.kind == Token::SLASH) {
            bool mul = cur_.kind == Token::STAR;
            int line = cur_.line, col = cur_.col;
            shift();
            RatFunc rhs = factor();
            if (!mul && rhs.is_zero()) throw ParseError("division by zero", line, col);
            acc = mul ? acc * rhs : acc / rhs;
        }
        return acc;
    }

    RatFunc factor() {
        if (cur_.kind == Token::MINUS) {
            shift();
            return -factor();
        }
        if (cur_.kind == Token::PLUS) {
            shift();
            return factor();
        }
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (cur_.kind != Token::CARET) return base;
        int line = cur_.line, col = cur_.col;
        shift();
        long e = exponent();
        if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", line, col);
        return base.pow(e);
    }

    long exponent() {
        bool paren = cur_.kind == Token::LP;
        if (paren) shift();
        bool neg = false;
        if (cur_.kind == Token::MINUS) {
            neg = true;
            shift();
        }
        if (cur_.kind != Token::INT) throw ParseError("expected integer exponent", cur_.line, cur_.col);
        if (cur_.text.size() > 4) throw ParseError("exponent out of range", cur_.line, cur_.col);
        long e = std::stol(cur_.text);
        shift();
        if (paren) expect(Token::RP, "expected ')'");
        return neg ? -e : e;
    }

    RatFunc primary() {
        switch (cur_.kind) {
            case Token::INT: {
                mpz_class v(cur_.text);
                shift();
                return RatFunc(GaussianRational(v));
            }
            case Token::I:
                shift();
                return RatFunc(GaussianRational::i());
            case Token::Z:
                shift();
                return RatFunc::z();
            case Token::LP: {
                shift();
                RatFunc e = expr();
                expect(Token::RP, "expected ')'");
                return e;
            }
            default:
                throw ParseError("expected a number, 'i', 'z', or '('", cur_.line, cur_.col);
        }
    }
};

}  // namespace

RFMat parse_system(const std::string& text) {
    Parser p(text);
    RFMat m = p.system();
    p.expect_end();
    return m;
}

RatFunc parse_entry(const std::string& text) {
    Parser p(text);
    RatFunc f = p.entry();
    p.expect_end();
    return f;
}

GaussianRational parse_constant(const std::string& text) {
    RatFunc f = parse_entry(text);
    if (!f.is_constant()) throw ParseError("expected a constant (no z)", 1, 1);
    return f.constant_value();
}

QiMat parse_constant_system(const std::string& text) {
    RFMat m = parse_system(text);
    QiMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_constant()) throw ParseError("expected a constant matrix (no z)", 1, 1);
            out(i, j) = m(i, j).constant_value();
        }
    return out;
}

std::string print_system(const RFMat& a) {
    std::string out = "[";
    for (int i = 0; i < a.rows(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out += ",";
            out += a(i, j).str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string print_system(const QiMat& a) { return print_system(embed(a)); }

}  // namespace monodesc
