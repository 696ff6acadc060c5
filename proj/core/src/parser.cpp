#include "okore/parser.hpp"

#include <cctype>

#include "okore/errors.hpp"

namespace okore {

namespace {

class Parser {
  public:
    Parser(std::uint32_t n, std::string_view text) : n_(n), text_(text) {}

    Element run() {
        Element out = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

  private:
    std::uint32_t n_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Element parse_expr() {
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        Element acc = parse_term();
        if (negative) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_factor() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 's' || c == '(';
    }

    Element parse_term() {
        if (!starts_factor()) fail("expected a term");
        Element acc = parse_factor();
        while (starts_factor()) acc = mul(acc, parse_factor());
        return acc;
    }

    Element parse_factor() {
        Element x = parse_primary();
        if (accept('*')) x = adjoint(x);
        return x;
    }

    Element parse_primary() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Element::scalar(n_, parse_number());
        if (c == 'i') {
            ++pos_;
            return Element::scalar(n_, Scalar::i());
        }
        if (c == 's') return parse_generator_token();
        if (c == '(') {
            ++pos_;
            Element inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("expected a scalar, generator token, or '('");
    }

    Scalar parse_number() {
        std::string digits = read_digits();
        if (accept('/')) {
            skip_ws();
            std::string den = read_digits();
            if (den.empty()) fail("expected denominator digits after '/'");
            return Scalar(Scalar::rational_from_string(digits + "/" + den));
        }
        return Scalar(Scalar::rational_from_string(digits));
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    Element parse_generator_token() {
        ++pos_;  // consume 's'
        Path letters;
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            while (true) {
                letters.push_back(parse_letter_int());
                skip_ws();
                if (accept(']')) break;
                if (!accept(',')) fail("expected ',' or ']' in bracketed generator token");
            }
        } else {
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected generator letters after 's'");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                Letter a = static_cast<Letter>(text_[pos_] - '0');
                check_letter(a);
                letters.push_back(a);
                ++pos_;
            }
        }
        return Element::from_word(n_, Word{letters, Path{}});
    }

    Letter parse_letter_int() {
        std::string digits = read_digits();
        unsigned long v = std::stoul(digits);
        check_letter(static_cast<Letter>(v));
        return static_cast<Letter>(v);
    }

    void check_letter(Letter a) const {
        if (a < 1 || a > n_)
            throw ParseError("generator letter " + std::to_string(a) + " exceeds declared n = " +
                                 std::to_string(n_),
                             pos_);
    }
};

}  // namespace

Element parse(std::uint32_t n, std::string_view text) { return Parser(n, text).run(); }

Scalar parse_scalar(std::string_view text) {
    // Ride on the element parser with a dummy n; generators are rejected.
    Element x = Parser(2, text).run();
    for (const auto& [w, c] : x.terms())
        if (!w.is_unit()) throw MalformedInputError("expected a scalar expression");
    return x.is_zero() ? Scalar(0) : x.terms().begin()->second;
}

}  // namespace okore
