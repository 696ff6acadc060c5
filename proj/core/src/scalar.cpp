#include "okore/scalar.hpp"

#include <cctype>

#include "okore/errors.hpp"

namespace okore {

Rational Scalar::rational_from_string(std::string_view text) {
    if (text.empty()) throw MalformedInputError("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    bool seen_digit = false;
    bool seen_slash = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(text[k]))) {
            seen_digit = true;
        } else if (text[k] == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw MalformedInputError("bad rational literal: " + std::string(text));
        }
    }
    if (!seen_digit) throw MalformedInputError("bad rational literal: " + std::string(text));
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw MalformedInputError("bad rational literal: " + std::string(text));
    if (q.get_den() == 0) throw MalformedInputError("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string Scalar::rational_to_string(const Rational& q) { return q.get_str(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
    Rational norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::pow(int k) const {
    Scalar base = k >= 0 ? *this : inverse();
    unsigned e = k >= 0 ? static_cast<unsigned>(k) : static_cast<unsigned>(-static_cast<long>(k));
    Scalar acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return rational_to_string(re_);
    std::string imag_part;
    if (im_ == 1)
        imag_part = "i";
    else if (im_ == -1)
        imag_part = "-i";
    else
        imag_part = rational_to_string(im_) + "i";
    if (re_ == 0) return imag_part;
    std::string out = rational_to_string(re_);
    if (im_ > 0) out += "+";
    return out + imag_part;
}

bool is_fourth_root_of_unity(const Scalar& z) {
    return z == Scalar(1) || z == Scalar(-1) || z == Scalar::i() || z == -Scalar::i();
}

}  // namespace okore
