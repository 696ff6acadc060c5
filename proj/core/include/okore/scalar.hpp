#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace okore {

using Rational = mpq_class;

/// Gaussian rational p/q + (r/s)i. All arithmetic is exact; components are
/// kept in lowest terms with positive denominators (GMP canonical form).
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    Scalar(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    /// Parses "p/q" / "-p" style text into an exact rational. Throws
    /// MalformedInputError on bad syntax or zero denominator.
    static Rational rational_from_string(std::string_view text);
    static std::string rational_to_string(const Rational& q);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    /// Integer power, negative exponents via inverse().
    Scalar pow(int k) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Compact text form: "0", "1/2", "i", "-2/3i", "1/2+1/3i".
    std::string str() const;

  private:
    Rational re_, im_;
};

/// True exactly on {1, i, -1, -i}.
bool is_fourth_root_of_unity(const Scalar& z);

}  // namespace okore
