#pragma once

// Exact complex scalars with rational real and imaginary parts.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace gwp {

  using Rational = mpq_class;

  // Parses "3", "-1/2", "+7/4". Throws ParseError on malformed input or a
  // zero denominator.
  Rational parse_rational(std::string_view text);

  // Canonical text form: "0", "-3", "5/2".
  std::string to_string(Rational const& q);

  class Scalar {
   public:
    Scalar() = default;
    Scalar(long re) : re_(re) {}  // NOLINT(runtime/explicit)
    Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
      re_.canonicalize();
      im_.canonicalize();
    }

    static Scalar i() { return Scalar(0, 1); }

    Rational const& re() const noexcept { return re_; }
    Rational const& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(Scalar const& o) {
      re_ += o.re_;
      im_ += o.im_;
      return *this;
    }
    Scalar& operator-=(Scalar const& o) {
      re_ -= o.re_;
      im_ -= o.im_;
      return *this;
    }
    Scalar& operator*=(Scalar const& o) {
      Rational r = re_ * o.re_ - im_ * o.im_;
      Rational i = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(r);
      im_ = std::move(i);
      return *this;
    }

    friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
    friend Scalar operator-(Scalar const& a) { return Scalar(-a.re_, -a.im_); }

    friend bool operator==(Scalar const& a, Scalar const& b) {
      return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic on (re, im); only used to give containers a total order.
    friend bool operator<(Scalar const& a, Scalar const& b) {
      if (a.re_ != b.re_) {
        return a.re_ < b.re_;
      }
      return a.im_ < b.im_;
    }

   private:
    Rational re_{0};
    Rational im_{0};
  };

  std::string to_string(Scalar const& z);

  std::ostream& operator<<(std::ostream& os, Scalar const& z);

}  // namespace gwp
