#ifndef LG2_RATIONAL_HPP
#define LG2_RATIONAL_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

namespace lg2 {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact element re + im*i of Q(i).
///
/// Both parts are kept canonical (positive denominators, lowest terms),
/// so operator== is structural equality of reduced forms.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
  {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational fraction(long num, long den) { return Rational(num, den); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b)
  {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order on (re, im); only used for canonical sorting.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b)
  {
    if (a.re_ != b.re_)
      return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2" when real, otherwise "(re,im)".
  std::string to_string() const;
  static GaussianRational parse(const std::string& text);

private:
  Rational re_{0};
  Rational im_{0};
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

} // namespace lg2

#endif
