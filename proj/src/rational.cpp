#include "lg2/rational.hpp"

#include <stdexcept>

#include "lg2/errors.hpp"

namespace lg2 {

Rational parse_rational(const std::string& text)
{
  if (text.empty())
    throw StructuralError("empty rational literal");
  Rational q;
  try {
    q = Rational(text, 10);
  } catch (const std::invalid_argument&) {
    throw StructuralError("bad rational literal '" + text + "'");
  }
  if (q.get_den() == 0)
    throw StructuralError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  return q.get_str(10);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
  Rational n = o.norm();
  if (sgn(n) == 0)
    throw std::domain_error("division by zero in Q(i)");
  GaussianRational c = o.conj();
  *this *= c;
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const
{
  if (is_real())
    return lg2::to_string(re_);
  return "(" + lg2::to_string(re_) + "," + lg2::to_string(im_) + ")";
}

GaussianRational GaussianRational::parse(const std::string& text)
{
  if (!text.empty() && text.front() == '(') {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.back() != ')')
      throw StructuralError("bad Gaussian rational literal '" + text + "'");
    return {parse_rational(text.substr(1, comma - 1)),
            parse_rational(text.substr(comma + 1, text.size() - comma - 2))};
  }
  return parse_rational(text);
}

GaussianRational pow(const GaussianRational& base, unsigned exponent)
{
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

} // namespace lg2
