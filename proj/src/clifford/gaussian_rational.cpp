#include "atk/clifford/gaussian_rational.hpp"

#include "atk/error.hpp"

namespace atk {

GaussianRational::GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
  re.canonicalize();
  im.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  return GaussianRational(Rational(num, den));
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
  return GaussianRational(re + o.re, im + o.im);
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
  return GaussianRational(re - o.re, im - o.im);
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
  return GaussianRational(re * o.re - im * o.im, re * o.im + im * o.re);
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  const Rational n = o.norm();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "division by zero in Q(i)");
  const GaussianRational p = *this * o.conj();
  return GaussianRational(p.re / n, p.im / n);
}

GaussianRational GaussianRational::operator-() const { return GaussianRational(-re, -im); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = im.get_str() + "i";
  }
  if (re == 0) return imag;
  return re.get_str() + (im > 0 ? "+" : "") + imag;
}

}  // namespace atk
