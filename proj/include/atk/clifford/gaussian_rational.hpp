#pragma once

#include <string>

#include "atk/integer.hpp"

namespace atk {

/// Element re + i im of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i = 0);

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  static GaussianRational fraction(long num, long den);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator+(const GaussianRational& o) const;
  GaussianRational operator-(const GaussianRational& o) const;
  GaussianRational operator*(const GaussianRational& o) const;
  GaussianRational operator/(const GaussianRational& o) const;
  GaussianRational operator-() const;
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  /// "3/2", "-i", "1/2+3i".
  std::string to_string() const;
};

}  // namespace atk
