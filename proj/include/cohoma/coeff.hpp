#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cohoma {

using Rat = boost::multiprecision::cpp_rational;

enum class Err {
  UnknownGenerator,
  ConventionMismatch,
  DegreeMismatch,
  NotNilpotent,
  TruncationExceeded,
  InvalidLieAlgebra,
  InvalidRepresentation,
  MissingStructure,
  NormalizationViolated,
  NotClosed,
  NotBasic,
  NotAntisymmetric,
  MissingMetric,
  Dim4Only,
  SelfDualNeedsDim4,
  SyntaxError,
  UnknownName,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Gaussian rational a + b*i, always stored reduced (cpp_rational canonicalizes).
struct Coeff {
  Rat re, im;

  Coeff() = default;
  Coeff(long n) : re(n) {}
  Coeff(const Rat& r) : re(r) {}
  Coeff(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Coeff I() { return Coeff(Rat(0), Rat(1)); }

  bool isZero() const { return re == 0 && im == 0; }
  bool isOne() const { return re == 1 && im == 0; }

  Coeff operator-() const { return Coeff(-re, -im); }
  Coeff& operator+=(const Coeff& o) { re += o.re; im += o.im; return *this; }
  Coeff& operator-=(const Coeff& o) { re -= o.re; im -= o.im; return *this; }
  friend Coeff operator+(Coeff a, const Coeff& b) { a += b; return a; }
  friend Coeff operator-(Coeff a, const Coeff& b) { a -= b; return a; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return Coeff(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }
  friend Coeff operator/(const Coeff& a, const Coeff& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero coefficient");
    return Coeff((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::string str() const;
};

std::string ratStr(const Rat& r);

}  // namespace cohoma
