#pragma once

#include <cstdint>
#include <string>

namespace cohoma {

// Element of the Z x Z degree semiring. Parity of (i,j) is i+j mod 2; the
// commutation sign between homogeneous elements uses either the parity of the
// componentwise product of the degrees (first kind) or the product of the
// parities (second kind).
struct Bidegree {
  long long h = 0;  // horizontal / form degree
  long long v = 0;  // vertical / ghost degree

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.h + b.h, a.v + b.v}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.h - b.h, a.v - b.v}; }
  Bidegree& operator+=(Bidegree o) { h += o.h; v += o.v; return *this; }
  friend bool operator==(Bidegree a, Bidegree b) { return a.h == b.h && a.v == b.v; }
  friend bool operator!=(Bidegree a, Bidegree b) { return !(a == b); }

  // semiring product, componentwise
  Bidegree prod(Bidegree o) const { return {h * o.h, v * o.v}; }
  int parity() const { return static_cast<int>(((h + v) % 2 + 2) % 2); }

  std::string str() const { return "(" + std::to_string(h) + "," + std::to_string(v) + ")"; }
};

enum class Convention { FirstKind, SecondKind };

// Sign picked up when swapping adjacent homogeneous elements of degrees a, b.
inline int commuteSign(Convention c, Bidegree a, Bidegree b) {
  int p = (c == Convention::FirstKind) ? a.prod(b).parity() : a.parity() * b.parity();
  return (p % 2) ? -1 : 1;
}

}  // namespace cohoma
