#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cohoma/algebra.hpp"

namespace cohoma {

// Canonical monomial: factor ids in non-decreasing declaration order, odd
// generators never repeated. Caches its bidegree.
struct Monomial {
  std::vector<GenId> factors;
  Bidegree deg;

  bool empty() const { return factors.empty(); }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
};

// Term order: (total degree, lex on bidegree, lex on factor ids).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long long ta = a.deg.h + a.deg.v, tb = b.deg.h + b.deg.v;
    if (ta != tb) return ta < tb;
    if (a.deg.h != b.deg.h) return a.deg.h < b.deg.h;
    if (a.deg.v != b.deg.v) return a.deg.v < b.deg.v;
    return a.factors < b.factors;
  }
};

struct SignedMonomial {
  Monomial mono;
  int sign = 1;   // 0 means the word collapsed to zero (odd square)
};

// Reorder a word of generators into canonical order, accumulating the
// convention's sign per transposition; zero if an odd generator repeats.
SignedMonomial normalizeWord(const Algebra& alg, std::span<const GenId> word);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Polynomial zero(AlgebraPtr alg) { return Polynomial(alg); }
  static Polynomial one(AlgebraPtr alg);
  static Polynomial constant(AlgebraPtr alg, const Coeff& c);
  static Polynomial generator(AlgebraPtr alg, GenId g);

  const AlgebraPtr& algebra() const { return alg_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::map<Monomial, Coeff, TermOrder>& terms() const { return terms_; }

  // nullopt on the zero polynomial or a degree-mixed polynomial; use isZero()
  // to tell the two apart.
  std::optional<Bidegree> homogeneousDegree() const;

  void addTerm(const Monomial& m, const Coeff& c);
  // multiply the given word of generators (not necessarily canonical) in
  void addWord(std::span<const GenId> word, const Coeff& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
  Polynomial scaled(const Coeff& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Coefficient of the word g1...gk (normalized first).
  Coeff coefficient(std::span<const GenId> word) const;

  // Re-express in the other sign convention (Lemma connecting the two kinds):
  // each monomial g1...gk picks up (-1)^{sum_{p<q} j_p i_q}. `target` must be
  // the convention twin of this polynomial's algebra.
  Polynomial convertConvention(AlgebraPtr target) const;

  std::string str() const;

 private:
  AlgebraPtr alg_;
  std::map<Monomial, Coeff, TermOrder> terms_;
};

}  // namespace cohoma
