#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "cohoma/polynomial.hpp"

namespace cohoma {

// Bidegree-homogeneous derivation given by its action on generators and
// extended by the graded Leibniz rule of the algebra's convention. An absent
// table entry means 0; a poisoned entry marks a generator whose image would
// exceed the jet truncation, so touching it raises TruncationExceeded rather
// than silently producing a wrong polynomial.
class Derivation {
 public:
  Derivation() = default;
  Derivation(AlgebraPtr alg, std::string name, Bidegree deg)
      : alg_(std::move(alg)), name_(std::move(name)), deg_(deg) {}

  const std::string& name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }
  Bidegree degree() const { return deg_; }
  const AlgebraPtr& algebra() const { return alg_; }

  void set(GenId g, Polynomial image);   // degree-checked
  void poison(GenId g) { action_[g] = std::nullopt; }
  bool poisoned(GenId g) const;

  // image of a generator (zero if absent; throws TruncationExceeded if poisoned)
  Polynomial imageOf(GenId g) const;

  Polynomial apply(const Polynomial& f) const;
  Polynomial operator()(const Polynomial& f) const { return apply(f); }

  Derivation scaled(const Coeff& c) const;
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);

  // Convention twin per the sign-connection lemma: D'(a) = (-1)^{j i_a} D(a).
  Derivation convertConvention(AlgebraPtr target) const;

  const std::unordered_map<GenId, std::optional<Polynomial>>& table() const { return action_; }

 private:
  AlgebraPtr alg_;
  std::string name_;
  Bidegree deg_;
  std::unordered_map<GenId, std::optional<Polynomial>> action_;
};

// Graded commutator [D,E] = DE - (-1)^{p(d(D)d(E))} ED (first kind; the
// second-kind sign is used on second-kind algebras). Built generator-wise.
Derivation commutator(const Derivation& D, const Derivation& E, const std::string& name = "");

// Sum_{p>=0} D^p f / p!, stopping when D^p f = 0; NotNilpotent past maxIter.
Polynomial expApply(const Derivation& D, const Polynomial& f, unsigned maxIter = 64);

// Algebra endomorphism determined by generator images (identity where unset).
class Substitution {
 public:
  explicit Substitution(AlgebraPtr alg) : alg_(std::move(alg)) {}
  void set(GenId g, Polynomial image);   // image must be homogeneous of g's degree
  Polynomial apply(const Polynomial& f) const;
  Polynomial operator()(const Polynomial& f) const { return apply(f); }

 private:
  AlgebraPtr alg_;
  std::unordered_map<GenId, Polynomial> images_;
};

// Phi o D o PhiInv as a derivation table (PhiInv must invert Phi on the
// generators D touches).
Derivation conjugate(const Derivation& D, const Substitution& phi, const Substitution& phiInv,
                     const std::string& name = "");

}  // namespace cohoma
