#include "cohoma/derivation.hpp"

namespace cohoma {

void Derivation::set(GenId g, Polynomial image) {
  if (!image.isZero()) {
    auto d = image.homogeneousDegree();
    Bidegree want = alg_->gen(g).deg + deg_;
    if (!d || !(*d == want))
      throw Error(Err::DegreeMismatch,
                  "derivation " + name_ + ": image of " + alg_->gen(g).display +
                      " must be homogeneous of degree " + want.str());
  }
  action_[g] = std::move(image);
}

bool Derivation::poisoned(GenId g) const {
  auto it = action_.find(g);
  return it != action_.end() && !it->second.has_value();
}

Polynomial Derivation::imageOf(GenId g) const {
  auto it = action_.find(g);
  if (it == action_.end()) return Polynomial::zero(alg_);
  if (!it->second)
    throw Error(Err::TruncationExceeded,
                "derivation " + name_ + " applied to " + alg_->gen(g).display +
                    " exceeds the jet truncation");
  return *it->second;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  if (f.algebra() && alg_ && f.algebra()->convention() != alg_->convention())
    throw Error(Err::ConventionMismatch, "derivation " + name_ + ": convention mismatch");
  Polynomial r(alg_);
  std::vector<GenId> prefix, suffix;
  for (const auto& [m, c] : f.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      GenId g = m.factors[i];
      // zero images are the common case; skip before building the pieces
      auto it = action_.find(g);
      if (it == action_.end()) {
        sign *= commuteSign(alg_->convention(), deg_, alg_->gen(g).deg);
        continue;
      }
      Polynomial img = imageOf(g);
      if (!img.isZero()) {
        prefix.assign(m.factors.begin(), m.factors.begin() + static_cast<std::ptrdiff_t>(i));
        suffix.assign(m.factors.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.factors.end());
        Polynomial left(alg_);
        left.addWord(prefix, sign < 0 ? -c : c);
        Polynomial right(alg_);
        right.addWord(suffix, Coeff(1));
        r += left * img * right;
      }
      sign *= commuteSign(alg_->convention(), deg_, alg_->gen(g).deg);
    }
  }
  return r;
}

Derivation Derivation::scaled(const Coeff& c) const {
  Derivation r(alg_, name_, deg_);
  for (const auto& [g, img] : action_) {
    if (img) r.action_[g] = img->scaled(c);
    else r.action_[g] = std::nullopt;
  }
  return r;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  if (!(a.deg_ == b.deg_))
    throw Error(Err::DegreeMismatch, "adding derivations of different degrees");
  Derivation r(a.alg_, a.name_ + "+" + b.name_, a.deg_);
  for (const auto& [g, img] : a.action_) r.action_[g] = img;
  for (const auto& [g, img] : b.action_) {
    auto it = r.action_.find(g);
    if (it == r.action_.end()) { r.action_[g] = img; continue; }
    if (!it->second || !img) { it->second = std::nullopt; continue; }
    *it->second += *img;
    if (it->second->isZero()) r.action_.erase(it);
  }
  return r;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  return a + b.scaled(Coeff(-1));
}

Derivation Derivation::convertConvention(AlgebraPtr target) const {
  Derivation r(target, name_ + "'", deg_);
  for (const auto& [g, img] : action_) {
    if (!img) { r.action_[g] = std::nullopt; continue; }
    Polynomial p = img->convertConvention(target);
    long long e = deg_.v * alg_->gen(g).deg.h;
    r.action_[g] = (e % 2) ? -p : p;
  }
  return r;
}

Derivation commutator(const Derivation& D, const Derivation& E, const std::string& name) {
  const AlgebraPtr& alg = D.algebra();
  int sign = commuteSign(alg->convention(), D.degree(), E.degree());
  Derivation r(alg, name.empty() ? "[" + D.name() + "," + E.name() + "]" : name,
               D.degree() + E.degree());
  for (GenId g = 0; g < alg->size(); ++g) {
    bool ePoisoned = E.poisoned(g) || D.poisoned(g);
    if (!ePoisoned) {
      // inner image may itself touch poisoned generators
      try {
        Polynomial val = D.apply(E.imageOf(g));
        Polynomial ed = E.apply(D.imageOf(g));
        Polynomial img = sign < 0 ? val + ed : val - ed;
        if (!img.isZero()) r.set(g, std::move(img));
        continue;
      } catch (const Error& e) {
        if (e.code != Err::TruncationExceeded) throw;
      }
    }
    r.poison(g);
  }
  return r;
}

Polynomial expApply(const Derivation& D, const Polynomial& f, unsigned maxIter) {
  Polynomial sum = f;
  Polynomial term = f;
  Rat fact = 1;
  for (unsigned p = 1; !term.isZero(); ++p) {
    if (p > maxIter)
      throw Error(Err::NotNilpotent,
                  "exp(" + D.name() + ") did not terminate within " + std::to_string(maxIter) +
                      " iterations");
    term = D.apply(term);
    fact *= p;
    sum += term.scaled(Coeff(Rat(1) / fact));
  }
  return sum;
}

void Substitution::set(GenId g, Polynomial image) {
  if (!image.isZero()) {
    auto d = image.homogeneousDegree();
    if (!d || !(*d == alg_->gen(g).deg))
      throw Error(Err::DegreeMismatch,
                  "substitution image of " + alg_->gen(g).display + " must have degree " +
                      alg_->gen(g).deg.str());
  }
  images_[g] = std::move(image);
}

Polynomial Substitution::apply(const Polynomial& f) const {
  Polynomial r(alg_);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(alg_, c);
    for (GenId g : m.factors) {
      auto it = images_.find(g);
      t = it == images_.end() ? t * Polynomial::generator(alg_, g) : t * it->second;
    }
    r += t;
  }
  return r;
}

Derivation conjugate(const Derivation& D, const Substitution& phi, const Substitution& phiInv,
                     const std::string& name) {
  const AlgebraPtr& alg = D.algebra();
  Derivation r(alg, name.empty() ? "conj(" + D.name() + ")" : name, D.degree());
  for (GenId g = 0; g < alg->size(); ++g) {
    try {
      Polynomial img = phi.apply(D.apply(phiInv.apply(Polynomial::generator(alg, g))));
      if (!img.isZero()) r.set(g, std::move(img));
    } catch (const Error& e) {
      if (e.code != Err::TruncationExceeded) throw;
      r.poison(g);
    }
  }
  return r;
}

}  // namespace cohoma
