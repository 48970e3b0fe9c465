#include "cohoma/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cohoma {

SignedMonomial normalizeWord(const Algebra& alg, std::span<const GenId> word) {
  SignedMonomial out;
  out.mono.factors.reserve(word.size());
  int sign = 1;
  Bidegree deg{0, 0};
  // insertion sort; each adjacent transposition contributes the convention sign
  for (GenId g : word) {
    if (g >= alg.size()) throw Error(Err::UnknownGenerator, "generator id out of range");
    Bidegree dg = alg.gen(g).deg;
    deg += dg;
    auto& f = out.mono.factors;
    std::size_t pos = f.size();
    while (pos > 0 && f[pos - 1] > g) {
      sign *= commuteSign(alg.convention(), alg.gen(f[pos - 1]).deg, dg);
      --pos;
    }
    if (pos > 0 && f[pos - 1] == g && alg.gen(g).deg.parity() == 1) {
      out.sign = 0;  // odd square
      out.mono.factors.clear();
      out.mono.deg = {0, 0};
      return out;
    }
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(pos), g);
  }
  out.sign = sign;
  out.mono.deg = deg;
  return out;
}

Polynomial Polynomial::one(AlgebraPtr alg) {
  Polynomial p(alg);
  p.addTerm(Monomial{}, Coeff(1));
  return p;
}

Polynomial Polynomial::constant(AlgebraPtr alg, const Coeff& c) {
  Polynomial p(alg);
  p.addTerm(Monomial{}, c);
  return p;
}

Polynomial Polynomial::generator(AlgebraPtr alg, GenId g) {
  Polynomial p(alg);
  GenId w[1] = {g};
  p.addWord(w, Coeff(1));
  return p;
}

std::optional<Bidegree> Polynomial::homogeneousDegree() const {
  if (terms_.empty()) return std::nullopt;
  Bidegree d = terms_.begin()->first.deg;
  for (const auto& [m, c] : terms_)
    if (!(m.deg == d)) return std::nullopt;
  return d;
}

void Polynomial::addTerm(const Monomial& m, const Coeff& c) {
  if (c.isZero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void Polynomial::addWord(std::span<const GenId> word, const Coeff& c) {
  SignedMonomial sm = normalizeWord(*alg_, word);
  if (sm.sign == 0) return;
  addTerm(sm.mono, sm.sign < 0 ? -c : c);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  AlgebraPtr alg = a.alg_ ? a.alg_ : b.alg_;
  Polynomial r(alg);
  std::vector<GenId> word;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      word.clear();
      word.insert(word.end(), ma.factors.begin(), ma.factors.end());
      word.insert(word.end(), mb.factors.begin(), mb.factors.end());
      r.addWord(word, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(alg_);
  if (c.isZero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::one(alg_);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Coeff Polynomial::coefficient(std::span<const GenId> word) const {
  SignedMonomial sm = normalizeWord(*alg_, word);
  if (sm.sign == 0) return Coeff(0);
  auto it = terms_.find(sm.mono);
  if (it == terms_.end()) return Coeff(0);
  return sm.sign < 0 ? -it->second : it->second;
}

Polynomial Polynomial::convertConvention(AlgebraPtr target) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    long long e = 0;
    for (std::size_t p = 0; p < m.factors.size(); ++p)
      for (std::size_t q = p + 1; q < m.factors.size(); ++q)
        e += alg_->gen(m.factors[p]).deg.v * alg_->gen(m.factors[q]).deg.h;
    r.addTerm(m, (e % 2) ? -c : c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coeff k = c;
    bool neg = k.im == 0 && k.re < 0;
    if (first) {
      if (neg) { os << "-"; k = -k; }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) k = -k;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.factors.size();) {
      std::size_t j = i;
      while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += alg_->gen(m.factors[i]).display;
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      os << k.str();
    } else if (k.isOne()) {
      os << mono;
    } else {
      os << k.str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace cohoma
