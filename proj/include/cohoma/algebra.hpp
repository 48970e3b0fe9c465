#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cohoma/bidegree.hpp"
#include "cohoma/coeff.hpp"

namespace cohoma {

using GenId = std::uint32_t;

struct GenInfo {
  std::string name;            // base name, e.g. "theta"
  std::vector<int> indices;    // component indices, e.g. {1,2}
  std::vector<int> jet;        // sorted jet multi-index (empty for non-jet generators)
  Bidegree deg;
  std::string display;         // canonical rendering, e.g. "theta[1,2;1,1]"
};

// A finitely generated bigraded-commutative polynomial algebra. Generators are
// identified by dense ids; declaration order fixes the canonical monomial
// order. Immutable once handed to polynomials (declare up front).
class Algebra {
 public:
  explicit Algebra(Convention c = Convention::FirstKind) : conv_(c) {}

  GenId declare(std::string name, std::vector<int> indices, Bidegree deg,
                std::vector<int> jet = {});

  const GenInfo& gen(GenId id) const { return gens_.at(id); }
  std::size_t size() const { return gens_.size(); }
  Convention convention() const { return conv_; }

  // lookup by display name; throws UnknownGenerator
  GenId find(const std::string& display) const;
  bool has(const std::string& display) const { return byName_.count(display) != 0; }

  static std::string displayName(const std::string& name, const std::vector<int>& indices,
                                  const std::vector<int>& jet);

  // A copy of this algebra carrying the other sign convention (same
  // generators, same ids).
  std::shared_ptr<Algebra> withConvention(Convention c) const;

 private:
  Convention conv_;
  std::vector<GenInfo> gens_;
  std::map<std::string, GenId> byName_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace cohoma
