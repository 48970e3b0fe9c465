#include "cohoma/algebra.hpp"

namespace cohoma {

std::string Algebra::displayName(const std::string& name, const std::vector<int>& indices,
                                 const std::vector<int>& jet) {
  std::string s = name;
  if (!indices.empty() || !jet.empty()) {
    s += "[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(indices[i]);
    }
    if (!jet.empty()) {
      s += ";";
      for (std::size_t i = 0; i < jet.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(jet[i]);
      }
    }
    s += "]";
  }
  return s;
}

GenId Algebra::declare(std::string name, std::vector<int> indices, Bidegree deg,
                       std::vector<int> jet) {
  GenInfo info;
  info.display = displayName(name, indices, jet);
  info.name = std::move(name);
  info.indices = std::move(indices);
  info.jet = std::move(jet);
  info.deg = deg;
  auto [it, fresh] = byName_.emplace(info.display, static_cast<GenId>(gens_.size()));
  if (!fresh) throw Error(Err::UnknownName, "generator redeclared: " + info.display);
  gens_.push_back(std::move(info));
  return it->second;
}

GenId Algebra::find(const std::string& display) const {
  auto it = byName_.find(display);
  if (it == byName_.end()) throw Error(Err::UnknownGenerator, "unknown generator: " + display);
  return it->second;
}

std::shared_ptr<Algebra> Algebra::withConvention(Convention c) const {
  auto twin = std::make_shared<Algebra>(*this);
  twin->conv_ = c;
  return twin;
}

}  // namespace cohoma
