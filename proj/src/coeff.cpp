#include "cohoma/coeff.hpp"

namespace cohoma {

std::string ratStr(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string Coeff::str() const {
  if (im == 0) return ratStr(re);
  std::string imPart;
  if (im == 1) imPart = "i";
  else if (im == -1) imPart = "-i";
  else imPart = ratStr(im) + "*i";
  if (re == 0) return imPart;
  if (im > 0) return "(" + ratStr(re) + "+" + imPart + ")";
  return "(" + ratStr(re) + imPart + ")";
}

}  // namespace cohoma
