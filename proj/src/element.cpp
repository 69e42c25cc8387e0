#include "pgcert/element.hpp"

#include <stdexcept>

namespace pgcert {

Element::Element(std::size_t ngens) : size_(static_cast<std::uint8_t>(ngens)) {
  if (ngens > kMaxGenerators)
    throw std::length_error("too many generators");
}

Element::Element(std::initializer_list<int> exps)
    : Element(std::span<const int>(exps.begin(), exps.size())) {}

Element::Element(std::span<const int> exps) : Element(exps.size()) {
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0 || exps[k] > 255)
      throw std::out_of_range("exponent out of byte range");
    exps_[k] = static_cast<std::uint8_t>(exps[k]);
  }
}

Element Element::generator(std::size_t ngens, std::size_t k, int exponent) {
  Element g(ngens);
  g.set(k, exponent);
  return g;
}

bool Element::is_identity() const {
  for (std::size_t k = 0; k < size_; ++k)
    if (exps_[k])
      return false;
  return true;
}

std::size_t Element::depth() const {
  for (std::size_t k = 0; k < size_; ++k)
    if (exps_[k])
      return k;
  return size_;
}

int Element::leading_exponent() const {
  std::size_t d = depth();
  return d < size_ ? exps_[d] : 0;
}

std::vector<int> Element::to_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + size_);
}

Word to_word(const Element& x) {
  Word w;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k])
      w.push_back({k, x[k]});
  return w;
}

}  // namespace pgcert
