#include "pgcert/generator_table.hpp"

#include <array>

namespace pgcert {

GeneratorTable::GeneratorTable(const PcPresentation& P, Exec exec, std::uint64_t bound)
    : p_(P.prime()), m_(P.ngens()), order_(checked_order(P, bound)) {
  const std::size_t m = m_;
  next_.resize(order_ * m);
  inverse_ = tabulate<Rank>(exec, order_, [&](std::uint64_t r) {
    const Element x = P.element_at(r);
    for (std::size_t k = 0; k < m; ++k)
      next_[r * m + k] = static_cast<Rank>(P.rank(P.multiply(x, P.generator(k))));
    return static_cast<Rank>(P.rank(P.inverse(x)));
  });
}

GeneratorTable::Rank GeneratorTable::multiply(Rank x, const Element& y) const {
  for (std::size_t k = 0; k < m_; ++k)
    for (int e = y[k]; e > 0; --e)
      x = next_[x * m_ + k];
  return x;
}

GeneratorTable::Rank GeneratorTable::multiply(Rank x, Rank y) const {
  std::array<std::uint8_t, kMaxGenerators> digits{};
  for (std::size_t k = m_; k-- > 0;) {
    digits[k] = static_cast<std::uint8_t>(y % static_cast<Rank>(p_));
    y /= static_cast<Rank>(p_);
  }
  for (std::size_t k = 0; k < m_; ++k)
    for (int e = digits[k]; e > 0; --e)
      x = next_[x * m_ + k];
  return x;
}

GeneratorTable::Rank GeneratorTable::rank(const Element& x) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < m_; ++k)
    r = r * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(x[k]);
  return static_cast<Rank>(r);
}

Element GeneratorTable::element(Rank r) const {
  Element x(m_);
  for (std::size_t k = m_; k-- > 0;) {
    x.set(k, static_cast<int>(r % static_cast<Rank>(p_)));
    r /= static_cast<Rank>(p_);
  }
  return x;
}

}  // namespace pgcert
