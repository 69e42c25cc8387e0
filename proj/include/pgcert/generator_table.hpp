#pragma once

#include <cstdint>
#include <vector>

#include "pgcert/element.hpp"
#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"

namespace pgcert {

/// Right multiplication by each pc-generator, tabulated on element ranks.
/// x * y then costs at most m(p-1) lookups instead of a collection. The
/// table is built with the collector, so it is only meaningful for a
/// consistent presentation; the collector stays the reference.
class GeneratorTable {
 public:
  using Rank = std::uint32_t;

  explicit GeneratorTable(const PcPresentation& P, Exec exec = Exec::parallel,
                          std::uint64_t bound = kDefaultElementBound);

  std::uint64_t order() const { return order_; }
  std::size_t ngens() const { return m_; }

  Rank times_generator(Rank x, std::size_t k) const { return next_[x * m_ + k]; }
  Rank inverse(Rank x) const { return inverse_[x]; }
  Rank multiply(Rank x, Rank y) const;
  Rank multiply(Rank x, const Element& y) const;

  Rank rank(const Element& x) const;
  Element element(Rank r) const;

 private:
  int p_;
  std::size_t m_;
  std::uint64_t order_;
  std::vector<Rank> next_;  // order x m, row-major
  std::vector<Rank> inverse_;
};

}  // namespace pgcert
