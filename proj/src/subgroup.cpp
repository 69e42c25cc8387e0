#include "pgcert/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "pgcert/errors.hpp"
#include "pgcert/fp_matrix.hpp"

namespace pgcert {

namespace {

// Induced pc-sequence under construction, one slot per depth.
class PivotTable {
 public:
  explicit PivotTable(const PcPresentation& P) : P_(P), slots_(P.ngens()) {}

  Element sift(Element x) const {
    for (;;) {
      const std::size_t d = x.depth();
      if (d == x.size() || !slots_[d])
        return x;
      x = P_.multiply(P_.power(*slots_[d], P_.prime() - x[d]), x);
    }
  }

  // Inserts the sifted remainder if nontrivial; returns it normalized.
  std::optional<Element> insert(const Element& x) {
    Element r = sift(x);
    if (r.is_identity())
      return std::nullopt;
    r = P_.power(r, inverse_mod(r.leading_exponent(), P_.prime()));
    slots_[r.depth()] = r;
    ++count_;
    return r;
  }

  std::vector<Element> basis() const {
    std::vector<Element> out;
    for (const auto& s : slots_)
      if (s)
        out.push_back(*s);
    return out;
  }

  std::size_t size() const { return count_; }

 private:
  const PcPresentation& P_;
  std::vector<std::optional<Element>> slots_;
  std::size_t count_ = 0;
};

}  // namespace

Subgroup::Subgroup(const PcPresentation& P) : Subgroup(P, {}) {}

Subgroup::Subgroup(const PcPresentation& P, std::vector<Element> basis)
    : p_(P.prime()), m_(P.ngens()), basis_(std::move(basis)), slot_of_depth_(P.ngens(), -1) {
  std::sort(basis_.begin(), basis_.end(),
            [](const Element& a, const Element& b) { return a.depth() < b.depth(); });
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].leading_exponent() != 1)
      basis_[i] = P.power(basis_[i], inverse_mod(basis_[i].leading_exponent(), p_));
    if (i && basis_[i].depth() == basis_[i - 1].depth())
      throw InvariantViolation("subgroup basis has repeated depth");
  }
  // Right multiplication by an element of depth d leaves positions < d alone
  // and adds exponents at d, so clearing later pivots in ascending order is stable.
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      const std::size_t d = basis_[j].depth();
      if (int e = basis_[i][d])
        basis_[i] = P.multiply(basis_[i], P.power(basis_[j], p_ - e));
    }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    pivots_.push_back(basis_[i].depth());
    slot_of_depth_[basis_[i].depth()] = static_cast<int>(i);
  }
  powers_.reserve(basis_.size() * static_cast<std::size_t>(p_));
  for (const Element& b : basis_) {
    Element acc = P.identity();
    for (int e = 0; e < p_; ++e) {
      powers_.push_back(acc);
      acc = P.multiply(acc, b);
    }
  }
  for (const Element& b : basis_)
    for (std::size_t k = 0; k < m_ && normal_; ++k)
      if (!contains(P, P.conjugate(b, P.generator(k))))
        normal_ = false;
}

Subgroup Subgroup::whole(const PcPresentation& P) {
  std::vector<Element> gens;
  for (std::size_t k = 0; k < P.ngens(); ++k)
    gens.push_back(P.generator(k));
  return Subgroup(P, std::move(gens));
}

Subgroup Subgroup::closure(const PcPresentation& P, std::span<const Element> gens) {
  PivotTable table(P);
  std::vector<Element> inserted;
  std::deque<Element> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    auto added = table.insert(x);
    if (!added)
      continue;
    queue.push_back(P.power(*added, P.prime()));
    for (const Element& b : inserted)
      queue.push_back(P.commutator(*added, b));
    inserted.push_back(*added);
  }
  return Subgroup(P, table.basis());
}

Subgroup Subgroup::from_members(const PcPresentation& P, std::span<const Element> members) {
  PivotTable table(P);
  std::uint64_t reached = 1;
  for (const Element& x : members) {
    if (reached >= members.size())
      break;
    if (table.insert(x))
      reached *= static_cast<std::uint64_t>(P.prime());
  }
  if (reached != members.size())
    throw InvariantViolation("member set is not a subgroup (size is not p^k)");
  auto basis = table.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!table.sift(P.power(basis[i], P.prime())).is_identity())
      throw InvariantViolation("member set is not closed under p-th powers");
    for (std::size_t j = 0; j < i; ++j)
      if (!table.sift(P.commutator(basis[i], basis[j])).is_identity())
        throw InvariantViolation("member set is not closed under commutators");
  }
  return Subgroup(P, std::move(basis));
}

std::uint64_t Subgroup::order() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    n *= static_cast<std::uint64_t>(p_);
  return n;
}

Element Subgroup::sift(const PcPresentation& P, Element g) const {
  for (;;) {
    const std::size_t d = g.depth();
    if (d == m_ || slot_of_depth_[d] < 0)
      return g;
    g = P.multiply(basis_power(static_cast<std::size_t>(slot_of_depth_[d]), p_ - g[d]), g);
  }
}

bool Subgroup::contains(const PcPresentation& P, const Element& g) const {
  return sift(P, g).is_identity();
}

bool Subgroup::contains(const PcPresentation& P, const Subgroup& other) const {
  for (const Element& b : other.basis_)
    if (!contains(P, b))
      return false;
  return true;
}

Element Subgroup::canonical_rep(const PcPresentation& P, Element g) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (int e = g[pivots_[i]])
      g = P.multiply(g, basis_power(i, p_ - e));
  return g;
}

std::uint64_t Subgroup::coset_count(const PcPresentation&) const {
  std::uint64_t n = 1;
  for (std::size_t k = basis_.size(); k < m_; ++k)
    n *= static_cast<std::uint64_t>(p_);
  return n;
}

std::uint64_t Subgroup::coset_index(const PcPresentation& P, const Element& g) const {
  const Element r = canonical_rep(P, g);
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < m_; ++k)
    if (slot_of_depth_[k] < 0)
      idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(r[k]);
  return idx;
}

Element Subgroup::coset_rep(const PcPresentation&, std::uint64_t index) const {
  Element r(m_);
  for (std::size_t k = m_; k-- > 0;) {
    if (slot_of_depth_[k] >= 0)
      continue;
    r.set(k, static_cast<int>(index % static_cast<std::uint64_t>(p_)));
    index /= static_cast<std::uint64_t>(p_);
  }
  return r;
}

std::vector<Element> Subgroup::elements(const PcPresentation& P, std::uint64_t bound) const {
  if (order() > bound)
    throw BoundExceeded("subgroup of order " + std::to_string(order()) + " exceeds bound");
  std::vector<Element> out{P.identity()};
  // Right-to-left so every prefix product stays a normal-form product of basis powers.
  for (std::size_t i = basis_.size(); i-- > 0;) {
    std::vector<Element> next;
    next.reserve(out.size() * static_cast<std::size_t>(p_));
    for (int e = 0; e < p_; ++e)
      for (const Element& x : out)
        next.push_back(P.multiply(basis_power(i, e), x));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgcert
