#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pgcert/element.hpp"
#include "pgcert/pc_presentation.hpp"

namespace pgcert {

/// Subgroup stored as its canonical induced pc-sequence: basis elements have
/// strictly increasing depth, leading exponent 1, and exponent 0 at the depth
/// of every later basis element. Equal subgroups have identical bases.
class Subgroup {
 public:
  /// Trivial subgroup.
  explicit Subgroup(const PcPresentation& P);

  static Subgroup whole(const PcPresentation& P);

  /// Smallest subgroup containing `gens`.
  static Subgroup closure(const PcPresentation& P, std::span<const Element> gens);

  /// `members` must already be closed under multiplication; the closure
  /// condition is re-verified and InvariantViolation thrown otherwise.
  static Subgroup from_members(const PcPresentation& P, std::span<const Element> members);

  std::span<const Element> basis() const { return basis_; }
  std::size_t log_order() const { return basis_.size(); }
  std::uint64_t order() const;
  bool is_trivial() const { return basis_.empty(); }
  bool is_normal() const { return normal_; }

  /// Depths of the basis elements, ascending.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const PcPresentation& P, const Element& g) const;
  bool contains(const PcPresentation& P, const Subgroup& other) const;

  /// Remainder of g after stripping basis elements from the left; identity iff g is a member.
  Element sift(const PcPresentation& P, Element g) const;

  /// Lexicographically least element of the coset gS. Equals the element of gS
  /// with zero exponent at every pivot. For normal S this is also the least of Sg.
  Element canonical_rep(const PcPresentation& P, Element g) const;

  /// |G : S| and a dense index of the cosets, ordered like their canonical reps.
  std::uint64_t coset_count(const PcPresentation& P) const;
  std::uint64_t coset_index(const PcPresentation& P, const Element& g) const;
  Element coset_rep(const PcPresentation& P, std::uint64_t index) const;

  /// Every member, lexicographically sorted. Throws BoundExceeded above `bound`.
  std::vector<Element> elements(const PcPresentation& P,
                                std::uint64_t bound = kDefaultElementBound) const;

  /// Basis slot whose element has depth d, or -1.
  int slot_of_depth(std::size_t d) const { return slot_of_depth_[d]; }
  /// basis()[slot]^e for e in [0, p).
  const Element& basis_power(std::size_t slot, int e) const {
    return powers_[slot * static_cast<std::size_t>(p_) + static_cast<std::size_t>(e)];
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.basis_ == b.basis_; }

 private:
  Subgroup(const PcPresentation& P, std::vector<Element> basis);
  int p_ = 0;
  std::size_t m_ = 0;
  std::vector<Element> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<int> slot_of_depth_;  // basis slot or -1
  std::vector<Element> powers_;     // basis_[i]^e for e in [0, p)
  bool normal_ = true;
};

}  // namespace pgcert
