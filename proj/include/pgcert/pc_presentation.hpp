#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgcert/element.hpp"

namespace pgcert {

/// Relations as written by a user: g_i^p = powers[i], [g_j, g_i] = commutators[{j, i}].
/// Generator indices are 0-based. Omitted relations are trivial.
struct PresentationSpec {
  int prime = 0;
  std::size_t ngens = 0;
  std::map<std::size_t, Word> powers;
  std::map<std::pair<std::size_t, std::size_t>, Word> commutators;
};

/// Which family of overlaps a consistency witness came from.
enum class OverlapKind {
  triple,       // g_k (g_j g_i)  vs (g_k g_j) g_i,        k > j > i
  power_left,   // (g_j^p) g_i    vs g_j^{p-1} (g_j g_i),  j > i
  power_right,  // g_j (g_i^p)    vs (g_j g_i) g_i^{p-1},  j > i
  power_power,  // g_i (g_i^p)    vs (g_i^p) g_i
};

struct ConsistencyWitness {
  OverlapKind kind = OverlapKind::triple;
  std::size_t k = 0, j = 0, i = 0;  // unused indices are left at 0
  Element lhs;
  Element rhs;
};

/// Power-commutator presentation of a group of order p^m in which every
/// relative order is p and the relations are weighted:
///   g_i^p       is a normal form in generators > i,
///   [g_j, g_i]  is a normal form in generators > j   (j > i).
///
/// Immutable after construction; all arithmetic is const and thread-safe.
/// Commutators follow [x, y] = x^-1 y^-1 x y and conjugation x^g = g^-1 x g.
class PcPresentation {
 public:
  /// Checks the syntactic invariants and throws PresentationError on failure.
  /// Consistency is a separate question, see validate_consistency().
  explicit PcPresentation(const PresentationSpec& spec);

  int prime() const { return p_; }
  std::size_t ngens() const { return m_; }

  /// p^m, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  const Element& power_relation(std::size_t i) const { return powers_[i]; }
  const Element& commutator_relation(std::size_t j, std::size_t i) const {
    return comms_[j * m_ + i];
  }

  Element identity() const { return Element(m_); }
  Element generator(std::size_t k) const;

  /// Normal form of an arbitrary word; throws std::out_of_range on a bad index.
  Element collect(const Word& w) const;

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element power(const Element& x, long long k) const;
  /// x^g = g^-1 x g
  Element conjugate(const Element& x, const Element& g) const;
  /// [x, y] = x^-1 y^-1 x y
  Element commutator(const Element& x, const Element& y) const;
  std::uint64_t element_order(const Element& x) const;

  /// Position of x in the lexicographic enumeration (e_1 most significant).
  std::uint64_t rank(const Element& x) const;
  Element element_at(std::uint64_t rank) const;

  PresentationSpec to_spec() const;

 private:
  struct Syllable {
    std::uint8_t gen;
    std::uint8_t exp;
  };

  void absorb(Element& r, std::span<const Syllable> word) const;
  void absorb_one(Element& r, std::size_t k, int e) const;
  void absorb_power(Element& r, std::size_t k, int e) const;
  static std::vector<Syllable> syllables(const Element& x);

  int p_ = 0;
  std::size_t m_ = 0;
  std::vector<Element> powers_;
  std::vector<Element> comms_;  // row-major m x m, only j > i used
  std::vector<std::vector<Syllable>> power_syllables_;
  std::vector<std::vector<Syllable>> comm_syllables_;
};

inline constexpr std::uint64_t kDefaultElementBound = 100000;

/// All p^m normal forms in lexicographic order; throws BoundExceeded above `bound`.
std::vector<Element> enumerate_elements(const PcPresentation& P,
                                        std::uint64_t bound = kDefaultElementBound);

/// Group order if it does not exceed `bound`, otherwise throws BoundExceeded.
std::uint64_t checked_order(const PcPresentation& P,
                            std::uint64_t bound = kDefaultElementBound);

/// Runs the standard overlap tests; nullopt means consistent (|G| = p^m).
std::optional<ConsistencyWitness> validate_consistency(const PcPresentation& P);

std::string describe(const ConsistencyWitness& w);

bool is_prime(long long n);

}  // namespace pgcert
