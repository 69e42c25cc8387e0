#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pgcert {

/// Upper bound on the number of pc-generators of a presentation.
inline constexpr std::size_t kMaxGenerators = 32;

/// Largest prime supported; exponents are stored as bytes.
inline constexpr int kMaxPrime = 251;

/// Collected normal form g_1^{e_1} ... g_m^{e_m} with every e_k in [0, p).
///
/// Storage is inline so elements are cheap to copy inside exhaustive loops.
/// Entries past size() are always zero, which makes equality and ordering a
/// plain array comparison.
class Element {
 public:
  Element() = default;

  /// Identity of a group with `ngens` pc-generators.
  explicit Element(std::size_t ngens);

  Element(std::initializer_list<int> exps);
  explicit Element(std::span<const int> exps);

  static Element generator(std::size_t ngens, std::size_t k, int exponent = 1);

  std::size_t size() const { return size_; }
  int operator[](std::size_t k) const { return exps_[k]; }
  void set(std::size_t k, int e) { exps_[k] = static_cast<std::uint8_t>(e); }

  bool is_identity() const;

  /// Index of the first nonzero exponent, or size() for the identity.
  std::size_t depth() const;
  int leading_exponent() const;

  std::vector<int> to_vector() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
    return x.exps_ <=> y.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxGenerators> exps_{};
  std::uint8_t size_ = 0;
};

/// One syllable g_gen^exponent of a word; `gen` is a 0-based generator index.
struct Letter {
  std::size_t gen = 0;
  long long exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Arbitrary word in the pc-generators; exponents may be any integers.
using Word = std::vector<Letter>;

/// Word spelling a normal form.
Word to_word(const Element& x);

}  // namespace pgcert
