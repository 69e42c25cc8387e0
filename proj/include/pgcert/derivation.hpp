#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgcert/group_map.hpp"
#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"
#include "pgcert/remark.hpp"
#include "pgcert/structure.hpp"
#include "pgcert/subgroup.hpp"

namespace pgcert {

/// Least element of the coset gN (N normal, so also of Ng).
Element canonical_rep(const PcPresentation& P, const Subgroup& N, const Element& g);

/// A map G/N -> Z(N) stored as a full table indexed by Subgroup::coset_index.
/// Construction checks the table shape and that every value lies in Z(N);
/// the cocycle identity is checked separately by verify_cocycle.
class Derivation {
 public:
  Derivation(const PcPresentation& P, Subgroup N, std::vector<Element> values);

  /// γ ≡ 1
  static Derivation zero(const PcPresentation& P, const Subgroup& N);

  const Subgroup& N() const { return N_; }
  std::uint64_t coset_count() const { return values_.size(); }
  const std::vector<Element>& values() const { return values_; }
  const Element& at_coset(std::uint64_t index) const { return values_[index]; }
  const Element& operator()(const PcPresentation& P, const Element& g) const {
    return values_[N_.coset_index(P, g)];
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.N_ == b.N_ && a.values_ == b.values_;
  }

 private:
  Subgroup N_;
  std::vector<Element> values_;
};

/// (γ1 γ2)(x) = γ1(x) γ2(x); the group operation of Z^1(G/N, Z(N)).
Derivation pointwise_product(const PcPresentation& P, const Derivation& d1, const Derivation& d2);

/// Closed-form values of the two derivations at any element of G. Holds the
/// coordinate frames on G/Φ(G) (basis a, b) and on Φ(G)/Z_{m-4} (basis [a, b]).
class RemarkFormulas {
 public:
  RemarkFormulas(const PcPresentation& P, const RemarkContext& ctx);

  struct Exponents {
    int i = 0;  // exponent of b, read in G/C_G(N)
    int j = 0;  // exponent of a, read in C_G(N)/Φ(G)
    int t = 0;  // exponent of [a, b] in Φ(G)/Z_{m-4} after removing a^j b^i
  };
  /// g ≡ x [a,b]^t a^j b^i with x ∈ Z_{m-4}.
  Exponents decompose(const PcPresentation& P, const Element& g) const;

  /// w^i [w,b]^{i(i-1)/2}
  Element alpha(const PcPresentation& P, const Element& g) const;
  /// w^j [w,b]^{ij+t}
  Element beta(const PcPresentation& P, const Element& g) const;

 private:
  Element w_, c_wb_;
  Element a_inv_, b_inv_;
  SectionCoordinates top_;
  SectionCoordinates bottom_;
};

Derivation build_alpha(const PcPresentation& P, const RemarkContext& ctx,
                       Exec exec = Exec::parallel);
Derivation build_beta(const PcPresentation& P, const RemarkContext& ctx,
                      Exec exec = Exec::parallel);

struct CocycleViolation {
  Element g1, g2;  // canonical reps
  Element lhs;     // γ(N g1 g2)
  Element rhs;     // γ(N g1)^{g2} γ(N g2)
};

/// Exhaustive over all |G/N|^2 pairs; reports the lexicographically first violation.
/// Products go through a GeneratorTable, so P must be consistent.
std::optional<CocycleViolation> verify_cocycle(const PcPresentation& P, const Derivation& d,
                                               Exec exec = Exec::parallel);

/// The same sweep with every product collected; serial reference for tests.
std::optional<CocycleViolation> verify_cocycle_direct(const PcPresentation& P,
                                                      const Derivation& d);

/// First g ∈ G (over all elements, not just reps) where formula(g) != d(Ng).
std::optional<Element> first_ill_defined(const PcPresentation& P, const Derivation& d,
                                         const std::function<Element(const Element&)>& formula,
                                         Exec exec = Exec::parallel);

/// g_k -> g_k d(N g_k). Verifies the cocycle identity first (DerivationError
/// if it fails) and then asserts g -> g d(Ng) on every element.
GroupMap phi_realize(const PcPresentation& P, const Derivation& d, Exec exec = Exec::parallel);

inline constexpr std::uint64_t kDefaultZ1CosetBound = 243;  // 3^5

/// All of Z^1(G/N, Z(N)) by propagation from generators of G/N, then filtering.
/// Ordered by the index of the generator assignment they were propagated from.
std::vector<Derivation> enumerate_Z1(const PcPresentation& P, const Subgroup& N,
                                     std::uint64_t coset_bound = kDefaultZ1CosetBound,
                                     Exec exec = Exec::parallel);

}  // namespace pgcert
