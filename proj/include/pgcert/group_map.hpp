#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"
#include "pgcert/structure.hpp"
#include "pgcert/subgroup.hpp"

namespace pgcert {

/// Candidate endomorphism given by the images of the pc-generators.
struct GroupMap {
  std::vector<Element> images;

  static GroupMap identity(const PcPresentation& P);
  /// i_g : x -> g^-1 x g
  static GroupMap inner(const PcPresentation& P, const Element& g);

  friend bool operator==(const GroupMap&, const GroupMap&) = default;
};

/// prod_k images[k]^{x_k}; this is the homomorphism determined by the images
/// whenever the images satisfy the defining relations.
Element apply_map(const PcPresentation& P, const GroupMap& f, const Element& x);

/// Apply `first`, then `second`.
GroupMap compose(const PcPresentation& P, const GroupMap& first, const GroupMap& second);

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

enum class Bijectivity {
  frattini_rank,  // images span G/Φ(G)
  closure,        // images generate a subgroup of order p^m
};

/// G/Φ(G) coordinates, shared by repeated automorphism checks.
class FrattiniFrame {
 public:
  explicit FrattiniFrame(const PcPresentation& P);
  const Subgroup& frattini() const { return phi_; }
  std::size_t rank() const { return frame_.section_top().log_order() - phi_.log_order(); }
  /// Rank of the images modulo Φ(G).
  std::size_t image_rank(const PcPresentation& P, const std::vector<Element>& xs) const;

 private:
  static std::vector<Element> free_generators(const PcPresentation& P, const Subgroup& phi);
  Subgroup phi_;
  SectionCoordinates frame_;
};

/// Checks every defining relation on the images, then bijectivity.
Verdict verify_automorphism(const PcPresentation& P, const GroupMap& f,
                            Bijectivity how = Bijectivity::frattini_rank);
Verdict verify_automorphism(const PcPresentation& P, const GroupMap& f, const FrattiniFrame& frame,
                            Bijectivity how = Bijectivity::frattini_rank);

/// Least k >= 1 with f^k = id. `f` must be a verified automorphism.
std::uint64_t map_order(const PcPresentation& P, const GroupMap& f,
                        std::uint64_t limit = 1000000);

struct InnerSearch {
  std::optional<Element> witness;  // g with f = i_g, least canonical Z(G)-coset rep
  std::uint64_t candidates = 0;    // |G : Z(G)|, the size of the exhaustive search space
  bool inner() const { return witness.has_value(); }
};

/// Exhaustive search over one representative per coset of Z(G).
InnerSearch is_inner(const PcPresentation& P, const GroupMap& f, const Subgroup& center,
                     Exec exec = Exec::parallel);
InnerSearch is_inner(const PcPresentation& P, const GroupMap& f, Exec exec = Exec::parallel);

/// f(s) = s for every s ∈ S, checked on all elements of S.
bool fixes_elementwise(const PcPresentation& P, const GroupMap& f, const Subgroup& S);

/// g^-1 f(g) ∈ Z(G) for every pc-generator g.
bool is_central_map(const PcPresentation& P, const GroupMap& f, const Subgroup& center);

/// g^-1 f(g) ∈ S for every g ∈ G (f acts trivially on G/S), exhaustive.
bool centralizes_quotient(const PcPresentation& P, const GroupMap& f, const Subgroup& S,
                          Exec exec = Exec::parallel);

/// First pair (x, y) with f(xy) != f(x) f(y), exhaustive over G x G. P must be consistent.
std::optional<std::pair<Element, Element>> homomorphism_violation(const PcPresentation& P,
                                                                  const GroupMap& f,
                                                                  Exec exec = Exec::parallel);

/// All automorphisms g_i -> g_i z_i with z_i ∈ Z(G).
std::vector<GroupMap> central_automorphisms(const PcPresentation& P, const Subgroup& center,
                                            Exec exec = Exec::parallel,
                                            std::uint64_t bound = kDefaultElementBound);

}  // namespace pgcert
