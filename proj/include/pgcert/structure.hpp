#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgcert/fp_matrix.hpp"
#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"
#include "pgcert/subgroup.hpp"

namespace pgcert {

Subgroup subgroup_closure(const PcPresentation& P, std::span<const Element> gens);

/// Smallest normal subgroup containing `gens`.
Subgroup normal_closure(const PcPresentation& P, std::span<const Element> gens);

/// C_G(S), by exhaustive sweep over G.
Subgroup centralizer(const PcPresentation& P, const Subgroup& S, Exec exec = Exec::parallel);
Subgroup center(const PcPresentation& P, Exec exec = Exec::parallel);

Subgroup intersection(const PcPresentation& P, const Subgroup& A, const Subgroup& B);

/// Z(S) = S ∩ C_G(S)
Subgroup subgroup_center(const PcPresentation& P, const Subgroup& S, Exec exec = Exec::parallel);

/// Z_0 = 1 < Z_1 < ... < Z_c = G
std::vector<Subgroup> upper_central_series(const PcPresentation& P, Exec exec = Exec::parallel);

/// Γ_1 = G > Γ_2 > ... > Γ_{c+1} = 1
std::vector<Subgroup> lower_central_series(const PcPresentation& P);

struct ClassCoclass {
  std::size_t nilpotency_class = 0;
  std::size_t coclass = 0;
};

ClassCoclass class_and_coclass(const PcPresentation& P);

/// Φ(G) = G' G^p
Subgroup frattini(const PcPresentation& P);
std::size_t minimal_generator_count(const PcPresentation& P);

bool is_abelian(const PcPresentation& P, const Subgroup& S);

/// g^p ∈ S for every g ∈ G. Throws PreconditionError if S is not normal.
bool quotient_exponent_is_p(const PcPresentation& P, const Subgroup& S,
                            Exec exec = Exec::parallel);

/// {x ∈ S : x^p = 1}. Throws PreconditionError if S is not abelian.
Subgroup omega1(const PcPresentation& P, const Subgroup& S);

/// Linear coordinates on an elementary abelian section U/S, where U is the
/// subgroup generated by S and the section basis. Built once, queried often.
class SectionCoordinates {
 public:
  /// Throws PreconditionError unless S is normal in U, U/S is elementary
  /// abelian and the images of `basis_elts` form a basis of it.
  SectionCoordinates(const PcPresentation& P, const Subgroup& S,
                     std::vector<Element> basis_elts);

  /// v with g ≡ prod_k basis[k]^{v[k]} (mod S). Throws PreconditionError if g ∉ U.
  FpVector operator()(const PcPresentation& P, const Element& g) const;

  const Subgroup& section_top() const { return top_; }
  const Subgroup& section_bottom() const { return bottom_; }

 private:
  FpVector raw(const PcPresentation& P, Element g) const;

  Subgroup bottom_;
  Subgroup top_;
  std::vector<Element> basis_elts_;
  std::vector<std::size_t> free_depths_;  // pivots of top_ that are not pivots of bottom_
  FpMatrix matrix_;
};

/// One-shot form of SectionCoordinates with U = G.
FpVector quotient_coordinates(const PcPresentation& P, const Subgroup& S,
                              std::span<const Element> basis_elts, const Element& g);

}  // namespace pgcert
