#pragma once

// Routing of coclass-2 p-groups and, on the residual route, the choice of the
// data N, a, b, w from which the two derivations are built.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"
#include "pgcert/structure.hpp"
#include "pgcert/subgroup.hpp"

namespace pgcert {

enum class Route {
  not_odd_p,
  not_coclass_2,
  small_n,
  z2_mod_z_cyclic,
  z2_not_in_zphi_or_d_not_2,
  remark,
};

/// Upper-case wire name, e.g. "SMALL_N".
std::string_view route_name(Route r);
std::optional<Route> route_from_name(std::string_view name);

struct RouteDecision {
  Route route = Route::remark;
  std::vector<std::string> citations;
};

/// Series data shared by routing and the later stages.
struct GroupInvariants {
  std::vector<Subgroup> upper;  // Z_0 .. Z_c
  Subgroup phi;
  std::size_t d = 0;
  ClassCoclass cc;
};

GroupInvariants analyze(const PcPresentation& P, Exec exec = Exec::parallel);

/// First failing check decides the route; REMARK when all checks pass.
RouteDecision decide_route(const PcPresentation& P, Exec exec = Exec::parallel);
RouteDecision decide_route(const PcPresentation& P, const GroupInvariants& inv);

struct RemarkContext {
  Subgroup N;
  Subgroup C_N;  // C_G(N)
  Element a, b, w;
  Element c_ab;  // [a, b]
  Element c_wb;  // [w, b]
  std::vector<Subgroup> z_chain;
  Subgroup phi;

  const Subgroup& center() const { return z_chain[1]; }
  /// Z_{m-4}; the class is m - 2 on this route.
  const Subgroup& z_m_minus_4() const { return z_chain[z_chain.size() - 3]; }
};

/// Throws PreconditionError unless the route is REMARK.
Subgroup select_N(const PcPresentation& P, Exec exec = Exec::parallel);
Subgroup select_N(const PcPresentation& P, const GroupInvariants& inv, Exec exec = Exec::parallel);

/// Every element of Z_2 \ Z whose closure with Z(G) is a valid N, in lexicographic order.
/// Only meaningful when Z_2 is elementary abelian.
std::vector<Subgroup> N_candidates(const PcPresentation& P, const GroupInvariants& inv,
                                   Exec exec = Exec::parallel);

/// Deterministic choice of b, a, w; throws InvariantViolation if any
/// required property fails.
RemarkContext select_generators(const PcPresentation& P, const Subgroup& N,
                                Exec exec = Exec::parallel);
RemarkContext select_generators(const PcPresentation& P, const Subgroup& N,
                                const GroupInvariants& inv, Exec exec = Exec::parallel);

struct Diagnostics {
  bool purely_nonabelian_sufficient = false;  // Z(G) <= G'
  std::uint64_t central_aut_count = 0;
  bool ds_condition = false;  // C_G(Z(Φ(G))) != Φ(G)
};

Diagnostics diagnostics(const PcPresentation& P, Exec exec = Exec::parallel);

}  // namespace pgcert
