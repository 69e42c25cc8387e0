#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgcert/group_map.hpp"
#include "pgcert/parallel.hpp"
#include "pgcert/pc_presentation.hpp"
#include "pgcert/remark.hpp"

namespace pgcert {

enum class Outcome {
  certified,          // REMARK route, noninner automorphism of order p found and checked
  routed,             // another route applies; nothing constructed
  theorem_violation,  // a claimed property failed on a REMARK group
};

enum class Chosen { alpha_star, beta_star };
enum class FixedSubgroup { frattini, z_m_minus_4 };

std::string_view outcome_name(Outcome o);
std::string_view chosen_name(Chosen c);
std::string_view fixed_subgroup_name(FixedSubgroup s);

struct ContextSummary {
  std::vector<Element> N_basis;
  Element a, b, w, c_ab, c_wb;
};

/// Everything checked about one of the two lifted automorphisms.
struct LiftRecord {
  GroupMap map;
  bool cocycle_verified = false;
  bool well_defined = false;    // closed form agrees with the table on every element
  bool is_automorphism = false;
  std::string failure;          // from verify_automorphism when it fails
  std::uint64_t order = 0;
  bool noncentral = false;
  bool fixes_N = false;
  bool centralizes_G_mod_N = false;
  std::optional<InnerSearch> inner;  // only run when the pipeline needs it
};

struct Certificate {
  Chosen chosen = Chosen::alpha_star;
  GroupMap automorphism;
  bool is_automorphism = false;
  std::uint64_t order = 0;
  bool noncentral = false;
  bool noninner = false;
  std::uint64_t inner_search_size = 0;
  FixedSubgroup fixed_subgroup = FixedSubgroup::frattini;
  bool fixes_elementwise = false;
  bool cocycle_verified = false;
};

struct CertReport {
  std::string group_id;
  int p = 0;
  std::size_t m = 0;
  std::size_t nilpotency_class = 0;
  std::size_t coclass = 0;
  RouteDecision route;
  Outcome outcome = Outcome::routed;
  std::string violation;  // set iff outcome is theorem_violation
  std::optional<ContextSummary> context;
  std::optional<LiftRecord> alpha_star;
  std::optional<LiftRecord> beta_star;
  std::optional<Certificate> certificate;
  std::vector<std::pair<std::string, double>> timings_ms;  // stage name, wall time

  /// REMARK route with every certificate check true, or a non-REMARK route.
  bool accepted() const;
};

/// Route, then on REMARK construct and check both lifts and certify one of them.
/// Failures of claimed properties are reported as theorem_violation, never repaired.
CertReport certify_group(const PcPresentation& P, const std::string& group_id,
                         Exec exec = Exec::parallel);

}  // namespace pgcert
