#include "pgcert/remark.hpp"

#include <array>

#include "pgcert/errors.hpp"
#include "pgcert/group_map.hpp"

namespace pgcert {

namespace {

constexpr std::array<std::pair<Route, std::string_view>, 6> kRouteNames{{
    {Route::not_odd_p, "NOT_ODD_P"},
    {Route::not_coclass_2, "NOT_COCLASS_2"},
    {Route::small_n, "SMALL_N"},
    {Route::z2_mod_z_cyclic, "Z2_MOD_Z_CYCLIC"},
    {Route::z2_not_in_zphi_or_d_not_2, "Z2_NOT_IN_ZPHI_OR_D_NOT_2"},
    {Route::remark, "REMARK"},
}};

std::vector<std::string> citations_for(Route r) {
  switch (r) {
    case Route::not_odd_p:
      return {"p = 2 lies outside the odd-prime setting; no construction attempted"};
    case Route::not_coclass_2:
      return {"coclass different from 2; no construction attempted"};
    case Route::small_n:
      return {"[Bodna]: coclass-2 groups of order p^n with n < 7",
              "[GAP]: small groups library check for p = 3"};
    case Route::z2_mod_z_cyclic:
      return {"[Shabani, Theorem (2)]: Z_2(G)/Z(G) cyclic gives a noninner automorphism of order p"};
    case Route::z2_not_in_zphi_or_d_not_2:
      return {"[Shabani, Theorem (3)]: Z_2(G) not in Z(Phi(G)) or d(G) != 2 gives a noninner "
              "automorphism of order p"};
    case Route::remark:
      return {};
  }
  return {};
}

// Z_2/Z is abelian, so its p-th power map is a homomorphism and the basis suffices.
bool z2_mod_z_has_exponent_p(const PcPresentation& P, const Subgroup& Z2, const Subgroup& Z) {
  for (const auto& x : Z2.basis())
    if (!Z.contains(P, P.power(x, P.prime())))
      return false;
  return true;
}

bool is_elementary_abelian(const PcPresentation& P, const Subgroup& S) {
  if (!is_abelian(P, S))
    return false;
  for (const auto& x : S.basis())
    if (!P.power(x, P.prime()).is_identity())
      return false;
  return true;
}

void require(bool cond, const std::string& what) {
  if (!cond)
    throw InvariantViolation("remark context: " + what);
}

// N is a valid choice: normal, elementary abelian of rank 2, proper in Z_2,
// containing Z(G), with centralizer of index p.
bool valid_N(const PcPresentation& P, const Subgroup& N, const GroupInvariants& inv, Exec exec) {
  const Subgroup& Z = inv.upper[1];
  const Subgroup& Z2 = inv.upper[2];
  return N.is_normal() && N.log_order() == 2 && is_elementary_abelian(P, N) &&
         N.contains(P, Z) && Z2.contains(P, N) && N.log_order() < Z2.log_order() &&
         centralizer(P, N, exec).log_order() + 1 == P.ngens();
}

}  // namespace

std::string_view route_name(Route r) {
  for (const auto& [route, name] : kRouteNames)
    if (route == r)
      return name;
  return "UNKNOWN";
}

std::optional<Route> route_from_name(std::string_view name) {
  for (const auto& [route, n] : kRouteNames)
    if (n == name)
      return route;
  return std::nullopt;
}

GroupInvariants analyze(const PcPresentation& P, Exec exec) {
  auto upper = upper_central_series(P, exec);
  ClassCoclass cc{upper.size() - 1, P.ngens() - (upper.size() - 1)};
  Subgroup phi = frattini(P);
  std::size_t d = P.ngens() - phi.log_order();
  return {std::move(upper), std::move(phi), d, cc};
}

RouteDecision decide_route(const PcPresentation& P, Exec exec) {
  if (P.prime() == 2)
    return {Route::not_odd_p, citations_for(Route::not_odd_p)};
  return decide_route(P, analyze(P, exec));
}

RouteDecision decide_route(const PcPresentation& P, const GroupInvariants& inv) {
  auto decided = [](Route r) { return RouteDecision{r, citations_for(r)}; };
  if (P.prime() == 2)
    return decided(Route::not_odd_p);
  if (inv.cc.coclass != 2)
    return decided(Route::not_coclass_2);
  if (P.ngens() < 7)
    return decided(Route::small_n);

  const Subgroup& Z = inv.upper[1];
  const Subgroup& Z2 = inv.upper[2];
  const std::size_t rel = Z2.log_order() - Z.log_order();
  const bool cyclic = rel <= 1 || (rel == 2 && !z2_mod_z_has_exponent_p(P, Z2, Z));
  if (cyclic)
    return decided(Route::z2_mod_z_cyclic);
  // coclass 2 bounds |Z| <= p^2 and |Z_2| <= p^3, so a noncyclic Z_2/Z pins both down
  if (rel != 2 || Z.log_order() != 1 || !z2_mod_z_has_exponent_p(P, Z2, Z))
    throw InvariantViolation("coclass-2 group with noncyclic Z_2/Z of unexpected shape");

  const Subgroup center_phi = subgroup_center(P, inv.phi);
  if (!center_phi.contains(P, Z2) || inv.d != 2)
    return decided(Route::z2_not_in_zphi_or_d_not_2);
  return decided(Route::remark);
}

std::vector<Subgroup> N_candidates(const PcPresentation& P, const GroupInvariants& inv,
                                   Exec exec) {
  const Subgroup& Z = inv.upper[1];
  std::vector<Subgroup> out;
  for (const auto& x : inv.upper[2].elements(P)) {
    if (Z.contains(P, x))
      continue;
    std::vector<Element> gens(Z.basis().begin(), Z.basis().end());
    gens.push_back(x);
    Subgroup N = subgroup_closure(P, gens);
    bool seen = false;
    for (const auto& s : out)
      seen = seen || s == N;
    if (!seen && valid_N(P, N, inv, exec))
      out.push_back(std::move(N));
  }
  return out;
}

Subgroup select_N(const PcPresentation& P, Exec exec) {
  if (P.prime() == 2)
    throw PreconditionError("select_N: route is NOT_ODD_P, not REMARK");
  return select_N(P, analyze(P, exec), exec);
}

Subgroup select_N(const PcPresentation& P, const GroupInvariants& inv, Exec exec) {
  const Route r = decide_route(P, inv).route;
  if (r != Route::remark)
    throw PreconditionError("select_N: route is " + std::string(route_name(r)) + ", not REMARK");
  const Subgroup& Z = inv.upper[1];
  const Subgroup& Z2 = inv.upper[2];

  if (is_elementary_abelian(P, Z2)) {
    // first x in Z_2 \ Z (lexicographic) whose closure with Z is a valid N
    for (const auto& x : Z2.elements(P)) {
      if (Z.contains(P, x))
        continue;
      std::vector<Element> gens(Z.basis().begin(), Z.basis().end());
      gens.push_back(x);
      Subgroup N = subgroup_closure(P, gens);
      if (valid_N(P, N, inv, exec))
        return N;
    }
    throw InvariantViolation("select_N: no subgroup of Z_2 qualifies as N");
  }
  if (!is_abelian(P, Z2))
    throw InvariantViolation("select_N: Z_2 is not abelian");
  Subgroup N = omega1(P, Z2);
  if (!valid_N(P, N, inv, exec))
    throw InvariantViolation("select_N: Omega_1(Z_2) does not qualify as N");
  return N;
}

RemarkContext select_generators(const PcPresentation& P, const Subgroup& N, Exec exec) {
  return select_generators(P, N, analyze(P, exec), exec);
}

RemarkContext select_generators(const PcPresentation& P, const Subgroup& N,
                                const GroupInvariants& inv, Exec exec) {
  const std::size_t m = P.ngens();
  require(P.prime() != 2 && inv.cc.coclass == 2 && m >= 7, "group outside the residual route");
  const Subgroup& Z = inv.upper[1];
  const Subgroup& Z2 = inv.upper[2];
  Subgroup C_N = centralizer(P, N, exec);

  require(N.is_normal(), "N is not normal");
  require(Z2.contains(P, N) && N.log_order() < Z2.log_order(), "N is not a proper subgroup of Z_2");
  require(N.log_order() == 2 && is_elementary_abelian(P, N), "N is not C_p x C_p");
  require(C_N.log_order() + 1 == m, "C_G(N) is not maximal");

  const std::uint64_t n = checked_order(P);
  auto b_rank = find_first(exec, n, [&](std::uint64_t r) {
    return !C_N.contains(P, P.element_at(r));
  });
  auto a_rank = find_first(exec, n, [&](std::uint64_t r) {
    Element g = P.element_at(r);
    return C_N.contains(P, g) && !inv.phi.contains(P, g);
  });
  require(b_rank && a_rank, "no element available for a or b");
  Element b = P.element_at(*b_rank);
  Element a = P.element_at(*a_rank);

  std::optional<Element> w;
  for (const auto& x : N.elements(P))
    if (!Z.contains(P, x) && !P.commutator(x, b).is_identity()) {
      w = x;
      break;
    }
  require(w.has_value(), "no w in N \\ Z(G) with [w, b] != 1");

  RemarkContext ctx{N, C_N, a, b, *w, P.commutator(a, b), P.commutator(*w, b), inv.upper,
                    inv.phi};
  const Subgroup& Zm4 = ctx.z_m_minus_4();
  require(subgroup_closure(P, std::vector{a, b}).log_order() == m, "<a, b> != G");
  require(inv.phi.contains(P, ctx.c_ab) && !Zm4.contains(P, ctx.c_ab),
          "[a, b] is not in Phi(G) \\ Z_{m-4}");
  require(P.element_order(ctx.w) == static_cast<std::uint64_t>(P.prime()), "|w| != p");
  require(P.element_order(ctx.c_wb) == static_cast<std::uint64_t>(P.prime()), "|[w, b]| != p");
  require(Z.contains(P, ctx.c_wb), "[w, b] is not central");
  return ctx;
}

Diagnostics diagnostics(const PcPresentation& P, Exec exec) {
  Diagnostics out;
  Subgroup Z = center(P, exec);
  auto lower = lower_central_series(P);
  const Subgroup derived = lower.size() > 1 ? lower[1] : Subgroup(P);
  out.purely_nonabelian_sufficient = derived.contains(P, Z);
  out.central_aut_count = central_automorphisms(P, Z, exec).size();
  Subgroup phi = frattini(P);
  out.ds_condition = !(centralizer(P, subgroup_center(P, phi, exec), exec) == phi);
  return out;
}

}  // namespace pgcert
