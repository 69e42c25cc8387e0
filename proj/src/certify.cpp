#include "pgcert/certify.hpp"

#include <chrono>

#include "pgcert/derivation.hpp"

namespace pgcert {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::certified:
      return "CERTIFIED";
    case Outcome::routed:
      return "ROUTED";
    case Outcome::theorem_violation:
      return "THEOREM_VIOLATION";
  }
  return "UNKNOWN";
}

std::string_view chosen_name(Chosen c) {
  return c == Chosen::alpha_star ? "alpha_star" : "beta_star";
}

std::string_view fixed_subgroup_name(FixedSubgroup s) {
  return s == FixedSubgroup::frattini ? "FRATTINI" : "Z_M_MINUS_4";
}

bool CertReport::accepted() const {
  if (route.route != Route::remark)
    return outcome == Outcome::routed;
  if (outcome != Outcome::certified || !certificate)
    return false;
  const Certificate& c = *certificate;
  return c.is_automorphism && c.order == static_cast<std::uint64_t>(p) && c.noncentral &&
         c.noninner && c.fixes_elementwise && c.cocycle_verified;
}

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(const char* stage) {
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

LiftRecord lift(const PcPresentation& P, const RemarkContext& ctx, const Derivation& d,
                const std::function<Element(const Element&)>& formula,
                const FrattiniFrame& frame, Exec exec) {
  LiftRecord rec;
  rec.cocycle_verified = !verify_cocycle(P, d, exec).has_value();
  rec.well_defined = !first_ill_defined(P, d, formula, exec).has_value();
  if (!rec.cocycle_verified)
    return rec;
  rec.map = phi_realize(P, d, exec);
  Verdict v = verify_automorphism(P, rec.map, frame);
  rec.is_automorphism = v.ok;
  rec.failure = v.reason;
  if (!rec.is_automorphism)
    return rec;
  rec.order = map_order(P, rec.map);
  rec.noncentral = !is_central_map(P, rec.map, ctx.center());
  rec.fixes_N = fixes_elementwise(P, rec.map, ctx.N);
  rec.centralizes_G_mod_N = centralizes_quotient(P, rec.map, ctx.N, exec);
  return rec;
}

// Empty when the lift has every property its construction promises.
std::string lift_defect(const LiftRecord& r, const char* name, int p) {
  const std::string n = name;
  if (!r.cocycle_verified)
    return n + " fails the cocycle identity";
  if (!r.well_defined)
    return n + " closed form is not constant on cosets";
  if (!r.is_automorphism)
    return n + " is not an automorphism: " + r.failure;
  if (r.order != static_cast<std::uint64_t>(p))
    return n + " has order " + std::to_string(r.order) + ", expected " + std::to_string(p);
  if (!r.noncentral)
    return n + " is central";
  if (!r.fixes_N || !r.centralizes_G_mod_N)
    return n + " does not centralize both N and G/N";
  return {};
}

}  // namespace

CertReport certify_group(const PcPresentation& P, const std::string& group_id, Exec exec) {
  CertReport rep;
  rep.group_id = group_id;
  rep.p = P.prime();
  rep.m = P.ngens();
  StageClock clock(rep.timings_ms);

  if (P.prime() == 2) {
    rep.route = decide_route(P, exec);
    GroupInvariants inv = analyze(P, exec);
    rep.nilpotency_class = inv.cc.nilpotency_class;
    rep.coclass = inv.cc.coclass;
    rep.outcome = Outcome::routed;
    clock.lap("route");
    return rep;
  }
  GroupInvariants inv = analyze(P, exec);
  rep.nilpotency_class = inv.cc.nilpotency_class;
  rep.coclass = inv.cc.coclass;
  rep.route = decide_route(P, inv);
  clock.lap("route");
  if (rep.route.route != Route::remark) {
    rep.outcome = Outcome::routed;
    return rep;
  }

  Subgroup N = select_N(P, inv, exec);
  RemarkContext ctx = select_generators(P, N, inv, exec);
  rep.context = ContextSummary{{ctx.N.basis().begin(), ctx.N.basis().end()},
                               ctx.a, ctx.b, ctx.w, ctx.c_ab, ctx.c_wb};
  clock.lap("select");

  RemarkFormulas formulas(P, ctx);
  Derivation alpha = build_alpha(P, ctx, exec);
  Derivation beta = build_beta(P, ctx, exec);
  clock.lap("build");

  const FrattiniFrame frame(P);
  rep.alpha_star = lift(P, ctx, alpha, [&](const Element& g) { return formulas.alpha(P, g); },
                        frame, exec);
  rep.beta_star = lift(P, ctx, beta, [&](const Element& g) { return formulas.beta(P, g); },
                       frame, exec);
  clock.lap("verify");

  auto fail = [&](std::string why) {
    rep.outcome = Outcome::theorem_violation;
    rep.violation = std::move(why);
    return rep;
  };
  if (auto why = lift_defect(*rep.alpha_star, "alpha_star", P.prime()); !why.empty())
    return fail(why);
  if (auto why = lift_defect(*rep.beta_star, "beta_star", P.prime()); !why.empty())
    return fail(why);

  rep.alpha_star->inner = is_inner(P, rep.alpha_star->map, ctx.center(), exec);
  LiftRecord* chosen = &*rep.alpha_star;
  Certificate cert;
  cert.chosen = Chosen::alpha_star;
  cert.fixed_subgroup = FixedSubgroup::frattini;
  const Subgroup* fixed = &ctx.phi;
  if (rep.alpha_star->inner->inner()) {
    rep.beta_star->inner = is_inner(P, rep.beta_star->map, ctx.center(), exec);
    if (rep.beta_star->inner->inner()) {
      clock.lap("inner_search");
      return fail("alpha_star and beta_star are both inner");
    }
    chosen = &*rep.beta_star;
    cert.chosen = Chosen::beta_star;
    cert.fixed_subgroup = FixedSubgroup::z_m_minus_4;
    fixed = &ctx.z_m_minus_4();
  }
  clock.lap("inner_search");

  cert.automorphism = chosen->map;
  cert.is_automorphism = chosen->is_automorphism;
  cert.order = chosen->order;
  cert.noncentral = chosen->noncentral;
  cert.noninner = !chosen->inner->inner();
  cert.inner_search_size = chosen->inner->candidates;
  cert.fixes_elementwise = fixes_elementwise(P, cert.automorphism, *fixed);
  cert.cocycle_verified = chosen->cocycle_verified;
  rep.certificate = cert;
  clock.lap("certificate");
  if (!cert.fixes_elementwise)
    return fail(std::string(chosen_name(cert.chosen)) + " does not fix " +
                std::string(fixed_subgroup_name(cert.fixed_subgroup)) + " elementwise");
  rep.outcome = Outcome::certified;
  return rep;
}

}  // namespace pgcert
