#include "doctest.h"
#include "fixtures.hpp"
#include "pgcert/errors.hpp"
#include "pgcert/group_map.hpp"
#include "pgcert/remark.hpp"

using namespace pgcert;
using fixtures::corpus;
using fixtures::RankGroup;
using fixtures::RankSet;
using fixtures::subset;

namespace {

using R = RankGroup::R;

// Route from the brute-force series, following the same order of checks.
std::string oracle_route(const PcPresentation& P) {
  if (P.prime() == 2)
    return "NOT_ODD_P";
  RankGroup G(P);
  const auto upper = G.upper_series();
  const std::size_t m = P.ngens();
  const std::size_t cls = upper.size() - 1;
  if (m - cls != 2)
    return "NOT_COCLASS_2";
  if (m < 7)
    return "SMALL_N";
  const RankSet& Z = upper[1];
  const RankSet& Z2 = upper[2];
  const std::uint64_t q = Z2.size() / Z.size();
  bool cyclic = q <= static_cast<std::uint64_t>(P.prime());
  for (auto x : Z2)
    cyclic = cyclic || !Z.count(G.pow(static_cast<R>(x), P.prime()));
  if (cyclic)
    return "Z2_MOD_Z_CYCLIC";
  const RankSet phi = G.frattini();
  bool in_center_of_phi = subset(Z2, phi);
  for (auto z : Z2)
    for (auto f : phi)
      in_center_of_phi = in_center_of_phi &&
                         G.mul(static_cast<R>(z), static_cast<R>(f)) ==
                             G.mul(static_cast<R>(f), static_cast<R>(z));
  if (!in_center_of_phi || m - G.log_p(phi.size()) != 2)
    return "Z2_NOT_IN_ZPHI_OR_D_NOT_2";
  return "REMARK";
}

PcPresentation dihedral8() {
  PresentationSpec s;
  s.prime = 2;
  s.ngens = 3;
  s.powers[1] = {{2, 1}};
  s.commutators[{1, 0}] = {{2, 1}};
  return PcPresentation(s);
}

RankSet ranks(const PcPresentation& P, const Subgroup& S) { return fixtures::members(P, S); }

}  // namespace

TEST_CASE("route names round-trip") {
  for (Route r : {Route::not_odd_p, Route::not_coclass_2, Route::small_n, Route::z2_mod_z_cyclic,
                  Route::z2_not_in_zphi_or_d_not_2, Route::remark})
    CHECK(route_from_name(route_name(r)) == r);
  CHECK_FALSE(route_from_name("remark").has_value());
}

TEST_CASE("routes of the small fixtures") {
  CHECK(decide_route(fixtures::heisenberg(3)).route == Route::not_coclass_2);
  CHECK(decide_route(fixtures::heisenberg(5)).route == Route::not_coclass_2);
  CHECK(decide_route(fixtures::heisenberg3_x_c3()).route == Route::small_n);
  CHECK(decide_route(fixtures::maximal_class_81()).route == Route::not_coclass_2);
  CHECK(decide_route(fixtures::cyclic9()).route == Route::not_coclass_2);
  CHECK(decide_route(dihedral8()).route == Route::not_odd_p);
  CHECK_FALSE(decide_route(fixtures::heisenberg3_x_c3()).citations.empty());
  CHECK(decide_route(fixtures::elementary_abelian(3, 4)).route == Route::not_coclass_2);
  for (const auto& P : {fixtures::heisenberg(3), fixtures::heisenberg3_x_c3(),
                        fixtures::maximal_class_81(), fixtures::elementary_abelian(3, 4)})
    CHECK(route_name(decide_route(P).route) == oracle_route(P));
}

TEST_CASE("routes agree with the brute-force condition oracle on corpus samples") {
  for (const char* id : {"sg_2187_224", "sg_2187_253", "sg_2187_261", "sg_2187_5849",
                         "sg_2187_5858", "sg_2187_386"}) {
    auto P = corpus(id);
    auto d = decide_route(P);
    INFO(id);
    CHECK(std::string(route_name(d.route)) == oracle_route(P));
    // total and stable
    CHECK(decide_route(P, Exec::serial).route == d.route);
    CHECK(decide_route(P).citations == d.citations);
    CHECK(d.citations.empty() == (d.route == Route::remark));
  }
}

TEST_CASE("residual route structure") {
  for (const char* id : {"sg_2187_253", "sg_2187_261", "sg_2187_380"}) {
    auto P = corpus(id);
    auto inv = analyze(P);
    REQUIRE(decide_route(P, inv).route == Route::remark);
    const int p = P.prime();
    CHECK(inv.upper[1].order() == static_cast<std::uint64_t>(p));
    CHECK(inv.upper[2].order() == static_cast<std::uint64_t>(p * p * p));
    for (const auto& x : inv.upper[2].basis())
      CHECK(inv.upper[1].contains(P, P.power(x, p)));
    CHECK(inv.d == 2);
    CHECK(inv.cc.coclass == 2);
  }
}

TEST_CASE("select_N with elementary abelian Z_2") {
  auto P = corpus("sg_2187_253");
  RankGroup G(P);
  auto inv = analyze(P);
  REQUIRE(is_abelian(P, inv.upper[2]));
  Subgroup N = select_N(P);
  const RankSet Z = ranks(P, inv.upper[1]);
  const RankSet Z2 = ranks(P, inv.upper[2]);
  const RankSet Nset = ranks(P, N);

  CHECK(N.order() == 9);
  CHECK(subset(Z, Nset));
  CHECK(subset(Nset, Z2));
  CHECK(Nset.size() < Z2.size());
  for (auto x : Nset)
    CHECK(G.pow(static_cast<R>(x), 3) == 0);
  CHECK(G.centralizer(Nset).size() * 3 == G.order());

  // oracle: walk Z_2 \ Z in lexicographic order, keep the first x whose
  // closure with Z is normal, of order p^2 and has a centralizer of index p
  std::vector<R> zgens(Z.begin(), Z.end());
  std::optional<RankSet> first;
  std::set<RankSet> all_valid;
  for (auto x : Z2) {
    if (Z.count(x))
      continue;
    auto gens = zgens;
    gens.push_back(static_cast<R>(x));
    RankSet cand = G.generated(gens);
    bool normal = true;
    for (auto c : cand)
      for (std::size_t k = 0; k < P.ngens() && normal; ++k)
        normal = cand.count(G.conj(static_cast<R>(c), G.generator(k))) == 1;
    if (normal && cand.size() == 9 && G.centralizer(cand).size() * 3 == G.order()) {
      if (!first)
        first = cand;
      all_valid.insert(cand);
    }
  }
  REQUIRE(first.has_value());
  CHECK(*first == Nset);

  // every order-p subgroup of Z_2/Z qualifies
  auto cands = N_candidates(P, inv);
  CHECK(cands.size() == 4);
  CHECK(all_valid.size() == 4);
  CHECK(cands.front() == N);

  // canonical basis: rebuilding N from a shuffled generating set gives the same subgroup
  auto elems = N.elements(P);
  std::reverse(elems.begin(), elems.end());
  CHECK(subgroup_closure(P, elems) == N);
}

TEST_CASE("select_N with Z_2 of type C9 x C3") {
  auto P = corpus("sg_2187_261");
  RankGroup G(P);
  auto inv = analyze(P);
  REQUIRE(inv.upper[2].order() == 27);
  // Z_2 is not elementary abelian here
  bool has_order_9 = false;
  for (const auto& x : inv.upper[2].elements(P))
    has_order_9 = has_order_9 || P.element_order(x) == 9;
  REQUIRE(has_order_9);
  Subgroup N = select_N(P);
  RankSet omega;
  for (auto x : ranks(P, inv.upper[2]))
    if (G.pow(static_cast<R>(x), 3) == 0)
      omega.insert(x);
  CHECK(omega.size() == 9);
  CHECK(ranks(P, N) == omega);
}

TEST_CASE("select_N rejects groups off the residual route") {
  CHECK_THROWS_AS(select_N(fixtures::heisenberg(3)), PreconditionError);
  CHECK_THROWS_AS(select_N(corpus("sg_2187_224")), PreconditionError);
  CHECK_THROWS_AS(select_N(dihedral8()), PreconditionError);
}

TEST_CASE("select_generators invariants against brute force") {
  for (const char* id : {"sg_2187_253", "sg_2187_261", "sg_2187_296"}) {
    INFO(id);
    auto P = corpus(id);
    RankGroup G(P);
    auto N = select_N(P);
    auto ctx = select_generators(P, N);
    const RankSet Nset = ranks(P, N);
    const RankSet CN = G.centralizer(Nset);
    const RankSet phi = G.frattini();
    const RankSet Z = G.upper_series()[1];

    CHECK(ranks(P, ctx.C_N) == CN);
    CHECK(ranks(P, ctx.phi) == phi);
    // b, a: first in lexicographic order with their defining property
    R b = 0;
    while (CN.count(b))
      ++b;
    CHECK(P.rank(ctx.b) == b);
    R a = 0;
    while (!CN.count(a) || phi.count(a))
      ++a;
    CHECK(P.rank(ctx.a) == a);
    CHECK(Nset.count(P.rank(ctx.w)));
    CHECK_FALSE(Z.count(P.rank(ctx.w)));

    CHECK(G.generated({a, b}).size() == G.order());
    const R cwb = G.comm(static_cast<R>(P.rank(ctx.w)), b);
    CHECK(cwb != 0);
    CHECK(Z.count(cwb));
    CHECK(G.pow(cwb, 3) == 0);
    CHECK(P.rank(ctx.c_wb) == cwb);
    CHECK(P.rank(ctx.c_ab) == G.comm(a, b));
    CHECK(phi.count(G.comm(a, b)));
    CHECK_FALSE(ranks(P, ctx.z_m_minus_4()).count(G.comm(a, b)));

    auto again = select_generators(P, select_N(P));
    CHECK(again.a == ctx.a);
    CHECK(again.b == ctx.b);
    CHECK(again.w == ctx.w);
    CHECK(again.N == ctx.N);
    auto serial = select_generators(P, N, Exec::serial);
    CHECK(serial.a == ctx.a);
    CHECK(serial.b == ctx.b);
  }
}

TEST_CASE("select_generators rejects an invalid N") {
  auto P = corpus("sg_2187_253");
  auto inv = analyze(P);
  CHECK_THROWS_AS(select_generators(P, inv.upper[1]), InvariantViolation);
  CHECK_THROWS_AS(select_generators(P, inv.upper[2]), InvariantViolation);
}

TEST_CASE("diagnostics on Heisenberg(3)") {
  auto H = fixtures::heisenberg(3);
  auto d = diagnostics(H);
  CHECK(d.purely_nonabelian_sufficient);
  CHECK(d.central_aut_count == 9);

  // oracle: all 27 maps g_i -> g_i z_i, checked as bijective homomorphisms
  auto all = enumerate_elements(H);
  std::vector<Element> zs{H.identity(), Element{0, 0, 1}, Element{0, 0, 2}};
  int count = 0;
  for (const auto& z0 : zs)
    for (const auto& z1 : zs)
      for (const auto& z2 : zs) {
        GroupMap f{{H.multiply(H.generator(0), z0), H.multiply(H.generator(1), z1),
                    H.multiply(H.generator(2), z2)}};
        bool ok = true;
        std::set<Element> image;
        for (const auto& x : all) {
          image.insert(apply_map(H, f, x));
          for (const auto& y : all)
            ok = ok && apply_map(H, f, H.multiply(x, y)) ==
                           H.multiply(apply_map(H, f, x), apply_map(H, f, y));
        }
        count += ok && image.size() == all.size();
      }
  CHECK(count == 9);
  CHECK_FALSE(diagnostics(fixtures::heisenberg3_x_c3()).purely_nonabelian_sufficient);
}

namespace {

// C_G(Z(Φ)) != Φ, from the rank model.
bool oracle_ds_condition(const PcPresentation& P) {
  RankGroup G(P);
  const RankSet phi = G.frattini();
  const RankSet cphi = G.centralizer(phi);
  RankSet zphi;
  std::set_intersection(phi.begin(), phi.end(), cphi.begin(), cphi.end(),
                        std::inserter(zphi, zphi.begin()));
  return G.centralizer(zphi) != phi;
}

}  // namespace

TEST_CASE("diagnostics on residual-route corpus groups") {
  for (const char* id : {"sg_2187_253", "sg_2187_261"}) {
    auto P = corpus(id);
    auto d = diagnostics(P);
    CHECK(d.purely_nonabelian_sufficient);
    CHECK(d.central_aut_count == 9);
    CHECK(diagnostics(P, Exec::serial).central_aut_count == d.central_aut_count);
    // C_G(Z(Φ)) = Φ on these groups (also the answer GAP gives)
    CHECK(d.ds_condition == oracle_ds_condition(P));
    CHECK_FALSE(d.ds_condition);
  }
  auto P = corpus("sg_2187_5849");
  CHECK(diagnostics(P).ds_condition == oracle_ds_condition(P));
  CHECK(diagnostics(P).ds_condition);
}
