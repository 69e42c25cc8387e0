// Serial reference vs OpenMP kernels on corpus groups. Each row times one
// kernel both ways and checks that the two results agree.
//
//   pgcert_bench [corpus-dir] [group-id ...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pgcert/certify.hpp"
#include "pgcert/derivation.hpp"
#include "pgcert/group_map.hpp"
#include "pgcert/pcp_format.hpp"
#include "pgcert/remark.hpp"
#include "pgcert/structure.hpp"

using namespace pgcert;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i)
    f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

struct Kernel {
  const char* name;
  int reps;
  // returns a fingerprint of the result so the two paths can be compared
  std::function<std::string(Exec)> run;
};

std::string subgroup_print(const PcPresentation& P, const Subgroup& S) {
  std::string s;
  for (const auto& b : S.basis())
    s += std::to_string(P.rank(b)) + ",";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : PGCERT_CORPUS_DIR;
  std::vector<std::string> ids;
  for (int i = 2; i < argc; ++i)
    ids.emplace_back(argv[i]);
  if (ids.empty())
    ids = {"sg_2187_253", "sg_2187_261", "sg_78125_684"};

  std::printf("threads %d\n", worker_count());
  std::printf("%-14s %-22s %12s %12s %8s %s\n", "group", "kernel", "serial ms", "openmp ms",
              "speedup", "agree");
  bool all_agree = true;
  for (const auto& id : ids) {
    PcPresentation P = read_pcp_file(dir + "/" + id + ".pcp").presentation;
    const RemarkContext ctx = select_generators(P, select_N(P));
    const Derivation beta = build_beta(P, ctx);
    const GroupMap lift = phi_realize(P, beta);
    const Subgroup Z = center(P);

    std::vector<Kernel> kernels{
        {"center", 3, [&](Exec e) { return subgroup_print(P, center(P, e)); }},
        {"upper_central_series", 3,
         [&](Exec e) { return std::to_string(upper_central_series(P, e).size()); }},
        {"verify_cocycle", 3,
         [&](Exec e) { return std::to_string(verify_cocycle(P, beta, e).has_value()); }},
        {"homomorphism_sweep", 1,
         [&](Exec e) { return std::to_string(homomorphism_violation(P, lift, e).has_value()); }},
        {"is_inner", 3,
         [&](Exec e) {
           auto s = is_inner(P, lift, Z, e);
           return std::to_string(s.inner()) + "/" + std::to_string(s.candidates);
         }},
        {"certify_group", 1,
         [&](Exec e) {
           auto r = certify_group(P, id, e);
           return std::string(outcome_name(r.outcome));
         }},
    };
    for (const auto& k : kernels) {
      // the G x G sweep is quadratic in |G|; skip it past order 3^7
      if (std::string(k.name) == "homomorphism_sweep" && *P.order() > 2187)
        continue;
      std::string a, b;
      double ts = time_ms([&] { a = k.run(Exec::serial); }, k.reps);
      double tp = time_ms([&] { b = k.run(Exec::parallel); }, k.reps);
      const bool agree = a == b;
      all_agree = all_agree && agree;
      std::printf("%-14s %-22s %12.2f %12.2f %8.2f %s\n", id.c_str(), k.name, ts, tp,
                  tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
      std::fflush(stdout);
    }
  }
  return all_agree ? 0 : 1;
}
