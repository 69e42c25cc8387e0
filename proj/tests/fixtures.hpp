#pragma once

// Small hand-written presentations and brute-force oracles shared by tests.
// The oracles only use multiplication/inversion on explicit element sets and
// never touch Subgroup sifting, so they check the structural code independently.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <fstream>
#include <sstream>
#include <utility>

#include "pgcert/pc_presentation.hpp"
#include "pgcert/pcp_format.hpp"
#include "pgcert/subgroup.hpp"

namespace fixtures {

using pgcert::Element;
using pgcert::PcPresentation;
using pgcert::PresentationSpec;

// <g1,g2,g3 | g_i^p = 1, [g2,g1] = g3>
inline PcPresentation heisenberg(int p) {
  PresentationSpec s;
  s.prime = p;
  s.ngens = 3;
  s.commutators[{1, 0}] = {{2, 1}};
  return PcPresentation(s);
}

// <g1,g2 | g1^3 = g2, g2^3 = 1>
inline PcPresentation cyclic9() {
  PresentationSpec s;
  s.prime = 3;
  s.ngens = 2;
  s.powers[0] = {{1, 1}};
  return PcPresentation(s);
}

inline PcPresentation elementary_abelian(int p, std::size_t m) {
  PresentationSpec s;
  s.prime = p;
  s.ngens = m;
  return PcPresentation(s);
}

// Heisenberg(3) x C3 on g1..g4
inline PcPresentation heisenberg3_x_c3() {
  PresentationSpec s;
  s.prime = 3;
  s.ngens = 4;
  s.commutators[{1, 0}] = {{2, 1}};
  return PcPresentation(s);
}

// Maximal class of order 3^4: [g2,g1]=g3, [g3,g1]=g4.
inline PcPresentation maximal_class_81() {
  PresentationSpec s;
  s.prime = 3;
  s.ngens = 4;
  s.commutators[{1, 0}] = {{2, 1}};
  s.commutators[{2, 0}] = {{3, 1}};
  return PcPresentation(s);
}

inline PcPresentation corpus(const std::string& id) {
  return pgcert::read_pcp_file(std::string(PGCERT_CORPUS_DIR) + "/" + id + ".pcp").presentation;
}

// (group_id, expected route) rows of the corpus manifest.
inline std::vector<std::pair<std::string, std::string>> manifest() {
  std::ifstream in(std::string(PGCERT_CORPUS_DIR) + "/manifest.tsv");
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string id, route;
    std::getline(fields, id, '\t');
    std::getline(fields, route, '\t');
    rows.emplace_back(id, route);
  }
  return rows;
}

inline std::vector<std::string> remark_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, route] : manifest())
    if (route == "REMARK")
      ids.push_back(id);
  return ids;
}

using RankSet = std::set<std::uint64_t>;

inline RankSet all_ranks(const PcPresentation& P) {
  RankSet s;
  for (std::uint64_t r = 0; r < *P.order(); ++r)
    s.insert(r);
  return s;
}

inline RankSet ranks_of(const PcPresentation& P, const std::vector<Element>& xs) {
  RankSet s;
  for (const auto& x : xs)
    s.insert(P.rank(x));
  return s;
}

inline RankSet members(const PcPresentation& P, const pgcert::Subgroup& S) {
  return ranks_of(P, S.elements(P));
}

// Closure of a set of elements by breadth-first right multiplication.
inline RankSet generated(const PcPresentation& P, const std::vector<Element>& gens) {
  RankSet seen{0};
  std::vector<Element> frontier{P.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Element y = P.multiply(x, g);
        if (seen.insert(P.rank(y)).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Element> to_elements(const PcPresentation& P, const RankSet& s) {
  std::vector<Element> out;
  for (auto r : s)
    out.push_back(P.element_at(r));
  return out;
}

inline RankSet brute_centralizer(const PcPresentation& P, const RankSet& S) {
  RankSet out;
  for (auto r : all_ranks(P)) {
    Element g = P.element_at(r);
    bool ok = true;
    for (auto s : S) {
      Element x = P.element_at(s);
      if (P.multiply(g, x) != P.multiply(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.insert(r);
  }
  return out;
}

// Z_{i+1} = {g : [g, x] ∈ Z_i for all x ∈ G}
inline std::vector<RankSet> brute_upper_series(const PcPresentation& P) {
  std::vector<RankSet> series{RankSet{0}};
  const RankSet G = all_ranks(P);
  while (series.back() != G) {
    RankSet next;
    for (auto r : G) {
      Element g = P.element_at(r);
      bool ok = true;
      for (auto s : G)
        if (!series.back().count(P.rank(P.commutator(g, P.element_at(s))))) {
          ok = false;
          break;
        }
      if (ok)
        next.insert(r);
    }
    if (next == series.back())
      break;
    series.push_back(next);
  }
  return series;
}

// Γ_{i+1} = <[x, y] : x ∈ Γ_i, y ∈ G>
inline std::vector<RankSet> brute_lower_series(const PcPresentation& P) {
  const RankSet G = all_ranks(P);
  std::vector<RankSet> series{G};
  while (series.back().size() > 1) {
    std::vector<Element> comms;
    RankSet seen;
    for (auto x : series.back())
      for (auto y : G) {
        Element c = P.commutator(P.element_at(x), P.element_at(y));
        if (seen.insert(P.rank(c)).second)
          comms.push_back(c);
      }
    RankSet next = generated(P, comms);
    if (next == series.back())
      break;
    series.push_back(next);
  }
  return series;
}

// Φ(G) as the intersection of kernels of all nonzero homomorphisms G -> C_p.
// A candidate is the linear form on exponent vectors given by values on the
// pc-generators; it is kept only if it is multiplicative on every pair.
inline RankSet brute_frattini(const PcPresentation& P) {
  const int p = P.prime();
  const std::size_t m = P.ngens();
  const auto elems = to_elements(P, all_ranks(P));
  RankSet phi = all_ranks(P);
  std::uint64_t forms = 1;
  for (std::size_t k = 0; k < m; ++k)
    forms *= static_cast<std::uint64_t>(p);
  for (std::uint64_t f = 1; f < forms; ++f) {
    std::vector<int> v(m);
    std::uint64_t t = f;
    for (std::size_t k = 0; k < m; ++k) {
      v[k] = static_cast<int>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    auto val = [&](const Element& x) {
      long long s = 0;
      for (std::size_t k = 0; k < m; ++k)
        s += static_cast<long long>(v[k]) * x[k];
      return static_cast<int>(s % p);
    };
    bool hom = true;
    for (const auto& x : elems) {
      for (const auto& y : elems)
        if (val(P.multiply(x, y)) != (val(x) + val(y)) % p) {
          hom = false;
          break;
        }
      if (!hom)
        break;
    }
    if (!hom)
      continue;
    RankSet kernel;
    for (const auto& x : elems)
      if (val(x) == 0)
        kernel.insert(P.rank(x));
    RankSet meet;
    std::set_intersection(phi.begin(), phi.end(), kernel.begin(), kernel.end(),
                          std::inserter(meet, meet.begin()));
    phi = std::move(meet);
  }
  return phi;
}

// Rank-level model of a consistent group: one collection per (x, g_k) edge,
// everything else is a walk along those edges. Scales to order 3^7 and 5^7.
class RankGroup {
 public:
  using R = std::uint32_t;

  explicit RankGroup(const PcPresentation& P)
      : p_(P.prime()), m_(P.ngens()), n_(*P.order()), right_(n_ * m_) {
    for (std::uint64_t x = 0; x < n_; ++x)
      for (std::size_t k = 0; k < m_; ++k)
        right_[x * m_ + k] =
            static_cast<R>(P.rank(P.multiply(P.element_at(x), P.generator(k))));
    inv_.resize(n_);
    for (std::uint64_t x = 0; x < n_; ++x) {
      R prev = 0, cur = static_cast<R>(x);
      while (cur != 0) {
        prev = cur;
        cur = mul(cur, static_cast<R>(x));
      }
      inv_[x] = x == 0 ? 0 : prev;
    }
  }

  std::uint64_t order() const { return n_; }
  R generator(std::size_t k) const { return right_[k]; }  // 1 * g_k

  R mul(R x, R y) const {
    std::vector<int> d(m_);
    for (std::size_t k = m_; k-- > 0;) {
      d[k] = static_cast<int>(y % static_cast<R>(p_));
      y /= static_cast<R>(p_);
    }
    for (std::size_t k = 0; k < m_; ++k)
      for (int e = 0; e < d[k]; ++e)
        x = right_[x * m_ + k];
    return x;
  }
  R inv(R x) const { return inv_[x]; }
  R pow(R x, long long e) const {
    R acc = 0;
    for (long long i = 0; i < e; ++i)
      acc = mul(acc, x);
    return acc;
  }
  R comm(R x, R y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  R conj(R x, R g) const { return mul(mul(inv(g), x), g); }

  RankSet generated(const std::vector<R>& gens) const {
    RankSet seen{0};
    std::vector<R> frontier{0};
    while (!frontier.empty()) {
      std::vector<R> next;
      for (R x : frontier)
        for (R g : gens) {
          R y = mul(x, g);
          if (seen.insert(y).second)
            next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen;
  }

  RankSet centralizer(const RankSet& S) const {
    RankSet out;
    for (R g = 0; g < n_; ++g) {
      bool ok = true;
      for (auto s : S)
        if (mul(g, static_cast<R>(s)) != mul(static_cast<R>(s), g)) {
          ok = false;
          break;
        }
      if (ok)
        out.insert(g);
    }
    return out;
  }

  // Z_{i+1} = {g : [g, g_k] ∈ Z_i for every pc-generator}, valid as Z_i is normal.
  std::vector<RankSet> upper_series() const {
    std::vector<RankSet> series{RankSet{0}};
    while (series.back().size() < n_) {
      RankSet next;
      for (R g = 0; g < n_; ++g) {
        bool ok = true;
        for (std::size_t k = 0; k < m_ && ok; ++k)
          ok = series.back().count(comm(g, generator(k))) == 1;
        if (ok)
          next.insert(g);
      }
      if (next == series.back())
        break;
      series.push_back(next);
    }
    return series;
  }

  // Φ(G) = G' G^p, with G' generated by [x, g_k] over all x and pc-generators.
  RankSet frattini() const {
    std::vector<R> gens;
    for (R x = 0; x < n_; ++x) {
      gens.push_back(pow(x, p_));
      for (std::size_t k = 0; k < m_; ++k)
        gens.push_back(comm(x, generator(k)));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated(gens);
  }

  std::size_t log_p(std::uint64_t size) const {
    std::size_t k = 0;
    while (size > 1) {
      size /= static_cast<std::uint64_t>(p_);
      ++k;
    }
    return k;
  }

 private:
  int p_;
  std::size_t m_;
  std::uint64_t n_;
  std::vector<R> right_;
  std::vector<R> inv_;
};

inline bool subset(const RankSet& a, const RankSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace fixtures
