#include "pgcert/derivation.hpp"

#include <deque>

#include "pgcert/errors.hpp"
#include "pgcert/generator_table.hpp"

namespace pgcert {

Element canonical_rep(const PcPresentation& P, const Subgroup& N, const Element& g) {
  return N.canonical_rep(P, g);
}

Derivation::Derivation(const PcPresentation& P, Subgroup N, std::vector<Element> values)
    : N_(std::move(N)), values_(std::move(values)) {
  if (!N_.is_normal())
    throw PreconditionError("derivation: N is not normal");
  if (values_.size() != N_.coset_count(P))
    throw PreconditionError("derivation: table has " + std::to_string(values_.size()) +
                            " entries for " + std::to_string(N_.coset_count(P)) + " cosets");
  for (const auto& v : values_) {
    bool central = N_.contains(P, v);
    for (const auto& n : N_.basis())
      central = central && P.multiply(v, n) == P.multiply(n, v);
    if (!central)
      throw PreconditionError("derivation: table value outside Z(N)");
  }
}

Derivation Derivation::zero(const PcPresentation& P, const Subgroup& N) {
  return Derivation(P, N, std::vector<Element>(N.coset_count(P), P.identity()));
}

Derivation pointwise_product(const PcPresentation& P, const Derivation& d1, const Derivation& d2) {
  if (!(d1.N() == d2.N()))
    throw PreconditionError("pointwise product of derivations on different quotients");
  std::vector<Element> v(d1.coset_count());
  for (std::uint64_t k = 0; k < v.size(); ++k)
    v[k] = P.multiply(d1.at_coset(k), d2.at_coset(k));
  return Derivation(P, d1.N(), std::move(v));
}

RemarkFormulas::RemarkFormulas(const PcPresentation& P, const RemarkContext& ctx)
    : w_(ctx.w),
      c_wb_(ctx.c_wb),
      a_inv_(P.inverse(ctx.a)),
      b_inv_(P.inverse(ctx.b)),
      top_(P, ctx.phi, {ctx.a, ctx.b}),
      bottom_(P, ctx.z_m_minus_4(), {ctx.c_ab}) {
  if (!(top_.section_top().log_order() == P.ngens()))
    throw InvariantViolation("a, b do not span G modulo the Frattini subgroup");
  if (!(bottom_.section_top() == ctx.phi))
    throw InvariantViolation("[a, b] does not span Phi(G) modulo Z_{m-4}");
}

RemarkFormulas::Exponents RemarkFormulas::decompose(const PcPresentation& P,
                                                    const Element& g) const {
  FpVector v = top_(P, g);
  Exponents e;
  e.j = v[0];
  e.i = v[1];
  Element x = P.multiply(P.multiply(g, P.power(b_inv_, e.i)), P.power(a_inv_, e.j));
  e.t = bottom_(P, x)[0];
  return e;
}

Element RemarkFormulas::alpha(const PcPresentation& P, const Element& g) const {
  const long long i = decompose(P, g).i;
  // integer i(i-1)/2 first, then reduced by the exponent of [w, b]
  return P.multiply(P.power(w_, i), P.power(c_wb_, i * (i - 1) / 2));
}

Element RemarkFormulas::beta(const PcPresentation& P, const Element& g) const {
  const auto e = decompose(P, g);
  return P.multiply(P.power(w_, e.j),
                    P.power(c_wb_, static_cast<long long>(e.i) * e.j + e.t));
}

namespace {

Derivation tabulate_formula(const PcPresentation& P, const Subgroup& N, Exec exec,
                            const std::function<Element(const Element&)>& fn) {
  auto values = tabulate<Element>(exec, N.coset_count(P),
                                  [&](std::uint64_t k) { return fn(N.coset_rep(P, k)); });
  return Derivation(P, N, std::move(values));
}

}  // namespace

Derivation build_alpha(const PcPresentation& P, const RemarkContext& ctx, Exec exec) {
  RemarkFormulas f(P, ctx);
  return tabulate_formula(P, ctx.N, exec, [&](const Element& g) { return f.alpha(P, g); });
}

Derivation build_beta(const PcPresentation& P, const RemarkContext& ctx, Exec exec) {
  RemarkFormulas f(P, ctx);
  return tabulate_formula(P, ctx.N, exec, [&](const Element& g) { return f.beta(P, g); });
}

namespace {

// Table side of the cocycle sweep; depends only on N, so it is shared by
// every candidate table on the same quotient.
class CocycleFrame {
 public:
  using Rank = GeneratorTable::Rank;

  CocycleFrame(const PcPresentation& P, const Subgroup& N, Exec exec) : T_(P, exec) {
    coset_of_ = tabulate<std::uint32_t>(exec, T_.order(), [&](std::uint64_t r) {
      return static_cast<std::uint32_t>(N.coset_index(P, T_.element(static_cast<Rank>(r))));
    });
    reps_ = tabulate<Rank>(exec, N.coset_count(P),
                           [&](std::uint64_t k) { return T_.rank(N.coset_rep(P, k)); });
  }

  const GeneratorTable& table() const { return T_; }
  Rank rep(std::uint64_t k) const { return reps_[k]; }

  /// Lexicographically first failing pair of coset indices.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_violation(
      const std::vector<Rank>& vals, Exec exec) const {
    const std::uint64_t n = reps_.size();
    auto first_bad = [&](std::uint64_t x) -> std::optional<std::uint64_t> {
      for (std::uint64_t y = 0; y < n; ++y) {
        const Rank lhs = vals[coset_of_[T_.multiply(reps_[x], reps_[y])]];
        const Rank rhs = T_.multiply(
            T_.multiply(T_.multiply(T_.inverse(reps_[y]), vals[x]), reps_[y]), vals[y]);
        if (lhs != rhs)
          return y;
      }
      return std::nullopt;
    };
    auto x = find_first(exec, n, [&](std::uint64_t k) { return first_bad(k).has_value(); });
    if (!x)
      return std::nullopt;
    return std::make_pair(*x, *first_bad(*x));
  }

 private:
  GeneratorTable T_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Rank> reps_;
};

}  // namespace

std::optional<CocycleViolation> verify_cocycle(const PcPresentation& P, const Derivation& d,
                                               Exec exec) {
  const CocycleFrame frame(P, d.N(), exec);
  const auto& T = frame.table();
  auto vals = tabulate<CocycleFrame::Rank>(exec, d.coset_count(),
                                           [&](std::uint64_t k) { return T.rank(d.at_coset(k)); });
  auto bad = frame.first_violation(vals, exec);
  if (!bad)
    return std::nullopt;
  auto [x, y] = *bad;
  Element g1 = T.element(frame.rep(x)), g2 = T.element(frame.rep(y));
  return CocycleViolation{g1, g2, d(P, P.multiply(g1, g2)),
                          P.multiply(P.conjugate(d.at_coset(x), g2), d.at_coset(y))};
}

std::optional<CocycleViolation> verify_cocycle_direct(const PcPresentation& P,
                                                      const Derivation& d) {
  const Subgroup& N = d.N();
  const std::uint64_t n = d.coset_count();
  for (std::uint64_t x = 0; x < n; ++x) {
    const Element g1 = N.coset_rep(P, x);
    for (std::uint64_t y = 0; y < n; ++y) {
      const Element g2 = N.coset_rep(P, y);
      Element lhs = d(P, P.multiply(g1, g2));
      Element rhs = P.multiply(P.conjugate(d.at_coset(x), g2), d.at_coset(y));
      if (lhs != rhs)
        return CocycleViolation{g1, g2, lhs, rhs};
    }
  }
  return std::nullopt;
}

std::optional<Element> first_ill_defined(const PcPresentation& P, const Derivation& d,
                                         const std::function<Element(const Element&)>& formula,
                                         Exec exec) {
  auto r = find_first(exec, checked_order(P), [&](std::uint64_t k) {
    Element g = P.element_at(k);
    return formula(g) != d(P, g);
  });
  if (!r)
    return std::nullopt;
  return P.element_at(*r);
}

GroupMap phi_realize(const PcPresentation& P, const Derivation& d, Exec exec) {
  if (auto bad = verify_cocycle(P, d, exec))
    throw DerivationError("phi_realize: cocycle identity fails");
  GroupMap f;
  for (std::size_t k = 0; k < P.ngens(); ++k)
    f.images.push_back(P.multiply(P.generator(k), d(P, P.generator(k))));
  auto off = find_first(exec, checked_order(P), [&](std::uint64_t r) {
    Element g = P.element_at(r);
    return apply_map(P, f, g) != P.multiply(g, d(P, g));
  });
  if (off)
    throw InvariantViolation("phi_realize: realized map differs from g -> g d(Ng)");
  return f;
}

std::vector<Derivation> enumerate_Z1(const PcPresentation& P, const Subgroup& N,
                                     std::uint64_t coset_bound, Exec exec) {
  const std::uint64_t n = N.coset_count(P);
  if (n > coset_bound)
    throw BoundExceeded("enumerate_Z1: |G/N| = " + std::to_string(n) + " exceeds " +
                        std::to_string(coset_bound));
  const auto zs = subgroup_center(P, N, exec).elements(P);
  std::vector<Element> gens;  // pc-generators at free depths generate G/N
  for (std::size_t k = 0; k < P.ngens(); ++k)
    if (N.slot_of_depth(k) < 0)
      gens.push_back(P.generator(k));

  constexpr std::uint64_t kAssignmentBound = 1000000;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (total > kAssignmentBound / zs.size())
      throw BoundExceeded("enumerate_Z1: too many generator assignments");
    total *= zs.size();
  }
  std::vector<Element> reps(n);
  for (std::uint64_t k = 0; k < n; ++k)
    reps[k] = N.coset_rep(P, k);

  auto propagate = [&](std::uint64_t idx) -> std::optional<std::vector<Element>> {
    std::vector<Element> z(gens.size());
    for (std::size_t k = gens.size(); k-- > 0;) {
      z[k] = zs[idx % zs.size()];
      idx /= zs.size();
    }
    std::vector<std::optional<Element>> val(n);
    val[0] = P.identity();
    std::deque<std::uint64_t> queue{0};
    while (!queue.empty()) {
      const std::uint64_t x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const std::uint64_t y = N.coset_index(P, P.multiply(reps[x], gens[s]));
        Element v = P.multiply(P.conjugate(*val[x], gens[s]), z[s]);
        if (!val[y]) {
          val[y] = v;
          queue.push_back(y);
        } else if (*val[y] != v) {
          return std::nullopt;
        }
      }
    }
    std::vector<Element> out(n);
    for (std::uint64_t k = 0; k < n; ++k)
      out[k] = *val[k];
    return out;
  };

  const CocycleFrame frame(P, N, exec);
  auto hits = filter_indices(exec, total, [&](std::uint64_t idx) {
    auto table = propagate(idx);
    if (!table)
      return false;
    std::vector<CocycleFrame::Rank> vals(n);
    for (std::uint64_t k = 0; k < n; ++k)
      vals[k] = frame.table().rank((*table)[k]);
    return !frame.first_violation(vals, Exec::serial).has_value();
  });
  std::vector<Derivation> out;
  for (auto idx : hits)
    out.emplace_back(P, N, *propagate(idx));
  return out;
}

}  // namespace pgcert
