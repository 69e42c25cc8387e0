#include "pgcert/group_map.hpp"

#include "pgcert/errors.hpp"
#include "pgcert/generator_table.hpp"

namespace pgcert {

GroupMap GroupMap::identity(const PcPresentation& P) {
  GroupMap f;
  for (std::size_t k = 0; k < P.ngens(); ++k)
    f.images.push_back(P.generator(k));
  return f;
}

GroupMap GroupMap::inner(const PcPresentation& P, const Element& g) {
  GroupMap f;
  for (std::size_t k = 0; k < P.ngens(); ++k)
    f.images.push_back(P.conjugate(P.generator(k), g));
  return f;
}

Element apply_map(const PcPresentation& P, const GroupMap& f, const Element& x) {
  Element acc = P.identity();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0)
      acc = P.multiply(acc, P.power(f.images[k], x[k]));
  return acc;
}

GroupMap compose(const PcPresentation& P, const GroupMap& first, const GroupMap& second) {
  GroupMap out;
  out.images.reserve(first.images.size());
  for (const auto& img : first.images)
    out.images.push_back(apply_map(P, second, img));
  return out;
}

std::vector<Element> FrattiniFrame::free_generators(const PcPresentation& P, const Subgroup& phi) {
  std::vector<Element> gens;
  for (std::size_t d = 0; d < P.ngens(); ++d)
    if (phi.slot_of_depth(d) < 0)
      gens.push_back(P.generator(d));
  return gens;
}

FrattiniFrame::FrattiniFrame(const PcPresentation& P)
    : phi_(pgcert::frattini(P)), frame_(P, phi_, free_generators(P, phi_)) {}

std::size_t FrattiniFrame::image_rank(const PcPresentation& P,
                                      const std::vector<Element>& xs) const {
  FpMatrix M(xs.size(), rank(), P.prime());
  for (std::size_t r = 0; r < xs.size(); ++r) {
    FpVector v = frame_(P, xs[r]);
    for (std::size_t c = 0; c < v.size(); ++c)
      M.set(r, c, v[c]);
  }
  return M.rank();
}

Verdict verify_automorphism(const PcPresentation& P, const GroupMap& f, Bijectivity how) {
  return verify_automorphism(P, f, FrattiniFrame(P), how);
}

Verdict verify_automorphism(const PcPresentation& P, const GroupMap& f, const FrattiniFrame& frame,
                            Bijectivity how) {
  const std::size_t m = P.ngens();
  if (f.images.size() != m)
    return {false, "expected " + std::to_string(m) + " images, got " +
                       std::to_string(f.images.size())};
  for (const auto& img : f.images)
    if (img.size() != m)
      return {false, "image has the wrong number of exponents"};

  for (std::size_t i = 0; i < m; ++i) {
    Element lhs = P.power(f.images[i], P.prime());
    if (lhs != apply_map(P, f, P.power_relation(i)))
      return {false, "power relation for g" + std::to_string(i + 1) + " not preserved"};
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Element lhs = P.commutator(f.images[j], f.images[i]);
      if (lhs != apply_map(P, f, P.commutator_relation(j, i)))
        return {false, "commutator relation [g" + std::to_string(j + 1) + ", g" +
                           std::to_string(i + 1) + "] not preserved"};
    }

  if (how == Bijectivity::closure) {
    if (Subgroup::closure(P, f.images).log_order() != m)
      return {false, "images do not generate the group"};
  } else if (frame.image_rank(P, f.images) != frame.rank()) {
    return {false, "images do not generate the group modulo the Frattini subgroup"};
  }
  return {};
}

std::uint64_t map_order(const PcPresentation& P, const GroupMap& f, std::uint64_t limit) {
  const GroupMap id = GroupMap::identity(P);
  GroupMap cur = f;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (cur == id)
      return k;
    cur = compose(P, cur, f);
  }
  throw BoundExceeded("map order exceeds " + std::to_string(limit));
}

InnerSearch is_inner(const PcPresentation& P, const GroupMap& f, Exec exec) {
  return is_inner(P, f, center(P, exec), exec);
}

InnerSearch is_inner(const PcPresentation& P, const GroupMap& f, const Subgroup& center,
                     Exec exec) {
  InnerSearch out;
  out.candidates = center.coset_count(P);
  auto hit = find_first(exec, out.candidates, [&](std::uint64_t idx) {
    Element c = center.coset_rep(P, idx);
    Element ci = P.inverse(c);
    for (std::size_t k = 0; k < P.ngens(); ++k)
      if (P.multiply(P.multiply(ci, P.generator(k)), c) != f.images[k])
        return false;
    return true;
  });
  if (hit)
    out.witness = center.coset_rep(P, *hit);
  return out;
}

bool fixes_elementwise(const PcPresentation& P, const GroupMap& f, const Subgroup& S) {
  for (const auto& s : S.elements(P))
    if (apply_map(P, f, s) != s)
      return false;
  return true;
}

bool is_central_map(const PcPresentation& P, const GroupMap& f, const Subgroup& center) {
  for (std::size_t k = 0; k < P.ngens(); ++k)
    if (!center.contains(P, P.multiply(P.inverse(P.generator(k)), f.images[k])))
      return false;
  return true;
}

bool centralizes_quotient(const PcPresentation& P, const GroupMap& f, const Subgroup& S,
                          Exec exec) {
  const std::uint64_t n = checked_order(P);
  return !find_first(exec, n, [&](std::uint64_t r) {
    Element g = P.element_at(r);
    return !S.contains(P, P.multiply(P.inverse(g), apply_map(P, f, g)));
  });
}

std::optional<std::pair<Element, Element>> homomorphism_violation(const PcPresentation& P,
                                                                  const GroupMap& f,
                                                                  Exec exec) {
  using Rank = GeneratorTable::Rank;
  const GeneratorTable T(P, exec);
  const std::uint64_t n = T.order();
  auto image = tabulate<Rank>(exec, n, [&](std::uint64_t r) {
    return T.rank(apply_map(P, f, T.element(static_cast<Rank>(r))));
  });
  auto bad_row = [&](std::uint64_t x) -> std::optional<std::uint64_t> {
    for (std::uint64_t y = 0; y < n; ++y)
      if (image[T.multiply(static_cast<Rank>(x), static_cast<Rank>(y))] !=
          T.multiply(image[x], image[y]))
        return y;
    return std::nullopt;
  };
  auto x = find_first(exec, n, [&](std::uint64_t r) { return bad_row(r).has_value(); });
  if (!x)
    return std::nullopt;
  return std::make_pair(T.element(static_cast<Rank>(*x)),
                        T.element(static_cast<Rank>(*bad_row(*x))));
}

std::vector<GroupMap> central_automorphisms(const PcPresentation& P, const Subgroup& center,
                                            Exec exec, std::uint64_t bound) {
  const std::size_t m = P.ngens();
  const auto zs = center.elements(P);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (total > bound / zs.size())
      throw BoundExceeded("more than " + std::to_string(bound) + " central candidate maps");
    total *= zs.size();
  }
  const FrattiniFrame frame(P);
  auto candidate = [&](std::uint64_t idx) {
    GroupMap f;
    f.images.resize(m);
    // generator 0 takes the most significant digit, matching lexicographic order
    for (std::size_t k = m; k-- > 0;) {
      f.images[k] = P.multiply(P.generator(k), zs[idx % zs.size()]);
      idx /= zs.size();
    }
    return f;
  };
  auto hits = filter_indices(exec, total, [&](std::uint64_t idx) {
    return verify_automorphism(P, candidate(idx), frame).ok;
  });
  std::vector<GroupMap> out;
  out.reserve(hits.size());
  for (auto idx : hits)
    out.push_back(candidate(idx));
  return out;
}

}  // namespace pgcert
