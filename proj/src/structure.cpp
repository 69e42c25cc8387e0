#include "pgcert/structure.hpp"

#include <algorithm>

#include "pgcert/errors.hpp"

namespace pgcert {

namespace {

std::vector<Element> generators(const PcPresentation& P) {
  std::vector<Element> g;
  for (std::size_t k = 0; k < P.ngens(); ++k)
    g.push_back(P.generator(k));
  return g;
}

Subgroup members_to_subgroup(const PcPresentation& P, const std::vector<std::uint64_t>& ranks) {
  std::vector<Element> members;
  members.reserve(ranks.size());
  for (auto r : ranks)
    members.push_back(P.element_at(r));
  return Subgroup::from_members(P, members);
}

bool commutes(const PcPresentation& P, const Element& x, const Element& y) {
  return P.multiply(x, y) == P.multiply(y, x);
}

}  // namespace

Subgroup subgroup_closure(const PcPresentation& P, std::span<const Element> gens) {
  return Subgroup::closure(P, gens);
}

Subgroup normal_closure(const PcPresentation& P, std::span<const Element> gens) {
  Subgroup S = Subgroup::closure(P, gens);
  for (;;) {
    std::vector<Element> extra;
    for (const Element& b : S.basis())
      for (std::size_t k = 0; k < P.ngens(); ++k) {
        Element c = P.conjugate(b, P.generator(k));
        if (!S.contains(P, c))
          extra.push_back(c);
      }
    if (extra.empty())
      return S;
    extra.insert(extra.end(), S.basis().begin(), S.basis().end());
    S = Subgroup::closure(P, extra);
  }
}

Subgroup centralizer(const PcPresentation& P, const Subgroup& S, Exec exec) {
  const std::uint64_t n = checked_order(P);
  const auto basis = S.basis();
  auto ranks = filter_indices(exec, n, [&](std::uint64_t i) {
    const Element g = P.element_at(i);
    for (const Element& b : basis)
      if (!commutes(P, g, b))
        return false;
    return true;
  });
  return members_to_subgroup(P, ranks);
}

Subgroup center(const PcPresentation& P, Exec exec) {
  return centralizer(P, Subgroup::whole(P), exec);
}

Subgroup intersection(const PcPresentation& P, const Subgroup& A, const Subgroup& B) {
  const Subgroup& small = A.order() <= B.order() ? A : B;
  const Subgroup& big = A.order() <= B.order() ? B : A;
  std::vector<Element> members;
  for (const Element& x : small.elements(P))
    if (big.contains(P, x))
      members.push_back(x);
  return Subgroup::from_members(P, members);
}

Subgroup subgroup_center(const PcPresentation& P, const Subgroup& S, Exec exec) {
  return intersection(P, S, centralizer(P, S, exec));
}

std::vector<Subgroup> upper_central_series(const PcPresentation& P, Exec exec) {
  const std::uint64_t n = checked_order(P);
  const auto gens = generators(P);
  std::vector<Subgroup> series{Subgroup(P)};
  while (series.back().log_order() < P.ngens()) {
    const Subgroup& Z = series.back();
    auto ranks = filter_indices(exec, n, [&](std::uint64_t i) {
      const Element g = P.element_at(i);
      for (const Element& x : gens)
        if (!Z.contains(P, P.commutator(g, x)))
          return false;
      return true;
    });
    Subgroup next = members_to_subgroup(P, ranks);
    if (next.log_order() == Z.log_order())
      throw InvariantViolation("upper central series stalled; group is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const PcPresentation& P) {
  std::vector<Subgroup> series{Subgroup::whole(P)};
  while (!series.back().is_trivial()) {
    std::vector<Element> comms;
    for (const Element& x : series.back().basis())
      for (std::size_t k = 0; k < P.ngens(); ++k)
        comms.push_back(P.commutator(x, P.generator(k)));
    Subgroup next = normal_closure(P, comms);
    if (next.log_order() == series.back().log_order())
      throw InvariantViolation("lower central series stalled; group is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

ClassCoclass class_and_coclass(const PcPresentation& P) {
  const std::size_t c = lower_central_series(P).size() - 1;
  return {c, P.ngens() - c};
}

Subgroup frattini(const PcPresentation& P) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < P.ngens(); ++i) {
    gens.push_back(P.power(P.generator(i), P.prime()));
    for (std::size_t j = 0; j < i; ++j)
      gens.push_back(P.commutator(P.generator(i), P.generator(j)));
  }
  return normal_closure(P, gens);
}

std::size_t minimal_generator_count(const PcPresentation& P) {
  return P.ngens() - frattini(P).log_order();
}

bool is_abelian(const PcPresentation& P, const Subgroup& S) {
  const auto b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(P, b[i], b[j]))
        return false;
  return true;
}

bool quotient_exponent_is_p(const PcPresentation& P, const Subgroup& S, Exec exec) {
  if (!S.is_normal())
    throw PreconditionError("quotient_exponent_is_p: subgroup is not normal");
  const std::uint64_t n = checked_order(P);
  return !find_first(exec, n, [&](std::uint64_t i) {
    return !S.contains(P, P.power(P.element_at(i), P.prime()));
  });
}

Subgroup omega1(const PcPresentation& P, const Subgroup& S) {
  if (!is_abelian(P, S))
    throw PreconditionError("omega1: subgroup is not abelian");
  std::vector<Element> members;
  for (const Element& x : S.elements(P))
    if (P.power(x, P.prime()).is_identity())
      members.push_back(x);
  return Subgroup::from_members(P, members);
}

SectionCoordinates::SectionCoordinates(const PcPresentation& P, const Subgroup& S,
                                       std::vector<Element> basis_elts)
    : bottom_(S),
      top_([&] {
        std::vector<Element> gens(S.basis().begin(), S.basis().end());
        gens.insert(gens.end(), basis_elts.begin(), basis_elts.end());
        return Subgroup::closure(P, gens);
      }()),
      basis_elts_(std::move(basis_elts)),
      matrix_(basis_elts_.size(), basis_elts_.size(), P.prime()) {
  for (const Element& u : basis_elts_) {
    if (!S.contains(P, P.power(u, P.prime())))
      throw PreconditionError("section is not of exponent p");
    for (const Element& s : S.basis())
      if (!S.contains(P, P.conjugate(s, u)))
        throw PreconditionError("bottom of section is not normal in its top");
    for (const Element& v : basis_elts_)
      if (!S.contains(P, P.commutator(u, v)))
        throw PreconditionError("section is not abelian");
  }
  for (std::size_t d : top_.pivots())
    if (bottom_.slot_of_depth(d) < 0)
      free_depths_.push_back(d);
  if (free_depths_.size() != basis_elts_.size())
    throw PreconditionError("section basis images do not form a basis");
  for (std::size_t r = 0; r < basis_elts_.size(); ++r) {
    FpVector row = raw(P, basis_elts_[r]);
    for (std::size_t c = 0; c < row.size(); ++c)
      matrix_.set(r, c, row[c]);
  }
  if (matrix_.rank() != basis_elts_.size())
    throw PreconditionError("section basis images are linearly dependent");
}

// Exponents at the free depths while sifting g through the pc-sequence that
// uses S's basis at S's pivots and U's basis elsewhere. Modulo S this is the
// normal form of gS in U/S, hence linear because U/S is elementary abelian.
FpVector SectionCoordinates::raw(const PcPresentation& P, Element g) const {
  FpVector v(free_depths_.size(), 0);
  const int p = P.prime();
  for (;;) {
    const std::size_t d = g.depth();
    if (d == g.size())
      return v;
    const int e = g[d];
    if (int s = bottom_.slot_of_depth(d); s >= 0) {
      g = P.multiply(bottom_.basis_power(static_cast<std::size_t>(s), p - e), g);
      continue;
    }
    const int t = top_.slot_of_depth(d);
    if (t < 0)
      throw PreconditionError("element lies outside the section");
    auto it = std::lower_bound(free_depths_.begin(), free_depths_.end(), d);
    v[static_cast<std::size_t>(it - free_depths_.begin())] = e;
    g = P.multiply(top_.basis_power(static_cast<std::size_t>(t), p - e), g);
  }
}

FpVector SectionCoordinates::operator()(const PcPresentation& P, const Element& g) const {
  auto x = matrix_.solve_left(raw(P, g));
  if (!x)
    throw InvariantViolation("section coordinates: linear solve failed");
  return *x;
}

FpVector quotient_coordinates(const PcPresentation& P, const Subgroup& S,
                              std::span<const Element> basis_elts, const Element& g) {
  if (!S.is_normal())
    throw PreconditionError("quotient_coordinates: subgroup is not normal");
  SectionCoordinates coords(P, S, std::vector<Element>(basis_elts.begin(), basis_elts.end()));
  if (coords.section_top().log_order() != P.ngens())
    throw PreconditionError("quotient_coordinates: basis images do not span G/S");
  return coords(P, g);
}

}  // namespace pgcert
