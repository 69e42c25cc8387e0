#include "pgcert/pc_presentation.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "pgcert/errors.hpp"

namespace pgcert {

bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

std::string gen_name(std::size_t k) { return "g" + std::to_string(k + 1); }

// Relation words must already be normal forms over generators > `floor`.
Element relation_element(const Word& w, int p, std::size_t m, std::size_t floor,
                         const std::string& what) {
  Element e(m);
  std::size_t prev = floor;
  bool first = true;
  for (const Letter& l : w) {
    if (l.gen >= m)
      throw PresentationError(what + ": generator index " + std::to_string(l.gen + 1) +
                              " out of range");
    if (l.gen <= floor)
      throw PresentationError(what + ": uses " + gen_name(l.gen) + ", weight requires index > " +
                              std::to_string(floor + 1));
    if (!first && l.gen <= prev)
      throw PresentationError(what + ": generators must be strictly ascending");
    if (l.exponent < 1 || l.exponent > p - 1)
      throw PresentationError(what + ": exponent " + std::to_string(l.exponent) +
                              " outside [1, " + std::to_string(p - 1) + "]");
    e.set(l.gen, static_cast<int>(l.exponent));
    prev = l.gen;
    first = false;
  }
  return e;
}

}  // namespace

PcPresentation::PcPresentation(const PresentationSpec& spec) : p_(spec.prime), m_(spec.ngens) {
  if (!is_prime(p_))
    throw PresentationError("prime " + std::to_string(p_) + " is not prime");
  if (p_ > kMaxPrime)
    throw PresentationError("prime " + std::to_string(p_) + " exceeds supported maximum " +
                            std::to_string(kMaxPrime));
  if (m_ == 0)
    throw PresentationError("presentation needs at least one generator");
  if (m_ > kMaxGenerators)
    throw PresentationError("at most " + std::to_string(kMaxGenerators) +
                            " generators are supported");

  powers_.assign(m_, Element(m_));
  comms_.assign(m_ * m_, Element(m_));
  for (const auto& [i, w] : spec.powers) {
    if (i >= m_)
      throw PresentationError("power relation for nonexistent generator " + gen_name(i));
    powers_[i] = relation_element(w, p_, m_, i, "power relation " + gen_name(i) + "^p");
  }
  for (const auto& [ji, w] : spec.commutators) {
    auto [j, i] = ji;
    if (j >= m_ || i >= m_)
      throw PresentationError("commutator relation for nonexistent generator");
    if (j <= i)
      throw PresentationError("commutator relation [" + gen_name(j) + "," + gen_name(i) +
                              "] needs j > i");
    comms_[j * m_ + i] = relation_element(
        w, p_, m_, j, "commutator relation [" + gen_name(j) + "," + gen_name(i) + "]");
  }

  power_syllables_.resize(m_);
  comm_syllables_.resize(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i)
    power_syllables_[i] = syllables(powers_[i]);
  for (std::size_t k = 0; k < m_ * m_; ++k)
    comm_syllables_[k] = syllables(comms_[k]);
}

std::optional<std::uint64_t> PcPresentation::order() const {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < m_; ++k) {
    if (n > UINT64_MAX / static_cast<std::uint64_t>(p_))
      return std::nullopt;
    n *= static_cast<std::uint64_t>(p_);
  }
  return n;
}

Element PcPresentation::generator(std::size_t k) const {
  if (k >= m_)
    throw std::out_of_range("generator index out of range");
  return Element::generator(m_, k);
}

std::vector<PcPresentation::Syllable> PcPresentation::syllables(const Element& x) {
  std::vector<Syllable> s;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k])
      s.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(x[k])});
  return s;
}

// Collection from the left: r is kept collected, the pending word sits on a
// stack, and each syllable g_k^e is moved past the collected tail of r using
// g_j g_k = g_k g_j [g_j, g_k].
void PcPresentation::absorb(Element& r, std::span<const Syllable> word) const {
  thread_local std::vector<Syllable> stack;
  stack.clear();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    stack.push_back(*it);

  std::array<std::uint8_t, kMaxGenerators> tail{};
  while (!stack.empty()) {
    const Syllable s = stack.back();
    stack.pop_back();
    const std::size_t k = s.gen;

    std::size_t end = m_;
    while (end > k + 1 && r[end - 1] == 0)
      --end;
    if (end == k + 1) {
      absorb_power(r, k, s.exp);
      continue;
    }

    bool commutes = true;
    for (std::size_t j = k + 1; j < end && commutes; ++j)
      if (r[j] && !comm_syllables_[j * m_ + k].empty())
        commutes = false;

    for (std::size_t j = k + 1; j < end; ++j) {
      tail[j] = static_cast<std::uint8_t>(r[j]);
      r.set(j, 0);
    }

    if (commutes) {
      // g_k^e passes the tail untouched; only a power overflow needs re-collection.
      int e = r[k] + s.exp;
      if (e < p_) {
        r.set(k, e);
        for (std::size_t j = k + 1; j < end; ++j)
          r.set(j, tail[j]);
        continue;
      }
      absorb_power(r, k, s.exp);
      for (std::size_t j = end; j-- > k + 1;)
        if (tail[j])
          stack.push_back({static_cast<std::uint8_t>(j), tail[j]});
      continue;
    }

    if (s.exp > 1)
      stack.push_back({s.gen, static_cast<std::uint8_t>(s.exp - 1)});
    absorb_power(r, k, 1);
    // Conjugated tail: prod_{j>k} (g_j [g_j, g_k])^{tail_j}, pushed in reverse.
    for (std::size_t j = end; j-- > k + 1;) {
      if (!tail[j])
        continue;
      const auto& c = comm_syllables_[j * m_ + k];
      if (c.empty()) {
        stack.push_back({static_cast<std::uint8_t>(j), tail[j]});
        continue;
      }
      for (int rep = 0; rep < tail[j]; ++rep) {
        for (auto it = c.rbegin(); it != c.rend(); ++it)
          stack.push_back(*it);
        stack.push_back({static_cast<std::uint8_t>(j), 1});
      }
    }
  }
}

// r has zero exponents beyond k.
void PcPresentation::absorb_power(Element& r, std::size_t k, int e) const {
  int v = r[k] + e;
  if (v < p_) {
    r.set(k, v);
    return;
  }
  r.set(k, v - p_);
  for (const Syllable& s : power_syllables_[k])
    r.set(s.gen, s.exp);
}

Element PcPresentation::collect(const Word& w) const {
  Element acc = identity();
  for (const Letter& l : w) {
    if (l.gen >= m_)
      throw std::out_of_range("word uses generator index " + std::to_string(l.gen + 1) +
                              " but the presentation has " + std::to_string(m_));
    if (l.exponent > 0 && l.exponent < p_)
      absorb_one(acc, l.gen, static_cast<int>(l.exponent));
    else if (l.exponent != 0)
      acc = multiply(acc, power(generator(l.gen), l.exponent));
  }
  return acc;
}

Element PcPresentation::multiply(const Element& x, const Element& y) const {
  std::array<Syllable, kMaxGenerators> buf;
  std::size_t n = 0;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (y[k])
      buf[n++] = {static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(y[k])};
  Element r = x;
  absorb(r, {buf.data(), n});
  return r;
}

void PcPresentation::absorb_one(Element& r, std::size_t k, int e) const {
  const Syllable s{static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(e)};
  absorb(r, {&s, 1});
}

// Solve x * y = 1 coordinate by coordinate: after killing positions < k the
// running product has depth >= k, so appending g_k^{p - c} clears position k.
Element PcPresentation::inverse(const Element& x) const {
  Element y = identity();
  Element cur = x;
  for (std::size_t k = 0; k < m_; ++k) {
    int c = cur[k];
    if (c == 0)
      continue;
    int d = p_ - c;
    absorb_one(cur, k, d);
    y.set(k, d);
  }
  return y;
}

Element PcPresentation::power(const Element& x, long long k) const {
  Element base = k < 0 ? inverse(x) : x;
  unsigned long long n = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Element acc = identity();
  while (n) {
    if (n & 1ULL)
      acc = multiply(acc, base);
    n >>= 1;
    if (n)
      base = multiply(base, base);
  }
  return acc;
}

Element PcPresentation::conjugate(const Element& x, const Element& g) const {
  return multiply(multiply(inverse(g), x), g);
}

Element PcPresentation::commutator(const Element& x, const Element& y) const {
  return multiply(inverse(multiply(y, x)), multiply(x, y));
}

std::uint64_t PcPresentation::element_order(const Element& x) const {
  std::uint64_t order = 1;
  Element y = x;
  for (std::size_t t = 0; t <= m_; ++t) {
    if (y.is_identity())
      return order;
    y = power(y, p_);
    order *= static_cast<std::uint64_t>(p_);
  }
  throw InvariantViolation("element order exceeds p^m; presentation is inconsistent");
}

std::uint64_t PcPresentation::rank(const Element& x) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < m_; ++k)
    r = r * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(x[k]);
  return r;
}

Element PcPresentation::element_at(std::uint64_t rank) const {
  Element x(m_);
  for (std::size_t k = m_; k-- > 0;) {
    x.set(k, static_cast<int>(rank % static_cast<std::uint64_t>(p_)));
    rank /= static_cast<std::uint64_t>(p_);
  }
  return x;
}

PresentationSpec PcPresentation::to_spec() const {
  PresentationSpec spec;
  spec.prime = p_;
  spec.ngens = m_;
  for (std::size_t i = 0; i < m_; ++i)
    if (!powers_[i].is_identity())
      spec.powers[i] = to_word(powers_[i]);
  for (std::size_t j = 0; j < m_; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!commutator_relation(j, i).is_identity())
        spec.commutators[{j, i}] = to_word(commutator_relation(j, i));
  return spec;
}

std::uint64_t checked_order(const PcPresentation& P, std::uint64_t bound) {
  auto n = P.order();
  if (!n || *n > bound)
    throw BoundExceeded("group of order " + std::to_string(P.prime()) + "^" +
                        std::to_string(P.ngens()) + " exceeds the element bound " +
                        std::to_string(bound));
  return *n;
}

std::vector<Element> enumerate_elements(const PcPresentation& P, std::uint64_t bound) {
  const std::uint64_t n = checked_order(P, bound);
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r)
    out.push_back(P.element_at(r));
  return out;
}

std::optional<ConsistencyWitness> validate_consistency(const PcPresentation& P) {
  const std::size_t m = P.ngens();
  const int p = P.prime();
  auto gen = [&](std::size_t k) { return P.generator(k); };
  auto gen_pow = [&](std::size_t k, int e) { return Element::generator(m, k, e); };

  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Element lhs = P.multiply(gen(k), P.multiply(gen(j), gen(i)));
        Element rhs = P.multiply(P.multiply(gen(k), gen(j)), gen(i));
        if (lhs != rhs)
          return ConsistencyWitness{OverlapKind::triple, k, j, i, lhs, rhs};
      }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Element lhs = P.multiply(P.power_relation(j), gen(i));
      Element rhs = P.multiply(gen_pow(j, p - 1), P.multiply(gen(j), gen(i)));
      if (lhs != rhs)
        return ConsistencyWitness{OverlapKind::power_left, 0, j, i, lhs, rhs};
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Element lhs = P.multiply(gen(j), P.power_relation(i));
      Element rhs = P.multiply(P.multiply(gen(j), gen(i)), gen_pow(i, p - 1));
      if (lhs != rhs)
        return ConsistencyWitness{OverlapKind::power_right, 0, j, i, lhs, rhs};
    }
  for (std::size_t i = 0; i < m; ++i) {
    Element lhs = P.multiply(gen(i), P.power_relation(i));
    Element rhs = P.multiply(P.power_relation(i), gen(i));
    if (lhs != rhs)
      return ConsistencyWitness{OverlapKind::power_power, 0, 0, i, lhs, rhs};
  }
  return std::nullopt;
}

namespace {

std::string vec_string(const Element& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < x.size(); ++k)
    os << (k ? "," : "") << x[k];
  os << ')';
  return os.str();
}

}  // namespace

std::string describe(const ConsistencyWitness& w) {
  std::ostringstream os;
  auto g = [](std::size_t k) { return gen_name(k); };
  switch (w.kind) {
    case OverlapKind::triple:
      os << g(w.k) << "(" << g(w.j) << g(w.i) << ") != (" << g(w.k) << g(w.j) << ")" << g(w.i);
      break;
    case OverlapKind::power_left:
      os << "(" << g(w.j) << "^p)" << g(w.i) << " != " << g(w.j) << "^(p-1)(" << g(w.j)
         << g(w.i) << ")";
      break;
    case OverlapKind::power_right:
      os << g(w.j) << "(" << g(w.i) << "^p) != (" << g(w.j) << g(w.i) << ")" << g(w.i)
         << "^(p-1)";
      break;
    case OverlapKind::power_power:
      os << g(w.i) << "(" << g(w.i) << "^p) != (" << g(w.i) << "^p)" << g(w.i);
      break;
  }
  os << ": " << vec_string(w.lhs) << " vs " << vec_string(w.rhs);
  return os.str();
}

}  // namespace pgcert
