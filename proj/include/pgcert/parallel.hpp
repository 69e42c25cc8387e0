#pragma once

// Exhaustive sweeps over element or coset index ranges. Every kernel has a
// serial reference path and an OpenMP path that must agree exactly, including
// which witness is reported (always the smallest index).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pgcert {

enum class Exec { serial, parallel };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Smallest i in [0, n) with pred(i), or nullopt.
template <class Pred>
std::optional<std::uint64_t> find_first(Exec exec, std::uint64_t n, Pred&& pred) {
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i))
        return i;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{n};
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < count; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if (i >= best.load(std::memory_order_relaxed))
      continue;
    if (pred(i)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::uint64_t b = best.load();
  if (b == n)
    return std::nullopt;
  return b;
}

/// All i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::uint64_t> filter_indices(Exec exec, std::uint64_t n, Pred&& pred) {
  std::vector<std::uint64_t> out;
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i))
        out.push_back(i);
    return out;
  }
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(worker_count()));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
#ifdef _OPENMP
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& mine = parts[0];
#endif
    // static schedule hands each thread one contiguous block in thread order
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < count; ++s)
      if (pred(static_cast<std::uint64_t>(s)))
        mine.push_back(static_cast<std::uint64_t>(s));
  }
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

/// out[i] = fn(i) for i in [0, n).
template <class T, class Fn>
std::vector<T> tabulate(Exec exec, std::uint64_t n, Fn&& fn) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      out[i] = fn(i);
    return out;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    out[static_cast<std::uint64_t>(s)] = fn(static_cast<std::uint64_t>(s));
  return out;
}

}  // namespace pgcert
