#pragma once

#include <cstdint>
#include <random>

#include "sr2/types.hpp"

namespace sr2::detail {

// Deterministic uniform helpers on top of mt19937_64. std::uniform_*
// distributions are implementation-defined, so the mapping is done by hand to
// keep seeded output stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  Vec uniform_vec(Index d, double lo, double hi) {
    Vec out(d);
    for (Index i = 0; i < d; ++i) out[i] = uniform(lo, hi);
    return out;
  }

  // First k entries of a Fisher-Yates shuffle of 0..n-1.
  std::vector<Index> sample_indices(Index n, Index k) {
    std::vector<Index> idx(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (Index i = 0; i < k; ++i) {
      const Index j = i + static_cast<Index>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(k));
    return idx;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sr2::detail
