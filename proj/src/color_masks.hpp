#pragma once

// Per-color packed bit arrays over [1, n]; bit p stands for position p
// (bit 0 is unused). Pair counts along a fixed difference reduce to a
// shifted AND followed by popcount, 64 positions per word.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "schurlab/coloring.hpp"

namespace schurlab::detail {

class ColorMasks {
 public:
  explicit ColorMasks(const Coloring& coloring) : n_(coloring.n()) {
    const std::size_t words = static_cast<std::size_t>(n_ + 1) / 64 + 2;
    for (auto& m : masks_) m.assign(words, 0);
    for (int p = 1; p <= n_; ++p) {
      const auto c = static_cast<std::size_t>(index_of(coloring.at(p)));
      masks_[c][static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);
    }
  }

  /// #{x in [lo, hi] : x in color a and x + shift in color b}.
  [[nodiscard]] std::int64_t count_shifted(Color a, Color b, int shift, int lo, int hi) const {
    if (lo > hi) return 0;
    const auto& ma = masks_[static_cast<std::size_t>(index_of(a))];
    const auto& mb = masks_[static_cast<std::size_t>(index_of(b))];
    const auto q = static_cast<std::size_t>(shift) >> 6;
    const unsigned r = static_cast<unsigned>(shift) & 63U;
    const auto wlo = static_cast<std::size_t>(lo) >> 6;
    const auto whi = static_cast<std::size_t>(hi) >> 6;
    std::int64_t total = 0;
    for (std::size_t w = wlo; w <= whi; ++w) {
      std::uint64_t shifted = word(mb, w + q) >> r;
      if (r != 0) shifted |= word(mb, w + q + 1) << (64U - r);
      std::uint64_t v = ma[w] & shifted;
      if (w == wlo) v &= ~std::uint64_t{0} << (static_cast<unsigned>(lo) & 63U);
      if (w == whi) {
        const unsigned top = static_cast<unsigned>(hi) & 63U;
        if (top != 63U) v &= (std::uint64_t{1} << (top + 1U)) - 1U;
      }
      total += std::popcount(v);
    }
    return total;
  }

 private:
  static std::uint64_t word(const std::vector<std::uint64_t>& m, std::size_t i) {
    return i < m.size() ? m[i] : 0;
  }

  int n_;
  std::array<std::vector<std::uint64_t>, kMaxColors> masks_;
};

}  // namespace schurlab::detail
