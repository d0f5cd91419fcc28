#pragma once

// Colorings of the integer interval [1, n] with two or three colors, the
// block constructions used for the extremal colorings, and the element and
// symmetric-pair statistics that the counting bounds are written in.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "schurlab/surd.hpp"

namespace schurlab {

enum class Color : std::uint8_t { Red = 0, Blue = 1, Green = 2 };

inline constexpr int kMaxColors = 3;

constexpr int index_of(Color c) { return static_cast<int>(c); }
constexpr Color color_at(int index) { return static_cast<Color>(index); }
char color_letter(Color c);
/// Accepts R, B, G (case-insensitive). Throws Error otherwise.
Color parse_color_letter(char letter);

/// An assignment of one of r colors to every integer of [1, n].
/// Positions are 1-based throughout the public API.
class Coloring {
 public:
  Coloring(std::vector<Color> cells, int r);
  /// n cells of a single color.
  static Coloring uniform(int n, Color c, int r = 2);

  [[nodiscard]] int n() const { return static_cast<int>(cells_.size()); }
  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] Color at(int position) const { return cells_[static_cast<std::size_t>(position - 1)]; }
  [[nodiscard]] std::span<const Color> cells() const { return cells_; }

  /// Per-color element counts over the whole interval.
  [[nodiscard]] std::array<int, kMaxColors> counts() const;

  /// Same coloring with one cell changed. Throws Error on a bad position or color.
  [[nodiscard]] Coloring flip(int position, Color new_color) const;
  /// In-place variant of flip for single-owner search buffers.
  void set(int position, Color new_color);

  /// Exchange colors a and b everywhere.
  [[nodiscard]] Coloring swap_colors(Color a, Color b) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& l, const Coloring& r) { return l.cells_ <=> r.cells_; }

 private:
  std::vector<Color> cells_;
  int r_;
};

using Weight = Surd;

struct Block {
  Color color;
  Weight weight;
};

/// Ordered color blocks with nonnegative weights. Realized by cumulative-floor
/// rounding: block k spans (floor(n W_{k-1}/W), floor(n W_k/W)].
struct BlockSpec {
  std::vector<Block> blocks;
};

/// Throws Error on an empty block list, a negative weight or zero total weight.
/// r defaults to 3 when any block is green, 2 otherwise.
Coloring from_blocks(int n, const BlockSpec& spec, int r = 0);
/// The realized length of every block (same rounding as from_blocks).
std::vector<int> block_lengths(int n, const BlockSpec& spec);

/// Whitespace-separated tokens <Letter><Count>, e.g. "R4 B6 R1".
/// r defaults to 3 when G occurs, 2 otherwise.
Coloring parse_runlength(std::string_view text, int r = 0);
/// Maximal runs, single space separated.
std::string format_runlength(const Coloring& coloring);

nlohmann::ordered_json to_json(const Coloring& coloring);
Coloring coloring_from_json(const nlohmann::json& j);

struct MuStats {
  int n = 0;
  int split = 1;   ///< the parameter a
  int lo_len = 0;  ///< floor(n / a)
  std::array<int, kMaxColors> mu{};     ///< over [1, n]
  std::array<int, kMaxColors> mu_lo{};  ///< over [1, floor(n/a)]
  std::array<int, kMaxColors> mu_hi{};  ///< over (floor(n/a), n]
};

/// Throws Error for a < 1.
MuStats mu_stats(const Coloring& coloring, int a);

/// Symmetric pairs {s, L+1-s}, 1 <= s <= floor(L/2), tallied by
/// (color of s, color of L+1-s). For odd L the middle element is unpaired.
struct PairStats {
  int length = 0;
  std::array<std::array<std::int64_t, kMaxColors>, kMaxColors> mu_cc{};
  std::int64_t gamma_count = 0;  ///< bichromatic pairs

  [[nodiscard]] std::int64_t operator()(Color smaller, Color larger) const {
    return mu_cc[static_cast<std::size_t>(index_of(smaller))][static_cast<std::size_t>(index_of(larger))];
  }
};

/// Throws Error when L < 1 or L > n.
PairStats pair_stats(const Coloring& coloring, int length);

}  // namespace schurlab
