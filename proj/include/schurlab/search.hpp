#pragma once

// Extremal-coloring search: exhaustive Gray-code enumeration with
// incremental objective updates, enumeration at fixed color counts,
// single-flip local search, and boundary sweeps over block patterns.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schurlab/coloring.hpp"
#include "schurlab/counting.hpp"
#include "schurlab/equations.hpp"

namespace schurlab {

enum class Direction : std::uint8_t { Min, Max };

struct Objective {
  Equation equation = Equation::schur_like(1);
  SolutionClass cls = SolutionClass::Mono;
  Direction direction = Direction::Min;

  /// "min-mono", "max-mono", "min-rainbow", "max-rainbow".
  static Objective parse(const Equation& eq, std::string_view text);
  [[nodiscard]] std::string to_string() const;
  /// True when value a beats value b.
  [[nodiscard]] bool better(std::int64_t a, std::int64_t b) const {
    return direction == Direction::Min ? a < b : a > b;
  }
};

/// Per-color counts a coloring must realize.
using ColorCounts = std::array<int, kMaxColors>;

struct SearchProgress {
  std::uint64_t explored = 0;
  std::int64_t best = 0;
};

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 30;  ///< max colorings evaluated
  int threads = 1;
  /// Cells fixed per work unit when threads > 1; 0 picks a value.
  int split_cells = 0;
  /// Fix cell 1 to red for 2-colorings with a monochromatic objective.
  bool symmetry_reduction = true;
  std::size_t max_witnesses = 16;
  /// Re-count every visited coloring from scratch instead of applying deltas.
  bool full_recount = false;
  /// Report roughly every this many colorings; 0 disables progress.
  std::uint64_t progress_every = 0;
  std::function<void(const SearchProgress&)> on_progress;
};

struct ExtremumReport {
  std::string mode;  ///< "exhaustive", "local" or "sweep"
  std::int64_t best_value = 0;
  /// Lexicographically smallest optimal colorings, at most max_witnesses.
  std::vector<Coloring> witnesses;
  /// Optimal colorings in the explored space (exhaustive modes only).
  std::uint64_t optimum_count = 0;
  std::uint64_t explored = 0;
  std::optional<ColorCounts> constraint;
  bool symmetry_reduced = false;
  bool heuristic = false;
  /// sweep mode: block boundaries of the first optimal placement.
  std::vector<int> boundaries;
  double wall_seconds = 0.0;
};

/// Size of the exhaustive space (after symmetry reduction); saturates at
/// UINT64_MAX.
std::uint64_t exhaustive_space_size(int n, int r, const Objective& objective,
                                    const std::optional<ColorCounts>& constraint, const SearchOptions& options);

/// Exact optimum over all r-colorings of [1, n], or over those with the given
/// color counts. Throws BudgetExceeded when the space exceeds options.budget
/// and Error on an infeasible constraint or a rainbow objective with r = 2.
ExtremumReport exhaustive(int n, int r, const Objective& objective, const std::optional<ColorCounts>& constraint,
                          const SearchOptions& options = {});

/// Steepest single-flip descent (ascent for max) from the all-red coloring
/// and from `restarts` uniformly random colorings. Deterministic in seed.
ExtremumReport local_search(int n, int r, const Objective& objective, int restarts, std::uint64_t seed,
                            const SearchOptions& options = {});

/// Evaluates every block coloring following `pattern` whose boundaries lie on
/// {0, g, 2g, ...} together with n. Throws Error for patterns longer than 4.
ExtremumReport block_sweep(int n, const Objective& objective, std::span<const Color> pattern, int granularity,
                           const SearchOptions& options = {});

nlohmann::ordered_json to_json(const ExtremumReport& report);

}  // namespace schurlab
