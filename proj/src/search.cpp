#include "schurlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "schurlab/error.hpp"

namespace schurlab {

Objective Objective::parse(const Equation& eq, std::string_view text) {
  Objective o;
  o.equation = eq;
  if (text == "min-mono") {
    o.cls = SolutionClass::Mono;
    o.direction = Direction::Min;
  } else if (text == "max-mono") {
    o.cls = SolutionClass::Mono;
    o.direction = Direction::Max;
  } else if (text == "min-rainbow") {
    o.cls = SolutionClass::Rainbow;
    o.direction = Direction::Min;
  } else if (text == "max-rainbow") {
    o.cls = SolutionClass::Rainbow;
    o.direction = Direction::Max;
  } else {
    throw Error("unknown objective '" + std::string(text) + "'");
  }
  return o;
}

std::string Objective::to_string() const {
  return std::string(direction == Direction::Min ? "min-" : "max-") + (cls == SolutionClass::Mono ? "mono" : "rainbow");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t multinomial(const ColorCounts& counts) {
  // Product of binomials, each exact in 64 bits until saturation.
  std::uint64_t out = 1;
  int placed = 0;
  for (int c : counts) {
    for (int k = 1; k <= c; ++k) {
      const std::uint64_t num = static_cast<std::uint64_t>(placed + k);
      // out * C(placed+k, k) / C(placed+k-1, k-1) = out * (placed+k) / k
      if (out > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
      out = out * num / static_cast<std::uint64_t>(k);
    }
    placed += c;
  }
  return out;
}

bool swap_symmetric(int r, const Objective& o) { return r == 2 && o.cls == SolutionClass::Mono; }

void validate(int n, int r, const Objective& o) {
  if (n < 1) throw Error("n must be positive");
  if (r < 2 || r > kMaxColors) throw Error("r must be 2 or 3");
  if (o.cls == SolutionClass::Rainbow) {
    if (r != 3) throw Error("rainbow objectives need r = 3");
    if (o.equation.arity() != 3) throw Error("rainbow objectives need a three-variable equation");
  }
}

/// Running optimum with the lexicographically smallest witnesses.
class Tracker {
 public:
  Tracker(const Objective& o, std::size_t cap) : objective_(o), cap_(cap) {}

  void offer(std::int64_t value, std::span<const Color> cells) {
    if (!has_ || objective_.better(value, best_)) {
      has_ = true;
      best_ = value;
      count_ = 1;
      witnesses_.clear();
      if (cap_ > 0) witnesses_.emplace_back(cells.begin(), cells.end());
      return;
    }
    if (value != best_) return;
    ++count_;
    insert(cells);
  }

  void merge(const Tracker& other) {
    if (!other.has_) return;
    if (!has_ || objective_.better(other.best_, best_)) {
      *this = other;
      return;
    }
    if (other.best_ != best_) return;
    count_ += other.count_;
    for (const auto& w : other.witnesses_) insert(w);
  }

  [[nodiscard]] bool has() const { return has_; }
  [[nodiscard]] std::int64_t best() const { return best_; }
  [[nodiscard]] std::uint64_t count() const { return count_; }
  [[nodiscard]] const std::vector<std::vector<Color>>& witnesses() const { return witnesses_; }

 private:
  void insert(std::span<const Color> cells) {
    if (cap_ == 0) return;
    const auto less = [](const std::vector<Color>& w, std::span<const Color> c) {
      return std::lexicographical_compare(w.begin(), w.end(), c.begin(), c.end());
    };
    if (witnesses_.size() >= cap_ &&
        !std::lexicographical_compare(cells.begin(), cells.end(), witnesses_.back().begin(), witnesses_.back().end())) {
      return;
    }
    const auto it = std::lower_bound(witnesses_.begin(), witnesses_.end(), cells, less);
    if (it != witnesses_.end() && std::equal(it->begin(), it->end(), cells.begin(), cells.end())) return;
    witnesses_.emplace(it, cells.begin(), cells.end());
    if (witnesses_.size() > cap_) witnesses_.pop_back();
  }

  Objective objective_;
  std::size_t cap_;
  bool has_ = false;
  std::int64_t best_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::vector<Color>> witnesses_;
};

class ProgressSink {
 public:
  explicit ProgressSink(const SearchOptions& o) : options_(o) {}

  void add(std::uint64_t visited, std::int64_t local_best) {
    if (options_.progress_every == 0 || !options_.on_progress) return;
    const std::uint64_t before = explored_.fetch_add(visited);
    const std::uint64_t after = before + visited;
    if (before / options_.progress_every != after / options_.progress_every) {
      const std::lock_guard lock(mutex_);
      options_.on_progress({after, local_best});
    }
  }

 private:
  const SearchOptions& options_;
  std::atomic<std::uint64_t> explored_{0};
  std::mutex mutex_;
};

std::int64_t evaluate(std::span<const Color> cells, int r, const Objective& o) {
  return count_class(Coloring(std::vector<Color>(cells.begin(), cells.end()), r), o.equation, o.cls);
}

/// Reflected mixed-radix Gray enumeration of the cells at `free_positions`,
/// starting from `cells`. Every step changes one cell by one color index.
std::uint64_t gray_enumerate(std::vector<Color> cells, int r, const std::vector<int>& free_positions,
                             const Objective& o, const SearchOptions& options, Tracker& tracker,
                             ProgressSink& progress) {
  constexpr std::uint64_t kBatch = 1U << 14;
  std::int64_t value = evaluate(cells, r, o);
  const std::size_t k = free_positions.size();
  std::vector<int> digit(k);
  std::vector<int> dir(k, 1);
  for (std::size_t j = 0; j < k; ++j) digit[j] = index_of(cells[static_cast<std::size_t>(free_positions[j] - 1)]);

  std::uint64_t visited = 0;
  std::uint64_t pending = 0;
  tracker.offer(value, cells);
  ++visited;
  ++pending;
  for (;;) {
    std::size_t j = 0;
    while (j < k && (digit[j] + dir[j] < 0 || digit[j] + dir[j] >= r)) {
      dir[j] = -dir[j];
      ++j;
    }
    if (j == k) break;
    digit[j] += dir[j];
    const int pos = free_positions[j];
    const Color next = color_at(digit[j]);
    if (options.full_recount) {
      cells[static_cast<std::size_t>(pos - 1)] = next;
      value = evaluate(cells, r, o);
    } else {
      value += class_delta(cells, o.equation, o.cls, pos, next);
      cells[static_cast<std::size_t>(pos - 1)] = next;
    }
    tracker.offer(value, cells);
    ++visited;
    if (++pending == kBatch) {
      progress.add(pending, tracker.best());
      pending = 0;
    }
  }
  progress.add(pending, tracker.best());
  return visited;
}

ExtremumReport finish(std::string mode, const Tracker& tracker, int r, std::uint64_t explored,
                      Clock::time_point start) {
  ExtremumReport report;
  report.mode = std::move(mode);
  report.best_value = tracker.best();
  report.optimum_count = tracker.count();
  report.explored = explored;
  for (const auto& w : tracker.witnesses()) report.witnesses.emplace_back(w, r);
  report.wall_seconds = seconds_since(start);
  return report;
}

void check_constraint(int n, int r, const ColorCounts& counts) {
  int total = 0;
  for (int c = 0; c < kMaxColors; ++c) {
    if (counts[static_cast<std::size_t>(c)] < 0) throw Error("negative color count in constraint");
    if (c >= r && counts[static_cast<std::size_t>(c)] != 0) throw Error("constraint uses a color beyond r");
    total += counts[static_cast<std::size_t>(c)];
  }
  if (total != n) throw Error("constraint color counts must sum to n");
}

/// Depth-first assignment of positions 1..n under fixed color counts. The
/// objective accumulates each solution when its largest entry is placed.
class ConstrainedEnumerator {
 public:
  ConstrainedEnumerator(int n, int r, const Objective& o, const ColorCounts& counts, const SearchOptions& options,
                        Tracker& tracker)
      : n_(n), r_(r), objective_(o), remaining_(counts), options_(options), tracker_(tracker),
        cells_(static_cast<std::size_t>(n), Color::Red) {}

  std::uint64_t run() {
    descend(1, 0);
    return leaves_;
  }

 private:
  std::int64_t completed_at(int p) const {
    std::int64_t hits = 0;
    const auto color_of = [&](int v) { return cells_[static_cast<std::size_t>(v - 1)]; };
    for_each_solution_containing(objective_.equation, n_, p, [&](const Solution& s) {
      const auto vars = s.vars();
      if (*std::max_element(vars.begin(), vars.end()) != p) return;
      hits += in_class(s, objective_.cls, color_of);
    });
    return hits;
  }

  void descend(int p, std::int64_t value) {
    if (p > n_) {
      ++leaves_;
      tracker_.offer(options_.full_recount ? evaluate(cells_, r_, objective_) : value, cells_);
      return;
    }
    for (int c = 0; c < r_; ++c) {
      auto& left = remaining_[static_cast<std::size_t>(c)];
      if (left == 0) continue;
      --left;
      cells_[static_cast<std::size_t>(p - 1)] = color_at(c);
      descend(p + 1, value + completed_at(p));
      ++left;
    }
  }

  int n_;
  int r_;
  const Objective& objective_;
  ColorCounts remaining_;
  const SearchOptions& options_;
  Tracker& tracker_;
  std::vector<Color> cells_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

std::uint64_t exhaustive_space_size(int n, int r, const Objective& objective,
                                    const std::optional<ColorCounts>& constraint, const SearchOptions& options) {
  if (constraint) return multinomial(*constraint);
  const int free = options.symmetry_reduction && swap_symmetric(r, objective) ? n - 1 : n;
  return saturating_pow(static_cast<std::uint64_t>(r), free);
}

ExtremumReport exhaustive(int n, int r, const Objective& objective, const std::optional<ColorCounts>& constraint,
                          const SearchOptions& options) {
  validate(n, r, objective);
  if (constraint) check_constraint(n, r, *constraint);
  const std::uint64_t space = exhaustive_space_size(n, r, objective, constraint, options);
  if (space > options.budget) {
    throw BudgetExceeded("exhaustive space of " + std::to_string(space) + " colorings exceeds budget " +
                         std::to_string(options.budget));
  }
  const auto start = Clock::now();
  Tracker tracker(objective, options.max_witnesses);

  if (constraint) {
    ConstrainedEnumerator walker(n, r, objective, *constraint, options, tracker);
    const std::uint64_t explored = walker.run();
    ExtremumReport report = finish("exhaustive", tracker, r, explored, start);
    report.constraint = constraint;
    return report;
  }

  const bool reduced = options.symmetry_reduction && swap_symmetric(r, objective);
  std::vector<int> free_positions;
  for (int p = reduced ? 2 : 1; p <= n; ++p) free_positions.push_back(p);

  // Work units fix the top `split` free cells; each runs its own Gray walk.
  const int threads = std::max(1, options.threads);
  int split = 0;
  if (threads > 1) {
    split = options.split_cells;
    if (split <= 0) {
      while (split + 1 < static_cast<int>(free_positions.size()) &&
             saturating_pow(static_cast<std::uint64_t>(r), split) < static_cast<std::uint64_t>(8 * threads)) {
        ++split;
      }
    }
    split = std::clamp(split, 0, std::max(0, static_cast<int>(free_positions.size()) - 1));
  }
  const std::vector<int> fixed(free_positions.end() - split, free_positions.end());
  const std::vector<int> walk(free_positions.begin(), free_positions.end() - split);
  const std::uint64_t units = saturating_pow(static_cast<std::uint64_t>(r), split);

  ProgressSink progress(options);
  std::atomic<std::uint64_t> next_unit{0};
  std::atomic<std::uint64_t> explored{0};
  std::vector<Tracker> partial(static_cast<std::size_t>(threads), Tracker(objective, options.max_witnesses));
  const auto worker = [&](std::size_t id) {
    for (;;) {
      const std::uint64_t unit = next_unit.fetch_add(1);
      if (unit >= units) return;
      std::vector<Color> cells(static_cast<std::size_t>(n), Color::Red);
      std::uint64_t code = unit;
      for (int pos : fixed) {
        cells[static_cast<std::size_t>(pos - 1)] = color_at(static_cast<int>(code % static_cast<std::uint64_t>(r)));
        code /= static_cast<std::uint64_t>(r);
      }
      explored += gray_enumerate(std::move(cells), r, walk, objective, options, partial[id], progress);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
  }
  for (const Tracker& t : partial) tracker.merge(t);
  ExtremumReport report = finish("exhaustive", tracker, r, explored.load(), start);
  report.symmetry_reduced = reduced;
  return report;
}

ExtremumReport local_search(int n, int r, const Objective& objective, int restarts, std::uint64_t seed,
                            const SearchOptions& options) {
  validate(n, r, objective);
  if (restarts < 0) throw Error("restarts must be nonnegative");
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, r - 1);
  Tracker tracker(objective, options.max_witnesses);
  std::uint64_t explored = 0;
  const bool canonicalize = swap_symmetric(r, objective);

  for (int run = 0; run <= restarts; ++run) {
    std::vector<Color> cells(static_cast<std::size_t>(n), Color::Red);
    if (run > 0) {
      for (Color& c : cells) c = color_at(pick(rng));
    }
    std::int64_t value = evaluate(cells, r, objective);
    ++explored;
    for (;;) {
      std::int64_t best_delta = 0;
      int best_pos = 0;
      Color best_color = Color::Red;
      for (int p = 1; p <= n; ++p) {
        for (int c = 0; c < r; ++c) {
          const Color to = color_at(c);
          if (to == cells[static_cast<std::size_t>(p - 1)]) continue;
          const std::int64_t d = class_delta(cells, objective.equation, objective.cls, p, to);
          ++explored;
          if (objective.better(d, best_delta)) {
            best_delta = d;
            best_pos = p;
            best_color = to;
          }
        }
      }
      if (best_pos == 0) break;
      cells[static_cast<std::size_t>(best_pos - 1)] = best_color;
      value += best_delta;
    }
    if (canonicalize && cells.front() == Color::Blue) {
      for (Color& c : cells) c = c == Color::Red ? Color::Blue : Color::Red;
    }
    tracker.offer(value, cells);
  }
  ExtremumReport report = finish("local", tracker, r, explored, start);
  report.optimum_count = 0;
  report.heuristic = true;
  return report;
}

ExtremumReport block_sweep(int n, const Objective& objective, std::span<const Color> pattern, int granularity,
                           const SearchOptions& options) {
  if (pattern.empty()) throw Error("empty block pattern");
  if (pattern.size() > 4) throw Error("block patterns are limited to 4 blocks");
  if (granularity < 1) throw Error("granularity must be >= 1");
  int r = 2;
  for (Color c : pattern) r = std::max(r, index_of(c) + 1);
  if (objective.cls == SolutionClass::Rainbow) r = 3;
  validate(n, r, objective);
  const auto start = Clock::now();

  std::vector<int> grid;
  for (int b = 0; b < n; b += granularity) grid.push_back(b);
  grid.push_back(n);
  const std::size_t cuts = pattern.size() - 1;
  // Nondecreasing index tuples into grid, lexicographic order.
  std::uint64_t placements = 1;
  for (std::size_t i = 0; i < cuts; ++i) {
    placements = saturating_mul(placements, grid.size() + i) / (i + 1);
  }
  if (placements > options.budget) {
    throw BudgetExceeded("sweep of " + std::to_string(placements) + " placements exceeds budget");
  }

  Tracker tracker(objective, options.max_witnesses);
  std::vector<int> best_boundaries;
  std::vector<std::size_t> idx(cuts, 0);
  std::vector<Color> cells(static_cast<std::size_t>(n));
  std::uint64_t explored = 0;
  for (;;) {
    std::vector<int> bounds;
    bounds.reserve(cuts);
    for (std::size_t i : idx) bounds.push_back(grid[i]);
    int from = 0;
    for (std::size_t blk = 0; blk < pattern.size(); ++blk) {
      const int to = blk < cuts ? bounds[blk] : n;
      std::fill(cells.begin() + from, cells.begin() + to, pattern[blk]);
      from = to;
    }
    const std::int64_t value = evaluate(cells, r, objective);
    ++explored;
    if (!tracker.has() || objective.better(value, tracker.best())) best_boundaries = bounds;
    tracker.offer(value, cells);

    // advance the nondecreasing tuple
    std::size_t i = cuts;
    while (i > 0 && idx[i - 1] + 1 >= grid.size()) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < cuts; ++j) idx[j] = idx[i - 1];
  }
  ExtremumReport report = finish("sweep", tracker, r, explored, start);
  report.boundaries = std::move(best_boundaries);
  return report;
}

nlohmann::ordered_json to_json(const ExtremumReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = report.mode;
  j["best_value"] = report.best_value;
  j["heuristic"] = report.heuristic;
  j["explored"] = report.explored;
  if (report.mode == "exhaustive") j["optimum_count"] = report.optimum_count;
  j["symmetry_reduced"] = report.symmetry_reduced;
  if (report.constraint) {
    j["constraint"] = {{"R", (*report.constraint)[0]}, {"B", (*report.constraint)[1]}, {"G", (*report.constraint)[2]}};
  } else {
    j["constraint"] = nullptr;
  }
  if (report.mode == "sweep") j["boundaries"] = report.boundaries;
  auto& w = j["witnesses"] = nlohmann::ordered_json::array();
  for (const Coloring& c : report.witnesses) w.push_back(format_runlength(c));
  j["wall_seconds"] = report.wall_seconds;
  return j;
}

}  // namespace schurlab
