#include "schurlab/counting.hpp"

#include <algorithm>
#include <vector>

#include "color_masks.hpp"
#include "schurlab/error.hpp"

namespace schurlab {

namespace {

void require_two_colors(const Coloring& c, const char* what) {
  if (c.r() != 2) throw Error(std::string(what) + " requires a 2-coloring");
}

void require_schur_like(const Equation& eq, const char* what) {
  if (eq.family() != Family::SchurLike) throw Error(std::string(what) + " requires x+ay=z");
}

ClassCounts count_schur_like_packed(const Coloring& coloring, const Equation& eq) {
  const int n = coloring.n();
  const int a = eq.a();
  const detail::ColorMasks masks(coloring);
  ClassCounts out;
  for (int y = 1; a * y + 1 <= n; ++y) {
    const int shift = a * y;
    const int hi = a == 1 ? std::min(y, n - y) : n - shift;
    const Color cy = coloring.at(y);
    out.mono += masks.count_shifted(cy, cy, shift, 1, hi);
    if (coloring.r() == 3) {
      const Color c1 = color_at((index_of(cy) + 1) % 3);
      const Color c2 = color_at((index_of(cy) + 2) % 3);
      out.rainbow += masks.count_shifted(c1, c2, shift, 1, hi) + masks.count_shifted(c2, c1, shift, 1, hi);
    }
  }
  out.nonmono = total_count(eq, n) - out.mono - out.rainbow;
  return out;
}

/// Prefix tallies of blue cells, for O(1) range counts on 2-colorings.
class BlueCounter {
 public:
  explicit BlueCounter(const Coloring& c) : prefix_(static_cast<std::size_t>(c.n()) + 1, 0) {
    for (int p = 1; p <= c.n(); ++p) {
      prefix_[static_cast<std::size_t>(p)] = prefix_[static_cast<std::size_t>(p - 1)] + (c.at(p) == Color::Blue ? 1 : 0);
    }
  }
  /// Cells in [lo, hi] whose color differs from c.
  [[nodiscard]] std::int64_t other_than(Color c, int lo, int hi) const {
    lo = std::max(lo, 1);
    hi = std::min(hi, static_cast<int>(prefix_.size()) - 1);
    if (lo > hi) return 0;
    const std::int64_t blue = prefix_[static_cast<std::size_t>(hi)] - prefix_[static_cast<std::size_t>(lo - 1)];
    return c == Color::Blue ? (hi - lo + 1) - blue : blue;
  }

 private:
  std::vector<std::int64_t> prefix_;
};

}  // namespace

ClassCounts count_classes_enumerated(const Coloring& coloring, const Equation& eq) {
  ClassCounts out;
  const bool rainbow = coloring.r() == 3 && eq.arity() == 3;
  const auto color_of = [&](int v) { return coloring.at(v); };
  for_each_solution(eq, coloring.n(), [&](const Solution& s) {
    if (in_class(s, SolutionClass::Mono, color_of)) ++out.mono;
    else if (rainbow && in_class(s, SolutionClass::Rainbow, color_of)) ++out.rainbow;
    else ++out.nonmono;
  });
  return out;
}

ClassCounts count_classes(const Coloring& coloring, const Equation& eq) {
  if (eq.family() == Family::SchurLike) return count_schur_like_packed(coloring, eq);
  return count_classes_enumerated(coloring, eq);
}

std::int64_t count_rainbow(const Coloring& coloring, const Equation& eq) {
  if (coloring.r() != 3) throw Error("rainbow solutions need a 3-coloring");
  if (eq.arity() != 3) throw Error("rainbow solutions are defined for three-variable equations only");
  return count_classes(coloring, eq).rainbow;
}

std::int64_t count_class(const Coloring& coloring, const Equation& eq, SolutionClass cls) {
  return cls == SolutionClass::Mono ? count_classes(coloring, eq).mono : count_rainbow(coloring, eq);
}

std::int64_t class_delta(std::span<const Color> cells, const Equation& eq, SolutionClass cls, int position,
                         Color new_color) {
  const int n = static_cast<int>(cells.size());
  const Color old = cells[static_cast<std::size_t>(position - 1)];
  if (old == new_color) return 0;
  std::int64_t delta = 0;
  for_each_solution_containing(eq, n, position, [&](const Solution& s) {
    const auto before = [&](int v) { return cells[static_cast<std::size_t>(v - 1)]; };
    const auto after = [&](int v) { return v == position ? new_color : cells[static_cast<std::size_t>(v - 1)]; };
    delta += static_cast<int>(in_class(s, cls, after)) - static_cast<int>(in_class(s, cls, before));
  });
  return delta;
}

std::int64_t mono_delta(const Coloring& coloring, const Equation& eq, int position, Color new_color) {
  if (position < 1 || position > coloring.n()) throw Error("flip position out of range");
  if (index_of(new_color) >= coloring.r()) throw Error("flip color out of range");
  return class_delta(coloring.cells(), eq, SolutionClass::Mono, position, new_color);
}

std::int64_t rainbow_delta(const Coloring& coloring, const Equation& eq, int position, Color new_color) {
  if (coloring.r() != 3) throw Error("rainbow solutions need a 3-coloring");
  if (eq.arity() != 3) throw Error("rainbow solutions are defined for three-variable equations only");
  if (position < 1 || position > coloring.n()) throw Error("flip position out of range");
  if (index_of(new_color) >= coloring.r()) throw Error("flip color out of range");
  return class_delta(coloring.cells(), eq, SolutionClass::Rainbow, position, new_color);
}

RegionStats region_stats(const Coloring& coloring, const Equation& eq) {
  require_two_colors(coloring, "region_stats");
  require_schur_like(eq, "region_stats");
  const int n = coloring.n();
  const int a = eq.a();
  const BlueCounter counter(coloring);
  RegionStats st;
  st.a = a;
  for (int y = 1; y <= n / a; ++y) {
    const int t = a * y;
    const Color c = coloring.at(y);
    st.nx_minus += counter.other_than(c, t + 1, n - t);
    st.nx_plus += counter.other_than(c, std::max(t, n - t) + 1, n);
    st.ny_minus += counter.other_than(c, 1, std::min(t - 1, n - t));
    st.ny_plus += counter.other_than(c, n - t + 1, t - 1);
  }
  st.d = st.nx_minus - st.ny_plus;
  if (a == 1) {
    st.n_minus = st.nx_minus;
    st.n_plus = st.ny_plus;
  }
  for_each_solution(eq, n, [&](const Solution& s) {
    const Color cx = coloring.at(s.values[0]);
    const Color cy = coloring.at(s.values[1]);
    const Color cz = coloring.at(s.values[2]);
    st.nu1 += cx != cy;
    st.nu2 += cy != cz;
    st.nu3 += cx != cz;
  });
  return st;
}

std::int64_t direct_product(const Coloring& coloring, int a, ColorPair x_pattern, ColorPair y_pattern) {
  require_two_colors(coloring, "direct_product");
  if (a < 2) throw Error("direct_product requires a >= 2");
  const int n = coloring.n();
  const int half = n / 2;
  const int m = n / a;
  // matches[x] = #{x' <= x : X = {x', n+1-x'} colored x_pattern}
  std::vector<std::int64_t> matches(static_cast<std::size_t>(half) + 1, 0);
  for (int x = 1; x <= half; ++x) {
    const bool hit = coloring.at(x) == x_pattern.smaller && coloring.at(n + 1 - x) == x_pattern.larger;
    matches[static_cast<std::size_t>(x)] = matches[static_cast<std::size_t>(x - 1)] + (hit ? 1 : 0);
  }
  std::int64_t total = 0;
  for (int y = 1; y <= m / 2; ++y) {
    if (coloring.at(y) != y_pattern.smaller || coloring.at(m + 1 - y) != y_pattern.larger) continue;
    const int lo = std::min(a * y, half);
    total += matches[static_cast<std::size_t>(half)] - matches[static_cast<std::size_t>(lo)];
  }
  return total;
}

std::int64_t d2_identity_residual(const Coloring& coloring) {
  require_two_colors(coloring, "d2_identity_residual");
  constexpr Color R = Color::Red;
  constexpr Color B = Color::Blue;
  const std::int64_t d2 = region_stats(coloring, Equation::schur_like(2)).d;
  const std::int64_t rhs = 2 * direct_product(coloring, 2, {R, R}, {B, R}) +
                           2 * direct_product(coloring, 2, {B, B}, {R, B}) -
                           2 * direct_product(coloring, 2, {R, R}, {R, B}) -
                           2 * direct_product(coloring, 2, {B, B}, {B, R});
  return d2 - rhs;
}

std::int64_t d2_boundary_term(const Coloring& coloring) {
  require_two_colors(coloring, "d2_boundary_term");
  const int n = coloring.n();
  if (n % 4 != 0) throw Error("d2_boundary_term requires n divisible by 4");
  const int m = n / 2;
  std::int64_t missing = 0;
  for (int s = 1; s <= n / 4; ++s) {
    const Color upper = coloring.at(m + 1 - s);
    for (int x : {2 * s - 1, 2 * s, n + 1 - 2 * s}) missing += coloring.at(x) != upper;
  }
  return -missing;
}

std::int64_t d_bound_slack(const Coloring& coloring) {
  require_two_colors(coloring, "d_bound_slack");
  const auto counts = coloring.counts();
  const std::int64_t mu_b = std::max(counts[0], counts[1]);
  const std::int64_t d = region_stats(coloring, Equation::schur_like(1)).d;
  return mu_b * mu_b / 4 - d;
}

Rational nonmono_estimate(const Coloring& coloring) {
  require_two_colors(coloring, "nonmono_estimate");
  const auto counts = coloring.counts();
  const std::int64_t n_plus = region_stats(coloring, Equation::schur_like(1)).n_plus;
  return Rational(2 * std::int64_t{counts[0]} * counts[1] - n_plus, 2);
}

Rational nonmono_upper_bound(const Coloring& coloring, int a) {
  require_two_colors(coloring, "nonmono_upper_bound");
  const MuStats mu = mu_stats(coloring, a);
  const std::int64_t mu_r = mu.mu[0];
  const std::int64_t mu_b = mu.mu[1];
  const std::int64_t d_a = region_stats(coloring, Equation::schur_like(a)).d;
  const Rational inner = Rational(mu_r * mu_b, a) + mu_r * mu.mu_lo[1] + mu_b * mu.mu_lo[0] + d_a;
  return inner / 2;
}

}  // namespace schurlab
