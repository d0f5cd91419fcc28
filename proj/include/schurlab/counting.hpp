#pragma once

// Exact solution-class counters, single-flip deltas, and the region and
// symmetric-pair statistics behind the monochromatic-count bounds.

#include <cstdint>
#include <span>
#include <utility>

#include "schurlab/coloring.hpp"
#include "schurlab/equations.hpp"

namespace schurlab {

enum class SolutionClass : std::uint8_t { Mono, Rainbow };

struct ClassCounts {
  std::int64_t mono = 0;
  std::int64_t nonmono = 0;  ///< neither monochromatic nor rainbow
  std::int64_t rainbow = 0;  ///< always 0 unless r = 3 and the equation is a triple

  [[nodiscard]] std::int64_t total() const { return mono + nonmono + rainbow; }
  [[nodiscard]] std::int64_t get(SolutionClass c) const { return c == SolutionClass::Mono ? mono : rainbow; }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Whether a solution is monochromatic (resp. rainbow) when position v has
/// color color_of(v). Rainbow needs three variables.
template <class ColorOf>
bool in_class(const Solution& s, SolutionClass cls, ColorOf&& color_of) {
  const auto vars = s.vars();
  if (cls == SolutionClass::Mono) {
    const Color first = color_of(vars[0]);
    for (std::size_t i = 1; i < vars.size(); ++i) {
      if (color_of(vars[i]) != first) return false;
    }
    return true;
  }
  if (s.arity != 3) return false;
  const Color cx = color_of(vars[0]);
  const Color cy = color_of(vars[1]);
  const Color cz = color_of(vars[2]);
  return cx != cy && cy != cz && cx != cz;
}

/// Exact class counts. x + a y = z uses the packed-bit counter; the other
/// families enumerate their solution stream.
ClassCounts count_classes(const Coloring& coloring, const Equation& eq);
/// Class counts straight from the solution stream (reference path).
ClassCounts count_classes_enumerated(const Coloring& coloring, const Equation& eq);
/// Throws Error when r = 2 or the equation has four variables.
std::int64_t count_rainbow(const Coloring& coloring, const Equation& eq);
/// Count of one class; throws as count_rainbow does for the rainbow class.
std::int64_t count_class(const Coloring& coloring, const Equation& eq, SolutionClass cls);

/// Change in the class count when cell `position` (1-based) of `cells`
/// becomes new_color. `cells` is indexed cells[position - 1]. Touches only
/// the solutions containing position.
std::int64_t class_delta(std::span<const Color> cells, const Equation& eq, SolutionClass cls, int position,
                         Color new_color);
/// Throws Error on an out-of-range position.
std::int64_t mono_delta(const Coloring& coloring, const Equation& eq, int position, Color new_color);
std::int64_t rainbow_delta(const Coloring& coloring, const Equation& eq, int position, Color new_color);

/// Bichromatic ordered pairs (x, y), x in [1, n], y in [1, floor(n/a)], split
/// by the lines x + a y = n and x = a y (strict inequalities; the lines
/// themselves belong to - and to neither side respectively).
struct RegionStats {
  int a = 1;
  std::int64_t nx_minus = 0;  ///< x + a y <= n, x > a y
  std::int64_t nx_plus = 0;   ///< x + a y >  n, x > a y
  std::int64_t ny_minus = 0;  ///< x + a y <= n, x < a y
  std::int64_t ny_plus = 0;   ///< x + a y >  n, x < a y
  std::int64_t n_minus = 0;   ///< a = 1 alias of nx_minus (x + y <= n, x > y)
  std::int64_t n_plus = 0;    ///< a = 1 alias of ny_plus  (x + y >  n, x < y)
  std::int64_t d = 0;         ///< nx_minus - ny_plus
  // Per-solution bichromatic slots: (x, y), (y, z), (x, z).
  std::int64_t nu1 = 0;
  std::int64_t nu2 = 0;
  std::int64_t nu3 = 0;
};

/// Requires r = 2 and x + a y = z. Throws Error otherwise.
RegionStats region_stats(const Coloring& coloring, const Equation& eq);

/// Colors of a symmetric pair, smaller element first.
struct ColorPair {
  Color smaller;
  Color larger;
};

/// Number of (X, Y1) with X = {x, n+1-x}, 1 <= x <= n/2, colored x_pattern,
/// Y1 = {y, floor(n/a)+1-y}, 1 <= y <= floor(n/a)/2, colored y_pattern, and
/// a y < x. Requires r = 2 and a >= 2.
std::int64_t direct_product(const Coloring& coloring, int a, ColorPair x_pattern, ColorPair y_pattern);

/// D_2 minus the four-term direct-product expression (a = 2).
std::int64_t d2_identity_residual(const Coloring& coloring);

/// The signed pairs of N_y^+ that no (X, Y1) with 2y < x reaches, so that
/// D_2 = product expression + d2_boundary_term exactly. For Y1 = {s, n/2+1-s}
/// these are x in {2s-1, 2s, n+1-2s}. Requires n divisible by 4.
std::int64_t d2_boundary_term(const Coloring& coloring);

/// floor(mu_B^2 / 4) - D after relabeling so that mu_B >= mu_R. Requires r = 2.
std::int64_t d_bound_slack(const Coloring& coloring);

/// (2 mu_R mu_B - |N^+|) / 2, the leading-order non-monochromatic count for
/// x + y = z. Requires r = 2.
Rational nonmono_estimate(const Coloring& coloring);

/// (mu_R mu_B / a + mu_R mu_B1 + mu_B mu_R1 + D_a) / 2, the leading-order
/// upper bound on non-monochromatic solutions of x + a y = z. Requires r = 2.
Rational nonmono_upper_bound(const Coloring& coloring, int a);

}  // namespace schurlab
