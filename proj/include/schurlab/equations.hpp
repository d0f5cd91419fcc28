#pragma once

// Equation families and their pinned solution-counting conventions.
//
//   x + a y = z    a = 1: unordered {x, y}, emitted with x <= y
//                  a >= 2: ordered (x, y)
//   a x + b y = a z  ordered (x, y); gcd(a, b) = 1 forces a | y
//   x + y + w = z  unordered multiset, emitted with x <= y <= w
//
// Every entry lies in [1, n]. z is the largest entry except for
// a x + b y = a z with a > b, where y may exceed z.

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurlab {

enum class Family : std::uint8_t { SchurLike, TwoCoef, FourVar };

class Equation {
 public:
  /// x + a y = z. Throws Error for a < 1.
  static Equation schur_like(int a = 1);
  /// a x + b y = a z. Throws Error unless a, b >= 2 and gcd(a, b) = 1.
  static Equation two_coef(int a, int b);
  static Equation four_var();

  /// CLI text form: "schur", "x+ay=z:a=2", "ax+by=az:a=2,b=3", "x+y+w=z".
  static Equation parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int a() const { return a_; }
  [[nodiscard]] int b() const { return b_; }
  [[nodiscard]] int arity() const { return family_ == Family::FourVar ? 4 : 3; }
  [[nodiscard]] bool is_schur() const { return family_ == Family::SchurLike && a_ == 1; }

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  Equation(Family f, int a, int b) : family_(f), a_(a), b_(b) {}
  Family family_;
  int a_;
  int b_;
};

/// (x, y, z) or (x, y, w, z); z is last.
struct Solution {
  std::array<int, 4> values{};
  int arity = 3;

  [[nodiscard]] std::span<const int> vars() const { return {values.data(), static_cast<std::size_t>(arity)}; }
  [[nodiscard]] int z() const { return values[static_cast<std::size_t>(arity - 1)]; }
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// True when sol solves eq with every entry in [1, n] and respects the
/// family's emission order.
bool satisfies(const Equation& eq, int n, const Solution& sol);

/// Exact number of solutions in [1, n] under the pinned convention.
std::int64_t total_count(const Equation& eq, int n);

/// Materialized solution list; prefer for_each_solution for large n.
std::vector<Solution> solutions(const Equation& eq, int n);

namespace detail {

template <class F>
inline void emit(const Equation& eq, int n, const Solution& s, F& f) {
  assert(satisfies(eq, n, s));
  (void)eq;
  (void)n;
  f(s);
}

}  // namespace detail

/// Calls f(const Solution&) once per solution. Outermost loop is over y
/// (x for FourVar), which is the split point for parallel consumers.
template <class F>
void for_each_solution(const Equation& eq, int n, F&& f) {
  Solution s;
  switch (eq.family()) {
    case Family::SchurLike: {
      const int a = eq.a();
      s.arity = 3;
      if (a == 1) {
        for (int y = 1; y + 1 <= n; ++y) {
          for (int x = 1; x <= y && x + y <= n; ++x) {
            s.values = {x, y, x + y, 0};
            detail::emit(eq, n, s, f);
          }
        }
      } else {
        for (int y = 1; a * y + 1 <= n; ++y) {
          for (int x = 1; x + a * y <= n; ++x) {
            s.values = {x, y, x + a * y, 0};
            detail::emit(eq, n, s, f);
          }
        }
      }
      return;
    }
    case Family::TwoCoef: {
      const int a = eq.a();
      const int b = eq.b();
      s.arity = 3;
      for (int k = 1; a * k <= n && b * k + 1 <= n; ++k) {
        for (int x = 1; x + b * k <= n; ++x) {
          s.values = {x, a * k, x + b * k, 0};
          detail::emit(eq, n, s, f);
        }
      }
      return;
    }
    case Family::FourVar: {
      s.arity = 4;
      for (int x = 1; 3 * x <= n; ++x) {
        for (int y = x; x + 2 * y <= n; ++y) {
          for (int w = y; x + y + w <= n; ++w) {
            s.values = {x, y, w, x + y + w};
            detail::emit(eq, n, s, f);
          }
        }
      }
      return;
    }
  }
}

/// Calls f(const Solution&) exactly once for every solution having some
/// entry equal to position. Cost is O(n / a) for triples and O(n^2) for
/// x + y + w = z.
template <class F>
void for_each_solution_containing(const Equation& eq, int n, int p, F&& f) {
  if (p < 1 || p > n) return;
  Solution s;
  switch (eq.family()) {
    case Family::SchurLike: {
      const int a = eq.a();
      s.arity = 3;
      if (a == 1) {
        // p as z: {x, p - x} with x <= p - x.
        for (int x = 1; 2 * x <= p; ++x) {
          s.values = {x, p - x, p, 0};
          detail::emit(eq, n, s, f);
        }
        // p as a summand with partner t: {p, t, p + t}. z > x, y, so these
        // are disjoint from the z-role solutions.
        for (int t = 1; p + t <= n; ++t) {
          s.values = t < p ? std::array<int, 4>{t, p, p + t, 0} : std::array<int, 4>{p, t, p + t, 0};
          detail::emit(eq, n, s, f);
        }
      } else {
        // p as x.
        for (int y = 1; p + a * y <= n; ++y) {
          s.values = {p, y, p + a * y, 0};
          detail::emit(eq, n, s, f);
        }
        // p as y; (p, p, p + a p) was already emitted above.
        for (int x = 1; x + a * p <= n; ++x) {
          if (x == p) continue;
          s.values = {x, p, x + a * p, 0};
          detail::emit(eq, n, s, f);
        }
        // p as z (never equal to x or y).
        for (int y = 1; a * y < p; ++y) {
          s.values = {p - a * y, y, p, 0};
          detail::emit(eq, n, s, f);
        }
      }
      return;
    }
    case Family::TwoCoef: {
      const int a = eq.a();
      const int b = eq.b();
      s.arity = 3;
      // First-occurrence rule: a solution is emitted from the role of the
      // first entry equal to p.
      for (int k = 1; a * k <= n && p + b * k <= n; ++k) {  // x = p
        s.values = {p, a * k, p + b * k, 0};
        detail::emit(eq, n, s, f);
      }
      if (p % a == 0) {  // y = p
        const int k = p / a;
        for (int x = 1; x + b * k <= n; ++x) {
          if (x == p) continue;
          s.values = {x, p, x + b * k, 0};
          detail::emit(eq, n, s, f);
        }
      }
      for (int k = 1; a * k <= n && b * k < p; ++k) {  // z = p
        const int x = p - b * k;
        if (x == p || a * k == p) continue;
        s.values = {x, a * k, p, 0};
        detail::emit(eq, n, s, f);
      }
      return;
    }
    case Family::FourVar: {
      s.arity = 4;
      // x = p
      for (int y = p; p + 2 * y <= n; ++y) {
        for (int w = y; p + y + w <= n; ++w) {
          s.values = {p, y, w, p + y + w};
          detail::emit(eq, n, s, f);
        }
      }
      // y = p, x < p
      for (int x = 1; x < p; ++x) {
        for (int w = p; x + p + w <= n; ++w) {
          s.values = {x, p, w, x + p + w};
          detail::emit(eq, n, s, f);
        }
      }
      // w = p, x <= y < p
      for (int x = 1; x < p; ++x) {
        for (int y = x; y < p && x + y + p <= n; ++y) {
          s.values = {x, y, p, x + y + p};
          detail::emit(eq, n, s, f);
        }
      }
      // z = p
      for (int x = 1; 3 * x <= p; ++x) {
        for (int y = x; x + 2 * y <= p; ++y) {
          const int w = p - x - y;
          s.values = {x, y, w, p};
          detail::emit(eq, n, s, f);
        }
      }
      return;
    }
  }
}

}  // namespace schurlab
