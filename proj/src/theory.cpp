#include "schurlab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "schurlab/counting.hpp"
#include "schurlab/error.hpp"

namespace schurlab {

std::string to_string(ClaimStatus status) { return status == ClaimStatus::Theorem ? "theorem" : "conjecture"; }

namespace {

Surd power_of(int n, int p) {
  Surd out(1);
  for (int i = 0; i < p; ++i) out = out * Surd(std::int64_t{n});
  return out;
}

Prediction make(int n, int power, Surd coefficient, std::string order, ClaimStatus status) {
  Prediction p;
  p.n = n;
  p.power = power;
  p.coefficient = coefficient;
  p.leading_value = coefficient * power_of(n, power);
  p.order_term = std::move(order);
  p.status = status;
  return p;
}

Rational min_coefficient(int a) {
  if (a == 1) return {1, 22};
  return {1, 2 * a * (a * a + 2 * a + 3)};
}

void require_n(int n) {
  if (n < 1) throw Error("n must be positive");
}

std::vector<Block> periodic(std::span<const Color> period, int length) {
  std::vector<Block> out;
  for (int i = 0; i < length; ++i) {
    const Color c = period[static_cast<std::size_t>(i) % period.size()];
    if (!out.empty() && out.back().color == c) {
      out.back().weight = out.back().weight + Surd(1);
    } else {
      out.push_back({c, Surd(1)});
    }
  }
  return out;
}

BlockSpec fixed_count_blocks(const Objective& objective, int n, int mu_b) {
  if (mu_b < 0 || mu_b > n || 2 * mu_b < n) throw Error("fixed mu_B must satisfy n/2 <= mu_B <= n");
  const Rational half(n, 2);
  const Rational quarter(mu_b, 4);
  const Rational three_quarters(3 * mu_b, 4);
  const bool three_blocks = 3 * mu_b <= 2 * n;
  constexpr Color R = Color::Red;
  constexpr Color B = Color::Blue;
  if (objective.direction == Direction::Min) {
    if (three_blocks) return {{{R, half - quarter}, {B, std::int64_t{mu_b}}, {R, half - three_quarters}}};
    return {{{R, std::int64_t{n - mu_b}}, {B, std::int64_t{mu_b}}}};
  }
  if (three_blocks) return {{{R, half - three_quarters}, {B, std::int64_t{mu_b}}, {R, half - quarter}}};
  return {{{B, std::int64_t{mu_b}}, {R, std::int64_t{n - mu_b}}}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Prediction predicted_min(const Equation& eq, int n) {
  require_n(n);
  switch (eq.family()) {
    case Family::SchurLike:
      return make(n, 2, min_coefficient(eq.a()), "O(n)", ClaimStatus::Theorem);
    case Family::FourVar:
      // 1/(12 (10 + sqrt 3)^2), rationalized
      return make(n, 3, Surd(Rational(103, 112908), Rational(-20, 112908)), "O(n^2)", ClaimStatus::Conjecture);
    case Family::TwoCoef: {
      Prediction p;
      p.n = n;
      p.order_term = "O(n)";
      p.status = ClaimStatus::Conjecture;
      return p;
    }
  }
  throw Error("unsupported equation");
}

Prediction predicted_max_nonmono(const Equation& eq, int n) {
  require_n(n);
  if (eq.family() != Family::SchurLike || eq.a() < 2) throw Error("max non-monochromatic prediction needs x+ay=z, a >= 2");
  const Rational c = Rational(1, 2 * eq.a()) - min_coefficient(eq.a());
  return make(n, 2, c, "O(n)", ClaimStatus::Theorem);
}

Prediction predicted_max_rainbow(const Equation& eq, int n) {
  require_n(n);
  if (!eq.is_schur()) throw Error("rainbow prediction is for x+y=z only");
  Prediction p = make(n, 2, Rational(1, 10), "exact", ClaimStatus::Conjecture);
  p.leading_value = Surd(Rational(std::int64_t{n} * (n + 1), 10));
  return p;
}

Prediction predict(const Objective& objective, int n) {
  if (objective.cls == SolutionClass::Mono && objective.direction == Direction::Min) {
    return predicted_min(objective.equation, n);
  }
  if (objective.cls == SolutionClass::Rainbow && objective.direction == Direction::Max) {
    return predicted_max_rainbow(objective.equation, n);
  }
  throw Error("no prediction for objective " + objective.to_string());
}

BlockSpec canonical_blocks(const Objective& objective, int n, std::optional<int> fixed_mu_b) {
  require_n(n);
  const Equation& eq = objective.equation;
  constexpr Color R = Color::Red;
  constexpr Color B = Color::Blue;
  constexpr Color G = Color::Green;

  if (fixed_mu_b) {
    if (!eq.is_schur() || objective.cls != SolutionClass::Mono) {
      throw Error("fixed mu_B recipes exist for monochromatic x+y=z only");
    }
    return fixed_count_blocks(objective, n, *fixed_mu_b);
  }

  if (objective.cls == SolutionClass::Rainbow) {
    if (!eq.is_schur() || objective.direction != Direction::Max) throw Error("rainbow recipe is for max x+y=z");
    const int first = 2 * n / 5;
    const std::array rb{R, B};
    const std::array gb{G, B};
    BlockSpec spec{periodic(rb, first)};
    for (const Block& b : periodic(gb, n - first)) spec.blocks.push_back(b);
    return spec;
  }

  if (objective.direction != Direction::Min) throw Error("no recipe for " + objective.to_string());
  switch (eq.family()) {
    case Family::SchurLike: {
      const int a = eq.a();
      if (a == 1) return {{{R, std::int64_t{4}}, {B, std::int64_t{6}}, {R, std::int64_t{1}}}};
      const Rational tail(1, a + 1);
      return {{{R, std::int64_t{1}}, {B, Rational(a) + tail}, {R, tail}}};
    }
    case Family::TwoCoef: {
      const int a = eq.a();
      const int b = eq.b();
      std::vector<Color> period(static_cast<std::size_t>(a - 1), R);
      period.push_back(B);
      const int span_len = a > b ? n : static_cast<int>(std::int64_t{a} * n / b);
      BlockSpec spec{periodic(period, span_len)};
      if (n > span_len) spec.blocks.push_back({R, std::int64_t{n - span_len}});
      return spec;
    }
    case Family::FourVar: {
      const Surd s3 = Surd::sqrt3();
      return {{{R, Surd(30) - Surd(3) * s3}, {B, Surd(57) + Surd(4) * s3}, {R, Surd(10) - s3}}};
    }
  }
  throw Error("unsupported equation");
}

Coloring canonical_coloring(const Objective& objective, int n, std::optional<int> fixed_mu_b) {
  const int r = objective.cls == SolutionClass::Rainbow ? 3 : 2;
  return from_blocks(n, canonical_blocks(objective, n, fixed_mu_b), r);
}

Fit fit_leading(std::span<const int> n_list, std::span<const double> values, int power) {
  if (n_list.size() != values.size()) throw Error("fit needs one value per n");
  if (std::set<int>(n_list.begin(), n_list.end()).size() < 2) throw Error("fit needs at least two distinct n");
  // Normal equations for columns u = n^p, v = n^(p-1).
  double suu = 0, suv = 0, svv = 0, suy = 0, svy = 0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const double v = std::pow(static_cast<double>(n_list[i]), power - 1);
    const double u = v * n_list[i];
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suy += u * values[i];
    svy += v * values[i];
  }
  const double det = suu * svv - suv * suv;
  return {(suy * svv - svy * suv) / det, (suu * svy - suv * suy) / det};
}

VerifyReport verify(const Objective& objective, std::span<const int> n_list, const VerifyOptions& options) {
  if (n_list.empty()) throw Error("empty n list");
  VerifyReport report;
  report.objective = objective;
  const int r = objective.cls == SolutionClass::Rainbow ? 3 : 2;
  std::vector<double> values;
  for (int n : n_list) {
    const std::int64_t total = total_count(objective.equation, n);
    if (static_cast<std::uint64_t>(total) > options.count_budget) {
      throw BudgetExceeded("n = " + std::to_string(n) + " has " + std::to_string(total) +
                           " solutions, over the counting budget");
    }
    const Prediction pred = predict(objective, n);
    report.status = pred.status;
    report.target = pred.coefficient;
    report.power = pred.power;

    VerifyRow row;
    row.equation = objective.equation.to_string();
    row.n = n;
    const Coloring c = canonical_coloring(objective, n);
    const ClassCounts counts = count_classes(c, objective.equation);
    if (counts.total() != total) throw std::logic_error("class counts do not partition the solutions");
    row.canonical_count = counts.get(objective.cls);
    if (pred.leading_value) {
      row.predicted = pred.leading_value->to_double();
      row.gap = static_cast<double>(row.canonical_count) - *row.predicted;
    }
    SearchOptions so;
    so.threads = options.threads;
    so.max_witnesses = 1;
    if (exhaustive_space_size(n, r, objective, std::nullopt, so) <= options.exhaustive_budget) {
      row.exhaustive_opt = exhaustive(n, r, objective, std::nullopt, so).best_value;
    }
    values.push_back(static_cast<double>(row.canonical_count));
    report.rows.push_back(row);
  }
  if (std::set<int>(n_list.begin(), n_list.end()).size() >= 2) {
    report.fit = fit_leading(n_list, values, report.power);
  } else {
    const double np = std::pow(static_cast<double>(n_list.front()), report.power);
    report.fit = {values.front() / np, 0.0};
  }
  for (VerifyRow& row : report.rows) row.alpha_fit = report.fit.alpha;
  return report;
}

std::string to_csv(const VerifyReport& report) {
  std::string out = "equation,n,canonical_count,predicted,gap,exhaustive_opt,alpha_fit\n";
  for (const VerifyRow& row : report.rows) {
    out += row.equation + "," + std::to_string(row.n) + "," + std::to_string(row.canonical_count) + ",";
    out += (row.predicted ? format_double(*row.predicted) : std::string()) + ",";
    out += (row.gap ? format_double(*row.gap) : std::string()) + ",";
    out += (row.exhaustive_opt ? std::to_string(*row.exhaustive_opt) : std::string()) + ",";
    out += format_double(row.alpha_fit) + "\n";
  }
  return out;
}

}  // namespace schurlab
