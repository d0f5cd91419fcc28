#pragma once

// Closed-form leading terms for the extremal counts, the block colorings
// proposed as extremal, and a checker that measures one against the other.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurlab/coloring.hpp"
#include "schurlab/equations.hpp"
#include "schurlab/search.hpp"
#include "schurlab/surd.hpp"

namespace schurlab {

enum class ClaimStatus : std::uint8_t { Theorem, Conjecture };

std::string to_string(ClaimStatus status);

struct Prediction {
  int n = 0;
  int power = 2;  ///< leading_value = coefficient * n^power
  std::optional<Surd> coefficient;
  std::optional<Surd> leading_value;
  std::string order_term;  ///< "O(n)", "O(n^2)" or "exact"
  ClaimStatus status = ClaimStatus::Theorem;
};

/// Minimum monochromatic count. x+ay=z is a theorem, x+y+w=z a conjecture
/// with a cubic law, ax+by=az a conjecture without a value.
Prediction predicted_min(const Equation& eq, int n);
/// n^2/(2a) - n^2/(2a(a^2+2a+3)). Throws Error unless eq is x+ay=z with a >= 2.
Prediction predicted_max_nonmono(const Equation& eq, int n);
/// n(n+1)/10 rainbow solutions of x+y=z over three colors (conjecture).
Prediction predicted_max_rainbow(const Equation& eq, int n);
/// Dispatch on the objective: min-mono, max-rainbow. Throws Error otherwise.
Prediction predict(const Objective& objective, int n);

/// Block recipe of the proposed extremal coloring. fixed_mu_b selects the
/// fixed-count recipes for x+y=z (min or max mono) and requires
/// n/2 <= fixed_mu_b <= n. Throws Error for unsupported combinations.
BlockSpec canonical_blocks(const Objective& objective, int n, std::optional<int> fixed_mu_b = {});
Coloring canonical_coloring(const Objective& objective, int n, std::optional<int> fixed_mu_b = {});

/// Least squares of value = alpha n^p + beta n^(p-1).
struct Fit {
  double alpha = 0.0;
  double beta = 0.0;
};
/// Throws Error with fewer than two distinct n.
Fit fit_leading(std::span<const int> n_list, std::span<const double> values, int power);

struct VerifyRow {
  std::string equation;
  int n = 0;
  std::int64_t canonical_count = 0;
  std::optional<double> predicted;
  std::optional<double> gap;  ///< canonical_count - predicted
  std::optional<std::int64_t> exhaustive_opt;
  double alpha_fit = 0.0;
};

struct VerifyOptions {
  /// Exhaustive optimum is attached when the search space is at most this.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 22;
  /// Refuse (BudgetExceeded) canonical counts over more solutions than this.
  std::uint64_t count_budget = std::uint64_t{1} << 34;
  int threads = 1;
};

struct VerifyReport {
  Objective objective;
  ClaimStatus status = ClaimStatus::Theorem;
  std::optional<Surd> target;  ///< predicted leading coefficient
  int power = 2;
  Fit fit;
  std::vector<VerifyRow> rows;
};

VerifyReport verify(const Objective& objective, std::span<const int> n_list, const VerifyOptions& options = {});

/// Header plus one line per row, columns
/// equation,n,canonical_count,predicted,gap,exhaustive_opt,alpha_fit.
std::string to_csv(const VerifyReport& report);

}  // namespace schurlab
