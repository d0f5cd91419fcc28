#pragma once

// Frozen constants c of the O(n) terms in the asymptotic relations, in units
// of n. Measured once by tests/calibrate.cpp (10^4 random colorings at each
// n in {100, 200, 400}), then doubled; a worst defect below 1/8 counts as 1/8.
//
//   relation                                   worst defect / n
//   floor(mu_B^2/4) - D >= -c n                 -0.2675  (never negative)
//   |nonmono - (2 mu_R mu_B - n_plus)/2| <= c n  0.2250
//   nonmono <= upper bound (a = 2, 3, 4) + c n   0.0000

namespace schurlab::tolerance {

inline constexpr double kDBound = 0.25;
inline constexpr double kNonmonoEstimate = 0.45;
inline constexpr double kNonmonoUpper = 0.25;

/// Random colorings per n in the sweeps that use these constants.
inline constexpr int kSamplesPerN = 10000;

}  // namespace schurlab::tolerance
