// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments runs all ten)
// Criterion 10 audits every count made while running 1-9, so on its own it
// runs 1-9 silently first.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "schurlab/counting.hpp"
#include "schurlab/search.hpp"
#include "schurlab/theory.hpp"
#include "schurlab/tolerances.hpp"

using namespace schurlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct PartitionAudit {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
} audit;

/// Every class count goes through here so criterion 10 can audit it.
ClassCounts counted(const Coloring& c, const Equation& eq) {
  const ClassCounts k = count_classes(c, eq);
  ++audit.checked;
  if (k.total() != total_count(eq, c.n()) || k.mono < 0 || k.nonmono < 0 || k.rainbow < 0) ++audit.violations;
  return k;
}

void audit_witnesses(const ExtremumReport& rep, const Objective& o, Outcome& out) {
  for (const Coloring& w : rep.witnesses) {
    if (counted(w, o.equation).get(o.cls) != rep.best_value) {
      out.pass = false;
      out.detail += " witness does not reproduce best_value;";
    }
  }
}

int threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16U));
}

Objective min_mono(const Equation& eq) { return {eq, SolutionClass::Mono, Direction::Min}; }

std::string fmtd(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome fit_check(int a, std::vector<int> ns) {
  Outcome out;
  const Objective o = min_mono(Equation::schur_like(a));
  std::vector<double> values;
  for (int n : ns) values.push_back(static_cast<double>(counted(canonical_coloring(o, n), o.equation).mono));
  const Fit f = fit_leading(ns, values, 2);
  const double target = predicted_min(o.equation, 1).coefficient->to_double();
  const double rel = std::abs(f.alpha - target) / target;
  out.pass = rel <= 0.05;
  out.detail = "a=" + std::to_string(a) + " alpha=" + fmtd(f.alpha) + " target=" + fmtd(target) + " rel=" + fmtd(rel);
  return out;
}

std::vector<int> times22() { return {22, 44, 88, 176, 352, 704}; }

Outcome c1() { return fit_check(1, times22()); }

Outcome c2() {
  Outcome out;
  for (int a : {2, 3, 4}) {
    const Outcome o = fit_check(a, times22());
    out.pass = out.pass && o.pass;
    out.detail += o.detail + "; ";
  }
  return out;
}

Outcome c3() {
  Outcome out;
  SearchOptions so;
  so.threads = threads();
  int worst_gap = -1;
  int worst_n = 0;
  for (int a : {1, 2}) {
    const Objective o = min_mono(Equation::schur_like(a));
    for (int n = 8; n <= 22; ++n) {
      const ExtremumReport rep = exhaustive(n, 2, o, std::nullopt, so);
      audit_witnesses(rep, o, out);
      const std::int64_t canon = counted(canonical_coloring(o, n), o.equation).mono;
      const std::int64_t gap = canon - rep.best_value;
      if (gap < 0 || gap > 2 * n) {
        out.pass = false;
        out.detail += " a=" + std::to_string(a) + ",n=" + std::to_string(n) + " gap=" + std::to_string(gap) + ";";
      }
      if (gap > worst_gap) {
        worst_gap = static_cast<int>(gap);
        worst_n = n;
      }
    }
  }
  out.detail += " worst canonical-exhaustive gap " + std::to_string(worst_gap) + " at n=" + std::to_string(worst_n);
  return out;
}

Outcome c4() {
  Outcome out;
  std::mt19937_64 rng(4004);
  long nonzero = 0;
  long total = 0;
  long explained = 0;
  for (int n : {100, 200, 400}) {
    for (int i = 0; i < 1000; ++i) {
      const Coloring c = gen::mixed(n, rng, i);
      const std::int64_t res = d2_identity_residual(c);
      ++total;
      nonzero += res != 0;
      explained += res == d2_boundary_term(c);
    }
  }
  for (std::uint32_t code = 0; code < (1U << 12); ++code) {
    std::vector<Color> cells(12);
    for (int i = 0; i < 12; ++i) cells[static_cast<std::size_t>(i)] = (code >> i & 1U) ? Color::Blue : Color::Red;
    const Coloring c(cells, 2);
    const std::int64_t res = d2_identity_residual(c);
    ++total;
    nonzero += res != 0;
    explained += res == d2_boundary_term(c);
  }
  out.pass = nonzero == 0;
  out.detail = std::to_string(nonzero) + "/" + std::to_string(total) + " colorings with nonzero residual; " +
               std::to_string(explained) + "/" + std::to_string(total) + " match residual == d2_boundary_term";
  return out;
}

Outcome c5() {
  Outcome out;
  long checked = 0;
  long bad = 0;
  const auto check = [&](const Coloring& c, int a) {
    const Equation eq = Equation::schur_like(a);
    const RegionStats st = region_stats(c, eq);
    ++checked;
    if (st.nu1 + st.nu2 + st.nu3 != 2 * counted(c, eq).nonmono) ++bad;
  };
  for (int n = 1; n <= 12; ++n) {
    for (std::uint32_t code = 0; code < (1U << n); ++code) {
      std::vector<Color> cells(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = (code >> i & 1U) ? Color::Blue : Color::Red;
      const Coloring c(cells, 2);
      for (int a : {1, 2, 3}) check(c, a);
    }
  }
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<int> pick_n(1, 1000);
  for (int i = 0; i < 600; ++i) {
    const Coloring c = gen::mixed(pick_n(rng), rng, i);
    for (int a : {1, 2, 3}) check(c, a);
  }
  out.pass = bad == 0;
  out.detail = std::to_string(bad) + " failures over " + std::to_string(checked) + " (coloring, a) cases";
  return out;
}

Outcome c6() {
  Outcome out;
  std::mt19937_64 rng(6006);
  double worst = 1e300;
  long bad = 0;
  for (int n : {100, 200, 400}) {
    for (int i = 0; i < tolerance::kSamplesPerN; ++i) {
      const Coloring c = gen::mixed(n, rng, i);
      const std::int64_t slack = d_bound_slack(c);
      worst = std::min(worst, static_cast<double>(slack) / n);
      if (static_cast<double>(slack) < -tolerance::kDBound * n) ++bad;
    }
  }
  out.pass = bad == 0;
  out.detail = std::to_string(bad) + " violations; c=" + fmtd(tolerance::kDBound) + ", worst slack/n=" + fmtd(worst);
  return out;
}

Outcome c7() {
  Outcome out;
  const int n = 20;
  SearchOptions so;
  so.max_witnesses = 4;
  int worst = 0;
  for (Direction dir : {Direction::Min, Direction::Max}) {
    const Objective o{Equation::schur_like(1), SolutionClass::Mono, dir};
    for (int mu_b = 10; mu_b <= n; ++mu_b) {
      const ExtremumReport rep = exhaustive(n, 2, o, ColorCounts{n - mu_b, mu_b, 0}, so);
      audit_witnesses(rep, o, out);
      const std::int64_t recipe = counted(canonical_coloring(o, n, mu_b), o.equation).mono;
      const std::int64_t gap = dir == Direction::Min ? recipe - rep.best_value : rep.best_value - recipe;
      worst = std::max(worst, static_cast<int>(gap));
      if (gap < 0 || gap > 2 * n) {
        out.pass = false;
        out.detail += " " + o.to_string() + " mu_B=" + std::to_string(mu_b) + " gap=" + std::to_string(gap) + ";";
      }
    }
  }
  out.detail += " worst recipe gap " + std::to_string(worst) + " (limit " + std::to_string(2 * n) + ")";
  return out;
}

Outcome c8() {
  Outcome out;
  const Objective o{Equation::schur_like(1), SolutionClass::Rainbow, Direction::Max};
  SearchOptions so;
  so.threads = threads();
  const ExtremumReport rep = exhaustive(10, 3, o, std::nullopt, so);
  audit_witnesses(rep, o, out);
  const std::int64_t recipe = counted(canonical_coloring(o, 10), o.equation).rainbow;
  const Surd predicted = *predicted_max_rainbow(o.equation, 10).leading_value;
  out.pass = out.pass && rep.explored == 59049 && rep.best_value == 11 && recipe == 11 && predicted == Surd(11);
  out.detail = "exhaustive=" + std::to_string(rep.best_value) + " recipe=" + std::to_string(recipe) +
               " n(n+1)/10=" + predicted.to_string() + " explored=" + std::to_string(rep.explored) +
               " (unordered x<=y convention)";
  return out;
}

Outcome c9() {
  Outcome out;
  long cases = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int r : {2, 3}) {
      const std::vector<Objective> objs =
          r == 2 ? std::vector<Objective>{min_mono(Equation::schur_like(1)), min_mono(Equation::schur_like(2))}
                 : std::vector<Objective>{{Equation::schur_like(1), SolutionClass::Rainbow, Direction::Max},
                                          {Equation::schur_like(1), SolutionClass::Mono, Direction::Min}};
      for (const Objective& o : objs) {
        SearchOptions gray;
        gray.threads = threads();
        SearchOptions full = gray;
        full.full_recount = true;
        const ExtremumReport a = exhaustive(n, r, o, std::nullopt, gray);
        const ExtremumReport b = exhaustive(n, r, o, std::nullopt, full);
        audit_witnesses(a, o, out);
        ++cases;
        if (a.best_value != b.best_value || a.optimum_count != b.optimum_count || a.witnesses != b.witnesses) {
          out.pass = false;
          out.detail += " gray/full mismatch n=" + std::to_string(n) + " r=" + std::to_string(r) + ";";
        }
      }
    }
  }
  std::mt19937_64 rng(9009);
  long flips = 0;
  long bad = 0;
  for (const Equation& eq :
       {Equation::schur_like(1), Equation::schur_like(3), Equation::two_coef(2, 3), Equation::four_var()}) {
    for (int i = 0; i < 10000; ++i) {
      const int n = 1 + static_cast<int>(rng() % 60);
      const int r = 2 + i % 2;
      const Coloring c = gen::iid(n, r, rng);
      const int p = 1 + static_cast<int>(rng() % n);
      const Color to = color_at(static_cast<int>(rng() % r));
      const std::int64_t want = counted(c.flip(p, to), eq).mono - counted(c, eq).mono;
      ++flips;
      bad += mono_delta(c, eq, p, to) != want;
    }
  }
  out.pass = out.pass && bad == 0;
  out.detail += std::to_string(cases) + " gray-vs-recount searches; " + std::to_string(bad) + "/" +
                std::to_string(flips) + " delta mismatches";
  return out;
}

Outcome c10() {
  Outcome out;
  out.pass = audit.violations == 0 && audit.checked > 0;
  out.detail = std::to_string(audit.violations) + " partition violations over " + std::to_string(audit.checked) +
               " class counts made by criteria 1-9";
  return out;
}

const char* kNames[] = {"",
                        "canonical x+y=z fit within 5% of 1/22",
                        "canonical x+ay=z fits within 5% (a=2,3,4)",
                        "exhaustive floor n=8..22 (a=1,2)",
                        "D2 identity residual exactly 0",
                        "nu1+nu2+nu3 == 2 nonmono",
                        "D bound with frozen constant",
                        "fixed mu_B recipes within 2n at n=20",
                        "rainbow maximum at n=10 equals 11",
                        "gray deltas vs full recount, delta vs recount",
                        "partition exactness on every count"};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{nullptr, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  bool ran_prefix = false;
  int failures = 0;
  for (int k : selected) {
    if (k < 1 || k > 10) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    if (k == 10 && selected.size() == 1 && !ran_prefix) {
      for (int j = 1; j <= 9; ++j) criteria[static_cast<std::size_t>(j)]();
      ran_prefix = true;
    }
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[static_cast<std::size_t>(k)]();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s: %s [%.2fs]\n", k, o.pass ? "PASS" : "FAIL", kNames[k], o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
