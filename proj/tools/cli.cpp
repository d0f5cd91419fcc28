#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schurlab/coloring.hpp"
#include "schurlab/counting.hpp"
#include "schurlab/equations.hpp"
#include "schurlab/error.hpp"
#include "schurlab/search.hpp"
#include "schurlab/theory.hpp"
#include "schurlab/tolerances.hpp"

namespace schurlab::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int default_threads() {
  if (const char* env = std::getenv("SCHURLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_cell(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Json tolerances_json() {
  return Json{{"d_bound", tolerance::kDBound},
              {"nonmono_estimate", tolerance::kNonmonoEstimate},
              {"nonmono_upper", tolerance::kNonmonoUpper}};
}

struct Context {
  std::vector<std::string> args;
  Clock::time_point start = Clock::now();
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

Json manifest(const Context& ctx, const std::string& equation, const Json& n, int r, std::uint64_t seed,
              std::uint64_t budget) {
  Json m;
  m["schema_version"] = kSchemaVersion;
  m["artifact_version"] = kArtifactVersion;
  m["command_line"] = ctx.args;
  m["equation"] = equation;
  m["n"] = n;
  m["r"] = r;
  m["seed"] = seed;
  m["budget"] = budget;
  m["tolerances"] = tolerances_json();
  m["wall_seconds"] = std::chrono::duration<double>(Clock::now() - ctx.start).count();
  return m;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("bad integer '" + tok + "' in list");
    }
    if (used != tok.size() || v < 1) throw Error("bad integer '" + tok + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

/// "R10,B10", "R10 B10 G0" or "10,10".
ColorCounts parse_constraint(const std::string& text) {
  ColorCounts counts{0, 0, 0};
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::stringstream ss(norm);
  std::string tok;
  int position = 0;
  while (ss >> tok) {
    int color = position;
    std::string digits = tok;
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      color = index_of(parse_color_letter(tok[0]));
      digits = tok.substr(1);
    }
    if (color >= kMaxColors) throw Error("too many constraint entries");
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error("bad constraint entry '" + tok + "'");
    }
    counts[static_cast<std::size_t>(color)] = std::stoi(digits);
    ++position;
  }
  if (position == 0) throw Error("empty constraint");
  return counts;
}

std::vector<Coloring> read_colorings(const std::string& spec) {
  std::vector<Coloring> out;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw Error("cannot read coloring file " + spec.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_runlength(line));
    }
    if (out.empty()) throw Error("no colorings in " + spec.substr(1));
    return out;
  }
  out.push_back(parse_runlength(spec));
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << content;
}

Json pair_json(const PairStats& p) {
  Json j;
  j["length"] = p.length;
  for (Color s : {Color::Red, Color::Blue, Color::Green}) {
    for (Color l : {Color::Red, Color::Blue, Color::Green}) {
      const std::int64_t v = p(s, l);
      if (v != 0 || (s != Color::Green && l != Color::Green)) {
        j[std::string{color_letter(s), color_letter(l)}] = v;
      }
    }
  }
  j["gamma_count"] = p.gamma_count;
  return j;
}

Json mu_json(const std::array<int, kMaxColors>& mu, int r) {
  Json j;
  for (int c = 0; c < r; ++c) j[std::string(1, color_letter(color_at(c)))] = mu[static_cast<std::size_t>(c)];
  return j;
}

Json stats_json(const Coloring& c, const Equation& eq) {
  const int a = eq.family() == Family::SchurLike ? eq.a() : 1;
  const MuStats mu = mu_stats(c, a);
  Json s;
  s["mu"] = mu_json(mu.mu, c.r());
  s["mu_lo"] = mu_json(mu.mu_lo, c.r());
  s["mu_hi"] = mu_json(mu.mu_hi, c.r());
  s["lo_len"] = mu.lo_len;
  s["pairs"] = pair_json(pair_stats(c, c.n()));
  if (mu.lo_len >= 1) s["pairs_lo"] = pair_json(pair_stats(c, mu.lo_len));
  if (c.r() == 2 && eq.family() == Family::SchurLike) {
    const RegionStats rs = region_stats(c, eq);
    Json g;
    g["a"] = rs.a;
    g["nx_minus"] = rs.nx_minus;
    g["nx_plus"] = rs.nx_plus;
    g["ny_minus"] = rs.ny_minus;
    g["ny_plus"] = rs.ny_plus;
    g["D"] = region_stats(c, Equation::schur_like(1)).d;
    g["D_a"] = rs.d;
    g["nu1"] = rs.nu1;
    g["nu2"] = rs.nu2;
    g["nu3"] = rs.nu3;
    s["regions"] = g;
  }
  return s;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string eq = "schur";
  int n = 0;
  std::string coloring;
  bool classes = false;
  bool stats = false;
  std::string format = "json";
};

int cmd_count(const Context& ctx, const CountArgs& a) {
  const Equation eq = Equation::parse(a.eq);
  const std::vector<Coloring> colorings = read_colorings(a.coloring);
  for (const Coloring& c : colorings) {
    if (a.n != 0 && c.n() != a.n) {
      throw Error("coloring has " + std::to_string(c.n()) + " cells, expected n = " + std::to_string(a.n));
    }
  }
  std::vector<Json> records;
  for (const Coloring& c : colorings) {
    const ClassCounts k = count_classes(c, eq);
    Json rec;
    rec["equation"] = eq.to_string();
    rec["n"] = c.n();
    rec["r"] = c.r();
    rec["coloring"] = format_runlength(c);
    rec["mono"] = k.mono;
    rec["nonmono"] = k.nonmono;
    rec["rainbow"] = k.rainbow;
    rec["total"] = k.total();
    if (a.stats) rec["stats"] = stats_json(c, eq);
    records.push_back(std::move(rec));
  }
  const Json n_field = colorings.size() == 1 ? Json(colorings.front().n()) : Json(a.n == 0 ? Json() : Json(a.n));
  if (a.format == "csv") {
    // Flattened columns; nested stats become dotted names.
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    for (const Json& rec : records) {
      std::vector<std::string> row;
      std::vector<std::string> keys;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (it->is_object()) {
          const nlohmann::json sub = nlohmann::json(*it).flatten();
          for (auto s = sub.begin(); s != sub.end(); ++s) {
            std::string key = it.key() + s.key();
            std::replace(key.begin(), key.end(), '/', '.');
            keys.push_back(key);
            row.push_back(s->dump());
          }
        } else {
          keys.push_back(it.key());
          row.push_back(it->is_string() ? it->get<std::string>() : it->dump());
        }
      }
      if (header.empty()) header = keys;
      rows.push_back(row);
    }
    std::string line;
    for (std::size_t i = 0; i < header.size(); ++i) line += (i ? "," : "") + csv_cell(header[i]);
    *ctx.out << line << "\n";
    for (const auto& row : rows) {
      line.clear();
      for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + csv_cell(row[i]);
      *ctx.out << line << "\n";
    }
    return kOk;
  }
  Json doc;
  if (records.size() == 1) {
    doc = records.front();
  } else {
    doc["records"] = records;
  }
  doc["manifest"] = manifest(ctx, eq.to_string(), n_field, colorings.front().r(), 0, 0);
  *ctx.out << doc.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string eq = "schur";
  int n = 0;
  int r = 2;
  std::string objective = "min-mono";
  std::string mode = "exhaustive";
  std::string constraint;
  std::uint64_t budget = std::uint64_t{1} << 30;
  std::uint64_t seed = 1;
  int threads = 1;
  int restarts = 8;
  std::string pattern = "RBR";
  int granularity = 1;
  std::uint64_t progress = 0;
  bool no_symmetry = false;
  int max_witnesses = 16;
};

int cmd_search(const Context& ctx, const SearchArgs& a) {
  const Equation eq = Equation::parse(a.eq);
  const Objective obj = Objective::parse(eq, a.objective);
  SearchOptions opts;
  opts.budget = a.budget;
  opts.threads = a.threads;
  opts.symmetry_reduction = !a.no_symmetry;
  opts.max_witnesses = static_cast<std::size_t>(std::max(0, a.max_witnesses));
  opts.progress_every = a.progress;
  std::ostream* err = ctx.err;
  opts.on_progress = [err](const SearchProgress& p) {
    *err << "progress explored=" << p.explored << " best=" << p.best << "\n";
  };
  ExtremumReport report;
  int r = a.r;
  if (a.mode == "exhaustive") {
    std::optional<ColorCounts> constraint;
    if (!a.constraint.empty()) constraint = parse_constraint(a.constraint);
    report = exhaustive(a.n, a.r, obj, constraint, opts);
  } else if (a.mode == "local") {
    report = local_search(a.n, a.r, obj, a.restarts, a.seed, opts);
  } else if (a.mode == "sweep") {
    std::vector<Color> pattern;
    for (char ch : a.pattern) {
      if (ch == ',' || ch == ' ') continue;
      pattern.push_back(parse_color_letter(ch));
    }
    report = block_sweep(a.n, obj, pattern, a.granularity, opts);
    r = report.witnesses.empty() ? a.r : report.witnesses.front().r();
  } else {
    throw Error("unknown mode '" + a.mode + "'");
  }
  Json doc;
  doc["objective"] = obj.to_string();
  doc["report"] = to_json(report);
  doc["manifest"] = manifest(ctx, eq.to_string(), a.n, r, a.seed, a.budget);
  *ctx.out << doc.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::string n_list;
  std::string out = ".";
  std::uint64_t seed = 20240601;
  int samples = 100;
  int threads = 1;
  std::uint64_t budget = std::uint64_t{1} << 22;
};

struct SuiteResult {
  Json summary = Json::array();
  bool failed = false;
};

void theorems_suite(const VerifyArgs& a, const std::vector<int>& n_list, const std::filesystem::path& dir,
                    SuiteResult& res) {
  VerifyOptions vo;
  vo.exhaustive_budget = a.budget;
  vo.threads = a.threads;
  std::string rows;
  std::string fits = "equation,target,alpha_fit,beta_fit,rel_error,tolerance,pass\n";
  bool first = true;
  for (int coef : {1, 2, 3, 4}) {
    const Objective obj{Equation::schur_like(coef), SolutionClass::Mono, Direction::Min};
    const VerifyReport rep = verify(obj, n_list, vo);
    const std::string csv = to_csv(rep);
    rows += first ? csv : csv.substr(csv.find('\n') + 1);
    first = false;
    const double target = rep.target->to_double();
    const double rel = std::abs(rep.fit.alpha - target) / target;
    const bool pass = rel <= 0.05;
    res.failed = res.failed || !pass;
    fits += obj.equation.to_string() + "," + fmt(target) + "," + fmt(rep.fit.alpha) + "," + fmt(rep.fit.beta) + "," +
            fmt(rel) + ",0.05," + (pass ? "true" : "false") + "\n";
    res.summary.push_back(Json{{"check", "fit " + obj.equation.to_string()},
                               {"asserted", true},
                               {"alpha_fit", rep.fit.alpha},
                               {"target", target},
                               {"pass", pass}});
    for (const VerifyRow& row : rep.rows) {
      if (row.exhaustive_opt && *row.exhaustive_opt > row.canonical_count) {
        res.failed = true;
        res.summary.push_back(Json{{"check", "exhaustive <= canonical"}, {"n", row.n}, {"pass", false}});
      }
    }
  }
  write_file(dir / "theorem_rows.csv", rows);
  write_file(dir / "theorem_fits.csv", fits);
}

void identities_suite(const VerifyArgs& a, const std::vector<int>& n_list, const std::filesystem::path& dir,
                      SuiteResult& res) {
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> bias(0.05, 0.95);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::string csv =
      "n,sample,d2_residual,d2_boundary,d2_corrected_ok,nu_ok,partition_ok,d_slack,d_bound_ok,"
      "estimate_gap,estimate_ok,upper_excess_a2,upper_ok\n";
  struct Tally {
    std::string name;
    bool asserted;
    int rows = 0;
    int failures = 0;
    double worst = 0.0;
    bool has_worst = false;
    void note(bool ok, double v, bool larger_is_worse) {
      ++rows;
      failures += ok ? 0 : 1;
      if (!has_worst || (larger_is_worse ? v > worst : v < worst)) worst = v;
      has_worst = true;
    }
  };
  Tally raw{"d2 residual == 0", false};
  Tally corrected{"d2 residual == boundary term", true};
  Tally nu{"nu1+nu2+nu3 == 2 nonmono", true};
  Tally part{"mono+nonmono+rainbow == total", true};
  Tally dbound{"floor(mu_B^2/4) - D >= -c n", true};
  Tally est{"|nonmono - estimate| <= c n", true};
  Tally upper{"nonmono <= upper bound + c n", true};
  for (int n : n_list) {
    for (int s = 0; s < a.samples; ++s) {
      const double p = bias(rng);
      std::vector<Color> cells(static_cast<std::size_t>(n));
      for (auto& c : cells) c = u(rng) < p ? Color::Blue : Color::Red;
      const Coloring c(cells, 2);
      std::string row = std::to_string(n) + "," + std::to_string(s) + ",";

      const std::int64_t residual = d2_identity_residual(c);
      row += std::to_string(residual) + ",";
      raw.note(residual == 0, static_cast<double>(std::abs(residual)), true);
      if (n % 4 == 0) {
        const std::int64_t boundary = d2_boundary_term(c);
        const bool ok = residual == boundary;
        corrected.note(ok, static_cast<double>(residual - boundary), true);
        row += std::to_string(boundary) + "," + (ok ? "true" : "false") + ",";
      } else {
        row += ",,";
      }

      bool nu_ok = true;
      bool part_ok = true;
      ClassCounts k1;
      ClassCounts k2;
      for (int coef : {1, 2, 3}) {
        const Equation eq = Equation::schur_like(coef);
        const ClassCounts k = count_classes(c, eq);
        const RegionStats rs = region_stats(c, eq);
        nu_ok = nu_ok && rs.nu1 + rs.nu2 + rs.nu3 == 2 * k.nonmono;
        part_ok = part_ok && k.total() == total_count(eq, n);
        if (coef == 1) k1 = k;
        if (coef == 2) k2 = k;
      }
      nu.note(nu_ok, 0.0, true);
      part.note(part_ok, 0.0, true);
      row += std::string(nu_ok ? "true" : "false") + "," + (part_ok ? "true" : "false") + ",";

      const std::int64_t slack = d_bound_slack(c);
      const bool d_ok = static_cast<double>(slack) >= -tolerance::kDBound * n;
      dbound.note(d_ok, static_cast<double>(slack) / n, false);
      row += std::to_string(slack) + "," + (d_ok ? "true" : "false") + ",";

      const double gap = boost::rational_cast<double>(Rational(k1.nonmono) - nonmono_estimate(c));
      const bool e_ok = std::abs(gap) <= tolerance::kNonmonoEstimate * n;
      est.note(e_ok, std::abs(gap) / n, true);
      row += fmt(gap) + "," + (e_ok ? "true" : "false") + ",";

      const double excess = boost::rational_cast<double>(Rational(k2.nonmono) - nonmono_upper_bound(c, 2));
      const bool u_ok = excess <= tolerance::kNonmonoUpper * n;
      upper.note(u_ok, excess / n, true);
      row += fmt(excess) + "," + (u_ok ? "true" : "false") + "\n";
      csv += row;
    }
  }
  write_file(dir / "identity_residuals.csv", csv);
  std::string summary = "check,asserted,rows,failures,worst\n";
  for (const Tally* t : {&raw, &corrected, &nu, &part, &dbound, &est, &upper}) {
    summary += csv_cell(t->name) + "," + (t->asserted ? "true" : "false") + "," + std::to_string(t->rows) + "," +
               std::to_string(t->failures) + "," + (t->has_worst ? fmt(t->worst) : std::string()) + "\n";
    if (t->asserted && t->failures > 0) res.failed = true;
    res.summary.push_back(Json{{"check", t->name},
                               {"asserted", t->asserted},
                               {"rows", t->rows},
                               {"failures", t->failures},
                               {"pass", t->failures == 0}});
  }
  write_file(dir / "identity_summary.csv", summary);
}

void conjectures_suite(const VerifyArgs& a, const std::vector<int>& n_list, const std::filesystem::path& dir,
                       SuiteResult& res) {
  VerifyOptions vo;
  vo.exhaustive_budget = a.budget;
  vo.threads = a.threads;
  struct Item {
    std::string file;
    Objective objective;
  };
  const std::vector<Item> items{
      {"conjecture_rainbow.csv", {Equation::schur_like(1), SolutionClass::Rainbow, Direction::Max}},
      {"conjecture_four_var.csv", {Equation::four_var(), SolutionClass::Mono, Direction::Min}},
      {"conjecture_two_coef_a2_b3.csv", {Equation::two_coef(2, 3), SolutionClass::Mono, Direction::Min}},
      {"conjecture_two_coef_a3_b2.csv", {Equation::two_coef(3, 2), SolutionClass::Mono, Direction::Min}},
  };
  for (const Item& item : items) {
    const VerifyReport rep = verify(item.objective, n_list, vo);
    write_file(dir / item.file, to_csv(rep));
    Json rows = Json::array();
    for (const VerifyRow& row : rep.rows) {
      Json j{{"n", row.n}, {"canonical_count", row.canonical_count}};
      j["gap"] = row.gap ? Json(*row.gap) : Json();
      j["exhaustive_opt"] = row.exhaustive_opt ? Json(*row.exhaustive_opt) : Json();
      rows.push_back(j);
    }
    res.summary.push_back(Json{{"check", item.objective.to_string() + " " + item.objective.equation.to_string()},
                               {"asserted", false},
                               {"status", to_string(rep.status)},
                               {"rows", rows}});
  }
}

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  std::vector<int> n_list;
  if (!a.n_list.empty()) {
    n_list = parse_int_list(a.n_list);
  } else if (a.suite == "theorems") {
    n_list = {22, 44, 88, 176, 352, 704};
  } else if (a.suite == "identities") {
    n_list = {100, 200};
  } else {
    n_list = {10, 20};
  }
  const std::filesystem::path dir(a.out);
  std::filesystem::create_directories(dir);
  SuiteResult res;
  if (a.suite == "theorems") theorems_suite(a, n_list, dir, res);
  else if (a.suite == "identities") identities_suite(a, n_list, dir, res);
  else if (a.suite == "conjectures") conjectures_suite(a, n_list, dir, res);
  else throw Error("unknown suite '" + a.suite + "'");

  const Json m = manifest(ctx, a.suite, n_list, a.suite == "conjectures" ? 3 : 2, a.seed, a.budget);
  write_file(dir / "manifest.json", m.dump(2) + "\n");
  Json doc;
  doc["suite"] = a.suite;
  doc["pass"] = !res.failed;
  doc["checks"] = res.summary;
  doc["manifest"] = m;
  *ctx.out << doc.dump(2) << "\n";
  return res.failed ? kAssertion : kOk;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const Context& ctx, const std::string& path, const std::string& out_override) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read manifest " + path);
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed manifest: ") + e.what());
  }
  if (!m.contains("command_line") || !m["command_line"].is_array()) throw Error("manifest lacks command_line");
  if (m.value("schema_version", 0) != kSchemaVersion) throw Error("unsupported manifest schema_version");
  auto args = m["command_line"].get<std::vector<std::string>>();
  if (!args.empty() && args.front() == "replay") throw Error("manifest replays a replay");
  if (!out_override.empty()) {
    const auto it = std::find(args.begin(), args.end(), "--out");
    if (it != args.end() && it + 1 != args.end()) {
      *(it + 1) = out_override;
    } else {
      args.push_back("--out");
      args.push_back(out_override);
    }
  }
  return run(args, *ctx.out, *ctx.err);
}

constexpr const char* kVerifyFooter = R"(CSV outputs (all with a header row):
  theorems:    theorem_rows.csv   equation,n,canonical_count,predicted,gap,exhaustive_opt,alpha_fit
               theorem_fits.csv   equation,target,alpha_fit,beta_fit,rel_error,tolerance,pass
  identities:  identity_residuals.csv
                 n,sample,d2_residual,d2_boundary,d2_corrected_ok,nu_ok,partition_ok,
                 d_slack,d_bound_ok,estimate_gap,estimate_ok,upper_excess_a2,upper_ok
               identity_summary.csv check,asserted,rows,failures,worst
  conjectures: conjecture_*.csv   same columns as theorem_rows.csv (informational)
Every run also writes manifest.json (schema_version 1).)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.args = args;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"Monochromatic and rainbow solution counts for colorings of [1, n]", "schurlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kArtifactVersion);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count solution classes of one or more colorings");
  count->add_option("--eq", ca.eq, "Equation: schur, x+ay=z:a=K, ax+by=az:a=A,b=B, x+y+w=z")->capture_default_str();
  count->add_option("--n", ca.n, "Expected number of cells (checked against the coloring)");
  count->add_option("--coloring", ca.coloring, "Run-length coloring such as \"R4 B6 R1\", or @file")->required();
  count->add_flag("--classes", ca.classes, "Print class counts (always on)");
  count->add_flag("--stats", ca.stats, "Add element, pair and region statistics");
  count->add_option("--format", ca.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  SearchArgs sa;
  sa.threads = default_threads();
  const auto add_search_options = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--eq", sa.eq, "Equation text")->capture_default_str();
    sub->add_option("--n", sa.n, "Interval length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--r", sa.r, "Number of colors")->check(CLI::Range(2, 3))->capture_default_str();
    sub->add_option("--objective", sa.objective, "min-mono, max-mono, min-rainbow or max-rainbow")
        ->check(CLI::IsMember({"min-mono", "max-mono", "min-rainbow", "max-rainbow"}))
        ->capture_default_str();
    if (with_mode) {
      sub->add_option("--mode", sa.mode, "exhaustive, local or sweep")
          ->check(CLI::IsMember({"exhaustive", "local", "sweep"}))
          ->capture_default_str();
    }
    sub->add_option("--constraint", sa.constraint, "Fixed color counts, e.g. R10,B10");
    sub->add_option("--budget", sa.budget, "Maximum colorings evaluated")->capture_default_str();
    sub->add_option("--seed", sa.seed, "Seed for local search restarts")->capture_default_str();
    sub->add_option("--threads", sa.threads, "Worker threads (default from SCHURLAB_THREADS)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--restarts", sa.restarts, "Random restarts for local search")->capture_default_str();
    sub->add_option("--pattern", sa.pattern, "Block pattern for sweep, e.g. RBR")->capture_default_str();
    sub->add_option("--granularity", sa.granularity, "Boundary grid step for sweep")->capture_default_str();
    sub->add_option("--progress", sa.progress, "Progress line on stderr every this many colorings");
    sub->add_flag("--no-symmetry", sa.no_symmetry, "Disable the cell-1 symmetry reduction");
    sub->add_option("--max-witnesses", sa.max_witnesses, "Witness cap")->capture_default_str();
  };
  auto* search = app.add_subcommand("search", "Find extremal colorings");
  add_search_options(search, true);
  auto* sweep = app.add_subcommand("sweep", "Block-boundary sweep (search --mode sweep)");
  add_search_options(sweep, false);

  VerifyArgs va;
  va.threads = default_threads();
  auto* verify_cmd = app.add_subcommand("verify", "Check predictions and identities, writing CSV tables");
  verify_cmd->footer(kVerifyFooter);
  verify_cmd->add_option("--suite", va.suite, "theorems, identities or conjectures")
      ->required()
      ->check(CLI::IsMember({"theorems", "identities", "conjectures"}));
  verify_cmd->add_option("--n-list", va.n_list, "Comma-separated n values");
  verify_cmd->add_option("--out", va.out, "Output directory")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "Seed for random colorings")->capture_default_str();
  verify_cmd->add_option("--samples", va.samples, "Random colorings per n (identities)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--threads", va.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", va.budget, "Exhaustive cross-check budget")->capture_default_str();

  std::string manifest_path;
  std::string replay_out;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "manifest.json path")->required();
  replay->add_option("--out", replay_out, "Override the output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(ctx, ca);
    if (search->parsed()) return cmd_search(ctx, sa);
    if (sweep->parsed()) {
      sa.mode = "sweep";
      return cmd_search(ctx, sa);
    }
    if (verify_cmd->parsed()) return cmd_verify(ctx, va);
    if (replay->parsed()) return cmd_replay(ctx, manifest_path, replay_out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace schurlab::cli
