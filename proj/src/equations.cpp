#include "schurlab/equations.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "schurlab/error.hpp"

namespace schurlab {

Equation Equation::schur_like(int a) {
  if (a < 1) throw Error("x+ay=z requires a >= 1");
  return {Family::SchurLike, a, 0};
}

Equation Equation::two_coef(int a, int b) {
  if (a < 2 || b < 2) throw Error("ax+by=az requires a, b >= 2");
  if (std::gcd(a, b) != 1) throw Error("ax+by=az requires gcd(a, b) = 1");
  return {Family::TwoCoef, a, b};
}

Equation Equation::four_var() { return {Family::FourVar, 0, 0}; }

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

int parse_param(std::string_view params, std::string_view key) {
  // params looks like "a=2,b=3"
  std::size_t pos = 0;
  while (pos < params.size()) {
    const std::size_t end = std::min(params.find(',', pos), params.size());
    const std::string_view item = params.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq != std::string_view::npos && item.substr(0, eq) == key) {
      int value = 0;
      const std::string_view digits = item.substr(eq + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error("bad value for equation parameter " + std::string(key));
      }
      return value;
    }
    pos = end + 1;
  }
  throw Error("missing equation parameter " + std::string(key));
}

}  // namespace

Equation Equation::parse(std::string_view text) {
  const std::string t = strip(text);
  const std::size_t colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : t.substr(colon + 1);
  if (head == "schur" || head == "x+y=z") return schur_like(1);
  if (head == "x+ay=z") return schur_like(parse_param(params, "a"));
  if (head == "ax+by=az") return two_coef(parse_param(params, "a"), parse_param(params, "b"));
  if (head == "x+y+w=z") return four_var();
  throw Error("unknown equation '" + std::string(text) + "'");
}

std::string Equation::to_string() const {
  switch (family_) {
    case Family::SchurLike:
      return a_ == 1 ? "schur" : "x+ay=z:a=" + std::to_string(a_);
    case Family::TwoCoef:
      return "ax+by=az:a=" + std::to_string(a_) + ",b=" + std::to_string(b_);
    case Family::FourVar:
      return "x+y+w=z";
  }
  return "?";
}

bool satisfies(const Equation& eq, int n, const Solution& sol) {
  if (sol.arity != eq.arity()) return false;
  for (int v : sol.vars()) {
    if (v < 1 || v > n) return false;
  }
  const auto& v = sol.values;
  switch (eq.family()) {
    case Family::SchurLike:
      if (eq.a() == 1 && v[0] > v[1]) return false;
      return v[0] + eq.a() * v[1] == v[2];
    case Family::TwoCoef:
      return eq.a() * v[0] + eq.b() * v[1] == eq.a() * v[2];
    case Family::FourVar:
      return v[0] <= v[1] && v[1] <= v[2] && v[0] + v[1] + v[2] == v[3];
  }
  return false;
}

std::int64_t total_count(const Equation& eq, int n) {
  if (n < 1) return 0;
  const std::int64_t nn = n;
  switch (eq.family()) {
    case Family::SchurLike: {
      if (eq.a() == 1) return nn * nn / 4;  // sum_{z<=n} floor(z/2)
      const std::int64_t a = eq.a();
      const std::int64_t ymax = (nn - 1) / a;
      return ymax * nn - a * ymax * (ymax + 1) / 2;
    }
    case Family::TwoCoef: {
      const std::int64_t kmax = std::min<std::int64_t>(nn / eq.a(), (nn - 1) / eq.b());
      if (kmax <= 0) return 0;
      return kmax * nn - static_cast<std::int64_t>(eq.b()) * kmax * (kmax + 1) / 2;
    }
    case Family::FourVar: {
      std::int64_t total = 0;
      for (std::int64_t x = 1; 3 * x <= nn; ++x) {
        for (std::int64_t y = x; x + 2 * y <= nn; ++y) total += nn - x - 2 * y + 1;
      }
      return total;
    }
  }
  return 0;
}

std::vector<Solution> solutions(const Equation& eq, int n) {
  std::vector<Solution> out;
  for_each_solution(eq, n, [&](const Solution& s) { out.push_back(s); });
  return out;
}

}  // namespace schurlab
