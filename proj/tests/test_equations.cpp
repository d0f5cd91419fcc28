#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "schurlab/equations.hpp"
#include "schurlab/error.hpp"

using namespace schurlab;

namespace {

std::vector<Equation> families() {
  return {Equation::schur_like(1), Equation::schur_like(2), Equation::schur_like(3), Equation::schur_like(5),
          Equation::two_coef(2, 3), Equation::two_coef(3, 2), Equation::two_coef(3, 5), Equation::four_var()};
}

std::vector<int> as_vec(const Solution& s) { return {s.vars().begin(), s.vars().end()}; }

}  // namespace

TEST_SUITE("equations") {
  TEST_CASE("solution examples") {
    const auto s2 = solutions(Equation::schur_like(1), 2);
    REQUIRE(s2.size() == 1);
    CHECK(as_vec(s2[0]) == std::vector<int>{1, 1, 2});
    CHECK(solutions(Equation::schur_like(1), 1).empty());

    std::set<std::vector<int>> got;
    for (const auto& s : solutions(Equation::schur_like(2), 5)) got.insert(as_vec(s));
    CHECK(got == std::set<std::vector<int>>{{1, 1, 3}, {2, 1, 4}, {3, 1, 5}, {1, 2, 5}});

    CHECK(total_count(Equation::schur_like(1), 5) == 6);
    CHECK(total_count(Equation::schur_like(2), 5) == 4);
  }

  TEST_CASE("streams match the raw-tuple oracle") {
    for (const Equation& eq : families()) {
      for (int n = 1; n <= 40; ++n) {
        std::set<std::vector<int>> want;
        oracle::tuples(eq, n, [&](const std::vector<int>& t) { want.insert(t); });
        std::set<std::vector<int>> got;
        std::size_t emitted = 0;
        for_each_solution(eq, n, [&](const Solution& s) {
          CHECK(satisfies(eq, n, s));
          got.insert(as_vec(s));
          ++emitted;
        });
        CHECK(emitted == got.size());
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("solutions containing a position") {
    for (const Equation& eq : families()) {
      for (int n = 1; n <= 25; ++n) {
        const auto all = solutions(eq, n);
        for (int p = 1; p <= n; ++p) {
          std::multiset<std::vector<int>> want;
          for (const auto& s : all) {
            const auto v = s.vars();
            if (std::find(v.begin(), v.end(), p) != v.end()) want.insert(as_vec(s));
          }
          std::multiset<std::vector<int>> got;
          for_each_solution_containing(eq, n, p, [&](const Solution& s) { got.insert(as_vec(s)); });
          CHECK(got == want);
        }
      }
    }
  }

  TEST_CASE("total_count equals the stream length") {
    for (const Equation& eq : families()) {
      for (int n = 1; n <= 300; n += (eq.family() == Family::FourVar ? 7 : 1)) {
        std::int64_t len = 0;
        for_each_solution(eq, n, [&](const Solution&) { ++len; });
        CHECK(total_count(eq, n) == len);
      }
    }
  }

  TEST_CASE("leading-order totals") {
    for (int n = 1; n <= 10000; ++n) {
      const std::int64_t t = total_count(Equation::schur_like(1), n);
      CHECK(std::abs(static_cast<double>(t) - n * static_cast<double>(n) / 4.0) <= n);
      CHECK(t == std::int64_t{n} * n / 4);
    }
    for (int a = 2; a <= 6; ++a) {
      for (int n = 1; n <= 10000; n += 3) {
        const double e = static_cast<double>(total_count(Equation::schur_like(a), n)) - n * static_cast<double>(n) / (2.0 * a);
        CHECK(std::abs(e) <= (a + 1.0) * n);
      }
    }
  }

  TEST_CASE("parse and format") {
    CHECK(Equation::parse("schur") == Equation::schur_like(1));
    CHECK(Equation::parse("x+y=z") == Equation::schur_like(1));
    CHECK(Equation::parse("x+ay=z:a=2") == Equation::schur_like(2));
    CHECK(Equation::parse("ax+by=az:a=2,b=3") == Equation::two_coef(2, 3));
    CHECK(Equation::parse("x+y+w=z") == Equation::four_var());
    for (const Equation& eq : families()) CHECK(Equation::parse(eq.to_string()) == eq);
    CHECK_THROWS_AS(Equation::parse("x+y=w"), Error);
    CHECK_THROWS_AS(Equation::parse("x+ay=z:a=0"), Error);
    CHECK_THROWS_AS(Equation::parse("ax+by=az:a=2,b=4"), Error);
    CHECK_THROWS_AS(Equation::two_coef(1, 2), Error);
    CHECK_THROWS_AS(Equation::schur_like(0), Error);
  }
}
