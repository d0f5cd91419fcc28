#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "schurlab/counting.hpp"
#include "schurlab/error.hpp"

using namespace schurlab;

namespace {

std::vector<Equation> families() {
  return {Equation::schur_like(1), Equation::schur_like(2), Equation::schur_like(3), Equation::schur_like(4),
          Equation::two_coef(2, 3), Equation::two_coef(3, 2), Equation::four_var()};
}

void check_against_oracle(const Coloring& c, const Equation& eq) {
  const oracle::Counts o = oracle::count(c, eq);
  const ClassCounts k = count_classes(c, eq);
  CHECK(k.mono == o.mono);
  CHECK(k.nonmono == o.nonmono);
  CHECK(k.rainbow == o.rainbow);
  CHECK(k.total() == total_count(eq, c.n()));
  CHECK(count_classes_enumerated(c, eq) == k);
}

/// Brute-force direct product: quadruple tally over X and Y1.
std::int64_t product_oracle(const Coloring& c, int a, ColorPair xp, ColorPair yp) {
  const int n = c.n();
  const int m = n / a;
  std::int64_t t = 0;
  for (int x = 1; 2 * x <= n; ++x) {
    for (int y = 1; 2 * y <= m; ++y) {
      if (c.at(x) == xp.smaller && c.at(n + 1 - x) == xp.larger && c.at(y) == yp.smaller &&
          c.at(m + 1 - y) == yp.larger && a * y < x) {
        ++t;
      }
    }
  }
  return t;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("class count examples") {
    const ClassCounts red = count_classes(Coloring::uniform(5, Color::Red), Equation::schur_like(1));
    CHECK(red.mono == 6);
    CHECK(red.nonmono == 0);
    CHECK(count_classes(parse_runlength("R3"), Equation::schur_like(1)).mono == 2);
    const Coloring fig = parse_runlength("R4 B6 R1");
    check_against_oracle(fig, Equation::schur_like(1));
    const ClassCounts k = count_classes(parse_runlength("B1 R1"), Equation::schur_like(2));
    CHECK(k.mono == 0);
    CHECK(k.nonmono == 0);
    CHECK(count_classes(parse_runlength("R1"), Equation::schur_like(2)).mono == 0);
  }

  TEST_CASE("exhaustive partition and oracle agreement, n <= 12") {
    for (const Equation& eq : families()) {
      for (int n = 1; n <= 12; ++n) {
        for (std::uint32_t code = 0; code < (1U << n); ++code) {
          std::vector<Color> cells(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = (code >> i & 1U) ? Color::Blue : Color::Red;
          const Coloring c(cells, 2);
          const ClassCounts k = count_classes(c, eq);
          REQUIRE(k.total() == total_count(eq, n));
          if (n <= 9) check_against_oracle(c, eq);
        }
      }
    }
  }

  TEST_CASE("random colorings agree with the oracle, r = 2 and 3") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
      const int n = 1 + static_cast<int>(rng() % 130);
      const Coloring c = gen::iid(n, 2 + i % 2, rng);
      for (const Equation& eq : families()) {
        if (eq.family() == Family::FourVar && n > 60) continue;
        check_against_oracle(c, eq);
      }
    }
  }

  TEST_CASE("packed counter across word boundaries") {
    std::mt19937_64 rng(99);
    for (int n : {63, 64, 65, 127, 128, 129, 191, 192, 193, 640}) {
      for (int a : {1, 2, 3, 7, 64}) {
        const Coloring c = gen::iid(n, 3, rng);
        const ClassCounts packed = count_classes(c, Equation::schur_like(a));
        CHECK(packed == count_classes_enumerated(c, Equation::schur_like(a)));
      }
    }
  }

  TEST_CASE("partition exactness for n up to 1000") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
      const int n = 1 + static_cast<int>(rng() % 1000);
      const Coloring c = gen::iid(n, 2 + i % 2, rng);
      for (int a = 1; a <= 4; ++a) CHECK(count_classes(c, Equation::schur_like(a)).total() == total_count(Equation::schur_like(a), n));
    }
  }

  TEST_CASE("rainbow errors") {
    CHECK_THROWS_AS(count_rainbow(parse_runlength("R3"), Equation::schur_like(1)), Error);
    CHECK_THROWS_AS(count_rainbow(parse_runlength("R3 G1"), Equation::four_var()), Error);
    CHECK(count_rainbow(parse_runlength("R1 B1 G1"), Equation::schur_like(1)) == 1);
    CHECK(count_classes(parse_runlength("R1 B1 G1"), Equation::four_var()).rainbow == 0);
  }

  TEST_CASE("deltas") {
    const Coloring red5 = Coloring::uniform(5, Color::Red);
    // 2 lies in 112, 123, 224 and 235
    CHECK(mono_delta(red5, Equation::schur_like(1), 2, Color::Blue) == -4);
    CHECK(oracle::count(red5.flip(2, Color::Blue), Equation::schur_like(1)).mono == 2);
    CHECK(mono_delta(Coloring::uniform(1, Color::Red), Equation::schur_like(1), 1, Color::Blue) == 0);
    CHECK(mono_delta(Coloring::uniform(2, Color::Red), Equation::schur_like(2), 2, Color::Blue) == 0);
    CHECK(mono_delta(red5, Equation::schur_like(1), 3, Color::Red) == 0);
    CHECK_THROWS_AS(mono_delta(red5, Equation::schur_like(1), 6, Color::Blue), Error);
    CHECK_THROWS_AS(mono_delta(red5, Equation::schur_like(1), 0, Color::Blue), Error);
    CHECK_THROWS_AS(rainbow_delta(red5, Equation::schur_like(1), 1, Color::Blue), Error);

    std::mt19937_64 rng(31);
    for (const Equation& eq : families()) {
      for (int i = 0; i < 2000; ++i) {
        const int r = 2 + i % 2;
        const int n = 1 + static_cast<int>(rng() % 50);
        const Coloring c = gen::iid(n, r, rng);
        const int p = 1 + static_cast<int>(rng() % n);
        const Color to = color_at(static_cast<int>(rng() % r));
        const Coloring after = c.flip(p, to);
        const ClassCounts before_k = count_classes(c, eq);
        const ClassCounts after_k = count_classes(after, eq);
        REQUIRE(mono_delta(c, eq, p, to) == after_k.mono - before_k.mono);
        if (r == 3 && eq.arity() == 3) REQUIRE(rainbow_delta(c, eq, p, to) == after_k.rainbow - before_k.rainbow);
      }
    }
  }

  TEST_CASE("region statistics") {
    const RegionStats mono = region_stats(Coloring::uniform(20, Color::Blue), Equation::schur_like(2));
    CHECK(mono.nx_minus + mono.nx_plus + mono.ny_minus + mono.ny_plus == 0);
    CHECK(mono.d == 0);
    CHECK(mono.nu1 + mono.nu2 + mono.nu3 == 0);
    CHECK_THROWS_AS(region_stats(parse_runlength("R1 G1"), Equation::schur_like(1)), Error);
    CHECK_THROWS_AS(region_stats(parse_runlength("R3"), Equation::four_var()), Error);

    const Coloring half = parse_runlength("R5 B5");
    const RegionStats h = region_stats(half, Equation::schur_like(1));
    const oracle::Regions ho = oracle::regions(half, 1);
    CHECK(h.n_minus == ho.nx_minus);
    CHECK(h.n_plus == ho.ny_plus);
    CHECK(h.n_minus + h.n_plus <= 25);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 600; ++i) {
      const int n = 1 + static_cast<int>(rng() % 200);
      const int a = 1 + static_cast<int>(rng() % 4);
      const Coloring c = gen::mixed(n, rng, i);
      const Equation eq = Equation::schur_like(a);
      const RegionStats st = region_stats(c, eq);
      const oracle::Regions o = oracle::regions(c, a);
      CHECK(st.nx_minus == o.nx_minus);
      CHECK(st.nx_plus == o.nx_plus);
      CHECK(st.ny_minus == o.ny_minus);
      CHECK(st.ny_plus == o.ny_plus);
      CHECK(st.d == o.nx_minus - o.ny_plus);
      CHECK(st.nu1 + st.nu2 + st.nu3 == 2 * count_classes(c, eq).nonmono);
    }
  }

  TEST_CASE("direct products") {
    constexpr Color R = Color::Red;
    constexpr Color B = Color::Blue;
    const Coloring red = Coloring::uniform(20, R);
    CHECK(direct_product(red, 2, {R, R}, {R, R}) == product_oracle(red, 2, {R, R}, {R, R}));
    CHECK(direct_product(red, 2, {R, R}, {R, R}) > 0);
    CHECK(direct_product(red, 2, {R, B}, {R, R}) == 0);
    CHECK(direct_product(red, 2, {R, R}, {B, R}) == 0);
    const Coloring rbr = parse_runlength("R5 B10 R5");
    for (ColorPair xp : {ColorPair{R, R}, ColorPair{R, B}, ColorPair{B, R}, ColorPair{B, B}}) {
      for (ColorPair yp : {ColorPair{R, R}, ColorPair{R, B}, ColorPair{B, R}, ColorPair{B, B}}) {
        CHECK(direct_product(rbr, 2, xp, yp) == product_oracle(rbr, 2, xp, yp));
      }
    }
    CHECK_THROWS_AS(direct_product(red, 1, {R, R}, {R, R}), Error);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
      const int n = 1 + static_cast<int>(rng() % 120);
      const int a = 2 + static_cast<int>(rng() % 3);
      const Coloring c = gen::mixed(n, rng, i);
      const ColorPair xp{color_at(static_cast<int>(rng() % 2)), color_at(static_cast<int>(rng() % 2))};
      const ColorPair yp{color_at(static_cast<int>(rng() % 2)), color_at(static_cast<int>(rng() % 2))};
      CHECK(direct_product(c, a, xp, yp) == product_oracle(c, a, xp, yp));
    }
  }

  TEST_CASE("d2 identity with its boundary term") {
    CHECK(d2_identity_residual(Coloring::uniform(16, Color::Red)) == 0);
    CHECK(d2_identity_residual(Coloring::uniform(17, Color::Blue)) == 0);
    CHECK(d2_boundary_term(Coloring::uniform(16, Color::Red)) == 0);
    CHECK_THROWS_AS(d2_boundary_term(Coloring::uniform(18, Color::Red)), Error);
    CHECK_THROWS_AS(d2_identity_residual(parse_runlength("R2 G2")), Error);

    for (int n = 4; n <= 12; n += 4) {
      for (std::uint32_t code = 0; code < (1U << n); ++code) {
        std::vector<Color> cells(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = (code >> i & 1U) ? Color::Blue : Color::Red;
        const Coloring c(cells, 2);
        REQUIRE(d2_identity_residual(c) == d2_boundary_term(c));
      }
    }
    std::mt19937_64 rng(47);
    for (int n : {100, 200, 400}) {
      for (int i = 0; i < 200; ++i) {
        const Coloring c = gen::mixed(n, rng, i);
        REQUIRE(d2_identity_residual(c) == d2_boundary_term(c));
      }
    }
  }

  TEST_CASE("d bound slack") {
    CHECK(d_bound_slack(Coloring::uniform(30, Color::Red)) == 225);
    CHECK(d_bound_slack(Coloring::uniform(30, Color::Blue)) == 225);
    for (int k = 1; k <= 16; ++k) {
      CHECK(d_bound_slack(parse_runlength("R" + std::to_string(8 * k) + " B" + std::to_string(12 * k) + " R" + std::to_string(2 * k))) >= 0);
    }
    // relabeling never matters
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
      const Coloring c = gen::mixed(50, rng, i);
      CHECK(d_bound_slack(c) == d_bound_slack(c.swap_colors(Color::Red, Color::Blue)));
    }
    CHECK_THROWS_AS(d_bound_slack(parse_runlength("G2", 3)), Error);
  }

  TEST_CASE("color swap symmetry") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % 80);
      const Coloring c = gen::mixed(n, rng, i);
      const Coloring s = c.swap_colors(Color::Red, Color::Blue);
      for (const Equation& eq : families()) {
        if (eq.family() == Family::FourVar && n > 40) continue;
        CHECK(count_classes(c, eq) == count_classes(s, eq));
      }
    }
  }
}
