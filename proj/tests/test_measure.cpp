#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amen/growth.hpp"
#include "amen/measure.hpp"
#include "helpers.hpp"

using namespace amen;
using amen::testing::load;

namespace {

RegularSet full_basis(const CoordinateWindow& window, const AlgebraPresentation& pres) {
  RegularSet L;
  L.parts.push_back({window.words(), pres.parse_element("1")});
  return L;
}

std::vector<std::uint32_t> range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> ks;
  for (std::uint32_t k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

}  // namespace

TEST_CASE("fk_bk_densities on the polynomial ring") {
  auto kx = load("kx");
  CoordinateWindow win = enumerate_basis(kx, 32);
  ExhaustionSpec balls = ExhaustionSpec::make_ball({kx.parse_element("x")});
  auto [fdens, bdens] = fk_bk_densities(kx, kx.parse_element("x"), balls, range(1, 30), win);
  REQUIRE(fdens.size() == 30);
  for (std::uint32_t k = 1; k <= 30; ++k) {
    CHECK(fdens[k - 1] == Rat(1, k + 1));  // only x^k leaves V_k
    CHECK(bdens[k - 1] == Rat(0));
  }
}

TEST_CASE("fk_bk_densities with s = 1 vanish identically") {
  auto polyxy = load("polyxy");
  CoordinateWindow win = enumerate_basis(polyxy, 8);
  ExhaustionSpec balls =
      ExhaustionSpec::make_ball({polyxy.parse_element("x"), polyxy.parse_element("y")});
  auto [fdens, bdens] = fk_bk_densities(polyxy, polyxy.parse_element("1"), balls, range(1, 6), win);
  for (const auto& v : fdens) CHECK(v == Rat(0));
  for (const auto& v : bdens) CHECK(v == Rat(0));
}

TEST_CASE("fk_bk_densities reproduces the two-pattern exhaustion boundary count") {
  auto ex33 = load("ex33");
  CoordinateWindow win = enumerate_basis(ex33, 38);
  ExhaustionSpec wn = ExhaustionSpec::patterns_from_file(
      ex33, amen::testing::data_path("ex33_wn.json"));
  auto [fdens, bdens] = fk_bk_densities(ex33, ex33.parse_element("y"), wn, range(1, 6), win);
  // Only y^n leaves: y^{n^2} x * y = 0 stays inside. dim W_n = n^2 + n + 2.
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(fdens[n - 1] == Rat(1, n * n + n + 2));
}

TEST_CASE("regular_density") {
  auto kx = load("kx");
  CoordinateWindow win = enumerate_basis(kx, 12);
  ExhaustionSpec balls = ExhaustionSpec::make_ball({kx.parse_element("x")});

  RegularSet all = full_basis(win, kx);
  for (std::uint32_t k = 1; k <= 6; ++k)
    CHECK(regular_density(kx, all, balls.evaluate(kx, k, win), win) == Rat(1));

  RegularSet empty;
  CHECK(regular_density(kx, empty, balls.evaluate(kx, 3, win), win) == Rat(0));

  // L = {x^i * x : i >= 0}: members inside ball(k) are x..x^k.
  RegularSet shifted;
  std::vector<Word> powers;
  for (const auto& w : win.words())
    if (w.size() + 1 <= win.degree_bound()) powers.push_back(w);
  shifted.parts.push_back({powers, kx.parse_element("x")});
  for (std::uint32_t k = 1; k <= 6; ++k)
    CHECK(regular_density(kx, shifted, balls.evaluate(kx, k, win), win) == Rat(k, k + 1));
}

TEST_CASE("validate_regular_set rejects dependent translates") {
  auto kx = load("kx");
  CoordinateWindow win = enumerate_basis(kx, 6);
  RegularSet bad;
  bad.parts.push_back({{Word{}}, kx.parse_element("x")});       // 1 * x = x
  bad.parts.push_back({{Word{0}}, kx.parse_element("1")});      // x * 1 = x
  CHECK_THROWS(validate_regular_set(kx, bad, win));

  RegularSet zero;
  zero.parts.push_back({{Word{}}, kx.parse_element("0")});
  CHECK_THROWS(validate_regular_set(kx, zero, win));
}

TEST_CASE("finite additivity of counts for disjoint regular sets") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 6);
  ExhaustionSpec balls =
      ExhaustionSpec::make_ball({free2.parse_element("x"), free2.parse_element("y")});
  // L = words ending in x, L' = words ending in y (denoted via translators).
  std::vector<Word> all;
  for (const auto& w : win.words())
    if (w.size() + 1 <= win.degree_bound()) all.push_back(w);
  RegularSet lx, ly, both;
  lx.parts.push_back({all, free2.parse_element("x")});
  ly.parts.push_back({all, free2.parse_element("y")});
  both.parts = {lx.parts[0], ly.parts[0]};
  validate_regular_set(free2, both, win);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    RowSpace vk = balls.evaluate(free2, k, win);
    Rat a = regular_density(free2, lx, vk, win);
    Rat b = regular_density(free2, ly, vk, win);
    Rat c = regular_density(free2, both, vk, win);
    CHECK(c == a + b);
  }
}

TEST_CASE("invariance_defect") {
  auto kx = load("kx");
  CoordinateWindow win = enumerate_basis(kx, 22);
  ExhaustionSpec balls = ExhaustionSpec::make_ball({kx.parse_element("x")});
  RegularSet L = full_basis(win, kx);

  DensityReport unit = invariance_defect(kx, L, kx.parse_element("1"), balls, range(1, 20), win);
  for (const auto& v : unit.values) CHECK(v == Rat(0));
  CHECK(unit.converged);
  CHECK(unit.tail_min == Rat(0));
  CHECK(unit.tail_max == Rat(0));

  DensityReport shift = invariance_defect(kx, L, kx.parse_element("x"), balls, range(1, 20), win);
  for (std::uint32_t k = 1; k <= 20; ++k) CHECK(shift.values[k - 1] == Rat(1, k + 1));

  auto free2 = load("free2");
  CoordinateWindow fwin = enumerate_basis(free2, 7);
  ExhaustionSpec fballs =
      ExhaustionSpec::make_ball({free2.parse_element("x"), free2.parse_element("y")});
  RegularSet FL = full_basis(fwin, free2);
  DensityReport fd = invariance_defect(free2, FL, free2.parse_element("x"), fballs, range(3, 6), fwin);
  // Defect 2^k / (2^{k+1} - 1): bounded away from zero for the free algebra.
  for (std::uint32_t k = 3; k <= 6; ++k)
    CHECK(fd.values[k - 3] == Rat(std::int64_t(1) << k, (std::int64_t(1) << (k + 1)) - 1));
  CHECK(fd.tail_min >= Rat(1, 3));
}

TEST_CASE("make_density_report tail policy") {
  DensityReport r = make_density_report({1, 2, 3, 4, 5, 6},
                                        {Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5), Rat(1, 5),
                                         Rat(1, 5)},
                                        Rat(1, 100));
  CHECK(r.tail_min == Rat(1, 5));
  CHECK(r.tail_max == Rat(1, 5));
  CHECK(r.converged);

  DensityReport s = make_density_report(
      {1, 2, 3, 4, 5, 6}, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1, 2), Rat(1)}, Rat(1, 100));
  CHECK_FALSE(s.converged);
  CHECK(s.tail_min == Rat(1, 2));
  CHECK(s.tail_max == Rat(1));
}
