#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amen/growth.hpp"
#include "amen/presentation.hpp"
#include "amen/window.hpp"
#include "helpers.hpp"

using namespace amen;
using amen::testing::load;

namespace {

Element random_element(std::mt19937& rng, const AlgebraPresentation& pres,
                       const CoordinateWindow& window, std::uint32_t max_degree) {
  Element e;
  std::uint32_t terms = 1 + rng() % 3;
  for (std::uint32_t t = 0; t < terms; ++t) {
    const Word& w = window.word_at(rng() % window.size());
    if (w.size() > max_degree) continue;
    e.add_term(pres.field(), w, 1 + rng() % (pres.field().p - 1));
  }
  return e;
}

}  // namespace

TEST_CASE("parse_element") {
  auto free2 = load("free2");
  CHECK(free2.parse_element("0").is_zero());

  AlgebraPresentation p5(FieldSpec(5), {"x", "y"}, true, {});
  Element e = p5.parse_element("x*y + 2*y");
  Element expect;
  expect.add_term(p5.field(), {0, 1}, 1);
  expect.add_term(p5.field(), {1}, 2);
  CHECK(e == expect);

  auto ex33 = load("ex33");
  CHECK(ex33.parse_element("x*y").is_zero());

  CHECK_THROWS(free2.parse_element("x*z"));
  AlgebraPresentation nonunital(FieldSpec(5), {"x"}, false, {});
  CHECK_THROWS(nonunital.parse_element("1 + x"));
}

TEST_CASE("normal_form") {
  auto polyxy = load("polyxy");
  Element yx = polyxy.parse_element("y*x");
  CHECK(yx == polyxy.parse_element("x*y"));
  CHECK(polyxy.normal_form(yx) == yx);  // idempotence on a normal element

  auto ex33 = load("ex33");
  Element raw;
  raw.add_term(ex33.field(), {0, 0, 1}, 1);  // x*x*y
  CHECK(ex33.normal_form(raw).is_zero());
}

TEST_CASE("confluence_check") {
  auto ex33 = load("ex33");
  CHECK(confluence_check(ex33, 8).empty());

  auto polyxy = load("polyxy");
  CHECK(confluence_check(polyxy, 8).empty());

  auto z2 = load("z2grp");
  CHECK(confluence_check(z2, 8).empty());
  auto f2 = load("f2grp");
  CHECK(confluence_check(f2, 8).empty());

  // Contradictory pair: y*x rewrites two ways.
  FieldSpec f(32003);
  AlgebraPresentation bad(
      f, {"x", "y"}, true,
      {RewriteRule{{1, 0}, elem_from_word(Word{0, 1})}, RewriteRule{{1, 0}, elem_from_word(Word{0})}});
  auto bad_overlaps = confluence_check(bad, 8);
  REQUIRE_FALSE(bad_overlaps.empty());
  bool found = false;
  for (auto& w : bad_overlaps)
    if (w == Word{1, 0}) found = true;
  CHECK(found);
}

TEST_CASE("enumerate_basis") {
  auto free2 = load("free2");
  CoordinateWindow w2 = enumerate_basis(free2, 2);
  REQUIRE(w2.size() == 7);
  CHECK(w2.word_at(0) == Word{});
  CHECK(w2.word_at(1) == Word{0});
  CHECK(w2.word_at(2) == Word{1});
  CHECK(w2.word_at(3) == Word{0, 0});
  CHECK(w2.word_at(6) == Word{1, 1});

  auto ex33 = load("ex33");
  CoordinateWindow w3 = enumerate_basis(ex33, 3);
  CHECK(w3.size() == 7);  // 1, x, y, yx, yy, yyx, yyy

  auto polyxy = load("polyxy");
  CHECK(enumerate_basis(polyxy, 2).size() == 6);

  FieldSpec f(32003);
  AlgebraPresentation bad(
      f, {"x", "y"}, true,
      {RewriteRule{{1, 0}, elem_from_word(Word{0, 1})}, RewriteRule{{1, 0}, elem_from_word(Word{0})}});
  CHECK_THROWS(enumerate_basis(bad, 3));
}

TEST_CASE("window stability") {
  for (const char* name : {"free2", "ex33", "polyxy", "f2grp"}) {
    auto pres = load(name);
    CoordinateWindow big = enumerate_basis(pres, 5);
    CoordinateWindow small = enumerate_basis(pres, 3);
    REQUIRE(small.size() <= big.size());
    for (std::uint32_t i = 0; i < small.size(); ++i) CHECK(small.word_at(i) == big.word_at(i));
    for (std::uint32_t i = small.size(); i < big.size(); ++i) CHECK(big.word_at(i).size() > 3);
  }
}

TEST_CASE("multiply") {
  auto free2 = load("free2");
  Element a = free2.parse_element("x*y + 3*y");
  CHECK(free2.multiply(a, free2.parse_element("0")).is_zero());
  CHECK(free2.multiply(free2.parse_element("1"), a) == a);
  CHECK(free2.multiply(a, free2.parse_element("1")) == a);

  auto ex33 = load("ex33");
  Element yyx = ex33.parse_element("y*y*x");
  CHECK(ex33.multiply(yyx, ex33.parse_element("y")).is_zero());
}

TEST_CASE("right_multiply_subspace") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 4);
  RowSpace w = span_of_elements(free2, win,
                                {free2.parse_element("1"), free2.parse_element("x"),
                                 free2.parse_element("y")});
  CHECK(right_multiply_subspace(w, free2.parse_element("1"), free2, win) == w);
  RowSpace wx = right_multiply_subspace(w, free2.parse_element("x"), free2, win);
  CHECK(wx.dim() == 3);  // x, xx, yx

  auto ex33 = load("ex33");
  CoordinateWindow ewin = enumerate_basis(ex33, 4);
  RowSpace v = span_of_elements(ex33, ewin, {ex33.parse_element("x"), ex33.parse_element("y*x")});
  CHECK(right_multiply_subspace(v, ex33.parse_element("x"), ex33, ewin).dim() == 0);

  // Truncation soundness: degree 4 rows times x cannot stay in the window.
  RowSpace deep = span_of_elements(free2, win, {free2.parse_element("x*x*x*x")});
  CHECK_THROWS_AS(right_multiply_subspace(deep, free2.parse_element("x"), free2, win),
                  TruncationOverflow);
}

TEST_CASE("find_zero_divisors") {
  auto free2 = load("free2");
  CHECK_FALSE(find_zero_divisors(free2, 4).has_value());
  auto polyxy = load("polyxy");
  CHECK_FALSE(find_zero_divisors(polyxy, 4).has_value());

  auto ex33 = load("ex33");
  auto zd = find_zero_divisors(ex33, 3);
  REQUIRE(zd.has_value());
  CHECK_FALSE(zd->first.is_zero());
  CHECK_FALSE(zd->second.is_zero());
  CHECK(ex33.multiply(zd->first, zd->second).is_zero());
}

TEST_CASE("normal_form is idempotent and linear on random elements") {
  std::mt19937 rng(11);
  for (const char* name : {"free2", "ex33", "polyxy", "z2grp", "f2grp"}) {
    auto pres = load(name);
    CoordinateWindow win = enumerate_basis(pres, 4);
    const FieldSpec& f = pres.field();
    for (int trial = 0; trial < 25; ++trial) {
      Element a = random_element(rng, pres, win, 3);
      Element b = random_element(rng, pres, win, 3);
      std::uint32_t alpha = 1 + rng() % (f.p - 1);
      CHECK(pres.normal_form(pres.normal_form(a)) == pres.normal_form(a));
      Element lhs = pres.normal_form(elem_add(f, elem_scale(f, a, alpha), b));
      Element rhs = elem_add(f, elem_scale(f, pres.normal_form(a), alpha), pres.normal_form(b));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937 rng(23);
  for (const char* name : {"free2", "ex33", "polyxy", "z2grp", "f2grp"}) {
    auto pres = load(name);
    CoordinateWindow win = enumerate_basis(pres, 3);
    for (int trial = 0; trial < 25; ++trial) {
      Element a = random_element(rng, pres, win, 3);
      Element b = random_element(rng, pres, win, 3);
      Element c = random_element(rng, pres, win, 3);
      CHECK(pres.multiply(pres.multiply(a, b), c) == pres.multiply(a, pres.multiply(b, c)));
    }
  }
}

TEST_CASE("right multiplication by nonzero elements is injective on domains") {
  std::mt19937 rng(37);
  for (const char* name : {"free2", "polyxy", "kx"}) {
    auto pres = load(name);
    CoordinateWindow win = enumerate_basis(pres, 6);
    for (int trial = 0; trial < 20; ++trial) {
      // Random word-spanned W of degree <= 3 and nonzero r of degree <= 2.
      std::vector<Element> gens;
      for (int i = 0; i < 3; ++i) {
        const Word& w = win.word_at(rng() % win.size());
        if (w.size() <= 3) gens.push_back(elem_from_word(w));
      }
      if (gens.empty()) continue;
      Element r = random_element(rng, pres, win, 2);
      if (r.is_zero()) continue;
      RowSpace w = span_of_elements(pres, win, gens);
      RowSpace wr = right_multiply_subspace(w, r, pres, win);
      CHECK(wr.dim() == w.dim());
    }
  }
}
