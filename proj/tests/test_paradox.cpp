#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amen/json_io.hpp"
#include "amen/paradox.hpp"
#include "helpers.hpp"

using namespace amen;
using amen::testing::load;

namespace {

std::vector<Word> slice_words(const CoordinateWindow& window, std::uint32_t d) {
  std::vector<Word> out;
  for (const auto& w : window.words())
    if (w.size() <= d) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("build_paradox on the free algebra yields a verified certificate") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 5);
  auto res = build_paradox(free2, {free2.parse_element("x"), free2.parse_element("y")}, 4, win);
  REQUIRE(std::holds_alternative<ParadoxCertificate>(res));
  const auto& cert = std::get<ParadoxCertificate>(res);
  CHECK(cert.parts.size() <= 4);  // <= |S|^2
  CHECK(verify_paradox(free2, cert));

  // Every part's translators are drawn from S.
  for (const auto& p : cert.parts) {
    for (const Element* t : {&p.g, &p.h}) {
      bool in_s = *t == free2.parse_element("x") || *t == free2.parse_element("y");
      CHECK(in_s);
    }
  }

  // Certificates partition the whole slice.
  std::size_t total = 0;
  for (const auto& p : cert.parts) total += p.words.size();
  CHECK(total == slice_words(win, 4).size());
}

TEST_CASE("the hand-written one-part certificate verifies on free2") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 5);
  ParadoxCertificate cert;
  cert.basis_degree = 4;
  cert.degree_bound = 5;
  cert.parts.push_back(
      {slice_words(win, 4), free2.parse_element("x"), free2.parse_element("y")});
  CHECK(verify_paradox(free2, cert));
}

TEST_CASE("tampered certificates fail verification") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 4);
  ParadoxCertificate cert;
  cert.basis_degree = 3;
  cert.degree_bound = 4;
  cert.parts.push_back(
      {slice_words(win, 3), free2.parse_element("x"), free2.parse_element("y")});
  REQUIRE(verify_paradox(free2, cert));

  ParadoxCertificate dup = cert;
  dup.parts[0].words.push_back(dup.parts[0].words.front());
  CHECK_FALSE(verify_paradox(free2, dup));

  ParadoxCertificate zero = cert;
  zero.parts[0].g = free2.parse_element("0");
  CHECK_FALSE(verify_paradox(free2, zero));

  ParadoxCertificate missing = cert;
  missing.parts[0].words.pop_back();
  CHECK_FALSE(verify_paradox(free2, missing));  // no longer a partition of the slice
}

TEST_CASE("build_paradox on the polynomial ring returns a deficiency witness") {
  auto kx = load("kx");
  CoordinateWindow win = enumerate_basis(kx, 7);
  auto res = build_paradox(kx, {kx.parse_element("x"), kx.parse_element("x*x")}, 5, win);
  REQUIRE(std::holds_alternative<ParadoxDeficiency>(res));
  const auto& w = std::get<ParadoxDeficiency>(res);
  CHECK(w.spanned_dim < 2 * w.words.size());
  // Independent recount of the witness: span of all S-translates of its words.
  std::vector<Element> translated;
  for (const auto& word : w.words) {
    translated.push_back(kx.multiply(elem_from_word(word), kx.parse_element("x")));
    translated.push_back(kx.multiply(elem_from_word(word), kx.parse_element("x*x")));
  }
  CHECK(span_of_elements(kx, win, translated).dim() == w.spanned_dim);
}

TEST_CASE("build_paradox on the free group algebra") {
  auto f2 = load("f2grp");
  CoordinateWindow win = enumerate_basis(f2, 4);

  // With only {x, y} as translator pool both choices are forced on every
  // basis word, and X*x = 1 = Y*y collide: no truncated certificate exists.
  auto forced = build_paradox(f2, {f2.parse_element("x"), f2.parse_element("y")}, 3, win);
  REQUIRE(std::holds_alternative<ParadoxDeficiency>(forced));

  // The full generator pool leaves two non-cancelling translators per word.
  std::vector<Element> S;
  for (const auto& g : f2.generators()) S.push_back(f2.parse_element(g));
  auto res = build_paradox(f2, S, 3, win);
  REQUIRE(std::holds_alternative<ParadoxCertificate>(res));
  CHECK(verify_paradox(f2, std::get<ParadoxCertificate>(res)));
}

TEST_CASE("build_paradox rejects zero translators and shallow windows") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 4);
  CHECK_THROWS(build_paradox(free2, {free2.parse_element("0"), free2.parse_element("y")}, 3, win));
  CHECK_THROWS_AS(build_paradox(free2, {free2.parse_element("x"), free2.parse_element("y")}, 4, win),
                  TruncationOverflow);
}

TEST_CASE("mass_doubling_check densities") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 5);
  ParadoxCertificate cert;
  cert.basis_degree = 3;
  cert.degree_bound = 5;
  cert.parts.push_back(
      {slice_words(win, 3), free2.parse_element("x"), free2.parse_element("y")});
  REQUIRE(verify_paradox(free2, cert));

  // V = span of all words of degree <= 4: every translate lies inside.
  std::vector<Element> vgens;
  for (const auto& w : slice_words(win, 4)) vgens.push_back(elem_from_word(w));
  RowSpace v = span_of_elements(free2, win, vgens);
  // 2*(2^4-1) translated vectors over dim 2^5-1.
  CHECK(mass_doubling_check(free2, cert, v, win) == Rat(30, 31));

  RowSpace unit = span_of_elements(free2, win, {free2.parse_element("1")});
  CHECK(mass_doubling_check(free2, cert, unit, win) == Rat(0));
}

TEST_CASE("paradox json round trip") {
  auto free2 = load("free2");
  CoordinateWindow win = enumerate_basis(free2, 4);
  auto res = build_paradox(free2, {free2.parse_element("x"), free2.parse_element("y")}, 3, win);
  REQUIRE(std::holds_alternative<ParadoxCertificate>(res));
  const auto& cert = std::get<ParadoxCertificate>(res);
  auto j = to_json(free2, cert);
  ParadoxCertificate back = paradox_certificate_from_json(free2, j);
  CHECK(to_json(free2, back) == j);
  CHECK(verify_paradox(free2, back));
}
