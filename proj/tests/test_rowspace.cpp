#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amen/rowspace.hpp"
#include "helpers.hpp"

using namespace amen;

namespace {

Mat mat_from(std::uint32_t rows, std::uint32_t cols,
             std::initializer_list<std::initializer_list<std::uint32_t>> data) {
  Mat m(rows, cols);
  std::uint32_t r = 0;
  for (auto& row : data) {
    std::uint32_t c = 0;
    for (auto v : row) {
      if (v != 0) m.set(r, c, v);
      ++c;
    }
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("rref identity and zero") {
  FieldSpec f2(2);
  Mat id = mat_from(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  RowSpace rs = rref(f2, id);
  CHECK(rs.dim() == 3);
  CHECK(rs.basis() == id.entries);

  Mat zero(2, 4);
  CHECK(rref(f2, zero).dim() == 0);
}

TEST_CASE("rref detects the dependent third row over GF(2)") {
  FieldSpec f2(2);
  Mat m = mat_from(3, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rref(f2, m).dim() == 2);
}

TEST_CASE("rref is idempotent") {
  FieldSpec f(5);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SparseVec> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(testing::random_vec(rng, f, 6));
    RowSpace rs = RowSpace::from_rows(f, 6, rows);
    RowSpace again = RowSpace::from_rows(f, 6, rs.basis());
    CHECK(rs == again);
  }
}

TEST_CASE("sum basics") {
  FieldSpec f5(5);
  RowSpace u = RowSpace::from_rows(f5, 3, {{{0, 1}}});
  RowSpace v = RowSpace::from_rows(f5, 3, {{{1, 1}}});
  RowSpace zero = RowSpace::from_rows(f5, 3, {});
  CHECK(sum(u, zero) == u);
  CHECK(sum(u, u) == u);
  CHECK(sum(u, v).dim() == 2);
  RowSpace other(f5, 4);
  CHECK_THROWS_AS(sum(u, RowSpace::from_rows(f5, 4, {})), std::invalid_argument);
}

TEST_CASE("intersection via dimension formula") {
  FieldSpec f3(3);
  RowSpace u = RowSpace::from_rows(f3, 2, {{{0, 1}}, {{1, 1}}});
  RowSpace w = RowSpace::from_rows(f3, 2, {{{0, 1}, {1, 1}}});
  CHECK(intersection_dim(u, u) == u.dim());
  CHECK(intersection_dim(u, w) == 1);
  RowSpace a = RowSpace::from_rows(f3, 4, {{{0, 1}}, {{1, 1}}});
  RowSpace b = RowSpace::from_rows(f3, 4, {{{2, 1}}, {{3, 1}}});
  CHECK(intersection_dim(a, b) == 0);
}

TEST_CASE("contains") {
  FieldSpec f2(2);
  RowSpace u = RowSpace::from_rows(f2, 2, {{{0, 1}}});
  CHECK(u.contains({}));
  CHECK_FALSE(u.contains({{0, 1}, {1, 1}}));
  RowSpace w = RowSpace::from_rows(f2, 3, {{{0, 1}, {2, 1}}, {{1, 1}, {2, 1}}});
  CHECK(w.contains({{0, 1}, {1, 1}}));  // sum of the two generators
}

TEST_CASE("rank-nullity for sums on random pairs") {
  FieldSpec f(7);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SparseVec> ru, rv;
    for (int i = 0; i < 3; ++i) ru.push_back(testing::random_vec(rng, f, 8));
    for (int i = 0; i < 3; ++i) rv.push_back(testing::random_vec(rng, f, 8));
    RowSpace u = RowSpace::from_rows(f, 8, ru);
    RowSpace v = RowSpace::from_rows(f, 8, rv);
    CHECK(sum(u, v).dim() + intersection_dim(u, v) == u.dim() + v.dim());
  }
}

TEST_CASE("contains agrees with exhaustive span enumeration over GF(2)") {
  FieldSpec f2(2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SparseVec> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_vec(rng, f2, 6));
    RowSpace u = RowSpace::from_rows(f2, 6, gens);
    SparseVec probe = testing::random_vec(rng, f2, 6);
    CHECK(u.contains(probe) == testing::span_contains_bruteforce(f2, 6, gens, probe));
  }
}

TEST_CASE("rref rejects out-of-range columns") {
  FieldSpec f2(2);
  CHECK_THROWS_AS(RowSpace::from_rows(f2, 2, {{{5, 1}}}), std::invalid_argument);
}

TEST_CASE("field spec rejects composites") {
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK(FieldSpec(2).p == 2);
  CHECK(FieldSpec(32003).p == 32003);
  FieldSpec f(32003);
  for (std::uint32_t a : {1u, 2u, 17u, 32002u}) CHECK(f.mul(a, f.inv(a)) == 1);
}
