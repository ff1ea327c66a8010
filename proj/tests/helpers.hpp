#ifndef AMEN_TESTS_HELPERS_HPP
#define AMEN_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "amen/presentation.hpp"
#include "amen/window.hpp"

namespace amen::testing {

inline AlgebraPresentation load(const std::string& name) {
  return AlgebraPresentation::from_file(std::string(AMEN_SOURCE_DIR) + "/presentations/" + name +
                                        ".json");
}

inline std::string data_path(const std::string& rel) {
  return std::string(AMEN_SOURCE_DIR) + "/presentations/" + rel;
}

/// Brute-force span membership: enumerate all p^dim combinations.
/// Only usable for tiny spaces.
inline bool span_contains_bruteforce(const FieldSpec& f, std::uint32_t ambient,
                                     const std::vector<SparseVec>& gens, const SparseVec& target) {
  std::size_t n = gens.size();
  std::vector<std::uint32_t> coeffs(n, 0);
  while (true) {
    // accumulate dense
    std::vector<std::uint32_t> acc(ambient, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (auto& [col, v] : gens[i]) acc[col] = f.add(acc[col], f.mul(coeffs[i], v));
    std::vector<std::uint32_t> tgt(ambient, 0);
    for (auto& [col, v] : target) tgt[col] = v;
    if (acc == tgt) return true;
    std::size_t pos = 0;
    while (pos < n) {
      if (++coeffs[pos] < f.p) break;
      coeffs[pos] = 0;
      ++pos;
    }
    if (pos == n) return false;
  }
}

inline SparseVec random_vec(std::mt19937& rng, const FieldSpec& f, std::uint32_t ambient) {
  SparseVec v;
  for (std::uint32_t c = 0; c < ambient; ++c) {
    std::uint32_t val = static_cast<std::uint32_t>(rng() % f.p);
    if (rng() % 2 == 0) val = 0;  // sparsify
    if (val != 0) v.emplace_back(c, val);
  }
  return v;
}

}  // namespace amen::testing

#endif
