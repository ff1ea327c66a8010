#ifndef AMEN_WORD_HPP
#define AMEN_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amen {

/// A word in the free monoid on the generators: a sequence of generator
/// indices. The empty word is the unit (admissible only in unital algebras).
using Word = std::vector<std::uint32_t>;

/// Degree-lexicographic order, generator order = listing order.
inline bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t g : w) {
      h ^= g + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// First position where `factor` occurs in `w` as a contiguous factor,
/// or npos. The empty factor matches at 0.
inline std::size_t find_factor(const Word& w, const Word& factor) {
  if (factor.size() > w.size()) return static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < factor.size(); ++j)
      if (w[i + j] != factor[j]) { hit = false; break; }
    if (hit) return i;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace amen

#endif
