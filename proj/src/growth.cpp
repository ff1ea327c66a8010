#include "amen/growth.hpp"

namespace amen {

RowSpace ball(const AlgebraPresentation& pres, const std::vector<Element>& S, std::uint32_t m,
              const CoordinateWindow& window) {
  std::vector<Element> seed;
  if (pres.unital()) seed.push_back(elem_from_word({}));
  RowSpace acc = span_of_elements(pres, window, seed);
  RowSpace level = span_of_elements(pres, window, S);  // K S^1
  for (std::uint32_t j = 1; j <= m; ++j) {
    if (j > 1) {
      // K S^j = sum over s of (K S^{j-1}) s
      RowSpace next(pres.field(), window.size());
      for (const auto& s : S)
        next = sum(next, right_multiply_subspace(level, s, pres, window));
      level = std::move(next);
    }
    acc = sum(acc, level);
    if (level.dim() == 0) break;  // nilpotent tail, higher powers vanish
  }
  return acc;
}

GrowthSeries growth_sequence(const AlgebraPresentation& pres, const std::vector<Element>& S,
                             std::uint32_t m_max, const CoordinateWindow& window) {
  GrowthSeries g;
  g.generating_set = S;
  for (std::uint32_t m = 0; m <= m_max; ++m)
    g.d.push_back(ball(pres, S, m, window).dim());
  return g;
}

std::optional<std::uint32_t> subexp_probe(const GrowthSeries& g, const Rat& epsilon,
                                          std::uint32_t gap) {
  if (epsilon <= Rat(0) || gap < 1) throw std::invalid_argument("subexp_probe: need epsilon > 0, gap >= 1");
  for (std::uint32_t m = 1; m + gap < g.d.size(); ++m) {
    Rat lhs(static_cast<std::int64_t>(g.d[m + gap]));
    Rat rhs = Rat(static_cast<std::int64_t>(g.d[m])) * (Rat(1) + epsilon);
    if (lhs <= rhs) return m;
  }
  return std::nullopt;
}

}  // namespace amen
