#ifndef AMEN_GROWTH_HPP
#define AMEN_GROWTH_HPP

#include <optional>
#include <vector>

#include "amen/rational.hpp"
#include "amen/window.hpp"

namespace amen {

/// Exact ball dimensions d[m] = dim of the m-ball for a generator set S.
struct GrowthSeries {
  std::vector<Element> generating_set;
  std::vector<std::uint64_t> d;  // d[m] for m = 0..m_max; d[0] = dim of the 0-ball
};

/// Span of all products of <= m factors from S, plus the unit when the
/// presentation is unital (the j=0 term; see README on the offset).
RowSpace ball(const AlgebraPresentation& pres, const std::vector<Element>& S, std::uint32_t m,
              const CoordinateWindow& window);

GrowthSeries growth_sequence(const AlgebraPresentation& pres, const std::vector<Element>& S,
                             std::uint32_t m_max, const CoordinateWindow& window);

/// Smallest m with d[m+t] <= d[m]*(1+epsilon), if any within the series.
/// Exact rational comparison; absence only means "inconclusive".
std::optional<std::uint32_t> subexp_probe(const GrowthSeries& g, const Rat& epsilon,
                                          std::uint32_t gap);

}  // namespace amen

#endif
