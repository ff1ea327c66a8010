#ifndef AMEN_EXHAUSTION_HPP
#define AMEN_EXHAUSTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "amen/growth.hpp"
#include "amen/window.hpp"

namespace amen {

/// Polynomial in n with nonnegative integer coefficients, e.g. "n^2",
/// "2*n+1". Grammar: sum of products of factors; factor = integer | n | n^k.
struct PolyExpr {
  // (coefficient, exponent) pairs
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;

  static PolyExpr parse(const std::string& text);
  std::uint64_t eval(std::uint64_t n) const;
  bool depends_on_n() const;
  std::string str() const;
};

struct PatternFactor {
  std::uint32_t generator;
  PolyExpr bound;
};

/// g1^e1 g2^e2 ... with 0 <= e_i <= bound_i(n) for n-dependent bounds and
/// e_i = bound_i exactly for constant bounds.
using MonomialPattern = std::vector<PatternFactor>;

/// A parametric family n -> W_n: either balls of a generator set or unions
/// of monomial patterns.
class ExhaustionSpec {
 public:
  enum class Kind { Ball, Patterns };

  static ExhaustionSpec make_ball(std::vector<Element> S);
  static ExhaustionSpec make_patterns(std::vector<MonomialPattern> patterns);
  static ExhaustionSpec patterns_from_json_text(const AlgebraPresentation& pres,
                                                const std::string& text);
  static ExhaustionSpec patterns_from_file(const AlgebraPresentation& pres,
                                           const std::string& path);

  Kind kind() const { return kind_; }
  const std::vector<Element>& ball_set() const { return ball_set_; }
  const std::vector<MonomialPattern>& patterns() const { return patterns_; }

  /// W_n as a row space over the window. Throws TruncationOverflow when the
  /// pattern or ball degree exceeds the window bound.
  RowSpace evaluate(const AlgebraPresentation& pres, std::uint32_t n,
                    const CoordinateWindow& window) const;

  /// Degree sufficient to coordinatize W_n (before rewriting).
  std::uint32_t required_degree(const AlgebraPresentation& pres, std::uint32_t n) const;

 private:
  Kind kind_ = Kind::Ball;
  std::vector<Element> ball_set_;
  std::vector<MonomialPattern> patterns_;
};

}  // namespace amen

#endif
