#ifndef AMEN_FOLNER_HPP
#define AMEN_FOLNER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amen/exhaustion.hpp"
#include "amen/rational.hpp"

namespace amen {

/// A finite Folner-style witness: a subspace whose growth ratio under every
/// test-set translation stays within 1 + epsilon. All ratios exact.
struct FolnerCertificate {
  std::uint32_t level = 0;        // exhaustion index at which the subspace was found
  std::uint32_t degree_bound = 0; // window the certificate was computed in
  Rat epsilon;
  std::vector<Element> subspace_basis;
  std::vector<Element> test_set;
  std::vector<Rat> ratios;        // dim(W r + W)/dim(W) per test element
};

/// dim(W r + W) / dim(W), exact. W must be nonzero.
Rat folner_ratio(const RowSpace& w, const Element& r, const AlgebraPresentation& pres,
                 const CoordinateWindow& window);

/// Walks the exhaustion n = 1..n_max and returns the first level whose
/// worst ratio is <= 1 + epsilon. Absence is inconclusive, never a
/// non-amenability proof.
std::optional<FolnerCertificate> folner_search(const AlgebraPresentation& pres,
                                               const std::vector<Element>& S, const Rat& epsilon,
                                               const ExhaustionSpec& exhaustion,
                                               std::uint32_t n_max, const CoordinateWindow& window);

/// Exploratory alternative: grow a monomial set from ball(1), adding at each
/// step the normal word that minimizes the worst ratio (deglex tie-break).
std::optional<FolnerCertificate> folner_search_greedy(const AlgebraPresentation& pres,
                                                      const std::vector<Element>& S,
                                                      const Rat& epsilon, std::uint32_t max_steps,
                                                      const CoordinateWindow& window);

/// Recomputes every ratio from scratch; the verdict follows the
/// recomputation, not the stored values.
bool verify_certificate(const AlgebraPresentation& pres, const FolnerCertificate& c);

struct DoublingReport {
  // per subspace V: (dim(VZ+V)/dim V, dim(VZ)/dim V)
  std::vector<std::pair<Rat, Rat>> ratios;
  Rat min_vz_ratio;  // evidence for the Doubling Lemma's universal claim
};

DoublingReport doubling_probe(const AlgebraPresentation& pres, const std::vector<Element>& Z,
                              const std::vector<RowSpace>& family, const CoordinateWindow& window);

struct NestedLevel {
  std::vector<Element> vbar_basis;
  std::vector<Element> v_basis;
  std::uint32_t vbar_dim = 0;
  std::uint32_t v_dim = 0;
  Rat dim_ratio;              // dim(Vbar_n)/dim(V_n)
  bool containment_ok = false;  // Vbar_n + Vbar_n Z_n inside V_n, rechecked
};

struct NestedExhaustion {
  std::vector<NestedLevel> levels;
  std::optional<std::uint32_t> failed_at;  // level whose threshold search was exhausted
  std::string failure_reason;
};

/// Greedy construction of the interleaved pairs Vbar_n inside V_n with
/// level-n threshold 1 + 2^-n. A level that cannot be met within the window
/// is reported, not fatal.
NestedExhaustion nested_exhaustion(const AlgebraPresentation& pres, const ExhaustionSpec& base,
                                   const std::vector<std::vector<Element>>& z_schedule,
                                   std::uint32_t n_max, const CoordinateWindow& window);

/// First exhaustion level where W_n a and W_n b intersect nontrivially,
/// with the intersection dimension.
std::optional<std::pair<std::uint32_t, std::uint32_t>> goldie_witness(
    const AlgebraPresentation& pres, const Element& a, const Element& b,
    const ExhaustionSpec& exhaustion, std::uint32_t n_max, const CoordinateWindow& window);

}  // namespace amen

#endif
