#ifndef AMEN_MODRANK_HPP
#define AMEN_MODRANK_HPP

#include <optional>
#include <vector>

#include "amen/exhaustion.hpp"
#include "amen/measure.hpp"
#include "amen/rational.hpp"

namespace amen {

/// A finitely generated left module presented inside the free module R^t:
/// generators are length-t vectors of Elements. With sub_generators set,
/// the object denotes the quotient by the submodule they generate.
struct ModulePresentation {
  std::uint32_t ambient_rank = 1;
  std::vector<std::vector<Element>> generators;
  std::optional<std::vector<std::vector<Element>>> sub_generators;

  static ModulePresentation from_json_text(const AlgebraPresentation& pres,
                                           const std::string& text);
  static ModulePresentation from_file(const AlgebraPresentation& pres, const std::string& path);
};

/// Per-level exact ratios dim(sum W_n x_i)/dim(W_n) with the shared
/// liminf/limsup interval policy.
using RankReport = DensityReport;

/// Coordinate space of R^t over a window: component c occupies columns
/// [c*N, (c+1)*N).
class ModuleWindow {
 public:
  ModuleWindow(const CoordinateWindow& window, std::uint32_t ambient_rank)
      : window_(window), rank_(ambient_rank) {}

  const CoordinateWindow& scalar_window() const { return window_; }
  std::uint32_t ambient_rank() const { return rank_; }
  std::uint32_t size() const { return window_.size() * rank_; }

  SparseVec coordinates(const AlgebraPresentation& pres,
                        const std::vector<Element>& vec) const;
  std::uint32_t vector_degree(const AlgebraPresentation& pres,
                              const std::vector<Element>& vec) const;

  /// w * vec for a scalar element w, componentwise.
  SparseVec translate(const AlgebraPresentation& pres, const Element& w,
                      const std::vector<Element>& vec) const;

 private:
  const CoordinateWindow& window_;
  std::uint32_t rank_;
};

/// Degree-D truncation of the module spanned by the given generators:
/// span{w x_i : w normal word, deg(w) <= D - deg(x_i)}.
RowSpace module_truncation(const AlgebraPresentation& pres, const ModuleWindow& mw,
                           const std::vector<std::vector<Element>>& generators);

/// sum_i W_n x_i as a row space over the module window.
RowSpace translated_generators(const AlgebraPresentation& pres, const ModuleWindow& mw,
                               const RowSpace& w_n, const CoordinateWindow& window,
                               const std::vector<std::vector<Element>>& generators);

RankReport rank(const AlgebraPresentation& pres, const ModulePresentation& m,
                const ExhaustionSpec& exhaustion, const std::vector<std::uint32_t>& n_range,
                const CoordinateWindow& window);

/// rank_X(M) = dim(M_D inter sum W_n x_i)/dim(W_n) for X generating N with
/// M a submodule of N.
RankReport relative_rank(const AlgebraPresentation& pres, const ModulePresentation& n_mod,
                         const ModulePresentation& m_sub,
                         const std::vector<std::vector<Element>>& x_gens,
                         const ExhaustionSpec& exhaustion,
                         const std::vector<std::uint32_t>& n_range,
                         const CoordinateWindow& window);

struct ExactSequenceReport {
  std::vector<std::uint32_t> ns;
  std::vector<std::int64_t> residuals;  // must all be 0
  RankReport rank_n;
  RankReport rank_quotient;
  RankReport relative_rank_m;
};

/// Per-level identity dim(sum W_n x_i) = dim(sum W_n [x_i]) + dim(M inter
/// sum W_n x_i) for the short exact sequence 0 -> M -> N -> N/M -> 0.
ExactSequenceReport exact_sequence_check(const AlgebraPresentation& pres,
                                         const ModulePresentation& n_mod,
                                         const ModulePresentation& m_sub,
                                         const std::vector<std::vector<Element>>& x_gens,
                                         const ExhaustionSpec& exhaustion,
                                         const std::vector<std::uint32_t>& n_range,
                                         const CoordinateWindow& window);

struct DirectSumReport {
  std::vector<std::uint32_t> ns;
  std::vector<std::int64_t> residuals;
  RankReport rank_sum;
};

/// Embeds M + N in R^{t+t'} and checks per-level additivity of the ratios.
DirectSumReport direct_sum_check(const AlgebraPresentation& pres, const ModulePresentation& m,
                                 const ModulePresentation& n, const ExhaustionSpec& exhaustion,
                                 const std::vector<std::uint32_t>& n_range,
                                 const CoordinateWindow& window);

}  // namespace amen

#endif
