#ifndef AMEN_MEASURE_HPP
#define AMEN_MEASURE_HPP

#include <vector>

#include "amen/exhaustion.hpp"
#include "amen/rational.hpp"

namespace amen {

/// A regular set: a finite disjoint union of A_i r_i with A_i sets of
/// canonical basis words and r_i nonzero translators. The denoted vectors
/// must be distinct and independent within the working window.
struct RegularSet {
  struct Part {
    std::vector<Word> words;
    Element translator;
  };
  std::vector<Part> parts;
};

/// k-indexed exact densities with a finite stand-in for the ultrafilter
/// limit: min/max over the tail (last third) of the computed range.
struct DensityReport {
  std::vector<std::uint32_t> ks;
  std::vector<Rat> values;
  Rat tail_min;  // liminf proxy
  Rat tail_max;  // limsup proxy
  bool converged = false;  // tail spread below tolerance
  Rat tolerance = Rat(1, 100);
};

DensityReport make_density_report(std::vector<std::uint32_t> ks, std::vector<Rat> values,
                                  const Rat& tolerance = Rat(1, 100));

/// Checks the RegularSet invariant inside the window; throws on violation.
void validate_regular_set(const AlgebraPresentation& pres, const RegularSet& L,
                          const CoordinateWindow& window);

/// Densities of the leaving set F_k(s) = {e in V_k : e s not in V_k} and
/// the entering set B_k(s) = {e not in V_k : e s in V_k}, both over
/// dim(V_k). B_k ranges over window words whose s-translate stays inside
/// the window (documented truncation). The exhaustion must be spanned by
/// canonical basis words.
std::pair<std::vector<Rat>, std::vector<Rat>> fk_bk_densities(
    const AlgebraPresentation& pres, const Element& s, const ExhaustionSpec& exhaustion,
    const std::vector<std::uint32_t>& k_range, const CoordinateWindow& window);

/// (# denoted vectors of L lying in V_k) / dim(V_k), exact.
Rat regular_density(const AlgebraPresentation& pres, const RegularSet& L, const RowSpace& v_k,
                    const CoordinateWindow& window);

/// |dim(span(L r) inter V_k) - |L inter V_k|| / dim(V_k) per k.
DensityReport invariance_defect(const AlgebraPresentation& pres, const RegularSet& L,
                                const Element& r, const ExhaustionSpec& exhaustion,
                                const std::vector<std::uint32_t>& k_range,
                                const CoordinateWindow& window);

}  // namespace amen

#endif
