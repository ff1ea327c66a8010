#ifndef AMEN_PARADOX_HPP
#define AMEN_PARADOX_HPP

#include <variant>

#include "amen/rational.hpp"
#include "amen/transversal.hpp"
#include "amen/window.hpp"

namespace amen {

/// A truncated paradoxical decomposition: the canonical basis slice of
/// degree <= basis_degree, partitioned so that the right translates of each
/// part by its translator pair are jointly independent inside the window.
struct ParadoxPart {
  std::vector<Word> words;
  Element g;
  Element h;
};

struct ParadoxCertificate {
  std::uint32_t basis_degree = 0;
  std::uint32_t degree_bound = 0;  // window the independence was checked in
  std::vector<ParadoxPart> parts;
};

/// Same meaning as in transversal, phrased over basis words.
struct ParadoxDeficiency {
  std::vector<Word> words;
  std::uint32_t spanned_dim = 0;  // < 2 * words.size()
};

using ParadoxResult = std::variant<ParadoxCertificate, ParadoxDeficiency>;

/// Builds a truncated decomposition of the basis slice of degree <= d with
/// translator pairs drawn from S, or a deficiency witness.
ParadoxResult build_paradox(const AlgebraPresentation& pres, const std::vector<Element>& S,
                            std::uint32_t basis_degree, const CoordinateWindow& window);

/// Recomputes everything: partition of the full slice, nonzero translators,
/// rank of all 2|E| translated vectors.
bool verify_paradox(const AlgebraPresentation& pres, const ParadoxCertificate& c);

/// Finite-horizon density of the doubled set: (# translated basis vectors
/// lying in V) / dim(V).
Rat mass_doubling_check(const AlgebraPresentation& pres, const ParadoxCertificate& c,
                        const RowSpace& v, const CoordinateWindow& window);

}  // namespace amen

#endif
