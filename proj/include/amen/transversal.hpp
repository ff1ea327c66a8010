#ifndef AMEN_TRANSVERSAL_HPP
#define AMEN_TRANSVERSAL_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "amen/rowspace.hpp"

namespace amen {

/// Slot i carries the candidate vectors T_1(e_i),...,T_k(e_i) in a common
/// ambient space; k may vary per slot.
struct TransversalInstance {
  FieldSpec field;
  std::uint32_t ambient = 0;
  std::vector<std::vector<SparseVec>> candidates;

  std::uint32_t slots() const { return static_cast<std::uint32_t>(candidates.size()); }
};

/// phi: slot -> candidate index; the selected vectors are independent.
struct Transversal {
  std::vector<std::uint32_t> phi;
};

struct DoubleTransversal {
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> psi;  // phi(i) != psi(i), all 2m vectors jointly independent
};

/// A Hall violation: the candidates of `slots` span only `spanned_dim`
/// dimensions, below the required copies * |slots|.
struct DeficiencyWitness {
  std::vector<std::uint32_t> slots;
  std::uint32_t spanned_dim = 0;
};

using HallResult = std::variant<Transversal, DeficiencyWitness>;
using DoubleResult = std::variant<DoubleTransversal, DeficiencyWitness>;

/// One independent representative per slot, or a deficient slot subset.
/// Deterministic: slots ascending, candidates ascending, BFS exchanges.
HallResult hall_transversal(const TransversalInstance& inst);

/// Two representatives per slot, jointly independent, or a slot subset
/// whose candidates span fewer than 2*|subset| dimensions. Extends the
/// single transversal by a second augmenting round over the quotient.
DoubleResult double_transversal(const TransversalInstance& inst);

}  // namespace amen

#endif
