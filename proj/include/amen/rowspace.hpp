#ifndef AMEN_ROWSPACE_HPP
#define AMEN_ROWSPACE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "amen/field.hpp"

namespace amen {

/// Sparse vector over GF(p): (column, value) pairs, columns strictly
/// increasing, values nonzero.
using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// a + c*b
SparseVec sv_axpy(const FieldSpec& f, const SparseVec& a, const SparseVec& b, std::uint32_t c);
SparseVec sv_scale(const FieldSpec& f, const SparseVec& a, std::uint32_t c);

/// Sparse matrix over GF(p), stored by row.
struct Mat {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<SparseVec> entries;

  Mat() = default;
  Mat(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), entries(r) {}
  void set(std::uint32_t r, std::uint32_t c, std::uint32_t v);
  std::uint32_t get(std::uint32_t r, std::uint32_t c) const;
};

/// A finite dimensional subspace of the coordinate space GF(p)^ambient,
/// stored as a reduced row-echelon basis. Immutable once built.
class RowSpace {
 public:
  RowSpace(FieldSpec field, std::uint32_t ambient_dim)
      : field_(field), ambient_(ambient_dim) {}

  /// Builds the row space of the given rows (deterministic elimination,
  /// rows in order, first nonzero column as pivot).
  static RowSpace from_rows(const FieldSpec& f, std::uint32_t ambient,
                            const std::vector<SparseVec>& rows);

  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
  std::uint32_t ambient_dim() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// Residual of v after elimination against the basis; empty iff v lies
  /// in the subspace.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;
  bool contains_space(const RowSpace& other) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  /// Reduces `row` against the basis and, if independent, inserts it while
  /// restoring the RREF invariant. The result is the canonical RREF of the
  /// enlarged span, so insertion order never changes the final basis.
  void insert_row(const SparseVec& row);

  friend RowSpace sum(const RowSpace& u, const RowSpace& v);

  FieldSpec field_;
  std::uint32_t ambient_;
  std::vector<SparseVec> basis_;   // RREF rows, pivot columns strictly increasing
  std::vector<std::uint32_t> pivots_;
};

RowSpace rref(const FieldSpec& f, const Mat& m);
std::uint32_t rank_of(const FieldSpec& f, std::uint32_t ambient, const std::vector<SparseVec>& rows);

RowSpace sum(const RowSpace& u, const RowSpace& v);
std::uint32_t intersection_dim(const RowSpace& u, const RowSpace& v);

}  // namespace amen

#endif
