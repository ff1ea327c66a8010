#ifndef AMEN_WINDOW_HPP
#define AMEN_WINDOW_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amen/presentation.hpp"
#include "amen/rowspace.hpp"

namespace amen {

/// Raised whenever a computation would need coordinates beyond the working
/// degree window. Never silently truncate.
class TruncationOverflow : public std::runtime_error {
 public:
  explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// The coordinate space of all normal words of degree <= degree_bound,
/// enumerated in deglex order. Column i of every Mat/RowSpace refers to
/// words[i].
class CoordinateWindow {
 public:
  CoordinateWindow(std::uint32_t degree_bound, std::vector<Word> words);

  std::uint32_t degree_bound() const { return degree_bound_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word_at(std::uint32_t i) const { return words_.at(i); }
  std::optional<std::uint32_t> index_of(const Word& w) const;

  /// Coordinates of a canonical element; throws TruncationOverflow if any
  /// word falls outside the window.
  SparseVec coordinates(const Element& e) const;
  Element element_at(const SparseVec& row, const FieldSpec& f) const;

  /// Largest word degree appearing with a nonzero coordinate.
  std::uint32_t row_degree(const SparseVec& row) const;
  std::uint32_t space_degree(const RowSpace& w) const;

 private:
  std::uint32_t degree_bound_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::uint32_t, WordHash> index_;
};

/// Unresolved overlap ambiguities among rule lhs's of combined degree <= D.
/// Empty result = locally confluent at that scale.
std::vector<Word> confluence_check(const AlgebraPresentation& pres, std::uint32_t degree_bound);

/// Deglex-ordered canonical basis of normal words of degree <= D. Refuses
/// non-confluent presentations (checked on all overlaps; their combined
/// degree never exceeds twice the max rule degree).
CoordinateWindow enumerate_basis(const AlgebraPresentation& pres, std::uint32_t degree_bound);

/// Row space spanned by the given canonical elements.
RowSpace span_of_elements(const AlgebraPresentation& pres, const CoordinateWindow& window,
                          const std::vector<Element>& elems);

/// {v*r : v in w}; precondition deg(w) + deg(r) <= window bound.
RowSpace right_multiply_subspace(const RowSpace& w, const Element& r,
                                 const AlgebraPresentation& pres, const CoordinateWindow& window);

/// span{u*v : u in a, v in b}; checked against the window bound.
RowSpace subspace_product(const RowSpace& a, const RowSpace& b,
                          const AlgebraPresentation& pres, const CoordinateWindow& window);

/// Searches normal words of degree <= bound for a pair with zero product.
/// Absence of a witness at this scale proves nothing.
std::optional<std::pair<Element, Element>> find_zero_divisors(const AlgebraPresentation& pres,
                                                              std::uint32_t degree_bound);

}  // namespace amen

#endif
