#include "amen/measure.hpp"

#include <algorithm>
#include <set>

namespace amen {

DensityReport make_density_report(std::vector<std::uint32_t> ks, std::vector<Rat> values,
                                  const Rat& tolerance) {
  if (ks.size() != values.size() || ks.empty())
    throw std::invalid_argument("density report: empty or mismatched series");
  DensityReport rep;
  rep.ks = std::move(ks);
  rep.values = std::move(values);
  rep.tolerance = tolerance;
  std::size_t tail = (rep.values.size() + 2) / 3;
  rep.tail_min = rep.tail_max = rep.values[rep.values.size() - tail];
  for (std::size_t i = rep.values.size() - tail; i < rep.values.size(); ++i) {
    rep.tail_min = std::min(rep.tail_min, rep.values[i]);
    rep.tail_max = std::max(rep.tail_max, rep.values[i]);
  }
  rep.converged = (rep.tail_max - rep.tail_min) < tolerance;
  return rep;
}

namespace {

std::vector<std::pair<Word, SparseVec>> denoted_vectors(const AlgebraPresentation& pres,
                                                        const RegularSet& L,
                                                        const CoordinateWindow& window) {
  std::vector<std::pair<Word, SparseVec>> out;
  for (const auto& part : L.parts) {
    Element t = pres.normal_form(part.translator);
    for (const auto& w : part.words)
      out.emplace_back(w, window.coordinates(pres.multiply(elem_from_word(w), t)));
  }
  return out;
}

/// Word-index set of a subspace spanned by canonical basis words; throws
/// if any basis row is not a plain word.
std::set<std::uint32_t> monomial_support(const RowSpace& v) {
  std::set<std::uint32_t> cols;
  for (const auto& row : v.basis()) {
    if (row.size() != 1 || row.front().second != 1)
      throw std::invalid_argument("exhaustion subspace is not spanned by canonical basis words");
    cols.insert(row.front().first);
  }
  return cols;
}

}  // namespace

void validate_regular_set(const AlgebraPresentation& pres, const RegularSet& L,
                          const CoordinateWindow& window) {
  auto vecs = denoted_vectors(pres, L, window);
  std::vector<SparseVec> rows;
  for (auto& [w, v] : vecs) {
    if (v.empty())
      throw std::invalid_argument("regular set: translate of '" + pres.format_word(w) +
                                  "' vanishes");
    rows.push_back(v);
  }
  if (rank_of(pres.field(), window.size(), rows) != rows.size())
    throw std::invalid_argument("regular set: denoted vectors are not independent");
}

std::pair<std::vector<Rat>, std::vector<Rat>> fk_bk_densities(
    const AlgebraPresentation& pres, const Element& s, const ExhaustionSpec& exhaustion,
    const std::vector<std::uint32_t>& k_range, const CoordinateWindow& window) {
  Element sn = pres.normal_form(s);
  if (sn.is_zero()) throw std::invalid_argument("fk_bk_densities: s must be nonzero");
  std::vector<Rat> f_dens, b_dens;
  for (std::uint32_t k : k_range) {
    RowSpace vk = exhaustion.evaluate(pres, k, window);
    std::set<std::uint32_t> inside = monomial_support(vk);
    std::int64_t f_count = 0, b_count = 0;
    for (std::uint32_t i = 0; i < window.size(); ++i) {
      const Word& w = window.word_at(i);
      if (w.size() + sn.degree() > window.degree_bound()) continue;  // translate leaves window
      SparseVec ws = window.coordinates(pres.multiply(elem_from_word(w), sn));
      bool in_vk = inside.count(i) != 0;
      bool image_in = vk.contains(ws);
      if (in_vk && !image_in) ++f_count;
      if (!in_vk && image_in) ++b_count;
    }
    f_dens.emplace_back(f_count, vk.dim());
    b_dens.emplace_back(b_count, vk.dim());
  }
  return {std::move(f_dens), std::move(b_dens)};
}

Rat regular_density(const AlgebraPresentation& pres, const RegularSet& L, const RowSpace& v_k,
                    const CoordinateWindow& window) {
  if (v_k.dim() == 0) throw std::invalid_argument("regular_density: zero subspace");
  validate_regular_set(pres, L, window);
  std::int64_t hits = 0;
  for (const auto& [w, vec] : denoted_vectors(pres, L, window))
    if (v_k.contains(vec)) ++hits;
  return Rat(hits, v_k.dim());
}

DensityReport invariance_defect(const AlgebraPresentation& pres, const RegularSet& L,
                                const Element& r, const ExhaustionSpec& exhaustion,
                                const std::vector<std::uint32_t>& k_range,
                                const CoordinateWindow& window) {
  Element rn = pres.normal_form(r);
  if (rn.is_zero()) throw std::invalid_argument("invariance_defect: r must be nonzero");
  validate_regular_set(pres, L, window);
  auto vecs = denoted_vectors(pres, L, window);
  std::vector<SparseVec> lr_rows;
  for (const auto& [w, vec] : vecs) {
    Element e = window.element_at(vec, pres.field());
    // Denoted vectors whose r-translate leaves the window are dropped from
    // span(Lr), mirroring the documented B_k truncation.
    if (window.row_degree(vec) + rn.degree() > window.degree_bound()) continue;
    lr_rows.push_back(window.coordinates(pres.multiply(e, rn)));
  }
  RowSpace lr_span = RowSpace::from_rows(pres.field(), window.size(), lr_rows);
  std::vector<Rat> vals;
  for (std::uint32_t k : k_range) {
    RowSpace vk = exhaustion.evaluate(pres, k, window);
    std::int64_t count_l = 0;
    for (const auto& [w, vec] : vecs)
      if (vk.contains(vec)) ++count_l;
    std::int64_t dim_lr = intersection_dim(lr_span, vk);
    vals.push_back(Rat(dim_lr > count_l ? dim_lr - count_l : count_l - dim_lr, vk.dim()));
  }
  std::vector<std::uint32_t> ks(k_range.begin(), k_range.end());
  return make_density_report(std::move(ks), std::move(vals));
}

}  // namespace amen
