#include "amen/window.hpp"

#include <algorithm>
#include <set>

namespace amen {

CoordinateWindow::CoordinateWindow(std::uint32_t degree_bound, std::vector<Word> words)
    : degree_bound_(degree_bound), words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i) {
    if (i > 0 && !deglex_less(words_[i - 1], words_[i]))
      throw std::invalid_argument("window words not strictly deglex-ordered");
    index_.emplace(words_[i], i);
  }
}

std::optional<std::uint32_t> CoordinateWindow::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec CoordinateWindow::coordinates(const Element& e) const {
  SparseVec v;
  v.reserve(e.terms.size());
  for (const auto& [w, c] : e.terms) {
    auto idx = index_of(w);
    if (!idx)
      throw TruncationOverflow("element word of degree " + std::to_string(w.size()) +
                               " outside window (bound " + std::to_string(degree_bound_) + ")");
    v.emplace_back(*idx, c);  // deglex term order = ascending column order
  }
  return v;
}

Element CoordinateWindow::element_at(const SparseVec& row, const FieldSpec& f) const {
  Element e;
  for (const auto& [col, c] : row) e.add_term(f, word_at(col), c);
  return e;
}

std::uint32_t CoordinateWindow::row_degree(const SparseVec& row) const {
  std::uint32_t d = 0;
  for (const auto& [col, c] : row)
    d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(word_at(col).size()));
  return d;
}

std::uint32_t CoordinateWindow::space_degree(const RowSpace& w) const {
  std::uint32_t d = 0;
  for (const auto& row : w.basis()) d = std::max(d, row_degree(row));
  return d;
}

namespace {

Element apply_rule_at(const AlgebraPresentation& pres, const Word& w, const RewriteRule& rule,
                      std::size_t pos) {
  Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
  Element out;
  for (const auto& [rw, rc] : rule.rhs.terms)
    out.add_term(pres.field(), concat(concat(prefix, rw), suffix), rc);
  return pres.normal_form(out);
}

}  // namespace

std::vector<Word> confluence_check(const AlgebraPresentation& pres, std::uint32_t degree_bound) {
  const auto& rules = pres.rules();
  std::set<Word, DeglexLess> bad;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // place lj starting at offset s inside/after li; s=0 with i==j is trivial
      for (std::size_t s = 0; s < li.size(); ++s) {
        if (i == j && s == 0) continue;
        std::size_t olap_end = std::min(li.size(), s + lj.size());
        if (olap_end <= s) break;
        bool agree = true;
        for (std::size_t k = s; k < olap_end; ++k)
          if (li[k] != lj[k - s]) { agree = false; break; }
        if (!agree) continue;
        Word w = li;
        for (std::size_t k = li.size() - s; k < lj.size(); ++k) w.push_back(lj[k]);
        if (w.size() > degree_bound) continue;
        Element via_i = apply_rule_at(pres, w, rules[i], 0);
        Element via_j = apply_rule_at(pres, w, rules[j], s);
        if (via_i != via_j) bad.insert(w);
      }
    }
  }
  return {bad.begin(), bad.end()};
}

CoordinateWindow enumerate_basis(const AlgebraPresentation& pres, std::uint32_t degree_bound) {
  std::uint32_t max_rule_deg = 0;
  for (const auto& r : pres.rules())
    max_rule_deg = std::max<std::uint32_t>(max_rule_deg, static_cast<std::uint32_t>(r.lhs.size()));
  auto bad = confluence_check(pres, 2 * max_rule_deg);
  if (!bad.empty())
    throw std::invalid_argument("presentation is not confluent; first unresolved overlap: " +
                                pres.format_word(bad.front()));

  std::vector<Word> words;
  std::vector<Word> level;
  if (pres.unital()) {
    words.push_back({});
    level.push_back({});
  } else {
    // degree-1 level seeded below
  }
  std::uint32_t ngens = static_cast<std::uint32_t>(pres.generators().size());
  auto is_normal_tail = [&](const Word& w) {
    // w = normal word + one letter: an lhs occurrence must be a suffix
    for (const auto& r : pres.rules()) {
      if (r.lhs.size() > w.size()) continue;
      bool hit = true;
      std::size_t off = w.size() - r.lhs.size();
      for (std::size_t k = 0; k < r.lhs.size(); ++k)
        if (w[off + k] != r.lhs[k]) { hit = false; break; }
      if (hit) return false;
    }
    return true;
  };
  if (!pres.unital()) {
    for (std::uint32_t g = 0; g < ngens; ++g) {
      Word w{g};
      if (is_normal_tail(w)) level.push_back(w);
    }
    words.insert(words.end(), level.begin(), level.end());
    if (degree_bound == 0)
      return CoordinateWindow(0, {});
  }
  std::uint32_t start_deg = pres.unital() ? 0 : 1;
  for (std::uint32_t d = start_deg; d < degree_bound; ++d) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (std::uint32_t g = 0; g < ngens; ++g) {
        Word wn = w;
        wn.push_back(g);
        if (is_normal_tail(wn)) next.push_back(wn);
      }
    }
    std::sort(next.begin(), next.end(), DeglexLess{});
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return CoordinateWindow(degree_bound, std::move(words));
}

RowSpace span_of_elements(const AlgebraPresentation& pres, const CoordinateWindow& window,
                          const std::vector<Element>& elems) {
  std::vector<SparseVec> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(window.coordinates(pres.normal_form(e)));
  return RowSpace::from_rows(pres.field(), window.size(), rows);
}

RowSpace right_multiply_subspace(const RowSpace& w, const Element& r,
                                 const AlgebraPresentation& pres, const CoordinateWindow& window) {
  Element rn = pres.normal_form(r);
  std::uint32_t need = window.space_degree(w) + rn.degree();
  if (need > window.degree_bound())
    throw TruncationOverflow("right multiplication needs degree " + std::to_string(need) +
                             " > window bound " + std::to_string(window.degree_bound()));
  std::vector<SparseVec> rows;
  rows.reserve(w.dim());
  for (const auto& row : w.basis()) {
    Element e = window.element_at(row, pres.field());
    rows.push_back(window.coordinates(pres.multiply(e, rn)));
  }
  return RowSpace::from_rows(pres.field(), window.size(), rows);
}

RowSpace subspace_product(const RowSpace& a, const RowSpace& b,
                          const AlgebraPresentation& pres, const CoordinateWindow& window) {
  std::uint32_t need = window.space_degree(a) + window.space_degree(b);
  if (need > window.degree_bound())
    throw TruncationOverflow("subspace product needs degree " + std::to_string(need) +
                             " > window bound " + std::to_string(window.degree_bound()));
  std::vector<SparseVec> rows;
  rows.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
  for (const auto& ra : a.basis()) {
    Element ea = window.element_at(ra, pres.field());
    for (const auto& rb : b.basis()) {
      Element eb = window.element_at(rb, pres.field());
      rows.push_back(window.coordinates(pres.multiply(ea, eb)));
    }
  }
  return RowSpace::from_rows(pres.field(), window.size(), rows);
}

std::optional<std::pair<Element, Element>> find_zero_divisors(const AlgebraPresentation& pres,
                                                              std::uint32_t degree_bound) {
  CoordinateWindow win = enumerate_basis(pres, degree_bound);
  for (const auto& wa : win.words()) {
    if (wa.empty()) continue;  // the unit is never a zero divisor
    for (const auto& wb : win.words()) {
      if (wb.empty()) continue;
      Element a = elem_from_word(wa);
      Element b = elem_from_word(wb);
      if (pres.multiply(a, b).is_zero()) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace amen
