#include "amen/paradox.hpp"

#include <algorithm>
#include <map>

namespace amen {

namespace {

std::vector<Word> basis_slice(const CoordinateWindow& window, std::uint32_t degree) {
  std::vector<Word> words;
  for (const auto& w : window.words())
    if (w.size() <= degree) words.push_back(w);
  return words;
}

}  // namespace

ParadoxResult build_paradox(const AlgebraPresentation& pres, const std::vector<Element>& S,
                            std::uint32_t basis_degree, const CoordinateWindow& window) {
  std::vector<Element> translators;
  std::uint32_t deg_s = 0;
  for (const auto& s : S) {
    Element sn = pres.normal_form(s);
    if (sn.is_zero()) throw std::invalid_argument("build_paradox: zero translator");
    deg_s = std::max(deg_s, sn.degree());
    translators.push_back(std::move(sn));
  }
  if (translators.empty()) throw std::invalid_argument("build_paradox: empty translator set");
  if (basis_degree + deg_s > window.degree_bound())
    throw TruncationOverflow("paradox at basis degree " + std::to_string(basis_degree) +
                             " needs window degree " + std::to_string(basis_degree + deg_s));

  std::vector<Word> slice = basis_slice(window, basis_degree);
  TransversalInstance inst{pres.field(), window.size(), {}};
  inst.candidates.reserve(slice.size());
  for (const auto& w : slice) {
    std::vector<SparseVec> cands;
    for (const auto& t : translators)
      cands.push_back(window.coordinates(pres.multiply(elem_from_word(w), t)));
    inst.candidates.push_back(std::move(cands));
  }

  DoubleResult res = double_transversal(inst);
  if (auto* wit = std::get_if<DeficiencyWitness>(&res)) {
    ParadoxDeficiency d;
    for (std::uint32_t s : wit->slots) d.words.push_back(slice[s]);
    d.spanned_dim = wit->spanned_dim;
    return d;
  }
  const auto& dt = std::get<DoubleTransversal>(res);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Word>> grouped;
  for (std::uint32_t i = 0; i < slice.size(); ++i) {
    auto key = std::minmax(dt.phi[i], dt.psi[i]);
    grouped[{key.first, key.second}].push_back(slice[i]);
  }
  ParadoxCertificate cert;
  cert.basis_degree = basis_degree;
  cert.degree_bound = window.degree_bound();
  for (auto& [key, words] : grouped)
    cert.parts.push_back({std::move(words), translators[key.first], translators[key.second]});
  return cert;
}

bool verify_paradox(const AlgebraPresentation& pres, const ParadoxCertificate& c) {
  CoordinateWindow window = enumerate_basis(pres, c.degree_bound);
  std::vector<Word> slice = basis_slice(window, c.basis_degree);

  // parts must partition the slice exactly
  std::vector<Word> covered;
  for (const auto& part : c.parts) {
    if (pres.normal_form(part.g).is_zero() || pres.normal_form(part.h).is_zero()) return false;
    for (const auto& w : part.words) covered.push_back(w);
  }
  if (covered.size() != slice.size()) return false;
  std::sort(covered.begin(), covered.end(), DeglexLess{});
  if (covered != slice) return false;  // duplicates or strays

  std::vector<SparseVec> rows;
  try {
    for (const auto& part : c.parts) {
      for (const auto& w : part.words) {
        rows.push_back(window.coordinates(pres.multiply(elem_from_word(w), part.g)));
        rows.push_back(window.coordinates(pres.multiply(elem_from_word(w), part.h)));
      }
    }
  } catch (const TruncationOverflow&) {
    throw;  // cannot decide inside this window
  }
  return rank_of(pres.field(), window.size(), rows) == 2 * slice.size();
}

Rat mass_doubling_check(const AlgebraPresentation& pres, const ParadoxCertificate& c,
                        const RowSpace& v, const CoordinateWindow& window) {
  if (v.dim() == 0) throw std::invalid_argument("mass_doubling_check: zero subspace");
  std::int64_t hits = 0;
  for (const auto& part : c.parts) {
    for (const auto& w : part.words) {
      for (const Element* t : {&part.g, &part.h}) {
        SparseVec vec = window.coordinates(pres.multiply(elem_from_word(w), *t));
        if (!vec.empty() && v.contains(vec)) ++hits;
      }
    }
  }
  return Rat(hits, v.dim());
}

}  // namespace amen
