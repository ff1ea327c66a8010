#include "amen/modrank.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace amen {

namespace {

std::vector<std::vector<Element>> parse_generators(const AlgebraPresentation& pres,
                                                   const nlohmann::json& j,
                                                   std::uint32_t ambient) {
  std::vector<std::vector<Element>> gens;
  for (const auto& jg : j) {
    std::vector<Element> vec;
    for (const auto& js : jg) vec.push_back(pres.parse_element(js.get<std::string>()));
    if (vec.size() != ambient)
      throw std::invalid_argument("module generator length != ambient rank");
    bool all_zero = true;
    for (const auto& e : vec)
      if (!e.is_zero()) all_zero = false;
    if (all_zero) throw std::invalid_argument("module generator is the zero vector");
    gens.push_back(std::move(vec));
  }
  return gens;
}

}  // namespace

ModulePresentation ModulePresentation::from_json_text(const AlgebraPresentation& pres,
                                                      const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ModulePresentation m;
  m.ambient_rank = j.at("ambient").get<std::uint32_t>();
  if (m.ambient_rank == 0) throw std::invalid_argument("ambient rank must be >= 1");
  m.generators = parse_generators(pres, j.at("generators"), m.ambient_rank);
  if (j.contains("sub_generators"))
    m.sub_generators = parse_generators(pres, j.at("sub_generators"), m.ambient_rank);
  return m;
}

ModulePresentation ModulePresentation::from_file(const AlgebraPresentation& pres,
                                                 const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open module file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(pres, ss.str());
}

SparseVec ModuleWindow::coordinates(const AlgebraPresentation& pres,
                                    const std::vector<Element>& vec) const {
  if (vec.size() != rank_) throw std::invalid_argument("module vector length != ambient rank");
  SparseVec out;
  for (std::uint32_t c = 0; c < rank_; ++c) {
    SparseVec comp = window_.coordinates(pres.normal_form(vec[c]));
    for (auto& [col, v] : comp) out.emplace_back(c * window_.size() + col, v);
  }
  return out;
}

std::uint32_t ModuleWindow::vector_degree(const AlgebraPresentation& pres,
                                          const std::vector<Element>& vec) const {
  std::uint32_t d = 0;
  for (const auto& e : vec) d = std::max(d, pres.normal_form(e).degree());
  return d;
}

SparseVec ModuleWindow::translate(const AlgebraPresentation& pres, const Element& w,
                                  const std::vector<Element>& vec) const {
  std::vector<Element> out;
  out.reserve(vec.size());
  for (const auto& comp : vec) out.push_back(pres.multiply(w, comp));
  return coordinates(pres, out);
}

RowSpace module_truncation(const AlgebraPresentation& pres, const ModuleWindow& mw,
                           const std::vector<std::vector<Element>>& generators) {
  const CoordinateWindow& win = mw.scalar_window();
  std::vector<SparseVec> rows;
  for (const auto& x : generators) {
    std::uint32_t dx = mw.vector_degree(pres, x);
    for (const auto& w : win.words()) {
      if (w.size() + dx > win.degree_bound()) continue;
      rows.push_back(mw.translate(pres, elem_from_word(w), x));
    }
  }
  return RowSpace::from_rows(pres.field(), mw.size(), rows);
}

RowSpace translated_generators(const AlgebraPresentation& pres, const ModuleWindow& mw,
                               const RowSpace& w_n, const CoordinateWindow& window,
                               const std::vector<std::vector<Element>>& generators) {
  std::uint32_t wdeg = window.space_degree(w_n);
  std::vector<SparseVec> rows;
  for (const auto& x : generators) {
    std::uint32_t dx = mw.vector_degree(pres, x);
    if (wdeg + dx > window.degree_bound())
      throw TruncationOverflow("translated generators need degree " + std::to_string(wdeg + dx) +
                               " > window bound " + std::to_string(window.degree_bound()));
    for (const auto& row : w_n.basis()) {
      Element e = window.element_at(row, pres.field());
      rows.push_back(mw.translate(pres, e, x));
    }
  }
  return RowSpace::from_rows(pres.field(), mw.size(), rows);
}

namespace {

void require_unital(const AlgebraPresentation& pres) {
  if (!pres.unital())
    throw std::invalid_argument(
        "module ranks are defined over unital presentations only; this presentation is non-unital");
}

}  // namespace

RankReport rank(const AlgebraPresentation& pres, const ModulePresentation& m,
                const ExhaustionSpec& exhaustion, const std::vector<std::uint32_t>& n_range,
                const CoordinateWindow& window) {
  require_unital(pres);
  ModuleWindow mw(window, m.ambient_rank);
  std::optional<RowSpace> q_trunc;
  if (m.sub_generators) q_trunc = module_truncation(pres, mw, *m.sub_generators);
  std::vector<Rat> vals;
  for (std::uint32_t n : n_range) {
    RowSpace w_n = exhaustion.evaluate(pres, n, window);
    RowSpace a = translated_generators(pres, mw, w_n, window, m.generators);
    std::int64_t num;
    if (q_trunc)
      num = static_cast<std::int64_t>(sum(a, *q_trunc).dim()) - q_trunc->dim();
    else
      num = a.dim();
    vals.emplace_back(num, w_n.dim());
  }
  return make_density_report({n_range.begin(), n_range.end()}, std::move(vals));
}

RankReport relative_rank(const AlgebraPresentation& pres, const ModulePresentation& n_mod,
                         const ModulePresentation& m_sub,
                         const std::vector<std::vector<Element>>& x_gens,
                         const ExhaustionSpec& exhaustion,
                         const std::vector<std::uint32_t>& n_range,
                         const CoordinateWindow& window) {
  require_unital(pres);
  if (n_mod.ambient_rank != m_sub.ambient_rank)
    throw std::invalid_argument("relative rank: M and N must share the ambient free module");
  ModuleWindow mw(window, n_mod.ambient_rank);
  RowSpace m_trunc = module_truncation(pres, mw, m_sub.generators);
  std::vector<Rat> vals;
  for (std::uint32_t n : n_range) {
    RowSpace w_n = exhaustion.evaluate(pres, n, window);
    RowSpace a = translated_generators(pres, mw, w_n, window, x_gens);
    vals.emplace_back(intersection_dim(m_trunc, a), w_n.dim());
  }
  return make_density_report({n_range.begin(), n_range.end()}, std::move(vals));
}

ExactSequenceReport exact_sequence_check(const AlgebraPresentation& pres,
                                         const ModulePresentation& n_mod,
                                         const ModulePresentation& m_sub,
                                         const std::vector<std::vector<Element>>& x_gens,
                                         const ExhaustionSpec& exhaustion,
                                         const std::vector<std::uint32_t>& n_range,
                                         const CoordinateWindow& window) {
  require_unital(pres);
  if (n_mod.ambient_rank != m_sub.ambient_rank)
    throw std::invalid_argument("exact sequence: M and N must share the ambient free module");
  ModuleWindow mw(window, n_mod.ambient_rank);
  RowSpace m_trunc = module_truncation(pres, mw, m_sub.generators);
  ExactSequenceReport rep;
  std::vector<Rat> rank_vals, quot_vals, rel_vals;
  for (std::uint32_t n : n_range) {
    RowSpace w_n = exhaustion.evaluate(pres, n, window);
    RowSpace a = translated_generators(pres, mw, w_n, window, x_gens);
    std::int64_t dim_a = a.dim();
    std::int64_t dim_quot = static_cast<std::int64_t>(sum(a, m_trunc).dim()) - m_trunc.dim();
    std::int64_t dim_inter = intersection_dim(m_trunc, a);
    rep.ns.push_back(n);
    rep.residuals.push_back(dim_a - (dim_quot + dim_inter));
    rank_vals.emplace_back(dim_a, w_n.dim());
    quot_vals.emplace_back(dim_quot, w_n.dim());
    rel_vals.emplace_back(dim_inter, w_n.dim());
  }
  std::vector<std::uint32_t> ns(n_range.begin(), n_range.end());
  rep.rank_n = make_density_report(ns, std::move(rank_vals));
  rep.rank_quotient = make_density_report(ns, std::move(quot_vals));
  rep.relative_rank_m = make_density_report(ns, std::move(rel_vals));
  return rep;
}

DirectSumReport direct_sum_check(const AlgebraPresentation& pres, const ModulePresentation& m,
                                 const ModulePresentation& n, const ExhaustionSpec& exhaustion,
                                 const std::vector<std::uint32_t>& n_range,
                                 const CoordinateWindow& window) {
  require_unital(pres);
  if (m.sub_generators || n.sub_generators)
    throw std::invalid_argument("direct_sum_check supports plain (non-quotient) modules");
  ModulePresentation sum_mod;
  sum_mod.ambient_rank = m.ambient_rank + n.ambient_rank;
  for (const auto& x : m.generators) {
    std::vector<Element> padded = x;
    padded.resize(sum_mod.ambient_rank);
    sum_mod.generators.push_back(std::move(padded));
  }
  for (const auto& y : n.generators) {
    std::vector<Element> padded(m.ambient_rank);
    padded.insert(padded.end(), y.begin(), y.end());
    sum_mod.generators.push_back(std::move(padded));
  }
  RankReport rm = rank(pres, m, exhaustion, n_range, window);
  RankReport rn = rank(pres, n, exhaustion, n_range, window);
  RankReport rs = rank(pres, sum_mod, exhaustion, n_range, window);
  DirectSumReport rep;
  rep.ns = {n_range.begin(), n_range.end()};
  for (std::size_t i = 0; i < n_range.size(); ++i) {
    Rat diff = rs.values[i] - rm.values[i] - rn.values[i];
    rep.residuals.push_back(diff.num);  // exact; 0 iff additivity holds at this level
  }
  rep.rank_sum = std::move(rs);
  return rep;
}

}  // namespace amen
