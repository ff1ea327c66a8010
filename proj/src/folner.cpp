#include "amen/folner.hpp"

#include <algorithm>
#include <tuple>

namespace amen {

Rat folner_ratio(const RowSpace& w, const Element& r, const AlgebraPresentation& pres,
                 const CoordinateWindow& window) {
  if (w.dim() == 0) throw std::invalid_argument("folner_ratio: zero subspace");
  RowSpace wr = right_multiply_subspace(w, r, pres, window);
  return Rat(sum(wr, w).dim(), w.dim());
}

namespace {

std::vector<Element> basis_elements(const RowSpace& w, const CoordinateWindow& window,
                                    const FieldSpec& f) {
  std::vector<Element> out;
  out.reserve(w.dim());
  for (const auto& row : w.basis()) out.push_back(window.element_at(row, f));
  return out;
}

FolnerCertificate make_certificate(const AlgebraPresentation& pres, const CoordinateWindow& window,
                                   const RowSpace& w, const std::vector<Element>& S,
                                   const Rat& epsilon, const std::vector<Rat>& ratios,
                                   std::uint32_t level) {
  FolnerCertificate c;
  c.level = level;
  c.degree_bound = window.degree_bound();
  c.epsilon = epsilon;
  c.subspace_basis = basis_elements(w, window, pres.field());
  c.test_set = S;
  c.ratios = ratios;
  return c;
}

}  // namespace

std::optional<FolnerCertificate> folner_search(const AlgebraPresentation& pres,
                                               const std::vector<Element>& S, const Rat& epsilon,
                                               const ExhaustionSpec& exhaustion,
                                               std::uint32_t n_max,
                                               const CoordinateWindow& window) {
  if (epsilon <= Rat(0)) throw std::invalid_argument("folner_search: epsilon must be positive");
  Rat threshold = Rat(1) + epsilon;
  std::optional<RowSpace> prev;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    RowSpace w(pres.field(), window.size());
    try {
      w = exhaustion.evaluate(pres, n, window);
      if (prev && !w.contains_space(*prev))
        throw std::invalid_argument("exhaustion is not nested at level " + std::to_string(n));
      prev = w;
      std::vector<Rat> ratios;
      bool ok = true;
      for (const auto& r : S) {
        Rat rho = folner_ratio(w, r, pres, window);
        ratios.push_back(rho);
        if (rho > threshold) ok = false;
      }
      if (ok) return make_certificate(pres, window, w, S, epsilon, ratios, n);
    } catch (const TruncationOverflow& e) {
      throw TruncationOverflow("exhaustion level n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::optional<FolnerCertificate> folner_search_greedy(const AlgebraPresentation& pres,
                                                      const std::vector<Element>& S,
                                                      const Rat& epsilon, std::uint32_t max_steps,
                                                      const CoordinateWindow& window) {
  if (epsilon <= Rat(0)) throw std::invalid_argument("folner_search: epsilon must be positive");
  Rat threshold = Rat(1) + epsilon;
  std::uint32_t deg_s = 0;
  for (const auto& s : S) deg_s = std::max(deg_s, pres.normal_form(s).degree());
  if (window.degree_bound() < deg_s)
    throw TruncationOverflow("window too small for the test set");
  std::uint32_t cand_deg = window.degree_bound() - deg_s;

  // start from ball(1) words
  std::vector<bool> in_set(window.size(), false);
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < window.size(); ++i) {
    if (window.word_at(i).size() <= 1 && (pres.unital() || !window.word_at(i).empty())) {
      in_set[i] = true;
      members.push_back(i);
    }
  }
  auto eval_worst = [&](const std::vector<std::uint32_t>& idxs) {
    std::vector<Element> elems;
    for (auto i : idxs) elems.push_back(elem_from_word(window.word_at(i)));
    RowSpace w = span_of_elements(pres, window, elems);
    Rat worst(0);
    std::vector<Rat> ratios;
    for (const auto& r : S) {
      Rat rho = folner_ratio(w, r, pres, window);
      ratios.push_back(rho);
      worst = std::max(worst, rho);
    }
    return std::make_tuple(worst, ratios, w);
  };

  for (std::uint32_t step = 0; step <= max_steps; ++step) {
    auto [worst, ratios, w] = eval_worst(members);
    if (worst <= threshold)
      return make_certificate(pres, window, w, S, epsilon, ratios, step);
    if (step == max_steps) break;
    // add the single word minimizing the worst ratio; deglex tie-break by
    // scanning candidates in window order
    std::optional<std::uint32_t> best;
    std::optional<Rat> best_worst;
    for (std::uint32_t i = 0; i < window.size(); ++i) {
      if (in_set[i] || window.word_at(i).size() > cand_deg) continue;
      auto trial = members;
      trial.push_back(i);
      auto [tw, tr, tspace] = eval_worst(trial);
      if (!best_worst || tw < *best_worst) {
        best_worst = tw;
        best = i;
      }
    }
    if (!best) break;  // window exhausted
    in_set[*best] = true;
    members.push_back(*best);
    std::sort(members.begin(), members.end());
  }
  return std::nullopt;
}

bool verify_certificate(const AlgebraPresentation& pres, const FolnerCertificate& c) {
  if (c.subspace_basis.empty()) return false;
  CoordinateWindow window = enumerate_basis(pres, c.degree_bound);
  RowSpace w = span_of_elements(pres, window, c.subspace_basis);
  if (w.dim() == 0) return false;
  Rat threshold = Rat(1) + c.epsilon;
  for (const auto& r : c.test_set) {
    if (folner_ratio(w, r, pres, window) > threshold) return false;
  }
  return true;
}

DoublingReport doubling_probe(const AlgebraPresentation& pres, const std::vector<Element>& Z,
                              const std::vector<RowSpace>& family,
                              const CoordinateWindow& window) {
  DoublingReport rep;
  bool first = true;
  for (const auto& v : family) {
    if (v.dim() == 0) throw std::invalid_argument("doubling_probe: zero subspace in family");
    RowSpace vz(pres.field(), window.size());
    for (const auto& z : Z)
      vz = sum(vz, right_multiply_subspace(v, z, pres, window));
    Rat grow(sum(vz, v).dim(), v.dim());
    Rat pure(vz.dim(), v.dim());
    rep.ratios.emplace_back(grow, pure);
    if (first || pure < rep.min_vz_ratio) rep.min_vz_ratio = pure;
    first = false;
  }
  return rep;
}

NestedExhaustion nested_exhaustion(const AlgebraPresentation& pres, const ExhaustionSpec& base,
                                   const std::vector<std::vector<Element>>& z_schedule,
                                   std::uint32_t n_max, const CoordinateWindow& window) {
  NestedExhaustion out;
  auto z_at = [&](std::uint32_t n) -> const std::vector<Element>& {
    if (z_schedule.empty()) throw std::invalid_argument("empty Z-schedule");
    std::size_t i = std::min<std::size_t>(n - 1, z_schedule.size() - 1);
    return z_schedule[i];
  };
  auto record = [&](const RowSpace& vbar, const RowSpace& v, const std::vector<Element>& zn) {
    NestedLevel lev;
    lev.vbar_basis = basis_elements(vbar, window, pres.field());
    lev.v_basis = basis_elements(v, window, pres.field());
    lev.vbar_dim = vbar.dim();
    lev.v_dim = v.dim();
    lev.dim_ratio = Rat(vbar.dim(), v.dim());
    RowSpace grown = vbar;
    bool ok = true;
    try {
      for (const auto& z : zn)
        grown = sum(grown, right_multiply_subspace(vbar, z, pres, window));
      ok = v.contains_space(grown);
    } catch (const TruncationOverflow&) {
      ok = false;
    }
    lev.containment_ok = ok;
    out.levels.push_back(std::move(lev));
  };

  try {
    RowSpace v_prev(pres.field(), window.size());  // V_0 = 0
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const auto& zn = z_at(n);
      RowSpace z_span = span_of_elements(pres, window, zn);
      // smallest k with V_{n-1} and Z_n inside W_k
      std::optional<std::uint32_t> k;
      RowSpace wk(pres.field(), window.size());
      for (std::uint32_t kk = 1;; ++kk) {
        wk = base.evaluate(pres, kk, window);
        if (wk.contains_space(v_prev) && wk.contains_space(z_span)) { k = kk; break; }
      }
      // smallest l > k meeting the threshold 1 + 2^-n
      Rat threshold = Rat(1) + Rat(1, std::int64_t(1) << std::min<std::uint32_t>(n, 40));
      std::optional<RowSpace> vbar, v;
      for (std::uint32_t l = *k + 1;; ++l) {
        RowSpace wl = base.evaluate(pres, l, window);
        RowSpace a = sum(subspace_product(wl, wk, pres, window), wl);
        RowSpace b = sum(subspace_product(a, wk, pres, window), a);
        if (Rat(b.dim(), wl.dim()) <= threshold) {
          vbar = wl;
          v = a;
          break;
        }
      }
      record(*vbar, *v, zn);
      v_prev = *v;
    }
  } catch (const TruncationOverflow& e) {
    out.failed_at = static_cast<std::uint32_t>(out.levels.size() + 1);
    out.failure_reason = std::string("window exhausted before the level threshold was met: ") + e.what();
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> goldie_witness(
    const AlgebraPresentation& pres, const Element& a, const Element& b,
    const ExhaustionSpec& exhaustion, std::uint32_t n_max, const CoordinateWindow& window) {
  if (pres.normal_form(a).is_zero() || pres.normal_form(b).is_zero())
    throw std::invalid_argument("goldie_witness: elements must be nonzero");
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    RowSpace w = exhaustion.evaluate(pres, n, window);
    RowSpace wa = right_multiply_subspace(w, a, pres, window);
    RowSpace wb = right_multiply_subspace(w, b, pres, window);
    std::uint32_t d = intersection_dim(wa, wb);
    if (d > 0) return std::make_pair(n, d);
  }
  return std::nullopt;
}

}  // namespace amen
