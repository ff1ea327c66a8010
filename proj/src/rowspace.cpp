#include "amen/rowspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace amen {

SparseVec sv_axpy(const FieldSpec& f, const SparseVec& a, const SparseVec& b, std::uint32_t c) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(c, b[j].second));
      ++j;
    } else {
      std::uint32_t v = f.add(a[i].second, f.mul(c, b[j].second));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i; ++j;
    }
  }
  return out;
}

SparseVec sv_scale(const FieldSpec& f, const SparseVec& a, std::uint32_t c) {
  SparseVec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (auto& [col, v] : a) {
    std::uint32_t w = f.mul(v, c);
    if (w != 0) out.emplace_back(col, w);
  }
  return out;
}

void Mat::set(std::uint32_t r, std::uint32_t c, std::uint32_t v) {
  auto& row = entries.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::uint32_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0) row.erase(it); else it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

std::uint32_t Mat::get(std::uint32_t r, std::uint32_t c) const {
  for (auto& [col, v] : entries.at(r))
    if (col == c) return v;
  return 0;
}

RowSpace RowSpace::from_rows(const FieldSpec& f, std::uint32_t ambient,
                             const std::vector<SparseVec>& rows) {
  RowSpace rs(f, ambient);
  for (const auto& row : rows) {
    if (!row.empty() && row.back().first >= ambient)
      throw std::invalid_argument("row entry beyond ambient dimension");
    rs.insert_row(row);
  }
  return rs;
}

void RowSpace::insert_row(const SparseVec& row) {
  SparseVec r = reduce(row);
  if (r.empty()) return;
  // normalize pivot to 1
  r = sv_scale(field_, r, field_.inv(r.front().second));
  std::uint32_t piv = r.front().first;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  basis_.insert(basis_.begin() + idx, std::move(r));
  // clear the new pivot column from earlier rows to keep RREF
  for (std::size_t k = 0; k < idx; ++k) {
    std::uint32_t v = 0;
    for (auto& [col, val] : basis_[k])
      if (col == piv) { v = val; break; }
    if (v != 0) basis_[k] = sv_axpy(field_, basis_[k], basis_[idx], field_.neg(v));
  }
}

SparseVec RowSpace::reduce(const SparseVec& v) const {
  SparseVec r = v;
  std::size_t i = 0;
  while (i < r.size()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), r[i].first);
    if (it != pivots_.end() && *it == r[i].first) {
      std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
      // basis_[idx] leads at r[i].first, so entries before position i stay put
      r = sv_axpy(field_, r, basis_[idx], field_.neg(r[i].second));
    } else {
      ++i;
    }
  }
  return r;
}

bool RowSpace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool RowSpace::contains_space(const RowSpace& other) const {
  for (const auto& row : other.basis())
    if (!contains(row)) return false;
  return true;
}

RowSpace rref(const FieldSpec& f, const Mat& m) {
  return RowSpace::from_rows(f, m.cols, m.entries);
}

std::uint32_t rank_of(const FieldSpec& f, std::uint32_t ambient,
                      const std::vector<SparseVec>& rows) {
  return RowSpace::from_rows(f, ambient, rows).dim();
}

RowSpace sum(const RowSpace& u, const RowSpace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw std::invalid_argument("subspace sum: ambient mismatch");
  // Clone the larger space and fold in the smaller one; RREF is canonical,
  // so the result does not depend on which operand seeds the elimination.
  const RowSpace& big = u.dim() >= v.dim() ? u : v;
  const RowSpace& small = u.dim() >= v.dim() ? v : u;
  RowSpace out = big;
  for (const auto& row : small.basis()) out.insert_row(row);
  return out;
}

std::uint32_t intersection_dim(const RowSpace& u, const RowSpace& v) {
  return u.dim() + v.dim() - sum(u, v).dim();
}

}  // namespace amen
