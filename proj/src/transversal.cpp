#include "amen/transversal.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace amen {

namespace {

// Selection state: per slot, the chosen candidate indices (ascending).
using Selection = std::vector<std::vector<std::uint32_t>>;

struct SelEntry {
  std::uint32_t slot;
  std::uint32_t cand;
};

// Echelon form of the selected vectors with combination tracking, so a
// dependent candidate can be expressed over the selected entries.
struct TrackedEchelon {
  const FieldSpec& f;
  std::vector<SelEntry> entries;
  std::vector<SparseVec> rows;   // echelon rows (leading cols distinct)
  std::vector<SparseVec> combs;  // combs[i]: row i as combination of entries
  std::vector<std::int64_t> pivot_row;  // by leading column, -1 if none

  TrackedEchelon(const FieldSpec& field, std::uint32_t ambient)
      : f(field), pivot_row(ambient, -1) {}

  // residual + combination of the eliminated part over `entries`
  std::pair<SparseVec, SparseVec> reduce(const SparseVec& v) const {
    SparseVec r = v;
    SparseVec comb;  // over entry indices
    while (!r.empty()) {
      std::int64_t pr = pivot_row[r.front().first];
      if (pr < 0) break;
      std::uint32_t c = r.front().second;
      r = sv_axpy(f, r, rows[static_cast<std::size_t>(pr)], f.neg(c));
      comb = sv_axpy(f, comb, combs[static_cast<std::size_t>(pr)], c);
    }
    return {std::move(r), std::move(comb)};
  }

  // residual must be nonzero
  void insert(const SelEntry& e, const SparseVec& residual, const SparseVec& comb_used) {
    std::uint32_t idx = static_cast<std::uint32_t>(entries.size());
    entries.push_back(e);
    std::uint32_t lead = f.inv(residual.front().second);
    SparseVec row = sv_scale(f, residual, lead);
    // row = lead * (v - comb_used * entries) => comb for row
    SparseVec comb = sv_scale(f, comb_used, f.neg(lead));
    comb = sv_axpy(f, comb, SparseVec{{idx, 1}}, lead);
    pivot_row[row.front().first] = static_cast<std::int64_t>(rows.size());
    rows.push_back(std::move(row));
    combs.push_back(std::move(comb));
  }
};

TrackedEchelon build_echelon(const TransversalInstance& inst, const Selection& sel) {
  TrackedEchelon ech(inst.field, inst.ambient);
  for (std::uint32_t s = 0; s < inst.slots(); ++s) {
    for (std::uint32_t c : sel[s]) {
      auto [r, comb] = ech.reduce(inst.candidates[s][c]);
      if (r.empty()) throw std::logic_error("selected vectors became dependent");
      ech.insert({s, c}, r, comb);
    }
  }
  return ech;
}

std::uint32_t witness_rank(const TransversalInstance& inst, const std::vector<std::uint32_t>& slots) {
  std::vector<SparseVec> rows;
  for (std::uint32_t s : slots)
    for (const auto& v : inst.candidates[s]) rows.push_back(v);
  return rank_of(inst.field, inst.ambient, rows);
}

// Tries to raise slot `root` to one more selected candidate via BFS
// exchanges. Returns the deficient reachable slot set on failure.
std::optional<std::vector<std::uint32_t>> augment(const TransversalInstance& inst, Selection& sel,
                                                  std::uint32_t root) {
  TrackedEchelon ech = build_echelon(inst, sel);
  std::uint32_t m = inst.slots();
  std::vector<bool> reached(m, false);
  // parent[s]: the (slot, cand) whose reduction touched a selected entry of s,
  // plus the candidate index of s's entry to drop
  struct Parent { std::uint32_t from_slot, from_cand, drop_cand; };
  std::vector<Parent> parent(m);
  std::deque<std::uint32_t> queue;
  reached[root] = true;
  queue.push_back(root);
  while (!queue.empty()) {
    std::uint32_t s = queue.front();
    queue.pop_front();
    for (std::uint32_t c = 0; c < inst.candidates[s].size(); ++c) {
      if (std::find(sel[s].begin(), sel[s].end(), c) != sel[s].end()) continue;
      auto [r, comb] = ech.reduce(inst.candidates[s][c]);
      if (!r.empty()) {
        // augmenting chain found: swap candidates back along the parent
        // pointers; the root slot gains one selection
        std::uint32_t cur = s, cand = c;
        while (true) {
          sel[cur].push_back(cand);
          std::sort(sel[cur].begin(), sel[cur].end());
          if (cur == root) break;
          Parent p = parent[cur];
          sel[cur].erase(std::find(sel[cur].begin(), sel[cur].end(), p.drop_cand));
          cur = p.from_slot;
          cand = p.from_cand;
        }
        return std::nullopt;
      }
      for (const auto& [entry_idx, coeff] : comb) {
        const SelEntry& e = ech.entries[entry_idx];
        if (!reached[e.slot]) {
          reached[e.slot] = true;
          parent[e.slot] = {s, c, e.cand};
          queue.push_back(e.slot);
        }
      }
    }
  }
  std::vector<std::uint32_t> witness;
  for (std::uint32_t s = 0; s < m; ++s)
    if (reached[s]) witness.push_back(s);
  return witness;
}

std::optional<DeficiencyWitness> fill(const TransversalInstance& inst, Selection& sel,
                                      std::uint32_t copies) {
  for (std::uint32_t s = 0; s < inst.slots(); ++s) {
    while (sel[s].size() < copies) {
      auto wit = augment(inst, sel, s);
      if (wit) return DeficiencyWitness{*wit, witness_rank(inst, *wit)};
    }
  }
  return std::nullopt;
}

}  // namespace

HallResult hall_transversal(const TransversalInstance& inst) {
  Selection sel(inst.slots());
  if (auto wit = fill(inst, sel, 1)) return *wit;
  Transversal t;
  for (const auto& s : sel) t.phi.push_back(s.at(0));
  return t;
}

DoubleResult double_transversal(const TransversalInstance& inst) {
  Selection sel(inst.slots());
  if (auto wit = fill(inst, sel, 1)) return *wit;
  if (auto wit = fill(inst, sel, 2)) return *wit;
  DoubleTransversal t;
  for (const auto& s : sel) {
    t.phi.push_back(s.at(0));
    t.psi.push_back(s.at(1));
  }
  return t;
}

}  // namespace amen
