#ifndef AMEN_ELEMENT_HPP
#define AMEN_ELEMENT_HPP

#include <cstdint>
#include <map>

#include "amen/field.hpp"
#include "amen/word.hpp"

namespace amen {

/// A finite K-linear combination of words, word -> nonzero coefficient.
/// Canonical when every word is a normal form of the owning presentation.
struct Element {
  std::map<Word, std::uint32_t, DeglexLess> terms;

  bool is_zero() const { return terms.empty(); }

  /// Degree of the largest word (0 for the zero element and the unit).
  std::uint32_t degree() const {
    return terms.empty() ? 0 : static_cast<std::uint32_t>(terms.rbegin()->first.size());
  }

  void add_term(const FieldSpec& f, const Word& w, std::uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(w, c);
    if (!fresh) {
      it->second = f.add(it->second, c);
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

inline Element elem_scale(const FieldSpec& f, const Element& a, std::uint32_t c) {
  Element out;
  if (c == 0) return out;
  for (auto& [w, v] : a.terms) out.terms[w] = f.mul(v, c);
  return out;
}

inline Element elem_add(const FieldSpec& f, const Element& a, const Element& b) {
  Element out = a;
  for (auto& [w, v] : b.terms) out.add_term(f, w, v);
  return out;
}

inline Element elem_sub(const FieldSpec& f, const Element& a, const Element& b) {
  Element out = a;
  for (auto& [w, v] : b.terms) out.add_term(f, w, f.neg(v));
  return out;
}

inline Element elem_from_word(const Word& w) {
  Element e;
  e.terms[w] = 1;
  return e;
}

}  // namespace amen

#endif
