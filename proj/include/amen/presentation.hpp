#ifndef AMEN_PRESENTATION_HPP
#define AMEN_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "amen/element.hpp"
#include "amen/field.hpp"
#include "amen/word.hpp"

namespace amen {

struct RewriteRule {
  Word lhs;
  Element rhs;  // every monomial strictly deglex-smaller than lhs
};

/// A finitely presented associative algebra over GF(p) with a terminating
/// (deglex-decreasing) rewriting system. Immutable after construction.
class AlgebraPresentation {
 public:
  AlgebraPresentation(FieldSpec field, std::vector<std::string> generators,
                      bool unital, std::vector<RewriteRule> rules);

  static AlgebraPresentation from_json_text(const std::string& text);
  static AlgebraPresentation from_file(const std::string& path);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& generators() const { return gens_; }
  bool unital() const { return unital_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Word grammar: generator names joined by "*"; "1" is the empty word.
  Word parse_word(const std::string& text) const;
  /// Element grammar: signed sum of terms [coeff*]word.
  Element parse_element(const std::string& text) const;

  std::string format_word(const Word& w) const;
  std::string format_element(const Element& e) const;

  /// True iff no rule lhs occurs in w as a factor.
  bool is_normal(const Word& w) const;

  /// Rewrites until no rule applies; terminates because every rewrite
  /// strictly decreases the deglex order of some word.
  Element normal_form(const Element& e) const;

  /// Canonical (normal-form) product.
  Element multiply(const Element& a, const Element& b) const;

  std::optional<std::uint32_t> generator_index(const std::string& name) const;

 private:
  FieldSpec field_;
  std::vector<std::string> gens_;
  bool unital_;
  std::vector<RewriteRule> rules_;
};

}  // namespace amen

#endif
