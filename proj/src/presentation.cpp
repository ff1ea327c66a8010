#include "amen/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace amen {

AlgebraPresentation::AlgebraPresentation(FieldSpec field, std::vector<std::string> generators,
                                         bool unital, std::vector<RewriteRule> rules)
    : field_(field), gens_(std::move(generators)), unital_(unital), rules_(std::move(rules)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.empty() || g == "0" || g == "1")
      throw std::invalid_argument("invalid generator name: '" + g + "'");
    for (char c : g)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("invalid generator name: '" + g + "'");
    if (std::isdigit(static_cast<unsigned char>(g[0])))
      throw std::invalid_argument("generator name may not start with a digit: '" + g + "'");
    if (!seen.insert(g).second)
      throw std::invalid_argument("duplicate generator name: '" + g + "'");
  }
  for (const auto& r : rules_) {
    if (r.lhs.empty())
      throw std::invalid_argument("rule lhs may not be the empty word");
    for (std::uint32_t g : r.lhs)
      if (g >= gens_.size()) throw std::invalid_argument("rule lhs uses unknown generator");
    for (const auto& [w, c] : r.rhs.terms) {
      if (!deglex_less(w, r.lhs))
        throw std::invalid_argument("rule rhs monomial '" + format_word(w) +
                                    "' is not deglex-smaller than lhs '" + format_word(r.lhs) + "'");
      if (w.empty() && !unital_)
        throw std::invalid_argument("rule rhs uses the unit in a non-unital algebra");
      for (std::uint32_t g : w)
        if (g >= gens_.size()) throw std::invalid_argument("rule rhs uses unknown generator");
    }
  }
}

std::optional<std::uint32_t> AlgebraPresentation::generator_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == name) return i;
  return std::nullopt;
}

Word AlgebraPresentation::parse_word(const std::string& text) const {
  Word w;
  std::string tok;
  std::stringstream ss(text);
  bool first = true;
  while (std::getline(ss, tok, '*')) {
    // trim
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty factor in word: '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    if (tok == "1") {
      if (!unital_) throw std::invalid_argument("unit used in non-unital algebra");
      first = false;
      continue;  // identity factor
    }
    auto idx = generator_index(tok);
    if (!idx) throw std::invalid_argument("unknown generator: '" + tok + "'");
    w.push_back(*idx);
    first = false;
  }
  if (first) throw std::invalid_argument("empty word text");
  if (w.empty() && !unital_) throw std::invalid_argument("unit used in non-unital algebra");
  return w;
}

namespace {

struct Token {
  enum Kind { Plus, Minus, Star, Int, Name, End } kind;
  std::string text;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '+') { out.push_back({Token::Plus, "+"}); ++i; continue; }
    if (c == '-') { out.push_back({Token::Minus, "-"}); ++i; continue; }
    if (c == '*') { out.push_back({Token::Star, "*"}); ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Name, s.substr(i, j - i)});
      i = j;
      continue;
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in element");
  }
  out.push_back({Token::End, ""});
  return out;
}

}  // namespace

Element AlgebraPresentation::parse_element(const std::string& text) const {
  auto toks = lex(text);
  std::size_t i = 0;
  Element acc;
  bool any = false;
  while (toks[i].kind != Token::End) {
    std::uint32_t sign = 1;  // 1 or p-1
    if (toks[i].kind == Token::Plus) { ++i; }
    else if (toks[i].kind == Token::Minus) { sign = field_.neg(1); ++i; }
    else if (any) throw std::invalid_argument("expected '+' or '-' in element: '" + text + "'");

    std::uint32_t coeff = 1;
    Word w;
    bool expect_factor = true;
    while (expect_factor) {
      const Token& t = toks[i];
      if (t.kind == Token::Int) {
        std::uint64_t v = 0;
        for (char c : t.text) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % field_.p;
        coeff = field_.mul(coeff, static_cast<std::uint32_t>(v));
        ++i;
      } else if (t.kind == Token::Name) {
        auto idx = generator_index(t.text);
        if (!idx) throw std::invalid_argument("unknown generator: '" + t.text + "'");
        w.push_back(*idx);
        ++i;
      } else {
        throw std::invalid_argument("expected factor in element: '" + text + "'");
      }
      if (toks[i].kind == Token::Star) { ++i; expect_factor = true; }
      else expect_factor = false;
    }
    std::uint32_t c = field_.mul(sign, coeff);
    if (w.empty() && c != 0 && !unital_)
      throw std::invalid_argument("unit used in non-unital algebra");
    acc.add_term(field_, w, c);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty element text");
  return normal_form(acc);
}

bool AlgebraPresentation::is_normal(const Word& w) const {
  for (const auto& r : rules_)
    if (find_factor(w, r.lhs) != static_cast<std::size_t>(-1)) return false;
  return true;
}

Element AlgebraPresentation::normal_form(const Element& e) const {
  // Worklist of not-yet-normal terms; rewrites strictly decrease deglex,
  // so processing the largest word first terminates.
  Element result;
  std::map<Word, std::uint32_t, DeglexLess> work = e.terms;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    std::uint32_t c = it->second;
    work.erase(it);
    if (c == 0) continue;

    std::size_t pos = static_cast<std::size_t>(-1);
    const RewriteRule* rule = nullptr;
    for (const auto& r : rules_) {
      std::size_t p = find_factor(w, r.lhs);
      if (p < pos) { pos = p; rule = &r; }
    }
    if (rule == nullptr) {
      result.add_term(field_, w, c);
      continue;
    }
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + rule->lhs.size()), w.end());
    for (const auto& [rw, rc] : rule->rhs.terms) {
      Word nw = concat(concat(prefix, rw), suffix);
      std::uint32_t nc = field_.mul(c, rc);
      auto [jt, fresh] = work.try_emplace(nw, nc);
      if (!fresh) {
        jt->second = field_.add(jt->second, nc);
        if (jt->second == 0) work.erase(jt);
      }
    }
  }
  return result;
}

Element AlgebraPresentation::multiply(const Element& a, const Element& b) const {
  Element prod;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms)
      prod.add_term(field_, concat(wa, wb), field_.mul(ca, cb));
  return normal_form(prod);
}

std::string AlgebraPresentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += gens_.at(w[i]);
  }
  return out;
}

std::string AlgebraPresentation::format_element(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!first) out += " + ";
    if (it->second != 1 || it->first.empty())
      out += std::to_string(it->second) + (it->first.empty() ? "" : "*");
    if (!it->first.empty()) out += format_word(it->first);
    first = false;
  }
  return out;
}

AlgebraPresentation AlgebraPresentation::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FieldSpec field(j.at("char").get<std::uint32_t>());
  std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
  bool unital = j.value("unital", true);

  // bootstrap a rule-free presentation to parse rule texts
  AlgebraPresentation free_pres(field, gens, unital, {});
  std::vector<RewriteRule> rules;
  for (const auto& jr : j.value("rules", nlohmann::json::array())) {
    RewriteRule r;
    r.lhs = free_pres.parse_word(jr.at("lhs").get<std::string>());
    r.rhs = free_pres.parse_element(jr.at("rhs").get<std::string>());
    rules.push_back(std::move(r));
  }
  return AlgebraPresentation(field, gens, unital, std::move(rules));
}

AlgebraPresentation AlgebraPresentation::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace amen
