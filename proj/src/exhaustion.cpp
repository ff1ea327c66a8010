#include "amen/exhaustion.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace amen {

PolyExpr PolyExpr::parse(const std::string& text) {
  PolyExpr out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parse_int = [&]() -> std::uint64_t {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad exponent polynomial: '" + text + "'");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
    return v;
  };
  while (true) {
    // one product term
    std::uint64_t coeff = 1;
    std::uint32_t exp = 0;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == 'n') {
        ++i;
        std::uint32_t e = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<std::uint32_t>(parse_int());
        }
        exp += e;
      } else {
        coeff *= parse_int();
      }
      saw_factor = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("bad exponent polynomial: '" + text + "'");
    if (coeff != 0) out.terms.emplace_back(coeff, exp);
    skip_ws();
    if (i < text.size() && text[i] == '+') { ++i; continue; }
    break;
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("trailing junk in exponent polynomial: '" + text + "'");
  return out;
}

std::uint64_t PolyExpr::eval(std::uint64_t n) const {
  std::uint64_t v = 0;
  for (const auto& [c, e] : terms) {
    std::uint64_t t = c;
    for (std::uint32_t k = 0; k < e; ++k) t *= n;
    v += t;
  }
  return v;
}

bool PolyExpr::depends_on_n() const {
  for (const auto& [c, e] : terms)
    if (e > 0) return true;
  return false;
}

std::string PolyExpr::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "+";
    auto [c, e] = terms[i];
    if (c != 1 || e == 0) out += std::to_string(c);
    if (e > 0) {
      if (c != 1) out += "*";
      out += "n";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

ExhaustionSpec ExhaustionSpec::make_ball(std::vector<Element> S) {
  ExhaustionSpec sp;
  sp.kind_ = Kind::Ball;
  sp.ball_set_ = std::move(S);
  return sp;
}

ExhaustionSpec ExhaustionSpec::make_patterns(std::vector<MonomialPattern> patterns) {
  ExhaustionSpec sp;
  sp.kind_ = Kind::Patterns;
  sp.patterns_ = std::move(patterns);
  return sp;
}

ExhaustionSpec ExhaustionSpec::patterns_from_json_text(const AlgebraPresentation& pres,
                                                       const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<MonomialPattern> pats;
  for (const auto& jp : j.at("patterns")) {
    MonomialPattern pat;
    for (const auto& jf : jp) {
      auto gen = pres.generator_index(jf.at(0).get<std::string>());
      if (!gen) throw std::invalid_argument("pattern uses unknown generator: " + jf.at(0).dump());
      pat.push_back({*gen, PolyExpr::parse(jf.at(1).get<std::string>())});
    }
    pats.push_back(std::move(pat));
  }
  return make_patterns(std::move(pats));
}

ExhaustionSpec ExhaustionSpec::patterns_from_file(const AlgebraPresentation& pres,
                                                  const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exhaustion file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return patterns_from_json_text(pres, ss.str());
}

std::uint32_t ExhaustionSpec::required_degree(const AlgebraPresentation& pres,
                                              std::uint32_t n) const {
  if (kind_ == Kind::Ball) {
    std::uint32_t d = 0;
    for (const auto& s : ball_set_)
      d = std::max(d, pres.normal_form(s).degree());
    return d * n;
  }
  std::uint64_t best = 0;
  for (const auto& pat : patterns_) {
    std::uint64_t deg = 0;
    for (const auto& f : pat) deg += f.bound.eval(n);
    best = std::max(best, deg);
  }
  return static_cast<std::uint32_t>(best);
}

RowSpace ExhaustionSpec::evaluate(const AlgebraPresentation& pres, std::uint32_t n,
                                  const CoordinateWindow& window) const {
  if (kind_ == Kind::Ball) {
    RowSpace w = ball(pres, ball_set_, n, window);
    if (w.dim() == 0)
      throw std::invalid_argument("exhaustion level " + std::to_string(n) + " is the zero subspace");
    return w;
  }
  if (required_degree(pres, n) > window.degree_bound())
    throw TruncationOverflow("pattern words at n=" + std::to_string(n) + " need degree " +
                             std::to_string(required_degree(pres, n)) + " > window bound " +
                             std::to_string(window.degree_bound()));
  std::vector<Element> elems;
  for (const auto& pat : patterns_) {
    // enumerate exponent tuples
    std::vector<std::uint64_t> lo(pat.size()), hi(pat.size());
    for (std::size_t i = 0; i < pat.size(); ++i) {
      std::uint64_t b = pat[i].bound.eval(n);
      lo[i] = pat[i].bound.depends_on_n() ? 0 : b;
      hi[i] = b;
    }
    std::vector<std::uint64_t> e = lo;
    while (true) {
      Word w;
      for (std::size_t i = 0; i < pat.size(); ++i)
        for (std::uint64_t k = 0; k < e[i]; ++k) w.push_back(pat[i].generator);
      if (!w.empty() || pres.unital()) elems.push_back(elem_from_word(w));
      std::size_t pos = pat.size();
      while (pos > 0) {
        --pos;
        if (e[pos] < hi[pos]) { ++e[pos]; break; }
        e[pos] = lo[pos];
        if (pos == 0) { pos = static_cast<std::size_t>(-1); break; }
      }
      if (pos == static_cast<std::size_t>(-1) || pat.empty()) break;
    }
  }
  RowSpace w = span_of_elements(pres, window, elems);
  if (w.dim() == 0)
    throw std::invalid_argument("exhaustion level " + std::to_string(n) + " is the zero subspace");
  return w;
}

}  // namespace amen
