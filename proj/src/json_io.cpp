#include "amen/json_io.hpp"

namespace amen {

using nlohmann::json;

json to_json(const AlgebraPresentation& pres, const FolnerCertificate& c) {
  json j;
  j["level"] = c.level;
  j["degree_bound"] = c.degree_bound;
  j["epsilon"] = c.epsilon.str();
  json basis = json::array();
  for (const auto& e : c.subspace_basis) basis.push_back(pres.format_element(e));
  j["subspace"] = std::move(basis);
  json ts = json::array();
  for (const auto& e : c.test_set) ts.push_back(pres.format_element(e));
  j["test_set"] = std::move(ts);
  json rs = json::array();
  for (const auto& r : c.ratios) rs.push_back(r.str());
  j["ratios"] = std::move(rs);
  return j;
}

FolnerCertificate folner_certificate_from_json(const AlgebraPresentation& pres, const json& j) {
  FolnerCertificate c;
  c.level = j.at("level").get<std::uint32_t>();
  c.degree_bound = j.at("degree_bound").get<std::uint32_t>();
  c.epsilon = Rat::parse(j.at("epsilon").get<std::string>());
  for (const auto& s : j.at("subspace")) c.subspace_basis.push_back(pres.parse_element(s.get<std::string>()));
  for (const auto& s : j.at("test_set")) c.test_set.push_back(pres.parse_element(s.get<std::string>()));
  for (const auto& s : j.at("ratios")) c.ratios.push_back(Rat::parse(s.get<std::string>()));
  return c;
}

json to_json(const AlgebraPresentation& pres, const ParadoxCertificate& c) {
  json j;
  j["basis_degree"] = c.basis_degree;
  j["degree_bound"] = c.degree_bound;
  j["note"] = "truncated certificate: independence verified inside the degree window only; "
              "basis = canonical deglex normal words";
  json parts = json::array();
  for (const auto& p : c.parts) {
    json jp;
    json words = json::array();
    for (const auto& w : p.words) words.push_back(pres.format_word(w));
    jp["words"] = std::move(words);
    jp["g"] = pres.format_element(p.g);
    jp["h"] = pres.format_element(p.h);
    parts.push_back(std::move(jp));
  }
  j["parts"] = std::move(parts);
  return j;
}

ParadoxCertificate paradox_certificate_from_json(const AlgebraPresentation& pres, const json& j) {
  ParadoxCertificate c;
  c.basis_degree = j.at("basis_degree").get<std::uint32_t>();
  c.degree_bound = j.at("degree_bound").get<std::uint32_t>();
  for (const auto& jp : j.at("parts")) {
    ParadoxPart p;
    for (const auto& s : jp.at("words")) p.words.push_back(pres.parse_word(s.get<std::string>()));
    p.g = pres.parse_element(jp.at("g").get<std::string>());
    p.h = pres.parse_element(jp.at("h").get<std::string>());
    c.parts.push_back(std::move(p));
  }
  return c;
}

json to_json(const AlgebraPresentation& pres, const ParadoxDeficiency& d) {
  json j;
  j["kind"] = "deficiency_witness";
  json words = json::array();
  for (const auto& w : d.words) words.push_back(pres.format_word(w));
  j["words"] = std::move(words);
  j["spanned_dim"] = d.spanned_dim;
  j["required_dim"] = 2 * d.words.size();
  return j;
}

json to_json(const DensityReport& rep) {
  json j;
  j["k"] = rep.ks;
  json vals = json::array();
  for (const auto& v : rep.values) vals.push_back(v.str());
  j["values"] = std::move(vals);
  j["tail_min"] = rep.tail_min.str();
  j["tail_max"] = rep.tail_max.str();
  j["converged"] = rep.converged;
  j["tolerance"] = rep.tolerance.str();
  return j;
}

}  // namespace amen
