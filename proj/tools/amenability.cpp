// amenability: command-line front end for the amen library.
//
// Exit codes: 0 = computed result (including "inconclusive" verdicts),
//             2 = input error (bad flags, unreadable/invalid files),
//             3 = degree window exceeded (truncation overflow).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "amen/folner.hpp"
#include "amen/growth.hpp"
#include "amen/json_io.hpp"
#include "amen/measure.hpp"
#include "amen/modrank.hpp"
#include "amen/paradox.hpp"
#include "amen/window.hpp"

using namespace amen;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// FNV-1a over the presentation file bytes; stable run-to-run identifier.
std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Context {
  std::string algebra_path;
  std::uint32_t degree_bound = 12;
  std::string format = "table";
  std::uint64_t seed = 0;

  std::string algebra_hash;
  std::optional<AlgebraPresentation> pres;
  std::optional<CoordinateWindow> window;

  const AlgebraPresentation& algebra() {
    if (!pres) {
      std::string text = read_file(algebra_path);
      algebra_hash = fnv1a_hex(text);
      pres = AlgebraPresentation::from_json_text(text);
    }
    return *pres;
  }

  const CoordinateWindow& win() {
    if (!window) window = enumerate_basis(algebra(), degree_bound);
    return *window;
  }

  json meta() {
    return json{{"algebra_hash", algebra_hash},
                {"degree_bound", degree_bound},
                {"tool_version", kToolVersion}};
  }

  void print_meta_comment() {
    std::cout << "# algebra_hash=" << algebra_hash << " degree_bound=" << degree_bound
              << " tool_version=" << kToolVersion << "\n";
  }

  void emit(json report) {
    report["meta"] = meta();
    std::cout << report.dump(2) << "\n";
  }
};

std::vector<Element> parse_element_list(const AlgebraPresentation& pres, const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Element e = pres.parse_element(item);
    if (e.is_zero()) throw std::invalid_argument("zero element in list: '" + item + "'");
    out.push_back(std::move(e));
  }
  if (out.empty()) throw std::invalid_argument("empty element list");
  return out;
}

ExhaustionSpec make_exhaustion(Context& ctx, const std::string& spec,
                               const std::string& test_set) {
  if (spec == "ball") {
    if (!test_set.empty()) return ExhaustionSpec::make_ball(parse_element_list(ctx.algebra(), test_set));
    std::vector<Element> gens;
    for (const auto& g : ctx.algebra().generators()) gens.push_back(ctx.algebra().parse_element(g));
    return ExhaustionSpec::make_ball(gens);
  }
  return ExhaustionSpec::patterns_from_file(ctx.algebra(), spec);
}

std::vector<std::uint32_t> range1(std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 1; n <= hi; ++n) out.push_back(n);
  return out;
}

json density_report_json(Context& ctx, const DensityReport& rep) {
  json j = to_json(rep);
  j["meta"] = ctx.meta();
  return j;
}

void print_density_table(Context& ctx, const DensityReport& rep) {
  ctx.print_meta_comment();
  std::cout << "k,value\n";
  for (std::size_t i = 0; i < rep.ks.size(); ++i)
    std::cout << rep.ks[i] << "," << rep.values[i].str() << "\n";
  std::cout << "# tail_min=" << rep.tail_min.str() << " tail_max=" << rep.tail_max.str()
            << " converged=" << (rep.converged ? "true" : "false") << "\n";
}

void emit_density(Context& ctx, const DensityReport& rep) {
  if (ctx.format == "json")
    std::cout << density_report_json(ctx, rep).dump(2) << "\n";
  else
    print_density_table(ctx, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale amenability toolkit for finitely presented algebras"};
  app.require_subcommand(1);

  Context ctx;
  app.add_option("--algebra", ctx.algebra_path, "presentation file (JSON)");
  app.add_option("--degree-bound", ctx.degree_bound, "coordinate window degree bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", ctx.seed, "seed for randomized suites (reserved)");

  // --- nf ------------------------------------------------------------------
  std::string nf_element;
  auto* nf = app.add_subcommand("nf", "normal form of an element");
  nf->add_option("--element", nf_element)->required();

  // --- basis ---------------------------------------------------------------
  auto* basis = app.add_subcommand("basis", "canonical normal-word basis up to the degree bound");

  // --- growth --------------------------------------------------------------
  std::uint32_t m_max = 8;
  std::string growth_gens;
  auto* growth = app.add_subcommand("growth", "ball dimensions d_m as CSV");
  growth->add_option("--m-max", m_max);
  growth->add_option("--gens", growth_gens, "generating set, e.g. \"x,y\" (default: all)");

  // --- folner search/check -------------------------------------------------
  auto* folner = app.add_subcommand("folner", "Folner certificate search / verification");
  folner->require_subcommand(1);
  std::string fo_test_set, fo_epsilon = "1/10", fo_exh = "ball", fo_cert_path;
  std::uint32_t fo_n_max = 20;
  auto* fo_search = folner->add_subcommand("search", "walk the exhaustion for a certificate");
  fo_search->add_option("--test-set", fo_test_set, "elements, e.g. \"x,y\" (default: generators)");
  fo_search->add_option("--epsilon", fo_epsilon, "rational threshold, e.g. 1/10");
  fo_search->add_option("--exhaustion", fo_exh, "\"ball\" or a pattern file");
  fo_search->add_option("--n-max", fo_n_max);
  auto* fo_check = folner->add_subcommand("check", "re-verify a serialized certificate");
  fo_check->add_option("--certificate", fo_cert_path)->required();

  // --- doubling ------------------------------------------------------------
  std::string dz_set;
  std::uint32_t dz_levels = 5;
  auto* doubling = app.add_subcommand("doubling", "dim(VZ)/dim(V) over a ball family");
  doubling->add_option("--z", dz_set, "Z spanning elements, e.g. \"x,y\" (default: generators)");
  doubling->add_option("--levels", dz_levels, "probe V = ball(0..levels)");

  // --- paradox find/check --------------------------------------------------
  auto* paradox = app.add_subcommand("paradox", "truncated paradoxical decompositions");
  paradox->require_subcommand(1);
  std::string px_translators, px_cert_path;
  std::uint32_t px_degree = 4;
  auto* px_find = paradox->add_subcommand("find", "build a decomposition or a deficiency witness");
  px_find->add_option("--translators", px_translators, "candidate pool, e.g. \"x,y\"");
  px_find->add_option("--degree", px_degree, "basis slice degree");
  auto* px_check = paradox->add_subcommand("check", "re-verify a serialized certificate");
  px_check->add_option("--certificate", px_cert_path)->required();

  // --- measure densities/defect -------------------------------------------
  auto* measure = app.add_subcommand("measure", "finite-horizon density reports");
  measure->require_subcommand(1);
  std::string ms_element = "x", ms_exh = "ball", ms_test_set;
  std::uint32_t ms_k_max = 10;
  auto* ms_dens = measure->add_subcommand("densities", "F_k/B_k boundary densities");
  ms_dens->add_option("--element", ms_element)->required();
  ms_dens->add_option("--exhaustion", ms_exh);
  ms_dens->add_option("--test-set", ms_test_set, "ball generating set when --exhaustion=ball");
  ms_dens->add_option("--k-max", ms_k_max);
  auto* ms_def = measure->add_subcommand("defect", "invariance defect of the full basis");
  ms_def->add_option("--element", ms_element)->required();
  ms_def->add_option("--exhaustion", ms_exh);
  ms_def->add_option("--test-set", ms_test_set, "ball generating set when --exhaustion=ball");
  ms_def->add_option("--k-max", ms_k_max);

  // --- rank / relrank / exactseq ------------------------------------------
  std::string mod_path, sub_path, mod_exh = "ball", mod_test_set;
  std::uint32_t mod_n_max = 10;
  auto add_mod_flags = [&](CLI::App* cmd, bool with_sub) {
    cmd->add_option("--module", mod_path, "module presentation file (JSON)")->required();
    if (with_sub)
      cmd->add_option("--submodule", sub_path, "submodule presentation file (JSON)")->required();
    cmd->add_option("--exhaustion", mod_exh, "\"ball\" or a pattern file");
    cmd->add_option("--test-set", mod_test_set, "ball generating set when --exhaustion=ball");
    cmd->add_option("--n-max", mod_n_max);
  };
  auto* rank_cmd = app.add_subcommand("rank", "per-level module rank report");
  add_mod_flags(rank_cmd, false);
  auto* relrank_cmd = app.add_subcommand("relrank", "relative rank of a submodule");
  add_mod_flags(relrank_cmd, true);
  auto* exactseq_cmd = app.add_subcommand("exactseq", "exact-sequence dimension identity");
  add_mod_flags(exactseq_cmd, true);

  // --- goldie --------------------------------------------------------------
  std::string go_a, go_b;
  std::uint32_t go_n_max = 6;
  auto* goldie = app.add_subcommand("goldie", "first level where W_n a and W_n b intersect");
  goldie->add_option("--a", go_a)->required();
  goldie->add_option("--b", go_b)->required();
  goldie->add_option("--n-max", go_n_max);

  // --- zerodiv -------------------------------------------------------------
  auto* zerodiv = app.add_subcommand("zerodiv", "search normal words for a zero-divisor pair");

  // let the global flags (--algebra, --degree-bound, ...) appear after the
  // subcommand name as well
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*nf) {
      const auto& pres = ctx.algebra();
      Element e = pres.parse_element(nf_element);
      if (ctx.format == "json")
        ctx.emit(json{{"kind", "normal_form"}, {"input", nf_element},
                      {"normal_form", pres.format_element(e)}});
      else
        std::cout << pres.format_element(e) << "\n";
    } else if (*basis) {
      const auto& pres = ctx.algebra();
      const auto& win = ctx.win();
      if (ctx.format == "json") {
        json words = json::array();
        for (const auto& w : win.words()) words.push_back(pres.format_word(w));
        ctx.emit(json{{"kind", "basis"}, {"size", win.size()}, {"words", std::move(words)}});
      } else {
        ctx.print_meta_comment();
        for (const auto& w : win.words()) std::cout << pres.format_word(w) << "\n";
      }
    } else if (*growth) {
      const auto& pres = ctx.algebra();
      std::vector<Element> S;
      if (growth_gens.empty())
        for (const auto& g : pres.generators()) S.push_back(pres.parse_element(g));
      else
        S = parse_element_list(pres, growth_gens);
      GrowthSeries gs = growth_sequence(pres, S, m_max, ctx.win());
      if (ctx.format == "json") {
        ctx.emit(json{{"kind", "growth"}, {"d", gs.d}});
      } else {
        ctx.print_meta_comment();
        std::cout << "m,d_m\n";
        for (std::size_t m = 0; m < gs.d.size(); ++m) std::cout << m << "," << gs.d[m] << "\n";
      }
    } else if (*fo_search) {
      const auto& pres = ctx.algebra();
      std::vector<Element> S = fo_test_set.empty()
                                   ? parse_element_list(pres, [&] {
                                       std::string all;
                                       for (const auto& g : pres.generators()) {
                                         if (!all.empty()) all += ',';
                                         all += g;
                                       }
                                       return all;
                                     }())
                                   : parse_element_list(pres, fo_test_set);
      ExhaustionSpec exh = make_exhaustion(ctx, fo_exh, fo_test_set);
      auto cert = folner_search(pres, S, Rat::parse(fo_epsilon), exh, fo_n_max, ctx.win());
      if (!cert) {
        ctx.emit(json{{"kind", "folner_search"}, {"verdict", "inconclusive"},
                      {"note", "no level within range met the threshold; this is not a "
                               "non-amenability proof"}});
      } else {
        json j = to_json(pres, *cert);
        j["kind"] = "folner_certificate";
        j["verified"] = verify_certificate(pres, *cert);
        ctx.emit(std::move(j));
      }
    } else if (*fo_check) {
      const auto& pres = ctx.algebra();
      FolnerCertificate cert =
          folner_certificate_from_json(pres, json::parse(read_file(fo_cert_path)));
      ctx.emit(json{{"kind", "folner_check"},
                    {"verdict", verify_certificate(pres, cert) ? "valid" : "invalid"}});
    } else if (*doubling) {
      const auto& pres = ctx.algebra();
      std::vector<Element> Z;
      if (dz_set.empty())
        for (const auto& g : pres.generators()) Z.push_back(pres.parse_element(g));
      else
        Z = parse_element_list(pres, dz_set);
      std::vector<RowSpace> family;
      for (std::uint32_t n = 0; n <= dz_levels; ++n)
        family.push_back(ball(pres, Z, n, ctx.win()));
      DoublingReport rep = doubling_probe(pres, Z, family, ctx.win());
      json rows = json::array();
      for (std::size_t i = 0; i < rep.ratios.size(); ++i)
        rows.push_back(json{{"vz_plus_v_over_v", rep.ratios[i].first.str()},
                            {"vz_over_v", rep.ratios[i].second.str()}});
      ctx.emit(json{{"kind", "doubling_probe"}, {"family", "balls"},
                    {"min_vz_ratio", rep.min_vz_ratio.str()}, {"ratios", std::move(rows)},
                    {"note", "evidence over the probed family only, not the universal claim"}});
    } else if (*px_find) {
      const auto& pres = ctx.algebra();
      if (auto zd = find_zero_divisors(pres, std::min(ctx.degree_bound, 4u)))
        std::cerr << "warning: zero divisors found (" << pres.format_element(zd->first) << ", "
                  << pres.format_element(zd->second)
                  << "); the decomposition theory assumes a domain\n";
      std::vector<Element> S = px_translators.empty()
                                   ? std::vector<Element>{pres.parse_element(pres.generators().at(0))}
                                   : parse_element_list(pres, px_translators);
      auto res = build_paradox(pres, S, px_degree, ctx.win());
      if (std::holds_alternative<ParadoxCertificate>(res)) {
        const auto& cert = std::get<ParadoxCertificate>(res);
        json j = to_json(pres, cert);
        j["kind"] = "paradox_certificate";
        j["verified"] = verify_paradox(pres, cert);
        ctx.emit(std::move(j));
      } else {
        json j = to_json(pres, std::get<ParadoxDeficiency>(res));
        j["kind"] = "paradox_deficiency";
        ctx.emit(std::move(j));
      }
    } else if (*px_check) {
      const auto& pres = ctx.algebra();
      ParadoxCertificate cert =
          paradox_certificate_from_json(pres, json::parse(read_file(px_cert_path)));
      ctx.emit(json{{"kind", "paradox_check"},
                    {"verdict", verify_paradox(pres, cert) ? "valid" : "invalid"}});
    } else if (*ms_dens) {
      const auto& pres = ctx.algebra();
      ExhaustionSpec exh = make_exhaustion(ctx, ms_exh, ms_test_set);
      auto [fd, bd] =
          fk_bk_densities(pres, pres.parse_element(ms_element), exh, range1(ms_k_max), ctx.win());
      if (ctx.format == "json") {
        json jf = json::array(), jb = json::array();
        for (const auto& v : fd) jf.push_back(v.str());
        for (const auto& v : bd) jb.push_back(v.str());
        ctx.emit(json{{"kind", "fk_bk_densities"}, {"F", std::move(jf)}, {"B", std::move(jb)}});
      } else {
        ctx.print_meta_comment();
        std::cout << "k,F_density,B_density\n";
        for (std::uint32_t k = 1; k <= ms_k_max; ++k)
          std::cout << k << "," << fd[k - 1].str() << "," << bd[k - 1].str() << "\n";
      }
    } else if (*ms_def) {
      const auto& pres = ctx.algebra();
      ExhaustionSpec exh = make_exhaustion(ctx, ms_exh, ms_test_set);
      RegularSet L;
      L.parts.push_back({ctx.win().words(), pres.parse_element("1")});
      DensityReport rep = invariance_defect(pres, L, pres.parse_element(ms_element), exh,
                                            range1(ms_k_max), ctx.win());
      emit_density(ctx, rep);
    } else if (*rank_cmd) {
      const auto& pres = ctx.algebra();
      auto M = ModulePresentation::from_file(pres, mod_path);
      ExhaustionSpec exh = make_exhaustion(ctx, mod_exh, mod_test_set);
      emit_density(ctx, rank(pres, M, exh, range1(mod_n_max), ctx.win()));
    } else if (*relrank_cmd) {
      const auto& pres = ctx.algebra();
      auto N = ModulePresentation::from_file(pres, mod_path);
      auto M = ModulePresentation::from_file(pres, sub_path);
      ExhaustionSpec exh = make_exhaustion(ctx, mod_exh, mod_test_set);
      emit_density(ctx, relative_rank(pres, N, M, N.generators, exh, range1(mod_n_max), ctx.win()));
    } else if (*exactseq_cmd) {
      const auto& pres = ctx.algebra();
      auto N = ModulePresentation::from_file(pres, mod_path);
      auto M = ModulePresentation::from_file(pres, sub_path);
      ExhaustionSpec exh = make_exhaustion(ctx, mod_exh, mod_test_set);
      ExactSequenceReport rep =
          exact_sequence_check(pres, N, M, N.generators, exh, range1(mod_n_max), ctx.win());
      json j{{"kind", "exact_sequence_check"}, {"n", rep.ns}, {"residuals", rep.residuals},
             {"rank_n", to_json(rep.rank_n)}, {"rank_quotient", to_json(rep.rank_quotient)},
             {"relative_rank_m", to_json(rep.relative_rank_m)}};
      ctx.emit(std::move(j));
    } else if (*goldie) {
      const auto& pres = ctx.algebra();
      ExhaustionSpec exh = make_exhaustion(ctx, "ball", "");
      auto hit = goldie_witness(pres, pres.parse_element(go_a), pres.parse_element(go_b), exh,
                                go_n_max, ctx.win());
      if (hit)
        ctx.emit(json{{"kind", "goldie_witness"}, {"level", hit->first},
                      {"intersection_dim", hit->second}});
      else
        ctx.emit(json{{"kind", "goldie_witness"}, {"verdict", "inconclusive"}});
    } else if (*zerodiv) {
      const auto& pres = ctx.algebra();
      auto zd = find_zero_divisors(pres, ctx.degree_bound);
      if (zd)
        ctx.emit(json{{"kind", "zero_divisors"}, {"a", pres.format_element(zd->first)},
                      {"b", pres.format_element(zd->second)}});
      else
        ctx.emit(json{{"kind", "zero_divisors"}, {"verdict", "none found at this scale"},
                      {"note", "absence at a finite scale does not prove the algebra is a domain"}});
    }
  } catch (const TruncationOverflow& e) {
    std::cerr << "truncation overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
