#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "adlv/io.hpp"

using namespace adlv;

namespace {

struct Common {
  std::string preset, group_file, format = "json";
};

Group load_group(const Common& c) {
  if (c.preset.empty() == c.group_file.empty()) throw InputError("give exactly one of --preset and --group");
  if (!c.preset.empty()) {
    try {
      return Group(preset(c.preset));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  std::ifstream in(c.group_file);
  if (!in) throw InputError("cannot open " + c.group_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("group file: ") + e.what());
  }
  return Group(group_from_json(j));
}

Elem dominant_mu(const Group& g, const std::string& s) {
  Elem mu = parse_coweight(g, s);
  if (!g.is_dominant(mu, g.full())) throw InputError("mu = " + to_string(mu.free) + " is not dominant");
  return mu;
}

Levi parse_levi(const Group& g, const std::string& s) {
  Levi l;
  for (Int i : parse_ints(s)) {
    if (i < 1 || i > g.num_simple()) throw InputError("levi index out of range");
    l.push_back(static_cast<int>(i - 1));
  }
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("free")) return to_string(v.at("free").get<IVec>()) +
                                                   (v.at("tors").empty() ? "" : "+t" + to_string(v.at("tors").get<IVec>()));
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer() && v[1].get<Int>() > 0 &&
      !v[0].is_array())
    return to_string(v.get<Q>());
  if (v.is_array() && !v.empty() && v[0].is_array() && v[0].size() == 2 && v[0][0].is_number_integer() &&
      v[0][1].is_number_integer()) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i].get<Q>());
    return s + ")";
  }
  return v.dump();
}

void print_table(const Json& j, std::ostream& os, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object() && !v[0].contains("free")) {
      os << indent << k << ":\n";
      std::vector<std::string> cols;
      for (const auto& [ck, cv] : v[0].items()) cols.push_back(ck);
      os << indent << " ";
      for (const auto& c : cols) os << " " << c;
      os << "\n";
      for (const auto& row : v) {
        os << indent << " ";
        for (const auto& c : cols) os << " " << cell(row.at(c));
        os << "\n";
      }
    } else if (v.is_object() && !v.contains("free")) {
      os << indent << k << ":\n";
      print_table(v, os, indent + "  ");
    } else {
      os << indent << k << ": " << cell(v) << "\n";
    }
  }
}

void emit(const Common& c, const Json& j) {
  if (c.format == "json")
    std::cout << j.dump() << "\n";
  else
    print_table(j, std::cout);
}

Json class_row(const Group& g, const Elem& mu, const BClass& cls) {
  Json r = to_json(cls);
  r["label"] = cls.label();
  r["virtual_dimension"] = virtual_dimension(g, mu, cls.rep);
  return r;
}

int run_bgmu(const Common& c, const std::string& mu_s) {
  Group g = load_group(c);
  Elem mu = dominant_mu(g, mu_s);
  auto set = bgmu(g, mu);
  auto strat = newton_stratification(g, mu);
  Json classes = Json::array(), edges = Json::array();
  for (size_t i = 0; i < set.size(); ++i) {
    Json r = class_row(g, mu, set[i]);
    r["codim"] = strat.strata[i].codim;
    r["length_to_max"] = strat.strata[i].length_to_max;
    classes.push_back(r);
  }
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t k = 0; k < set.size(); ++k)
      if (i != k && chain_length(g, set, static_cast<int>(i), static_cast<int>(k)) == 1)
        edges.push_back(Json::array({i, k}));
  emit(c, Json{{"schema", kSchemaVersion}, {"kind", "bgmu"}, {"group", g.name()}, {"mu", mu},
               {"size", set.size()}, {"basic", basic_index(set)}, {"maximal", maximal_index(set)},
               {"classes", classes}, {"covers", edges}});
  return strat.consistent() ? 0 : 1;
}

int run_invariants(const Common& c, const std::string& mu_s, const std::string& b_s) {
  Group g = load_group(c);
  Elem mu = dominant_mu(g, mu_s);
  std::vector<IsoClass> bs;
  if (b_s.empty())
    for (const auto& cls : bgmu(g, mu)) bs.push_back(cls.rep);
  else
    bs.push_back(parse_b(g, b_s));
  int status = 0;
  for (const auto& b : bs) {
    auto r = invariant_report(g, mu, b);
    if (r.diagnostic()) status = 1;
    emit(c, to_json(r));
  }
  return status;
}

int run_strata(const Common& c, const std::vector<std::string>& mu_s, const std::string& b_s, const std::string& how,
               int window) {
  Group g = load_group(c);
  if (!g.datum().resgl) throw InputError("strata needs a res_gl or gl preset");
  if (mu_s.empty()) throw InputError("strata needs at least one --mu");
  std::vector<Elem> mus;
  for (const auto& s : mu_s) mus.push_back(dominant_mu(g, s));
  IsoClass b;
  if (b_s.empty()) {
    Elem total = mus[0];
    for (size_t i = 1; i < mus.size(); ++i) total = g.lattice().add(total, mus[i]);
    auto set = bgmu(g, g.dominance(total).rep);
    b = set[basic_index(set)].rep;
  } else {
    b = parse_b(g, b_s);
  }
  auto s = superbasic_setup(g, b, static_cast<int>(mus.size()));
  if (!s) throw InputError("b is not superbasic");
  if (how != "solve" && how != "window") throw InputError("--enumerate must be solve or window");
  auto labels = enumerate_strata(*s, mus, how == "window" ? Enumeration::Window : Enumeration::Solve, window);
  for (const auto& l : labels) {
    Json j = to_json(l);
    if (c.format == "json") {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "lambda=" << cell(j["lambda"]) << " lambda'=" << cell(j["lambda_prime"])
                << " lambda~=" << cell(j["lambda_tilde"]) << " |R|=" << l.dim() << (l.top ? " top" : "") << "\n";
    }
  }
  return 0;
}

Json character_json(const std::map<Elem, Int>& m) {
  Json a = Json::array();
  for (const auto& [k, v] : m) a.push_back(Json{{"weight", k}, {"mult", v}});
  return a;
}

int run_crystal(const Common& c, const std::string& what, const std::vector<std::string>& mu_s,
                const std::string& lambda_s, const std::string& levi_s) {
  Group g = load_group(c);
  if (mu_s.empty()) throw InputError("crystal needs --mu");
  std::vector<Elem> mus;
  for (const auto& s : mu_s) mus.push_back(dominant_mu(g, s));
  Json out{{"schema", kSchemaVersion}, {"kind", "crystal_" + what}, {"group", g.name()}, {"mu", mus}};
  bool ok = true;
  if (what == "mult") {
    if (mus.size() != 1) throw InputError("crystal mult takes one --mu");
    if (lambda_s.empty()) {
      auto f = weight_multiplicities(g, mus[0]);
      auto l = littelmann_character(g, mus[0]);
      ok = f == l;
      out["weights"] = character_json(f);
    } else {
      Elem lam = parse_coweight(g, lambda_s);
      Int f = weight_multiplicity(g, mus[0], lam), l = littelmann_count(g, mus[0], lam);
      ok = f == l;
      out["lambda"] = lam;
      out["mult"] = f;
      auto mv = mv_stats(g, mus[0], lam);
      out["mv_dim"] = mv.dim;
    }
    out["weyl_dimension"] = weyl_dimension(g, mus[0]);
  } else if (what == "branch") {
    if (mus.size() != 1) throw InputError("crystal branch takes one --mu");
    Levi j = parse_levi(g, levi_s);
    auto a = levi_branching(g, mus[0], j), p = levi_branching_peel(g, mus[0], j);
    ok = a == p;
    out["levi"] = Json::array();
    for (int i : j) out["levi"].push_back(i + 1);
    out["branching"] = character_json(a);
  } else if (what == "tensor") {
    if (mus.size() == 2) {
      auto a = tensor_decomposition(g, mus[0], mus[1]), p = tensor_decomposition_peel(g, mus[0], mus[1]);
      ok = a == p;
      out["decomposition"] = character_json(a);
    }
    if (!lambda_s.empty()) {
      Elem lam = parse_coweight(g, lambda_s);
      out["lambda"] = lam;
      out["mult"] = tensor_weight_multiplicity(g, mus, lam);
    } else if (mus.size() != 2) {
      out["character"] = character_json(tensor_character(g, mus));
    }
  } else {
    throw InputError("crystal subcommand must be mult, branch or tensor");
  }
  out["routes_agree"] = ok;
  emit(c, out);
  return ok ? 0 : 1;
}

int run_levi(const Common& c, const std::string& mu_s, const std::string& b_s, const std::string& reading) {
  Group g = load_group(c);
  Elem mu = dominant_mu(g, mu_s);
  IsoClass b = parse_b(g, b_s);
  if (!mazur(g, mu, b)) {
    emit(c, Json{{"schema", kSchemaVersion}, {"kind", "levi"}, {"group", g.name()}, {"mu", mu}, {"b", to_json(b)},
                 {"nonempty", false}});
    return 0;
  }
  if (reading != "literal" && reading != "weights") throw InputError("--reading must be literal or weights");
  auto a = assembled_dimension(g, mu, b);
  auto sets = sigma_mu_sets(g, mu, a.red.m);
  auto mi = minimal_I_leq(g, mu, b, reading == "literal" ? Reading::Literal : Reading::Weights);
  emit(c, Json{{"schema", kSchemaVersion}, {"kind", "levi"}, {"group", g.name()}, {"mu", mu}, {"b", to_json(b)},
               {"nonempty", true}, {"mu_m_sets", to_json(sets)}, {"assembly", to_json(a)},
               {"minimal_i", to_json(mi)}, {"hn_irreducible", hn_irreducible(g, mu, b)}});
  return a.dimension_ok() && a.count_ok() && mi.agree ? 0 : 1;
}

// One instance of the cross-oracle suite; returns failure descriptions.
std::vector<std::string> check_instance(const Group& g, const Elem& mu) {
  std::vector<std::string> bad;
  auto strat = newton_stratification(g, mu);
  if (!strat.consistent()) bad.push_back("newton stratification inconsistent with chain lengths");
  for (const auto& rec : strat.strata) {
    const auto& b = rec.cls.rep;
    auto r = invariant_report(g, mu, b);
    for (const auto& ch : r.checks)
      if (!ch.ok) bad.push_back("b=" + to_string(b.lambda) + ";" + word_to_string(b.w) + " " + ch.name + ": " + ch.detail);
    auto mi = minimal_I_leq(g, mu, b);
    if (!mi.agree) bad.push_back("b=" + to_string(b.lambda) + ";" + word_to_string(b.w) + " minimal I routes disagree");
  }
  return bad;
}

int run_check(const Common& c, int max_rank, int max_height, const std::vector<std::string>& presets) {
  if (max_rank < 1 || max_height < 0) throw InputError("bounds must be positive");
  std::vector<std::string> names = presets.empty() ? preset_catalog(max_rank) : presets;
  int instances = 0, failures = 0;
  Json failed = Json::array();
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : names) {
    Group g = [&] {
      try {
        return Group(preset(name));
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
    }();
    for (const auto& mu : dominant_grid(g, max_height)) {
      ++instances;
      std::vector<std::string> bad;
      try {
        bad = check_instance(g, mu);
      } catch (const std::exception& e) {
        bad.push_back(std::string("exception: ") + e.what());
      }
      if (!bad.empty()) {
        ++failures;
        failed.push_back(Json{{"group", name}, {"mu", mu}, {"failures", bad}});
        std::cerr << "FAIL " << name << " mu=" << to_string(mu) << "\n";
        for (const auto& s : bad) std::cerr << "  " << s << "\n";
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(c, Json{{"schema", kSchemaVersion}, {"kind", "check"}, {"presets", names}, {"max_rank", max_rank},
               {"max_height", max_height}, {"instances", instances}, {"failures", failures},
               {"seconds", secs}, {"failed", failed}});
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of affine Deligne-Lusztig varieties"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", common.preset, "group preset, e.g. gl(3), res_gl(2,2,1), unitary(3,ramified)");
    sub->add_option("--group", common.group_file, "group spec JSON file")->check(CLI::ExistingFile);
    sub->add_option("--format", common.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  std::string mu, b, lambda, levi, how = "solve", reading = "literal", what;
  std::vector<std::string> mus, presets;
  int window = -1, max_rank = 3, max_height = 8;

  auto* c_bgmu = app.add_subcommand("bgmu", "B(G, mu) as a ranked poset");
  add_common(c_bgmu);
  c_bgmu->add_option("--mu", mu)->required();

  auto* c_inv = app.add_subcommand("invariants", "dimension, component count and pi_0 of X_mu(b)");
  add_common(c_inv);
  c_inv->add_option("--mu", mu)->required();
  c_inv->add_option("--b", b, "lambda;word[;levi=..], basic=lambda or kappa=k; all of B(G,mu) if omitted");

  auto* c_strata = app.add_subcommand("strata", "superbasic stratum labels for Res GL_n, as JSON lines");
  add_common(c_strata);
  c_strata->add_option("--mu", mus, "one per fold")->required();
  c_strata->add_option("--b", b, "basic class; defaults to the basic class of sum(mu)");
  c_strata->add_option("--enumerate", how, "solve or window");
  c_strata->add_option("--window", window, "coordinate bound for window mode");

  auto* c_crys = app.add_subcommand("crystal", "weight multiplicities, branching and tensor products");
  add_common(c_crys);
  c_crys->add_option("what", what, "mult, branch or tensor")->required();
  c_crys->add_option("--mu", mus)->required();
  c_crys->add_option("--lambda", lambda);
  c_crys->add_option("--levi", levi, "simple roots of the Levi, 1-based");

  auto* c_levi = app.add_subcommand("levi", "Levi reduction, S_M(mu) and the assembly witness");
  add_common(c_levi);
  c_levi->add_option("--mu", mu)->required();
  c_levi->add_option("--b", b)->required();
  c_levi->add_option("--reading", reading, "literal or weights");

  auto* c_check = app.add_subcommand("check", "cross-oracle suite over a preset grid");
  add_common(c_check);
  c_check->add_option("--max-rank", max_rank);
  c_check->add_option("--max-height", max_height, "bound on <2 rho, mu>");
  c_check->add_option("--presets", presets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_bgmu) return run_bgmu(common, mu);
    if (*c_inv) return run_invariants(common, mu, b);
    if (*c_strata) return run_strata(common, mus, b, how, window);
    if (*c_crys) return run_crystal(common, what, mus, lambda, levi);
    if (*c_levi) return run_levi(common, mu, b, reading);
    if (*c_check) {
      if (common.preset.empty() && common.group_file.empty()) return run_check(common, max_rank, max_height, presets);
      return run_check(common, max_rank, max_height, {common.preset});
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
