#include "adlv/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adlv {

namespace {

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

std::string unparen(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

IMat int_matrix(const Json& j, const char* what) {
  try {
    return j.get<IMat>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + what + "' must be an integer matrix");
  }
}

Json word_indices(const Word& w) {
  Json a = Json::array();
  for (int i : w) a.push_back(i + 1);
  return a;
}

Word word_from_indices(const Json& j) {
  Word w;
  for (const auto& x : j) w.push_back(x.get<int>() - 1);
  return w;
}

Json levi_json(const Levi& l) { return word_indices(l); }

Json slots_json(const Slots& s) { return Json(s); }

}  // namespace

// ---------------------------------------------------------------------------

RootDatum group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group spec must be a JSON object");
  try {
    if (j.contains("preset")) {
      std::string name = j.at("preset").get<std::string>();
      if (j.contains("params") && !j.at("params").empty()) {
        std::string args;
        for (const auto& [k, v] : j.at("params").items()) {
          if (!args.empty()) args += ",";
          args += v.is_string() ? v.get<std::string>() : v.dump();
        }
        name += "(" + args + ")";
      }
      return preset(name);
    }
    RootDatum d;
    d.name = j.value("name", std::string("custom"));
    d.rank = j.at("rank").get<int>();
    d.simple_roots = int_matrix(j.at("simple_roots"), "simple_roots");
    d.simple_coroots = int_matrix(j.at("simple_coroots"), "simple_coroots");
    if (j.contains("inertia_gens"))
      for (const auto& m : j.at("inertia_gens")) d.inertia_gens.push_back(int_matrix(m, "inertia_gens"));
    d.frobenius = j.contains("frobenius") ? int_matrix(j.at("frobenius"), "frobenius") : identity(d.rank);
    d.complete();
    return d;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad group spec: ") + e.what());
  }
}

Json group_to_json(const RootDatum& d) {
  Json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  j["inertia_gens"] = d.inertia_gens;
  j["frobenius"] = d.frobenius;
  return j;
}

IVec parse_ints(const std::string& in) {
  std::string s = unparen(strip(in));
  IVec v;
  if (s.empty()) return v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = unparen(tok);
    size_t pos = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw InputError("not an integer: '" + tok + "'");
    v.push_back(x);
  }
  return v;
}

Elem parse_coweight(const Group& g, const std::string& in) {
  std::string s = strip(in);
  std::string tors;
  if (auto p = s.find("+t"); p != std::string::npos) {
    tors = s.substr(p + 2);
    s = s.substr(0, p);
  }
  IVec free = parse_ints(s), t = parse_ints(tors);
  const auto& lat = g.lattice();
  try {
    if (static_cast<int>(free.size()) == lat.free_rank()) {
      IVec tt = t.empty() ? IVec(lat.invariants().size() - lat.free_rank(), 0) : t;
      return g.make(free, tt);
    }
    if (t.empty() && static_cast<int>(free.size()) == g.datum().rank) return g.project_absolute(free);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad coweight '") + in + "': " + e.what());
  }
  throw InputError("coweight '" + in + "' has " + std::to_string(free.size()) + " entries; expected " +
                   std::to_string(lat.free_rank()) + " (coinvariants) or " + std::to_string(g.datum().rank) +
                   " (absolute)");
}

Word parse_word(const Group& g, const std::string& in) {
  std::string s = strip(in);
  Word w;
  if (s.empty() || s == "1" || s == "e") return w;
  if (s == "s") {
    if (g.num_simple() != 1) throw InputError("bare 's' is only allowed in relative rank one");
    return {0};
  }
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 's') throw InputError("bad word '" + in + "'");
    size_t j = ++i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw InputError("bad word '" + in + "'");
    int k = std::stoi(s.substr(i, j - i));
    if (k < 1 || k > g.num_simple()) throw InputError("reflection s" + std::to_string(k) + " out of range");
    w.push_back(k - 1);
    i = j;
  }
  return w;
}

namespace {

IsoClass basic_with_kappa_of(const Group& g, const Elem& lam) {
  Elem mu = g.dominance(lam).rep;
  auto set = bgmu(g, mu);
  return set[basic_index(set)].rep;
}

}  // namespace

IsoClass parse_b(const Group& g, const std::string& in) {
  std::string s = strip(in);
  if (s.rfind("basic=", 0) == 0) return basic_with_kappa_of(g, parse_coweight(g, s.substr(6)));
  if (s.rfind("kappa=", 0) == 0) {
    const auto& pi = g.pi1_gamma(g.full());
    std::string k = s.substr(6), tors;
    if (auto p = k.find("+t"); p != std::string::npos) {
      tors = k.substr(p + 2);
      k = k.substr(0, p);
    }
    IVec free = parse_ints(k), t = parse_ints(tors);
    int ntors = static_cast<int>(pi.invariants().size()) - pi.free_rank();
    if (t.empty()) t.assign(ntors, 0);
    if (static_cast<int>(free.size()) != pi.free_rank() || static_cast<int>(t.size()) != ntors)
      throw InputError("kappa '" + k + "' does not match pi_1(G)_Gamma with invariants " + to_string(pi.invariants()));
    IVec x = pi.lift(pi.normalize(Elem{free, t}));
    return basic_with_kappa_of(g, g.project_absolute(x));
  }
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.empty() || parts.size() > 3) throw InputError("b must be 'lambda;word[;levi=...]'");
  IsoClass b{parse_coweight(g, parts[0]), parts.size() > 1 ? parse_word(g, parts[1]) : Word{}};
  if (parts.size() == 3) {
    if (parts[2].rfind("levi=", 0) != 0) throw InputError("third field of b must be levi=...");
    IVec lv = parse_ints(parts[2].substr(5));
    for (int i : b.w)
      if (std::find(lv.begin(), lv.end(), i + 1) == lv.end())
        throw InputError("word of b leaves the Levi given by levi=");
  }
  return b;
}

IsoClass isoclass_from_json(const Group& g, const Json& j) {
  try {
    const auto& lam = j.at("lambda_b");
    Elem l;
    if (lam.is_object()) {
      from_json(lam, l);
      l = g.lattice().normalize(l);
    } else {
      std::string s;
      for (const auto& x : lam) s += (s.empty() ? "" : ",") + std::to_string(x.get<Int>());
      l = parse_coweight(g, s);
    }
    Word w = j.contains("w_b") ? word_from_indices(j.at("w_b")) : Word{};
    for (int i : w)
      if (i < 0 || i >= g.num_simple()) throw InputError("w_b index out of range");
    if (j.contains("levi"))
      for (int i : w) {
        auto lv = j.at("levi").get<IVec>();
        if (std::find(lv.begin(), lv.end(), i + 1) == lv.end()) throw InputError("w_b leaves the given levi");
      }
    return IsoClass{l, w};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad class: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

void to_json(Json& j, const Rational& q) { j = Json::array({q.numerator(), q.denominator()}); }
void from_json(const Json& j, Rational& q) {
  if (j.is_number_integer()) {
    q = Rational(j.get<Int>());
    return;
  }
  q = Rational(j.at(0).get<Int>(), j.at(1).get<Int>());
}
void to_json(Json& j, const Elem& e) { j = Json{{"free", e.free}, {"tors", e.tors}}; }
void from_json(const Json& j, Elem& e) {
  e.free = j.at("free").get<IVec>();
  e.tors = j.at("tors").get<IVec>();
}

Json to_json(const IsoClass& b) {
  return Json{{"lambda_b", b.lambda}, {"w_b", word_indices(b.w)}, {"word", word_to_string(b.w)}};
}

namespace {
IsoClass iso_plain(const Json& j) {
  return IsoClass{j.at("lambda_b").get<Elem>(), word_from_indices(j.at("w_b"))};
}
}  // namespace

Json to_json(const BClass& c) {
  return Json{{"rep", to_json(c.rep)}, {"nu", c.nu}, {"kappa", c.kappa}, {"defect", c.defect}, {"basic", c.basic}};
}

BClass bclass_from_json(const Json& j) {
  BClass c;
  c.rep = iso_plain(j.at("rep"));
  c.nu = j.at("nu").get<QVec>();
  c.kappa = j.at("kappa").get<Elem>();
  c.defect = j.at("defect").get<int>();
  c.basic = j.at("basic").get<bool>();
  return c;
}

Json to_json(const InvariantReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  Json pi0{{"witness", r.pi0.witness ? Json(*r.pi0.witness) : Json(nullptr)},
           {"subgroup", r.pi0.subgroup},
           {"hn_irreducible", r.pi0.hn_irreducible},
           {"described", r.pi0.described}};
  return Json{{"schema", kSchemaVersion},
              {"kind", "invariants"},
              {"group", r.group},
              {"mu", r.mu},
              {"b", to_json(r.b)},
              {"nu", r.nu},
              {"kappa", r.kappa},
              {"defect", r.defect},
              {"lambda_b", r.lambda_b},
              {"nonempty", r.nonempty},
              {"virtual_dimension", r.virtual_dimension},
              {"dim", r.dimension ? Json(*r.dimension) : Json(nullptr)},
              {"count", r.irr_orbit_count ? Json(*r.irr_orbit_count) : Json(nullptr)},
              {"diagnostic", r.diagnostic()},
              {"pi0", pi0},
              {"equidimensional", r.equidimensional},
              {"equidimensional_provenance", r.equidimensional_provenance},
              {"checks", checks}};
}

InvariantReport invariant_report_from_json(const Json& j) {
  InvariantReport r;
  r.group = j.at("group").get<std::string>();
  r.mu = j.at("mu").get<Elem>();
  r.b = iso_plain(j.at("b"));
  r.nu = j.at("nu").get<QVec>();
  r.kappa = j.at("kappa").get<Elem>();
  r.defect = j.at("defect").get<int>();
  r.lambda_b = j.at("lambda_b").get<Elem>();
  r.nonempty = j.at("nonempty").get<bool>();
  r.virtual_dimension = j.at("virtual_dimension").get<Q>();
  if (!j.at("dim").is_null()) r.dimension = j.at("dim").get<Int>();
  if (!j.at("count").is_null()) r.irr_orbit_count = j.at("count").get<Int>();
  const auto& p = j.at("pi0");
  if (!p.at("witness").is_null()) r.pi0.witness = p.at("witness").get<Elem>();
  r.pi0.subgroup = p.at("subgroup").get<IVec>();
  r.pi0.hn_irreducible = p.at("hn_irreducible").get<bool>();
  r.pi0.described = p.at("described").get<bool>();
  r.equidimensional = j.at("equidimensional").get<bool>();
  r.equidimensional_provenance = j.at("equidimensional_provenance").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back(Check{c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("detail").get<std::string>()});
  return r;
}

Json to_json(const NewtonStratReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata)
    strata.push_back(Json{{"class", to_json(s.cls)},
                          {"stratum_dim", s.stratum_dim},
                          {"codim", s.codim},
                          {"length_to_max", s.length_to_max},
                          {"closure", s.closure},
                          {"chai_ok", s.chai_ok}});
  return Json{{"schema", kSchemaVersion}, {"kind", "newton_strata"},   {"ambient_dim", r.ambient_dim},
              {"basic", r.basic},         {"maximal", r.maximal},      {"consistent", r.consistent()},
              {"strata", strata}};
}

NewtonStratReport stratification_from_json(const Json& j) {
  NewtonStratReport r;
  r.ambient_dim = j.at("ambient_dim").get<Q>();
  r.basic = j.at("basic").get<int>();
  r.maximal = j.at("maximal").get<int>();
  for (const auto& s : j.at("strata")) {
    StratumRecord x;
    x.cls = bclass_from_json(s.at("class"));
    x.stratum_dim = s.at("stratum_dim").get<Q>();
    x.codim = s.at("codim").get<Q>();
    x.length_to_max = s.at("length_to_max").get<int>();
    x.closure = s.at("closure").get<std::vector<int>>();
    x.chai_ok = s.at("chai_ok").get<bool>();
    r.strata.push_back(x);
  }
  return r;
}

Json to_json(const StratumLabel& l) {
  Json r = Json::array();
  for (const auto& [s, ij] : l.r_set) r.push_back(Json::array({s, ij.first + 1, ij.second + 1}));
  return Json{{"schema", kSchemaVersion},
              {"lambda", slots_json(l.lambda)},
              {"lambda_prime", slots_json(l.lambda_prime)},
              {"lambda_tilde", slots_json(l.lambda_tilde)},
              {"mu_tilde", slots_json(l.mu_tilde)},
              {"nonempty", l.nonempty},
              {"R", r},
              {"dim", l.dim()},
              {"top", l.top},
              {"closed_form_diagnostic", l.closed_form}};
}

StratumLabel stratum_label_from_json(const Json& j) {
  StratumLabel l;
  l.lambda = j.at("lambda").get<Slots>();
  l.lambda_prime = j.at("lambda_prime").get<Slots>();
  l.lambda_tilde = j.at("lambda_tilde").get<Slots>();
  l.mu_tilde = j.at("mu_tilde").get<Slots>();
  l.nonempty = j.at("nonempty").get<bool>();
  for (const auto& x : j.at("R")) l.r_set.push_back({x.at(0).get<int>(), {x.at(1).get<int>() - 1, x.at(2).get<int>() - 1}});
  l.top = j.at("top").get<bool>();
  l.closed_form = j.at("closed_form_diagnostic").get<Q>();
  return l;
}

Json to_json(const MuMSet& m) {
  return Json{{"sigma", m.sigma}, {"m_dom", m.m_dom}, {"m_max", m.m_max}, {"s_m", m.s_m}, {"undecided", m.undecided}};
}

Json to_json(const Assembly& a) {
  return Json{{"levi", levi_json(a.red.m)},
              {"nu", a.red.nu},
              {"rep", to_json(a.red.rep)},
              {"kappa_m", a.red.kappa_m},
              {"defect", a.red.defect},
              {"i_set", a.i_set},
              {"witness", a.witness},
              {"value", a.value},
              {"closed_form", a.closed_form},
              {"upper_bound", a.upper_bound},
              {"count_assembled", a.count_assembled},
              {"count_direct", a.count_direct},
              {"lambda_m", a.lambda_m},
              {"dimension_ok", a.dimension_ok()},
              {"count_ok", a.count_ok()}};
}

Json to_json(const MinimalI& m) {
  Json arrows = Json::array();
  for (const auto& a : m.arrows)
    arrows.push_back(Json{{"from", a.from}, {"to", a.to}, {"root", a.root}, {"r", a.r}});
  return Json{{"reading", m.reading == Reading::Literal ? "literal" : "weights"},
              {"i_leq", m.i_leq},
              {"minima_poset", m.minima_poset},
              {"minima_kappa", m.minima_kappa},
              {"arrows", arrows},
              {"agree", m.agree},
              {"connected", m.connected}};
}

}  // namespace adlv
