#include "adlv/adlv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace adlv {

Q virtual_dimension(const Group& g, const Elem& mu, const IsoClass& b) {
  return g.pair_rho(sub(g.rational(g.dominance(mu).rep), newton_point(g, b))) - Q(class_defect(g, b), 2);
}

bool InvariantReport::diagnostic() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
}

namespace {

// Gamma-weight multiplicity read off the path model
Int littelmann_gamma(const Group& g, const Elem& mu, const Elem& lambda_gamma) {
  Int s = 0;
  for (const auto& [w, m] : littelmann_character(g, mu))
    if (g.to_gamma(w) == lambda_gamma) s += m;
  return s;
}

std::string qs(const Q& q) { return to_string(q); }

}  // namespace

InvariantReport invariant_report(const Group& g, const Elem& mu_in, const IsoClass& b) {
  InvariantReport r;
  r.group = g.name();
  r.mu = g.dominance(mu_in).rep;
  r.b = b;
  r.nu = newton_point(g, b);
  r.kappa = kappa(g, b);
  r.defect = class_defect(g, b);
  r.lambda_b = lambda_b(g, b);
  r.virtual_dimension = virtual_dimension(g, r.mu, b);
  r.nonempty = mazur(g, r.mu, b);
  r.equidimensional = true;
  r.equidimensional_provenance =
      "equal characteristic: unconditional; mixed characteristic: conditional on the embedding hypotheses";
  r.pi0.subgroup = g.pi1_sigma_invariants().invariants;
  r.pi0.witness = g.solve_sigma_minus_one(g.pi1_inertia(g.full()).sub(g.kappa_inertia(r.mu), g.kappa_inertia(b.lambda)));
  r.pi0.hn_irreducible = hn_irreducible(g, r.mu, b);
  r.pi0.described = r.nonempty && r.pi0.hn_irreducible && r.pi0.witness.has_value();
  if (!r.nonempty) return r;

  r.checks.push_back({"pi0_witness", r.pi0.witness.has_value(), "(sigma-1)x = kappa(mu) - kappa(b) in pi_1(G)_I"});
  bool integral = r.virtual_dimension.denominator() == 1;
  r.checks.push_back({"dimension_integral", integral, qs(r.virtual_dimension)});
  Int count = weight_multiplicity_gamma(g, r.mu, r.lambda_b);

  // dimension: Levi assembly
  try {
    auto a = assembled_dimension(g, r.mu, b);
    r.checks.push_back({"assembly_dimension", a.dimension_ok(),
                        "assembled " + qs(a.value) + ", bound " + qs(a.upper_bound) + ", closed form " + qs(a.closed_form)});
    if (a.red.m.size() != static_cast<size_t>(g.num_simple()))
      r.checks.push_back({"assembly_count", a.count_ok(),
                          "assembled " + std::to_string(a.count_assembled) + ", direct " + std::to_string(a.count_direct)});
  } catch (const std::exception& e) {
    r.checks.push_back({"assembly_dimension", false, e.what()});
  }

  // superbasic engine
  if (superbasic_setup(g, b, 1)) {
    try {
      auto mus = decompose_minuscule(g, r.mu);
      auto inv = superbasic_invariants(*superbasic_setup(g, b, static_cast<int>(mus.size())), mus);
      r.checks.push_back({"superbasic_dimension", Q(inv.dimension) == r.virtual_dimension,
                          std::to_string(inv.dimension) + " vs " + qs(r.virtual_dimension)});
      if (mus.size() == 1)
        r.checks.push_back({"superbasic_count", inv.component_orbit_count == count,
                            std::to_string(inv.component_orbit_count) + " vs " + std::to_string(count)});
    } catch (const std::exception& e) {
      r.checks.push_back({"superbasic_dimension", false, e.what()});
    }
  }

  // count: path model
  Int paths = littelmann_gamma(g, r.mu, r.lambda_b);
  r.checks.push_back({"path_count", paths == count, std::to_string(paths) + " vs " + std::to_string(count)});

  if (!r.diagnostic()) {
    r.dimension = r.virtual_dimension.numerator();
    r.irr_orbit_count = count;
  }
  return r;
}

bool NewtonStratReport::consistent() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumRecord& s) { return s.chai_ok; });
}

NewtonStratReport newton_stratification(const Group& g, const Elem& mu_in) {
  Elem mu = g.dominance(mu_in).rep;
  NewtonStratReport r;
  auto classes = bgmu(g, mu);
  r.ambient_dim = Q(2) * g.pair_rho(mu);
  r.basic = basic_index(classes);
  r.maximal = maximal_index(classes);
  for (size_t i = 0; i < classes.size(); ++i) {
    StratumRecord s;
    s.cls = classes[i];
    s.stratum_dim = g.pair_rho(add(g.rational(mu), s.cls.nu)) - Q(s.cls.defect, 2);
    s.codim = r.ambient_dim - s.stratum_dim;
    s.length_to_max = chain_length(g, classes, static_cast<int>(i), r.maximal);
    for (size_t k = 0; k < classes.size(); ++k)
      if (poset_leq(g, classes[k], classes[i])) s.closure.push_back(static_cast<int>(k));
    s.chai_ok = s.codim == Q(s.length_to_max);
    r.strata.push_back(std::move(s));
  }
  return r;
}

std::vector<Elem> dominant_grid(const Group& g, Int max_two_rho) {
  int r = g.num_simple(), f = g.dim();
  if (r == 0) return {g.lattice().zero()};
  IMat a(r, IVec(f));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < f; ++k) {
      Q c = g.roots()[g.simple()[i]].root[k];
      if (c.denominator() != 1) throw std::logic_error("non-integral simple root");
      a[i][k] = c.numerator();
    }
  std::vector<Elem> out;
  IVec p(r, 0);
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == r) {
      auto x = solve_integer(a, p);
      if (!x) return;
      Elem mu = g.make(*x);
      if (Q(2) * g.pair_rho(mu) <= Q(max_two_rho)) out.push_back(mu);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      p[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, max_two_rho);
  return out;
}

}  // namespace adlv
