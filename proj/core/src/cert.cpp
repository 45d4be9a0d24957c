#include "ramacert/cert.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include <nlohmann/json.hpp>

#include "ramacert/error.hpp"

namespace ramacert {

using json = nlohmann::ordered_json;

int Decomposition::total_degree() const {
  int total = 0;
  for (const auto& e : entries) {
    const int deg = std::holds_alternative<hecke::PrincipalSeries>(e.module.kind) ? 2 : 1;
    total += deg * e.multiplicity;
  }
  return total;
}

Decomposition decompose(const Bigraph& x, const ZetaFactorization& fact,
                        const SpectralData& sd) {
  (void)sd;
  const hecke::HeckeParams params = hecke::params_for_bigraph(x.q1, x.q2);
  const auto onedims = hecke::one_dimensionals(params);
  auto onedim = [&](hecke::OneDimLabel label) -> const hecke::ModuleDescriptor& {
    for (const auto& m : onedims)
      if (std::get<hecke::OneDim>(m.kind).label == label) return m;
    fail(ErrorCode::InternalInconsistency, "one-dimensional module lookup");
  };

  Decomposition dec;
  dec.entries.push_back({onedim(hecke::OneDimLabel::St), fact.mult_st});
  dec.entries.push_back({onedim(hecke::OneDimLabel::Sph), fact.mult_sph});
  if (fact.mult_ds > 0)
    dec.entries.push_back({onedim(hecke::OneDimLabel::Ds), fact.mult_ds});
  if (fact.mult_nt > 0)
    dec.entries.push_back({onedim(hecke::OneDimLabel::Nt), fact.mult_nt});
  for (const auto& qf : fact.quadratics) {
    const double eig = qf.c + x.q1 + x.q2;
    const double sigma = std::sqrt(std::max(0.0, eig));
    const hecke::SpectralParameter nu =
        hecke::eigenvalue_to_parameter(sigma, params);
    dec.entries.push_back(
        {hecke::ModuleDescriptor{
             hecke::PrincipalSeries{nu, hecke::is_reducible(nu, params)}, params},
         qf.mult});
  }
  return dec;
}

bool conjecture_check(const Decomposition& dec) {
  for (const auto& e : dec.entries) {
    if (const auto* od = std::get_if<hecke::OneDim>(&e.module.kind))
      if (od->label == hecke::OneDimLabel::Sph) continue;  // trivial rep
    if (!hecke::is_tempered(e.module)) return false;
  }
  return true;
}

const char* to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::Ramanujan: return "Ramanujan";
    case CertVerdict::WeaklyRamanujanOnly: return "WeaklyRamanujanOnly";
    case CertVerdict::NotWeaklyRamanujan: return "NotWeaklyRamanujan";
  }
  return "?";
}

CertificationReport certify(const Bigraph& x, const CertifyOptions& opts) {
  if (x.rank() < 1)
    fail(ErrorCode::AcyclicGraph,
         "certification requires a cycle (graph rank >= 1)");

  CertificationReport rep;
  rep.graph = x;
  rep.rank = x.rank();
  rep.spectral = spectrum(x);

  const ZetaPolynomial zdet = zeta_inverse_det(x, opts.max_edges);
  const ZetaPolynomial zprod = zeta_inverse_product(x, rep.spectral);
  const bool dual_route_equal = zdet == zprod;
  rep.zeta = zdet;

  rep.factorization = factorize(x, rep.zeta, rep.spectral);
  rep.rh = rh_report(x, rep.factorization);
  rep.decomposition = decompose(x, rep.factorization, rep.spectral);
  rep.conjecture_holds = conjecture_check(rep.decomposition);

  rep.weakly_ramanujan = is_weakly_ramanujan(x, rep.spectral);
  rep.ramanujan_inequality = opts.exact
                                 ? ramanujan_inequality_exact(x, rep.spectral)
                                 : ramanujan_inequality(x, rep.spectral);
  const double scale =
      std::max(1.0, 2.0 * std::sqrt(static_cast<double>(x.q1) * x.q2));
  rep.borderline = false;
  for (double m : rep.spectral.margins)
    if (std::abs(m) <= opts.tol * scale) rep.borderline = true;

  if (!rep.weakly_ramanujan)
    rep.verdict = CertVerdict::NotWeaklyRamanujan;
  else if (rep.ramanujan_inequality)
    rep.verdict = CertVerdict::Ramanujan;
  else
    rep.verdict = CertVerdict::WeaklyRamanujanOnly;

  // Consistency suite. Each equivalence is a theorem; the comparisons use
  // the inequality half of the Ramanujan property, which the conjecture and
  // the Riemann Hypothesis track exactly (for q1 != q2 it coincides with
  // the full property).
  const auto& fact = rep.factorization;
  rep.consistency.push_back({"theorem_conjecture_iff_ramanujan",
                             rep.conjecture_holds == rep.ramanujan_inequality});
  rep.consistency.push_back(
      {"lemma_rh_iff_ramanujan", rep.rh.satisfied == rep.ramanujan_inequality});
  rep.consistency.push_back({"nt_absent_iff_weakly_ramanujan",
                             (fact.mult_nt == 0) == rep.weakly_ramanujan});
  rep.consistency.push_back({"zeta_dual_route_equal", dual_route_equal});
  rep.consistency.push_back(
      {"zeta_degree_is_edge_count",
       exact::poly_degree(rep.zeta) == x.num_edges() &&
           x.num_edges() == (rep.rank - 1) + (x.n2 - x.n1) + 2 * x.n1});
  rep.consistency.push_back(
      {"factor_multiplicities",
       fact.mult_st == rep.rank && fact.mult_sph == 1 &&
           fact.mult_ds >= x.n2 - x.n1 &&
           fact.mult_nt == fact.mult_ds - (x.n2 - x.n1) &&
           rep.decomposition.total_degree() == x.num_edges()});

  if (opts.inject_inconsistency && !rep.consistency.empty())
    rep.consistency.front().pass = !rep.consistency.front().pass;

  for (const auto& check : rep.consistency) {
    if (!check.pass)
      fail(ErrorCode::InternalInconsistency,
           "consistency check failed: " + check.name);
  }
  return rep;
}

std::string report_to_json(const CertificationReport& rep, int indent) {
  json j;
  j["format_version"] = 1;
  {
    json g;
    g["n1"] = rep.graph.n1;
    g["n2"] = rep.graph.n2;
    g["q1"] = rep.graph.q1;
    g["q2"] = rep.graph.q2;
    json edges = json::array();
    for (auto [u, v] : rep.graph.edges) edges.push_back(json::array({u, v}));
    g["edges"] = std::move(edges);
    j["graph"] = std::move(g);
  }
  j["rank"] = rep.rank;
  j["verdict"] = to_string(rep.verdict);
  j["borderline"] = rep.borderline;
  {
    json spec = json::array();
    for (size_t i = 0; i < rep.spectral.sigma.size(); ++i) {
      json entry;
      entry["sigma"] = rep.spectral.sigma[i];
      if (i == 0)
        entry["margin"] = nullptr;  // trivial eigenvalue, no test applies
      else
        entry["margin"] = rep.spectral.margins[i - 1];
      spec.push_back(std::move(entry));
    }
    j["spectrum"] = std::move(spec);
  }
  {
    json coeffs = json::array();
    for (const auto& c : rep.zeta) coeffs.push_back(exact::to_string(c));
    j["zeta_coeffs"] = std::move(coeffs);
  }
  {
    json f;
    f["st"] = rep.factorization.mult_st;
    f["ds"] = rep.factorization.mult_ds;
    f["sph"] = rep.factorization.mult_sph;
    f["nt"] = rep.factorization.mult_nt;
    json quads = json::array();
    size_t ps_index = 0;
    std::vector<const DecompositionEntry*> ps_entries;
    for (const auto& e : rep.decomposition.entries)
      if (std::holds_alternative<hecke::PrincipalSeries>(e.module.kind))
        ps_entries.push_back(&e);
    for (const auto& qf : rep.factorization.quadratics) {
      json q;
      q["trace"] = qf.trace;
      q["mult"] = qf.mult;
      if (ps_index < ps_entries.size()) {
        const auto& ps =
            std::get<hecke::PrincipalSeries>(ps_entries[ps_index]->module.kind);
        q["nu"] = json{{"re", ps.nu.nu.real()}, {"im", ps.nu.nu.imag()}};
        q["tempered"] = hecke::is_tempered(ps_entries[ps_index]->module);
      }
      ++ps_index;
      quads.push_back(std::move(q));
    }
    f["quadratics"] = std::move(quads);
    j["factorization"] = std::move(f);
  }
  {
    json rh;
    rh["satisfied"] = rep.rh.satisfied;
    json zeros = json::array();
    for (const auto& z : rep.rh.zeros) {
      json entry;
      entry["re"] = z.u.real();
      entry["im"] = z.u.imag();
      entry["class"] = z.cls == ZeroClass::Trivial      ? "trivial"
                       : z.cls == ZeroClass::Boundary   ? "boundary"
                                                        : "nontrivial";
      zeros.push_back(std::move(entry));
    }
    rh["zeros"] = std::move(zeros);
    j["rh"] = std::move(rh);
  }
  {
    json checks = json::array();
    for (const auto& c : rep.consistency)
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    j["consistency"] = std::move(checks);
  }
  return j.dump(indent) + "\n";
}

}  // namespace ramacert
