// Command-line front end: certification, spectra, zeta functions, graph
// generation, Hecke-module queries and parameter scans.
//
// Exit codes: 0 success, 1 usage error, 2 input/validation error,
// 3 internal inconsistency (a theorem-equivalence check failed).

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramacert/cert.hpp"
#include "ramacert/error.hpp"
#include "ramacert/graph.hpp"
#include "ramacert/hecke.hpp"
#include "ramacert/spectral.hpp"
#include "ramacert/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ramacert;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

// ------------------------------------------------------------ human output

void print_certify_human(const json& j) {
  const auto& g = j["graph"];
  std::cout << "graph: n1=" << g["n1"] << " n2=" << g["n2"] << " q1=" << g["q1"]
            << " q2=" << g["q2"] << " |E|=" << g["edges"].size()
            << " rank=" << j["rank"] << "\n";
  std::cout << "verdict: " << j["verdict"].get<std::string>();
  if (j["borderline"].get<bool>())
    std::cout << "  [borderline margins; rerun with --exact]";
  std::cout << "\n\nspectrum (sigma_j, margin to Ramanujan bound):\n";
  for (const auto& row : j["spectrum"]) {
    std::cout << "  " << row["sigma"].get<double>();
    if (!row["margin"].is_null()) std::cout << "   margin " << row["margin"].get<double>();
    else std::cout << "   (trivial)";
    std::cout << "\n";
  }
  const auto& f = j["factorization"];
  std::cout << "\nzeta factor multiplicities: St=" << f["st"] << " ds=" << f["ds"]
            << " sph=" << f["sph"] << " nt=" << f["nt"] << "\n";
  for (const auto& q : f["quadratics"]) {
    std::cout << "  quadratic: trace=" << q["trace"].get<double>()
              << " mult=" << q["mult"] << " nu=(" << q["nu"]["re"].get<double>()
              << ", " << q["nu"]["im"].get<double>() << ")"
              << (q["tempered"].get<bool>() ? " tempered" : " NOT tempered") << "\n";
  }
  std::cout << "\nRiemann Hypothesis: "
            << (j["rh"]["satisfied"].get<bool>() ? "satisfied" : "VIOLATED") << " ("
            << j["rh"]["zeros"].size() << " zeros)\n";
  std::cout << "consistency checks:\n";
  for (const auto& c : j["consistency"])
    std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] "
              << c["name"].get<std::string>() << "\n";
}

// -------------------------------------------------------------- subcommands

struct CertifyArgs {
  std::string input;
  bool use_json = false;
  bool exact = false;
  bool allow_multi = false;
  bool inject = false;
  double tol = 1e-9;
  int max_edges = 500;
};

int run_certify(const CertifyArgs& a) {
  const Bigraph x = parse_edge_list(read_file(a.input), a.allow_multi);
  CertifyOptions opts;
  opts.exact = a.exact;
  opts.tol = a.tol;
  opts.max_edges = a.max_edges;
  opts.inject_inconsistency = a.inject;
  const CertificationReport rep = certify(x, opts);
  const std::string text = report_to_json(rep);
  if (a.use_json) {
    std::cout << text;
  } else {
    print_certify_human(json::parse(text));
  }
  return 0;
}

struct SpectrumArgs {
  std::string input;
  bool use_json = false;
  bool exact = false;
  bool allow_multi = false;
  double tol = 1e-9;
};

int run_spectrum(const SpectrumArgs& a) {
  const Bigraph x = parse_edge_list(read_file(a.input), a.allow_multi);
  const SpectralData sd = spectrum(x);
  const RamanujanVerdict v = is_ramanujan(
      x, sd, a.exact ? RamanujanMode::Exact : RamanujanMode::Numeric, a.tol);
  json j;
  j["n1"] = x.n1;
  j["n2"] = x.n2;
  j["q1"] = x.q1;
  j["q2"] = x.q2;
  j["sigma"] = sd.sigma;
  json chi = json::array();
  for (const auto& c : sd.char_poly_bbt) chi.push_back(exact::to_string(c));
  j["char_poly_bbt"] = std::move(chi);
  j["zero_mult"] = sd.zero_mult;
  j["lambda1"] = sd.lambda1;
  if (sd.lambda2) j["lambda2"] = *sd.lambda2; else j["lambda2"] = nullptr;
  j["weakly_ramanujan"] = is_weakly_ramanujan(x, sd);
  j["ramanujan"] = v == RamanujanVerdict::Yes        ? "Yes"
                   : v == RamanujanVerdict::No       ? "No"
                                                     : "Borderline";
  j["feng_li"] = feng_li_bound(x.q1, x.q2);
  if (a.use_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "bigraph (" << x.q1 + 1 << ", " << x.q2 + 1 << ")-biregular, n1="
              << x.n1 << " n2=" << x.n2 << "\n";
    std::cout << "sigma:";
    for (double s : sd.sigma) std::cout << " " << s;
    std::cout << "\nzero multiplicity: " << sd.zero_mult
              << "\nweakly Ramanujan: " << (j["weakly_ramanujan"].get<bool>() ? "yes" : "no")
              << "\nRamanujan: " << j["ramanujan"].get<std::string>()
              << "\nFeng-Li reference: " << j["feng_li"].get<double>() << "\n";
  }
  return 0;
}

struct ZetaArgs {
  std::string input;
  bool use_json = false;
  bool allow_multi = false;
  int max_edges = 500;
};

int run_zeta(const ZetaArgs& a) {
  const Bigraph x = parse_edge_list(read_file(a.input), a.allow_multi);
  const SpectralData sd = spectrum(x);
  const ZetaPolynomial z = zeta_inverse_det(x, a.max_edges);
  const ZetaFactorization fact = factorize(x, z, sd);
  const RHReport rh = rh_report(x, fact);
  json j;
  json coeffs = json::array();
  for (const auto& c : z) coeffs.push_back(exact::to_string(c));
  j["zeta_coeffs"] = std::move(coeffs);
  j["factorization"] = {{"st", fact.mult_st},
                        {"ds", fact.mult_ds},
                        {"sph", fact.mult_sph},
                        {"nt", fact.mult_nt}};
  json quads = json::array();
  for (const auto& q : fact.quadratics)
    quads.push_back(json{{"trace", q.trace}, {"mult", q.mult}});
  j["factorization"]["quadratics"] = std::move(quads);
  json zeros = json::array();
  for (const auto& zz : rh.zeros)
    zeros.push_back(json{{"re", zz.u.real()},
                         {"im", zz.u.imag()},
                         {"class", zz.cls == ZeroClass::Trivial      ? "trivial"
                                   : zz.cls == ZeroClass::Boundary   ? "boundary"
                                                                     : "nontrivial"}});
  j["rh"] = {{"satisfied", rh.satisfied}, {"zeros", std::move(zeros)}};
  if (a.use_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Z_X(u)^-1 degree " << z.size() - 1 << ", coefficients:\n ";
    for (const auto& c : z) std::cout << " " << exact::to_string(c);
    std::cout << "\nmultiplicities: St=" << fact.mult_st << " ds=" << fact.mult_ds
              << " sph=" << fact.mult_sph << " nt=" << fact.mult_nt << "\n"
              << "RH " << (rh.satisfied ? "satisfied" : "VIOLATED") << "\n";
  }
  return 0;
}

struct GenerateArgs {
  std::string model;
  std::string out;
  std::string base = "k4";
  int m = 2, n = 3;
  int n1 = 4, n2 = 6, q1 = 2, q2 = 1;
  std::uint64_t seed = 1;
  bool allow_multi = false;
};

int run_generate(const GenerateArgs& a) {
  Bigraph x;
  if (a.model == "complete_bipartite") {
    x = complete_bipartite(a.m, a.n);
  } else if (a.model == "subdivision") {
    SimpleGraph base;
    if (a.base == "k4") base = SimpleGraph::complete(4);
    else if (a.base == "k33") base = SimpleGraph::complete_bipartite(3, 3);
    else if (a.base == "petersen") base = SimpleGraph::petersen();
    else if (a.base.size() > 1 && a.base[0] == 'k')
      base = SimpleGraph::complete(std::stoi(a.base.substr(1)));
    else
      fail(ErrorCode::InvalidArgument,
           "unknown base graph '" + a.base + "' (use k4, k33, petersen or k<n>)");
    x = subdivision(base);
  } else if (a.model == "random_biregular") {
    x = random_biregular(a.n1, a.n2, a.q1, a.q2, a.seed, a.allow_multi);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown model '" + a.model + "'");
  }
  write_output(a.out, serialize(x));
  return 0;
}

struct HeckeArgs {
  bool su3 = false;
  double q = 2.0;
  double lambda = 3.0;
  double lambda_star = 1.0;
  std::optional<double> nu_re;
  double nu_im = 0.0;
  bool nu_im_boundary = false;
};

json onedim_json(const hecke::ModuleDescriptor& m) {
  const auto& od = std::get<hecke::OneDim>(m.kind);
  json j;
  j["label"] = hecke::to_string(od.label);
  j["T"] = od.t_scalar;
  j["theta"] = od.theta_scalar;
  json poly = json::array();
  for (const auto& c : hecke::char_poly_module(m)) poly.push_back(c.real());
  j["char_poly"] = std::move(poly);
  j["tempered"] = hecke::is_tempered(m);
  j["discrete_series"] = hecke::is_discrete_series(m);
  return j;
}

int run_hecke(const HeckeArgs& a) {
  const hecke::HeckeParams p =
      a.su3 ? hecke::params_from_su3(a.q)
            : hecke::make_params(a.q, a.lambda, a.lambda_star);
  json j;
  j["params"] = {{"q", p.q},
                 {"lambda", p.lambda},
                 {"lambda_star", p.lambda_star},
                 {"q1", p.q1()},
                 {"q2", p.q2()},
                 {"valencies", json::array({p.q1() + 1, p.q2() + 1})}};
  json onedims = json::array();
  for (const auto& m : hecke::one_dimensionals(p)) onedims.push_back(onedim_json(m));
  j["one_dimensionals"] = std::move(onedims);
  j["graded"] = {
      {"mu_at_xi_0", hecke::graded_parameter(hecke::XiPoint::Zero, p).mu},
      {"mu_at_xi_pi", hecke::graded_parameter(hecke::XiPoint::PiOverLogQ, p).mu}};

  if (a.nu_re) {
    const double im = a.nu_im_boundary ? p.boundary_im() : a.nu_im;
    const std::complex<double> nu_raw(*a.nu_re, im);
    const hecke::ModuleDescriptor mod = hecke::principal_series_module(nu_raw, p);
    const auto& ps = std::get<hecke::PrincipalSeries>(mod.kind);
    json m;
    m["nu"] = {{"re", ps.nu.nu.real()}, {"im", ps.nu.nu.imag()}};
    const auto trace = hecke::central_character(ps.nu.nu, p);
    m["central_character"] = {{"re", trace.real()}, {"im", trace.imag()}};
    m["reducible"] = ps.reducible;
    m["tempered"] = hecke::is_tempered(mod);
    m["unitary"] = hecke::is_unitary(ps.nu, p);
    json poly = json::array();
    for (const auto& c : hecke::char_poly_module(mod))
      poly.push_back(json{{"re", c.real()}, {"im", c.imag()}});
    m["char_poly"] = std::move(poly);
    if (ps.reducible) {
      // Report both one-dimensional constituents at a reducibility point.
      json parts = json::array();
      const auto onedim_mods = hecke::one_dimensionals(p);
      const bool at_sph_point =
          hecke::parameter_distance(
              ps.nu.nu, {0.5 * (p.lambda + p.lambda_star), 0.0}, p) <= 1e-12;
      for (const auto& od : onedim_mods) {
        const auto label = std::get<hecke::OneDim>(od.kind).label;
        const bool wanted =
            at_sph_point ? (label == hecke::OneDimLabel::Sph ||
                            label == hecke::OneDimLabel::St)
                         : (label == hecke::OneDimLabel::Nt ||
                            label == hecke::OneDimLabel::Ds);
        if (wanted) parts.push_back(onedim_json(od));
      }
      m["constituents"] = std::move(parts);
    }
    j["module"] = std::move(m);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct ScanArgs {
  int n1 = 4, n2 = 6, q1 = 2, q2 = 1;
  int count = 10;
  std::uint64_t seed = 1;
  bool use_json = false;
  bool exact = false;
  int max_edges = 500;
};

int run_scan(const ScanArgs& a) {
  json results = json::array();
  int ramanujan_count = 0;
  std::vector<double> lambdas;
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
    const Bigraph x = random_biregular(a.n1, a.n2, a.q1, a.q2, seed);
    CertifyOptions opts;
    opts.exact = a.exact;
    opts.max_edges = a.max_edges;
    const CertificationReport rep = certify(x, opts);
    const bool is_ram = rep.verdict == CertVerdict::Ramanujan;
    if (is_ram) ++ramanujan_count;
    const double lam = rep.spectral.lambda2.value_or(0.0);
    lambdas.push_back(lam);
    results.push_back(json{{"seed", seed},
                           {"verdict", to_string(rep.verdict)},
                           {"lambda", lam},
                           {"borderline", rep.borderline}});
  }
  const double fl = feng_li_bound(a.q1, a.q2);
  const double lo = 0.0;
  double hi = fl;
  for (double l : lambdas) hi = std::max(hi, l);
  hi = hi * 1.05 + 1e-9;
  constexpr int kBins = 20;
  std::vector<int> bins(kBins, 0);
  for (double l : lambdas) {
    int b = static_cast<int>((l - lo) / (hi - lo) * kBins);
    b = std::clamp(b, 0, kBins - 1);
    ++bins[b];
  }
  json j;
  j["params"] = {{"n1", a.n1}, {"n2", a.n2}, {"q1", a.q1}, {"q2", a.q2}};
  j["count"] = a.count;
  j["fraction_ramanujan"] =
      static_cast<double>(ramanujan_count) / std::max(1, a.count);
  j["feng_li"] = fl;
  j["results"] = std::move(results);
  j["histogram"] = {{"lo", lo}, {"hi", hi}, {"bins", bins}};
  if (a.use_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << a.count << " random (" << a.q1 + 1 << ", " << a.q2 + 1
            << ")-biregular graphs on (" << a.n1 << ", " << a.n2 << ") vertices\n"
            << "fraction Ramanujan: " << j["fraction_ramanujan"].get<double>()
            << "\nlambda(X) histogram (| marks Feng-Li value " << fl << "):\n";
  const int fl_bin = std::clamp(static_cast<int>((fl - lo) / (hi - lo) * kBins),
                                0, kBins - 1);
  for (int b = 0; b < kBins; ++b) {
    const double left = lo + (hi - lo) * b / kBins;
    std::cout << "  " << left << "\t";
    for (int c = 0; c < bins[b]; ++c) std::cout << '#';
    if (b == fl_bin) std::cout << "  <-- Feng-Li";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan bigraph certification toolkit"};
  app.require_subcommand(1);

  CertifyArgs cert_args;
  auto* cert_cmd = app.add_subcommand(
      "certify", "Certify a bigraph: spectrum, zeta, Hecke decomposition");
  cert_cmd->add_option("input", cert_args.input, "edge-list file")->required();
  cert_cmd->add_flag("--json", cert_args.use_json, "emit the JSON report");
  cert_cmd->add_flag("--exact", cert_args.exact, "exact spectral decisions");
  cert_cmd->add_flag("--allow-multi", cert_args.allow_multi, "permit parallel edges");
  cert_cmd->add_option("--tol", cert_args.tol, "relative verdict tolerance");
  cert_cmd->add_option("--max-edges", cert_args.max_edges, "determinant-route cap");
  cert_cmd->add_flag("--self-test-inconsistency", cert_args.inject, "")->group("");

  SpectrumArgs spec_args;
  auto* spec_cmd = app.add_subcommand("spectrum", "Singular values and Ramanujan tests");
  spec_cmd->add_option("input", spec_args.input, "edge-list file")->required();
  spec_cmd->add_flag("--json", spec_args.use_json, "emit JSON");
  spec_cmd->add_flag("--exact", spec_args.exact, "exact spectral decisions");
  spec_cmd->add_flag("--allow-multi", spec_args.allow_multi, "permit parallel edges");
  spec_cmd->add_option("--tol", spec_args.tol, "relative verdict tolerance");

  ZetaArgs zeta_args;
  auto* zeta_cmd = app.add_subcommand("zeta", "Reciprocal zeta polynomial and RH report");
  zeta_cmd->add_option("input", zeta_args.input, "edge-list file")->required();
  zeta_cmd->add_flag("--json", zeta_args.use_json, "emit JSON");
  zeta_cmd->add_flag("--allow-multi", zeta_args.allow_multi, "permit parallel edges");
  zeta_cmd->add_option("--max-edges", zeta_args.max_edges, "determinant-route cap");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write an edge-list file from a model");
  gen_cmd->add_option("model", gen_args.model,
                      "complete_bipartite | subdivision | random_biregular")
      ->required();
  gen_cmd->add_option("--out", gen_args.out, "output file (default stdout)");
  gen_cmd->add_option("--m", gen_args.m, "complete_bipartite: left side");
  gen_cmd->add_option("--n", gen_args.n, "complete_bipartite: right side");
  gen_cmd->add_option("--base", gen_args.base, "subdivision base: k4|k33|petersen|k<n>");
  gen_cmd->add_option("--n1", gen_args.n1, "random: color-1 count");
  gen_cmd->add_option("--n2", gen_args.n2, "random: color-2 count");
  gen_cmd->add_option("--q1", gen_args.q1, "random: q1");
  gen_cmd->add_option("--q2", gen_args.q2, "random: q2");
  gen_cmd->add_option("--seed", gen_args.seed, "random: seed");
  gen_cmd->add_flag("--allow-multi", gen_args.allow_multi, "permit parallel edges");

  HeckeArgs hecke_args;
  auto* hecke_cmd = app.add_subcommand("hecke", "Iwahori-Hecke module classification");
  hecke_cmd->add_flag("--su3", hecke_args.su3, "SU(3) parameters (lambda, lambda*) = (3, 1)");
  hecke_cmd->add_option("--q", hecke_args.q, "residue cardinality")->required();
  hecke_cmd->add_option("--lambda", hecke_args.lambda, "parameter lambda");
  hecke_cmd->add_option("--lambda-star", hecke_args.lambda_star, "parameter lambda*");
  double nu_re_storage = 0.0;
  auto* nu_opt = hecke_cmd->add_option("--nu", nu_re_storage, "Re nu of a principal series");
  hecke_cmd->add_option("--nu-im", hecke_args.nu_im, "Im nu");
  hecke_cmd->add_flag("--nu-im-boundary", hecke_args.nu_im_boundary,
                      "set Im nu = pi / log q");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Certify N seeded random graphs; report Ramanujan fraction");
  scan_cmd->add_option("--n1", scan_args.n1, "color-1 count")->required();
  scan_cmd->add_option("--n2", scan_args.n2, "color-2 count")->required();
  scan_cmd->add_option("--q1", scan_args.q1, "q1")->required();
  scan_cmd->add_option("--q2", scan_args.q2, "q2")->required();
  scan_cmd->add_option("--count", scan_args.count, "number of graphs");
  scan_cmd->add_option("--seed", scan_args.seed, "base seed");
  scan_cmd->add_flag("--json", scan_args.use_json, "emit JSON");
  scan_cmd->add_flag("--exact", scan_args.exact, "exact spectral decisions");
  scan_cmd->add_option("--max-edges", scan_args.max_edges, "determinant-route cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cert_cmd->parsed()) return run_certify(cert_args);
    if (spec_cmd->parsed()) return run_spectrum(spec_args);
    if (zeta_cmd->parsed()) return run_zeta(zeta_args);
    if (gen_cmd->parsed()) return run_generate(gen_args);
    if (hecke_cmd->parsed()) {
      if (nu_opt->count() > 0 || hecke_args.nu_im_boundary)
        hecke_args.nu_re = nu_re_storage;
      return run_hecke(hecke_args);
    }
    if (scan_cmd->parsed()) return run_scan(scan_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
