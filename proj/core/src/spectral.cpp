#include "ramacert/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "ramacert/error.hpp"

namespace ramacert {

using exact::Int;
using exact::IntPoly;
using exact::MatI64;
using exact::Rat;

exact::MatI64 biadjacency(const Bigraph& x) {
  MatI64 b(x.n1, x.n2);
  for (auto [u, v] : x.edges) b.at(u, v) += 1;
  return b;
}

SpectralData spectrum(const Bigraph& x) {
  const MatI64 b = biadjacency(x);
  const MatI64 bbt = exact::mat_mul(b, exact::mat_transpose(b));

  SpectralData sd;
  sd.char_poly_bbt = exact::charpoly(bbt);
  sd.rank_b = exact::rank_bareiss(b);

  Eigen::MatrixXd m(x.n1, x.n1);
  for (int i = 0; i < x.n1; ++i)
    for (int j = 0; j < x.n1; ++j) m(i, j) = static_cast<double>(bbt.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::InternalInconsistency, "symmetric eigensolver failed");

  sd.bbt_eigs.resize(x.n1);
  for (int i = 0; i < x.n1; ++i)
    sd.bbt_eigs[i] = std::max(0.0, solver.eigenvalues()(x.n1 - 1 - i));
  // Zero eigenvalues are exact: the bottom n1 - rank(B) entries.
  for (int i = sd.rank_b; i < x.n1; ++i) sd.bbt_eigs[i] = 0.0;
  sd.sigma.resize(x.n1);
  for (int i = 0; i < x.n1; ++i) sd.sigma[i] = std::sqrt(sd.bbt_eigs[i]);

  const double top = static_cast<double>((1 + x.q1) * (1 + x.q2));
  if (std::abs(sd.bbt_eigs[0] - top) > 1e-10 * std::max(1.0, top))
    fail(ErrorCode::InternalInconsistency,
         "top eigenvalue does not match (1+q1)(1+q2)");
  const Int lambda1_sq = Int((1 + x.q1)) * Int((1 + x.q2));
  if (exact::poly_eval(sd.char_poly_bbt, lambda1_sq) != 0)
    fail(ErrorCode::InternalInconsistency,
         "(1+q1)(1+q2) is not an exact root of the BB^T char poly");

  const int zeros = x.n1 - sd.rank_b;
  sd.zero_mult = (x.n2 - x.n1) + 2 * zeros;
  sd.lambda1 = sd.sigma[0];
  if (x.n1 >= 2)
    sd.lambda2 = sd.sigma[1];
  else if (sd.zero_mult > 0)
    sd.lambda2 = 0.0;

  const double root_q1q2 = std::sqrt(static_cast<double>(x.q1) * x.q2);
  sd.traces.resize(x.n1 >= 1 ? x.n1 - 1 : 0);
  sd.margins.resize(sd.traces.size());
  for (int j = 1; j < x.n1; ++j) {
    const double c = sd.bbt_eigs[j] - x.q1 - x.q2;
    sd.margins[j - 1] = 2.0 * root_q1q2 - std::abs(c);
    sd.traces[j - 1] = root_q1q2 > 0 ? c / root_q1q2 : c;
  }
  return sd;
}

std::optional<double> second_eigenvalue(const Bigraph&, const SpectralData& sd) {
  return sd.lambda2;
}

bool ramanujan_inequality(const Bigraph&, const SpectralData& sd) {
  for (double m : sd.margins)
    if (m < 0.0) return false;
  return true;
}

namespace {

struct ExactStats {
  int n_outside = 0;    // eigenvalues with (t-q1-q2)^2 > 4 q1 q2, t != top
  bool zero_root = false;  // chi~ has a root at 0
};

// chi~ = char poly of BB^T with the simple Perron root (1+q1)(1+q2) divided
// out; count roots t with g(t) = (t - q1 - q2)^2 - 4 q1 q2 > 0 and detect a
// root at 0, all in exact integer arithmetic.
ExactStats exact_eigenvalue_stats(const Bigraph& x, const SpectralData& sd) {
  ExactStats stats;
  if (x.n1 == 1) return stats;
  const Int top = Int(1 + x.q1) * Int(1 + x.q2);
  IntPoly reduced;
  if (!exact::poly_divide_exact(sd.char_poly_bbt, IntPoly{-top, Int(1)}, &reduced))
    fail(ErrorCode::InternalInconsistency, "Perron root division failed");
  if (exact::poly_eval(reduced, top) == 0)
    fail(ErrorCode::InternalInconsistency, "Perron root is not simple");

  const Int d = Int(x.q1) - Int(x.q2);
  IntPoly g{d * d, Int(-2) * (Int(x.q1) + Int(x.q2)), Int(1)};

  stats.zero_root = exact::poly_eval(reduced, Int(0)) == 0;

  IntPoly sf = exact::poly_squarefree(reduced);
  IntPoly common = exact::poly_gcd(sf, g);
  IntPoly sf2 = sf;
  if (exact::poly_degree(common) >= 1) {
    if (!exact::poly_divide_exact(sf, common, &sf2))
      fail(ErrorCode::InternalInconsistency, "boundary factor division failed");
  }
  if (exact::poly_degree(sf2) >= 1) {
    const Rat lo(-1), hi(top + 1);
    const int total = exact::count_roots_in(sf2, lo, hi);
    const int query = exact::tarski_query(sf2, g, lo, hi);
    stats.n_outside = (total + query) / 2;
  }
  return stats;
}

}  // namespace

bool ramanujan_inequality_exact(const Bigraph& x, const SpectralData& sd) {
  return exact_eigenvalue_stats(x, sd).n_outside == 0;
}

RamanujanVerdict is_ramanujan(const Bigraph& x, const SpectralData& sd,
                              RamanujanMode mode, double tol) {
  if (mode == RamanujanMode::Exact) {
    if (x.n1 == 1) return RamanujanVerdict::Yes;
    const ExactStats stats = exact_eigenvalue_stats(x, sd);
    return (stats.n_outside == 0 && !stats.zero_root) ? RamanujanVerdict::Yes
                                                      : RamanujanVerdict::No;
  }
  if (x.n1 == 1) return RamanujanVerdict::Yes;
  const double scale =
      std::max(1.0, 2.0 * std::sqrt(static_cast<double>(x.q1) * x.q2));
  for (double m : sd.margins)
    if (std::abs(m) <= tol * scale) return RamanujanVerdict::Borderline;
  const bool ok = ramanujan_inequality(x, sd) && sd.rank_b == x.n1;
  return ok ? RamanujanVerdict::Yes : RamanujanVerdict::No;
}

bool is_weakly_ramanujan(const Bigraph& x, const SpectralData& sd) {
  return sd.rank_b == x.n1;
}

bool is_weakly_ramanujan(const Bigraph& x) {
  return exact::rank_bareiss(biadjacency(x)) == x.n1;
}

double feng_li_bound(int q1, int q2) {
  return std::sqrt(static_cast<double>(q1)) + std::sqrt(static_cast<double>(q2));
}

namespace {

void check_regular_connected(const SimpleGraph& g, int* degree_out) {
  if (g.n == 0) fail(ErrorCode::EmptyGraph, "empty graph");
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    ++deg[u];
    ++deg[v];
  }
  for (int i = 0; i < g.n; ++i)
    if (deg[i] != deg[0]) fail(ErrorCode::NotRegular, "graph is not regular");
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);
  for (int i = 1; i < g.n; ++i)
    if (find(i) != find(0)) fail(ErrorCode::NotConnected, "graph is not connected");
  *degree_out = deg[0];
}

}  // namespace

std::vector<double> adjacency_spectrum(const SimpleGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    a(u, v) += 1.0;
    a(v, u) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> eigs(g.n);
  for (int i = 0; i < g.n; ++i) eigs[i] = solver.eigenvalues()(g.n - 1 - i);
  return eigs;
}

namespace {

double second_abs_eigenvalue(const SimpleGraph& g, int k, double tol) {
  const auto eigs = adjacency_spectrum(g);
  double second = 0.0;
  for (double e : eigs) {
    if (std::abs(std::abs(e) - k) <= tol * std::max(1.0, double(k))) continue;
    second = std::max(second, std::abs(e));
  }
  return second;
}

}  // namespace

bool regular_ramanujan_check(const SimpleGraph& g, double tol) {
  int k = 0;
  check_regular_connected(g, &k);
  const double lam = second_abs_eigenvalue(g, k, tol);
  return lam <= 2.0 * std::sqrt(static_cast<double>(k - 1)) + tol;
}

double expansion_coefficient_bound(const SimpleGraph& g) {
  int k = 0;
  check_regular_connected(g, &k);
  const double lam = second_abs_eigenvalue(g, k, 1e-9);
  return (1.0 - lam / k) / 2.0;
}

}  // namespace ramacert
