#include "ramacert/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ramacert/error.hpp"

namespace ramacert {

using exact::Int;
using exact::IntPoly;
using exact::MatI64;

EdgeOperators edge_operators(const Bigraph& x) {
  EdgeOperators ops;
  ops.m = x.num_edges();
  ops.q1 = x.q1;
  ops.q2 = x.q2;
  std::vector<std::vector<int>> at1(x.n1), at2(x.n2);
  for (int e = 0; e < ops.m; ++e) {
    at1[x.edges[e].first].push_back(e);
    at2[x.edges[e].second].push_back(e);
  }
  ops.share1.resize(ops.m);
  ops.share2.resize(ops.m);
  for (int e = 0; e < ops.m; ++e) {
    for (int f : at1[x.edges[e].first])
      if (f != e) ops.share1[e].push_back(f);
    for (int f : at2[x.edges[e].second])
      if (f != e) ops.share2[e].push_back(f);
  }
  return ops;
}

exact::MatI64 EdgeOperators::t1_dense() const {
  MatI64 t(m, m);
  for (int e = 0; e < m; ++e)
    for (int f : share1[e]) t.at(e, f) += 1;
  return t;
}

exact::MatI64 EdgeOperators::t2_dense() const {
  MatI64 t(m, m);
  for (int e = 0; e < m; ++e)
    for (int f : share2[e]) t.at(e, f) += 1;
  return t;
}

exact::MatI64 EdgeOperators::t1t2_dense() const {
  return exact::mat_mul(t1_dense(), t2_dense());
}

ZetaPolynomial zeta_inverse_det(const Bigraph& x, int max_edges) {
  if (x.num_edges() > max_edges)
    fail(ErrorCode::SizeLimitExceeded,
         "|E| = " + std::to_string(x.num_edges()) + " exceeds cap " +
             std::to_string(max_edges));
  const EdgeOperators ops = edge_operators(x);
  IntPoly chi = exact::charpoly(ops.t1t2_dense());
  // det(I - A u) = u^m chi(1/u): reverse the coefficient order.
  std::reverse(chi.begin(), chi.end());
  exact::poly_trim(chi);
  return chi;
}

ZetaPolynomial zeta_inverse_product(const Bigraph& x, const SpectralData& sd) {
  const int n1 = x.n1;
  const IntPoly& chi = sd.char_poly_bbt;
  // u^{n1} chi((1+q1 u)(1+q2 u)/u) = sum_k chi_k [(1+q1u)(1+q2u)]^k u^{n1-k}
  const IntPoly quad =
      exact::poly_mul(IntPoly{Int(1), Int(x.q1)}, IntPoly{Int(1), Int(x.q2)});
  IntPoly acc;
  IntPoly quad_pow{Int(1)};
  for (int k = 0; k <= n1; ++k) {
    if (k > 0) quad_pow = exact::poly_mul(quad_pow, quad);
    if (chi[k] == 0) continue;
    IntPoly term(static_cast<size_t>(n1 - k), Int(0));  // u^{n1-k} shift
    term.insert(term.end(), quad_pow.begin(), quad_pow.end());
    for (auto it = term.begin() + (n1 - k); it != term.end(); ++it) *it *= chi[k];
    acc = exact::poly_add(acc, term);
  }
  acc = exact::poly_mul(acc, exact::poly_pow(IntPoly{Int(1), Int(x.q2)},
                                             static_cast<unsigned>(x.n2 - x.n1)));
  const int r = x.rank();
  if (r >= 1) {
    acc = exact::poly_mul(acc, exact::poly_pow(IntPoly{Int(1), Int(-1)},
                                               static_cast<unsigned>(r - 1)));
  } else {
    // Trees: the lambda_1 quadratic carries a (1-u) factor that cancels the
    // (1-u)^{r-1} = (1-u)^{-1} prefactor exactly.
    IntPoly quot;
    if (!exact::poly_divide_exact(acc, IntPoly{Int(1), Int(-1)}, &quot))
      fail(ErrorCode::InternalInconsistency, "(1-u) cancellation failed on a tree");
    acc = std::move(quot);
  }
  exact::poly_trim(acc);
  return acc;
}

namespace {

bool integral_eigenvalue(const IntPoly& chi, double value, long* out) {
  const double rounded = std::nearbyint(value);
  if (std::abs(value - rounded) > 1e-6) return false;
  const long k = static_cast<long>(rounded);
  if (exact::poly_eval(chi, Int(k)) != 0) return false;
  *out = k;
  return true;
}

}  // namespace

ZetaFactorization factorize(const Bigraph& x, const ZetaPolynomial& zeta,
                            const SpectralData& sd) {
  const int r = x.rank();
  if (r < 1)
    fail(ErrorCode::AcyclicGraph,
         "graph has no cycles (rank 0); its zeta function is the empty product");

  ZetaFactorization fact;
  const int zeros = x.n1 - sd.rank_b;
  fact.mult_st = r;
  fact.mult_sph = 1;
  fact.mult_ds = (x.n2 - x.n1) + zeros;
  fact.mult_nt = zeros;

  // Group the nonzero, non-Perron eigenvalues of BB^T.
  const double root_q1q2 = std::sqrt(static_cast<double>(x.q1) * x.q2);
  for (int j = 1; j < sd.rank_b; ++j) {
    const double eig = sd.bbt_eigs[j];
    const double c = eig - x.q1 - x.q2;
    if (!fact.quadratics.empty()) {
      QuadraticFactor& last = fact.quadratics.back();
      if (std::abs(last.c - c) <= 1e-7 * std::max(1.0, std::abs(last.c))) {
        // running mean keeps the representative stable
        last.c = (last.c * last.mult + c) / (last.mult + 1);
        last.trace = root_q1q2 > 0 ? last.c / root_q1q2 : last.c;
        ++last.mult;
        continue;
      }
    }
    fact.quadratics.push_back(
        {c, root_q1q2 > 0 ? c / root_q1q2 : c, 1});
  }

  int total_deg = fact.mult_st + fact.mult_sph + fact.mult_ds + fact.mult_nt;
  for (const auto& qf : fact.quadratics) total_deg += 2 * qf.mult;
  if (total_deg != x.num_edges())
    fail(ErrorCode::InconsistentFactorization,
         "factor degrees sum to " + std::to_string(total_deg) + ", expected |E| = " +
             std::to_string(x.num_edges()));

  // Reassemble and compare against the zeta polynomial: exactly when every
  // quadratic is rational (integer eigenvalue), within 1e-8 per coefficient
  // otherwise.
  const Int q1q2 = Int(x.q1) * Int(x.q2);
  bool all_integral = true;
  std::vector<long> int_cs(fact.quadratics.size());
  for (size_t i = 0; i < fact.quadratics.size(); ++i) {
    long eig_int = 0;
    if (integral_eigenvalue(sd.char_poly_bbt, fact.quadratics[i].c + x.q1 + x.q2,
                            &eig_int)) {
      int_cs[i] = eig_int - x.q1 - x.q2;
    } else {
      all_integral = false;
      break;
    }
  }
  if (all_integral) {
    IntPoly recon = exact::poly_pow(IntPoly{Int(1), Int(-1)},
                                    static_cast<unsigned>(fact.mult_st));
    recon = exact::poly_mul(recon, IntPoly{Int(1), -q1q2});
    recon = exact::poly_mul(recon, exact::poly_pow(IntPoly{Int(1), Int(x.q2)},
                                                   static_cast<unsigned>(fact.mult_ds)));
    recon = exact::poly_mul(recon, exact::poly_pow(IntPoly{Int(1), Int(x.q1)},
                                                   static_cast<unsigned>(fact.mult_nt)));
    for (size_t i = 0; i < fact.quadratics.size(); ++i) {
      recon = exact::poly_mul(
          recon, exact::poly_pow(IntPoly{Int(1), Int(-int_cs[i]), q1q2},
                                 static_cast<unsigned>(fact.quadratics[i].mult)));
    }
    if (recon != zeta)
      fail(ErrorCode::InconsistentFactorization,
           "exact reassembly does not reproduce the zeta polynomial");
  } else {
    std::vector<double> recon{1.0};
    auto mul_linear = [&recon](double a) {  // times (1 + a u)
      std::vector<double> out(recon.size() + 1, 0.0);
      for (size_t i = 0; i < recon.size(); ++i) {
        out[i] += recon[i];
        out[i + 1] += a * recon[i];
      }
      recon = std::move(out);
    };
    const double q1q2d = static_cast<double>(x.q1) * x.q2;
    for (int i = 0; i < fact.mult_st; ++i) mul_linear(-1.0);
    mul_linear(-q1q2d);
    for (int i = 0; i < fact.mult_ds; ++i) mul_linear(static_cast<double>(x.q2));
    for (int i = 0; i < fact.mult_nt; ++i) mul_linear(static_cast<double>(x.q1));
    for (const auto& qf : fact.quadratics) {
      for (int k = 0; k < qf.mult; ++k) {
        std::vector<double> out(recon.size() + 2, 0.0);
        for (size_t i = 0; i < recon.size(); ++i) {
          out[i] += recon[i];
          out[i + 1] -= qf.c * recon[i];
          out[i + 2] += q1q2d * recon[i];
        }
        recon = std::move(out);
      }
    }
    if (recon.size() != zeta.size())
      fail(ErrorCode::InconsistentFactorization, "reassembly degree mismatch");
    for (size_t i = 0; i < zeta.size(); ++i) {
      const double expect = zeta[i].get_d();
      const double err = std::abs(recon[i] - expect) / std::max(1.0, std::abs(expect));
      if (!(err <= 1e-8))
        fail(ErrorCode::InconsistentFactorization,
             "reassembled coefficient " + std::to_string(i) +
                 " off by relative " + std::to_string(err));
    }
  }
  return fact;
}

RHReport rh_report(const Bigraph& x, const ZetaFactorization& fact, double tol) {
  if (x.rank() < 1) fail(ErrorCode::AcyclicGraph, "no zeta zeros for a tree");
  const double q1q2 = static_cast<double>(x.q1) * x.q2;
  const double critical = 1.0 / std::sqrt(q1q2);
  const double logq = std::log(q1q2);

  RHReport report;
  report.satisfied = true;

  auto classify_s = [&](std::complex<double> u) -> std::complex<double> {
    if (logq == 0.0) return {0.0, 0.0};
    return -std::log(u) / logq;
  };
  auto push = [&](std::complex<double> u, bool trivial) {
    ZetaZero z;
    z.u = u;
    z.s = classify_s(u);
    if (trivial) {
      z.cls = ZeroClass::Trivial;
    } else {
      const double re_s = z.s.real();
      const bool boundary =
          logq != 0.0 && (std::abs(re_s) <= tol || std::abs(re_s - 1.0) <= tol);
      z.cls = boundary ? ZeroClass::Boundary : ZeroClass::Nontrivial;
      if (std::abs(std::abs(u) - critical) > tol) report.satisfied = false;
    }
    report.zeros.push_back(z);
  };

  for (int i = 0; i < fact.mult_st; ++i) push({1.0, 0.0}, true);
  push({1.0 / q1q2, 0.0}, true);
  for (int i = 0; i < x.n2 - x.n1; ++i) push({-1.0 / x.q2, 0.0}, true);
  // p_nt p_ds pairs beyond the forced (1 + q2 u)^{n2-n1} prefactor.
  for (int i = 0; i < fact.mult_nt; ++i) {
    push({-1.0 / x.q1, 0.0}, false);
    push({-1.0 / x.q2, 0.0}, false);
  }
  for (const auto& qf : fact.quadratics) {
    const double disc = qf.c * qf.c - 4.0 * q1q2;
    for (int k = 0; k < qf.mult; ++k) {
      if (disc <= 0.0) {
        const double re = qf.c / (2.0 * q1q2);
        const double im = std::sqrt(-disc) / (2.0 * q1q2);
        push({re, im}, false);
        push({re, -im}, false);
      } else {
        const double root = std::sqrt(disc);
        push({(qf.c + root) / (2.0 * q1q2), 0.0}, false);
        push({(qf.c - root) / (2.0 * q1q2), 0.0}, false);
      }
    }
  }
  return report;
}

bool check_rh_ramanujan_equivalence(const Bigraph& x) {
  const SpectralData sd = spectrum(x);
  const ZetaPolynomial zeta = zeta_inverse_product(x, sd);
  const ZetaFactorization fact = factorize(x, zeta, sd);
  const RHReport rh = rh_report(x, fact);
  const bool inequality = ramanujan_inequality(x, sd);
  return rh.satisfied == inequality;
}

}  // namespace ramacert
