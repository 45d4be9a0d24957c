#pragma once

#include <complex>
#include <vector>

#include "ramacert/exact.hpp"
#include "ramacert/graph.hpp"
#include "ramacert/spectral.hpp"

namespace ramacert {

// Colored edge-adjacency operators on Z[E(X)]:
//   (T_i f)(e) = sum over edges e' sharing the color-i endpoint of e of f(e'),
//   minus f(e).
// Both satisfy T_i^2 = (q_i - 1) T_i + q_i I as exact integer matrices.
struct EdgeOperators {
  int m = 0;  // |E|
  int q1 = 0;
  int q2 = 0;
  // share_i[e] = indices of edges e' != e incident to e's color-i endpoint.
  std::vector<std::vector<int>> share1;
  std::vector<std::vector<int>> share2;

  exact::MatI64 t1_dense() const;
  exact::MatI64 t2_dense() const;
  exact::MatI64 t1t2_dense() const;
};

EdgeOperators edge_operators(const Bigraph& x);

// Reciprocal zeta polynomial Z_X(u)^{-1}, exact integer coefficients,
// lowest degree first, constant term 1, degree |E| whenever the graph has a
// cycle.
using ZetaPolynomial = exact::IntPoly;

// Determinant route: Z_X(u)^{-1} = det(I - T1 T2 u), computed through the
// exact characteristic polynomial of the integer matrix T1 T2.
ZetaPolynomial zeta_inverse_det(const Bigraph& x, int max_edges = 500);

// Spectral route: (1-u)^{r-1} (1+q2 u)^{n2-n1} times the product of
// 1 - (sigma_j^2 - q1 - q2) u + q1 q2 u^2, evaluated entirely in integer
// arithmetic via u^{n1} * chi((1+q1 u)(1+q2 u)/u) with chi the exact char
// poly of BB^T; no eigenvalues are extracted.
ZetaPolynomial zeta_inverse_product(const Bigraph& x, const SpectralData& sd);

struct QuadraticFactor {
  double c = 0.0;      // sigma_j^2 - q1 - q2
  double trace = 0.0;  // c / sqrt(q1 q2)
  int mult = 0;
};

// Z_X(u)^{-1} = p_St^st * p_ds^ds * p_sph^sph * p_nt^nt * prod of quadratics,
// with p_St = 1-u, p_ds = 1+q2 u, p_sph = 1-q1q2 u, p_nt = 1+q1 u.
struct ZetaFactorization {
  int mult_st = 0;
  int mult_ds = 0;
  int mult_sph = 0;
  int mult_nt = 0;
  std::vector<QuadraticFactor> quadratics;
};

ZetaFactorization factorize(const Bigraph& x, const ZetaPolynomial& zeta,
                            const SpectralData& sd);

enum class ZeroClass { Trivial, Nontrivial, Boundary };

struct ZetaZero {
  std::complex<double> u;
  std::complex<double> s;  // u = (q1 q2)^{-s}; meaningless when q1 q2 = 1
  ZeroClass cls = ZeroClass::Nontrivial;
};

// Riemann-Hypothesis report: trivial zero occurrences are 1 (x rank),
// (q1q2)^{-1} (x 1) and -1/q2 (x n2-n1); `satisfied` iff every remaining
// zero lies on the critical circle |u| = (q1 q2)^{-1/2}.
struct RHReport {
  bool satisfied = false;
  std::vector<ZetaZero> zeros;
};

RHReport rh_report(const Bigraph& x, const ZetaFactorization& fact,
                   double tol = 1e-9);

// Lemma cross-check: RH holds iff every nontrivial eigenvalue satisfies the
// Ramanujan inequality. Returns whether the two sides agree (always true;
// a false return indicates a software defect).
bool check_rh_ramanujan_equivalence(const Bigraph& x);

}  // namespace ramacert
