#pragma once

#include <optional>
#include <vector>

#include "ramacert/exact.hpp"
#include "ramacert/graph.hpp"

namespace ramacert {

// B[u][v] = number of edges between color-1 vertex u and color-2 vertex v.
// Row sums are q1+1, column sums q2+1.
exact::MatI64 biadjacency(const Bigraph& x);

// Spectrum of a bigraph. The full adjacency spectrum is {+-sigma_i} plus
// n2 - n1 forced zeros; zero singular values are detected exactly via the
// integer rank of B, never by floating threshold, so entries of `sigma`
// that read 0.0 are exact.
struct SpectralData {
  std::vector<double> sigma;       // n1 singular values of B, descending
  std::vector<double> bbt_eigs;    // sigma_i^2 (eigenvalues of BB^T), descending
  exact::IntPoly char_poly_bbt;    // exact monic char poly of BB^T, lowest first
  int zero_mult = 0;               // multiplicity of 0 in the adjacency spectrum
  int rank_b = 0;                  // exact integer rank of B
  double lambda1 = 0.0;            // = sqrt((1+q1)(1+q2))
  std::optional<double> lambda2;   // second largest |eigenvalue|; empty if none
  // Per-eigenvalue test data for j = 2..n1 (index j-2):
  std::vector<double> traces;      // (sigma_j^2 - q1 - q2) / sqrt(q1 q2)
  std::vector<double> margins;     // 2 sqrt(q1 q2) - |sigma_j^2 - q1 - q2|
};

SpectralData spectrum(const Bigraph& x);

std::optional<double> second_eigenvalue(const Bigraph& x, const SpectralData& sd);

enum class RamanujanVerdict { Yes, No, Borderline };
enum class RamanujanMode { Numeric, Exact };

// Ramanujan test: |sigma_j^2 - q1 - q2| <= 2 sqrt(q1 q2) for all j >= 2 and
// sigma_{n1} > 0. Numeric mode reports Borderline when any margin is within
// tol (relative) of equality; exact mode decides the inequalities with
// Sturm-chain root counting on the integer char poly and never wavers.
RamanujanVerdict is_ramanujan(const Bigraph& x, const SpectralData& sd,
                              RamanujanMode mode = RamanujanMode::Numeric,
                              double tol = 1e-9);

// The inequality half alone (no full-rank requirement). Coincides with the
// full Ramanujan property whenever q1 != q2, since a zero eigenvalue then
// violates the inequality outright.
bool ramanujan_inequality(const Bigraph& x, const SpectralData& sd);
// Same decision made exactly on char_poly_bbt (Sturm-chain counting).
bool ramanujan_inequality_exact(const Bigraph& x, const SpectralData& sd);

// True iff rank(B) = n1, i.e. eigenvalue 0 has multiplicity exactly n2 - n1.
bool is_weakly_ramanujan(const Bigraph& x, const SpectralData& sd);
bool is_weakly_ramanujan(const Bigraph& x);

// sqrt(q1) + sqrt(q2): the asymptotic floor for the second eigenvalue of
// (q1+1, q2+1)-biregular families.
double feng_li_bound(int q1, int q2);

// Adjacency eigenvalues of a simple graph, descending.
std::vector<double> adjacency_spectrum(const SimpleGraph& g);

// lambda(X) <= 2 sqrt(k-1) for a connected k-regular graph.
bool regular_ramanujan_check(const SimpleGraph& g, double tol = 1e-9);

// c = (1 - lambda(X)/k) / 2.
double expansion_coefficient_bound(const SimpleGraph& g);

}  // namespace ramacert
