#pragma once

// Shared test corpus and independent oracles. The oracles deliberately use
// a different computational route than the library: full dense adjacency
// eigendecomposition instead of the BB^T path, and plain int64 polynomial
// convolution instead of the big-integer product machinery.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ramacert/graph.hpp"

namespace corpus {

struct Named {
  std::string name;
  ramacert::Bigraph graph;
};

inline std::vector<Named> standard_corpus() {
  using ramacert::SimpleGraph;
  std::vector<Named> out;
  auto add = [&out](std::string name, ramacert::Bigraph g) {
    out.push_back({std::move(name), std::move(g)});
  };
  add("K_{2,2}", ramacert::complete_bipartite(2, 2));
  add("K_{2,3}", ramacert::complete_bipartite(2, 3));
  add("K_{2,4}", ramacert::complete_bipartite(2, 4));
  add("K_{3,3}", ramacert::complete_bipartite(3, 3));
  add("K_{3,4}", ramacert::complete_bipartite(3, 4));
  add("K_{4,4}", ramacert::complete_bipartite(4, 4));
  add("K_{4,5}", ramacert::complete_bipartite(4, 5));
  add("K_{5,5}", ramacert::complete_bipartite(5, 5));
  add("S(K4)", ramacert::subdivision(SimpleGraph::complete(4)));
  add("S(K33)", ramacert::subdivision(SimpleGraph::complete_bipartite(3, 3)));
  add("S(Petersen)", ramacert::subdivision(SimpleGraph::petersen()));
  struct P { int n1, n2, q1, q2; };
  const P params[] = {{4, 6, 2, 1},  {4, 6, 2, 1},  {6, 9, 2, 1},  {6, 9, 2, 1},
                      {5, 10, 3, 1}, {5, 10, 3, 1}, {6, 8, 3, 2},  {6, 8, 3, 2},
                      {3, 9, 8, 2},  {4, 12, 8, 2}};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const P& p = params[seed - 1];
    add("random(" + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," +
            std::to_string(p.q1) + "," + std::to_string(p.q2) + ";seed=" +
            std::to_string(seed) + ")",
        ramacert::random_biregular(p.n1, p.n2, p.q1, p.q2, seed));
  }
  add("random(20,30,2,1;seed=11)", ramacert::random_biregular(20, 30, 2, 1, 11));
  add("random(40,60,2,1;seed=12)", ramacert::random_biregular(40, 60, 2, 1, 12));
  add("random(50,100,3,1;seed=13)", ramacert::random_biregular(50, 100, 3, 1, 13));
  return out;
}

// 100 seeded random graphs across (q1, q2) in {(2,1), (3,1), (8,2)}.
inline std::vector<Named> equivalence_corpus() {
  struct P { int n1, n2, q1, q2; };
  const P combos[] = {{4, 6, 2, 1},  {6, 9, 2, 1},  {8, 12, 2, 1},
                      {4, 8, 3, 1},  {5, 10, 3, 1}, {6, 12, 3, 1},
                      {3, 9, 8, 2},  {4, 12, 8, 2}, {5, 15, 8, 2}};
  std::vector<Named> out;
  for (int i = 0; i < 100; ++i) {
    const P& p = combos[i % 9];
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    out.push_back({"equiv[" + std::to_string(i) + "]",
                   ramacert::random_biregular(p.n1, p.n2, p.q1, p.q2, seed)});
  }
  return out;
}

// ----------------------------------------------------------------- oracles

// Eigenvalues of the full (n1+n2) x (n1+n2) adjacency matrix, descending.
inline std::vector<double> dense_adjacency_eigs(const ramacert::Bigraph& x) {
  const int n = x.n1 + x.n2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : x.edges) {
    a(u, x.n1 + v) += 1.0;
    a(x.n1 + v, u) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = solver.eigenvalues()(n - 1 - i);
  return eigs;
}

// int64 polynomial convolution, lowest degree first.
inline std::vector<long long> ipoly_mul(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<long long> ipoly_pow(std::vector<long long> base, int k) {
  std::vector<long long> out{1};
  for (int i = 0; i < k; ++i) out = ipoly_mul(out, base);
  return out;
}

// Symbolic expansion of the product formula
//   (1-u)^{r-1} (1+q2 u)^{n2-n1} prod_j (1 - (l_j^2 - q1 - q2) u + q1 q2 u^2)
// from integer eigenvalue squares; fits comfortably in int64 at oracle scale.
inline std::vector<long long> expand_product_formula(
    int r, int n2_minus_n1, int q1, int q2,
    const std::vector<long long>& eigs_squared) {
  std::vector<long long> acc{1};
  acc = ipoly_mul(acc, ipoly_pow({1, -1}, r - 1));
  acc = ipoly_mul(acc, ipoly_pow({1, q2}, n2_minus_n1));
  for (long long l2 : eigs_squared)
    acc = ipoly_mul(acc, {1, -(l2 - q1 - q2), static_cast<long long>(q1) * q2});
  return acc;
}

}  // namespace corpus
