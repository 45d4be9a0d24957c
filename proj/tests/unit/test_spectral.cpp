#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "corpus.hpp"
#include "ramacert/error.hpp"
#include "ramacert/spectral.hpp"

using namespace ramacert;
using doctest::Approx;

TEST_CASE("biadjacency matrices") {
  const auto b23 = biadjacency(complete_bipartite(2, 3));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b23.at(i, j) == 1);

  const auto bstar = biadjacency(complete_bipartite(1, 3));
  CHECK(bstar.rows == 1);
  CHECK(bstar.cols == 3);

  // Subdivision of K4: the biadjacency matrix is the incidence matrix of K4,
  // so every column has exactly two ones and every row three.
  const auto binc = biadjacency(subdivision(SimpleGraph::complete(4)));
  for (int j = 0; j < 6; ++j) {
    int col = 0;
    for (int i = 0; i < 4; ++i) col += static_cast<int>(binc.at(i, j));
    CHECK(col == 2);
  }
}

TEST_CASE("spectrum oracle: subdivision of K4") {
  const Bigraph x = subdivision(SimpleGraph::complete(4));
  const SpectralData sd = spectrum(x);
  REQUIRE(sd.sigma.size() == 4);
  CHECK(sd.sigma[0] == Approx(std::sqrt(6.0)).epsilon(1e-12));
  for (int j = 1; j < 4; ++j)
    CHECK(sd.sigma[j] == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd.zero_mult == 2);
  // Independent oracle: dense eigendecomposition of the 10x10 adjacency.
  const auto dense = corpus::dense_adjacency_eigs(x);
  CHECK(dense[0] == Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK(dense[1] == Approx(std::sqrt(2.0)).epsilon(1e-12));
  // char poly of BB^T = (t-6)(t-2)^3 = t^4 - 12t^3 + 48t^2 - 80t + 48
  REQUIRE(sd.char_poly_bbt.size() == 5);
  CHECK(sd.char_poly_bbt[0] == 48);
  CHECK(sd.char_poly_bbt[1] == -80);
  CHECK(sd.char_poly_bbt[2] == 48);
  CHECK(sd.char_poly_bbt[3] == -12);
  CHECK(sd.char_poly_bbt[4] == 1);
}

TEST_CASE("spectrum oracle: K_{2,3} and stars") {
  const SpectralData k23 = spectrum(complete_bipartite(2, 3));
  REQUIRE(k23.sigma.size() == 2);
  CHECK(k23.sigma[0] == Approx(std::sqrt(6.0)));
  CHECK(k23.sigma[1] == 0.0);  // exact
  CHECK(k23.zero_mult == 3);
  CHECK(k23.rank_b == 1);

  for (int n : {3, 5, 8}) {
    const SpectralData star = spectrum(complete_bipartite(1, n));
    REQUIRE(star.sigma.size() == 1);
    CHECK(star.sigma[0] == Approx(std::sqrt(double(n))));
    CHECK(star.zero_mult == n - 1);
  }
}

TEST_CASE("bipartite symmetry: +-sigma construction matches dense adjacency") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    if (g.num_vertices() > 50) continue;
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    std::vector<double> rebuilt;
    for (double s : sd.sigma) {
      rebuilt.push_back(s);
      rebuilt.push_back(-s);
    }
    rebuilt.resize(rebuilt.size() + (g.n2 - g.n1), 0.0);
    std::sort(rebuilt.rbegin(), rebuilt.rend());
    const auto dense = corpus::dense_adjacency_eigs(g);
    REQUIRE(rebuilt.size() == dense.size());
    for (size_t i = 0; i < dense.size(); ++i)
      CHECK(std::abs(rebuilt[i] - dense[i]) <= 1e-8);
  }
}

TEST_CASE("sigma1^2 is an exact integer root of the char poly") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    const exact::Int top = exact::Int((1 + g.q1)) * exact::Int((1 + g.q2));
    CHECK(exact::poly_eval(sd.char_poly_bbt, top) == 0);
  }
}

TEST_CASE("second eigenvalue") {
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  CHECK(*second_eigenvalue(sk4, spectrum(sk4)) == Approx(std::sqrt(2.0)));

  const Bigraph k23 = complete_bipartite(2, 3);
  CHECK(*second_eigenvalue(k23, spectrum(k23)) == 0.0);

  const Bigraph c6 = validate(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  CHECK(*second_eigenvalue(c6, spectrum(c6)) == Approx(1.0));

  // Single edge: no nontrivial spectrum at all.
  const Bigraph k11 = complete_bipartite(1, 1);
  CHECK_FALSE(second_eigenvalue(k11, spectrum(k11)).has_value());

  // Star: nontrivial spectrum is all zeros.
  const Bigraph star = complete_bipartite(1, 4);
  CHECK(*second_eigenvalue(star, spectrum(star)) == 0.0);
}

TEST_CASE("is_ramanujan verdicts") {
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  CHECK(is_ramanujan(sk4, spectrum(sk4)) == RamanujanVerdict::Yes);
  CHECK(is_ramanujan(sk4, spectrum(sk4), RamanujanMode::Exact) ==
        RamanujanVerdict::Yes);

  const Bigraph k23 = complete_bipartite(2, 3);
  CHECK(is_ramanujan(k23, spectrum(k23)) == RamanujanVerdict::No);
  CHECK(is_ramanujan(k23, spectrum(k23), RamanujanMode::Exact) ==
        RamanujanVerdict::No);

  const Bigraph star = complete_bipartite(1, 6);
  CHECK(is_ramanujan(star, spectrum(star)) == RamanujanVerdict::Yes);  // vacuous

  // K_{3,3}: eigenvalue 0 sits exactly on the inequality boundary
  // (|0 - 4| = 2 sqrt(4)) but breaks sigma_{n1} > 0: numeric mode flags the
  // boundary contact, exact mode decides No outright.
  const Bigraph k33 = complete_bipartite(3, 3);
  CHECK(is_ramanujan(k33, spectrum(k33)) == RamanujanVerdict::Borderline);
  CHECK(is_ramanujan(k33, spectrum(k33), RamanujanMode::Exact) ==
        RamanujanVerdict::No);
  CHECK(ramanujan_inequality(k33, spectrum(k33)));
  CHECK(ramanujan_inequality_exact(k33, spectrum(k33)));
}

TEST_CASE("numeric and exact Ramanujan modes agree away from boundaries") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    const RamanujanVerdict numeric = is_ramanujan(g, sd);
    const RamanujanVerdict exact = is_ramanujan(g, sd, RamanujanMode::Exact);
    if (numeric != RamanujanVerdict::Borderline) CHECK(numeric == exact);
    CHECK(ramanujan_inequality(g, sd) == ramanujan_inequality_exact(g, sd));
  }
}

TEST_CASE("weakly Ramanujan via exact rank") {
  CHECK(is_weakly_ramanujan(subdivision(SimpleGraph::complete(4))));
  CHECK_FALSE(is_weakly_ramanujan(complete_bipartite(2, 3)));
  CHECK_FALSE(is_weakly_ramanujan(complete_bipartite(3, 4)));

  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    CHECK(is_weakly_ramanujan(g, sd) == (sd.zero_mult == g.n2 - g.n1));
    // Ramanujan implies weakly Ramanujan.
    if (is_ramanujan(g, sd) == RamanujanVerdict::Yes)
      CHECK(is_weakly_ramanujan(g, sd));
  }
}

TEST_CASE("both forms of the inequality agree") {
  // |s^2 - q1 - q2| <= 2 sqrt(q1 q2)  <=>  sqrt(q1)-sqrt(q2) <= s <= sqrt(q1)+sqrt(q2)
  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    const double a = std::sqrt(double(g.q1)), b = std::sqrt(double(g.q2));
    for (size_t j = 1; j < sd.sigma.size(); ++j) {
      const double margin = sd.margins[j - 1];
      if (std::abs(margin) <= 1e-9) continue;  // boundary: float forms may differ
      const bool form1 = margin >= 0.0;
      const double s = sd.sigma[j];
      const bool form2 = (a - b) - 1e-12 <= s && s <= (a + b) + 1e-12;
      CHECK(form1 == form2);
    }
  }
}

TEST_CASE("feng_li_bound") {
  CHECK(feng_li_bound(2, 1) == Approx(std::sqrt(2.0) + 1.0));
  CHECK(feng_li_bound(8, 2) == Approx(3.0 * std::sqrt(2.0)));
  CHECK(feng_li_bound(1, 1) == Approx(2.0));
}

TEST_CASE("regular graph checks") {
  CHECK(regular_ramanujan_check(SimpleGraph::cycle(6)));
  CHECK(regular_ramanujan_check(SimpleGraph::complete(4)));
  CHECK(regular_ramanujan_check(SimpleGraph::complete_bipartite(3, 3)));
  CHECK(regular_ramanujan_check(SimpleGraph::petersen()));

  // K4 spectrum is {3, -1, -1, -1}.
  const auto k4eigs = adjacency_spectrum(SimpleGraph::complete(4));
  CHECK(k4eigs[0] == Approx(3.0));
  CHECK(k4eigs[1] == Approx(-1.0));
  CHECK(k4eigs[3] == Approx(-1.0));

  CHECK(expansion_coefficient_bound(SimpleGraph::complete(4)) == Approx(1.0 / 3));
  CHECK(expansion_coefficient_bound(SimpleGraph::cycle(6)) == Approx(0.25));
  CHECK(expansion_coefficient_bound(SimpleGraph::complete_bipartite(3, 3)) ==
        Approx(0.5));

  SimpleGraph notreg;
  notreg.n = 3;
  notreg.edges = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(regular_ramanujan_check(notreg), Error);

  // A (q+1)-regular bigraph qualifies through the same path.
  CHECK(regular_ramanujan_check(to_simple(complete_bipartite(3, 3))));
}
