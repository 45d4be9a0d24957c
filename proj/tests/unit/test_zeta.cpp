#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "corpus.hpp"
#include "ramacert/error.hpp"
#include "ramacert/zeta.hpp"

using namespace ramacert;
using doctest::Approx;

namespace {

bool quadratic_relation_holds(const exact::MatI64& t, int q) {
  const auto t2 = exact::mat_mul(t, t);
  for (int i = 0; i < t.rows; ++i) {
    for (int j = 0; j < t.cols; ++j) {
      const long long expect =
          static_cast<long long>(q - 1) * t.at(i, j) + (i == j ? q : 0);
      if (t2.at(i, j) != expect) return false;
    }
  }
  return true;
}

bool is_symmetric(const exact::MatI64& t) {
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (t.at(i, j) != t.at(j, i)) return false;
  return true;
}

exact::IntPoly from_i64(const std::vector<long long>& v) {
  exact::IntPoly p;
  for (long long c : v) p.emplace_back(static_cast<long>(c));
  return p;
}

const Bigraph& six_cycle() {
  static const Bigraph c6 =
      validate(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  return c6;
}

}  // namespace

TEST_CASE("edge operators on the star and the 6-cycle") {
  const EdgeOperators star = edge_operators(complete_bipartite(1, 3));
  // T1 = J - I on the three edges through the center; T2 = 0.
  const auto t1 = star.t1_dense();
  const auto t2 = star.t2_dense();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(t1.at(i, j) == (i == j ? 0 : 1));
      CHECK(t2.at(i, j) == 0);
    }

  const EdgeOperators c6 = edge_operators(six_cycle());
  // q = 1: T_i^2 = I.
  const auto s1 = exact::mat_mul(c6.t1_dense(), c6.t1_dense());
  const auto s2 = exact::mat_mul(c6.t2_dense(), c6.t2_dense());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(s1.at(i, j) == (i == j ? 1 : 0));
      CHECK(s2.at(i, j) == (i == j ? 1 : 0));
    }
}

TEST_CASE("quadratic operator identities hold exactly on the corpus") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    const EdgeOperators ops = edge_operators(g);
    CHECK(quadratic_relation_holds(ops.t1_dense(), g.q1));
    CHECK(quadratic_relation_holds(ops.t2_dense(), g.q2));
    CHECK(is_symmetric(ops.t1_dense()));
    CHECK(is_symmetric(ops.t2_dense()));
  }
}

TEST_CASE("zeta determinant route against frozen oracles") {
  // S(K4): (1-u)^3 (1-2u) (1+u)^2 (1+u+2u^2)^3 expanded.
  const std::vector<long long> sk4_expected{1,  0,   0, -8, -6, 0, 16,
                                            24, -3, -16, -24, 0, 16};
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  CHECK(zeta_inverse_det(sk4) == from_i64(sk4_expected));

  // Rebuild the same expansion from the oracle spectrum {6, 2, 2, 2}.
  const auto oracle =
      corpus::expand_product_formula(3, 2, 2, 1, {6, 2, 2, 2});
  CHECK(zeta_inverse_det(sk4) == from_i64(oracle));

  // K_{2,3}: (1-u)^2 (1-2u) (1+u)^2 (1+2u).
  const std::vector<long long> k23_expected{1, 0, -6, 0, 9, 0, -4};
  CHECK(zeta_inverse_det(complete_bipartite(2, 3)) == from_i64(k23_expected));
  const auto k23_oracle = corpus::expand_product_formula(2, 1, 2, 1, {6, 0});
  CHECK(zeta_inverse_det(complete_bipartite(2, 3)) == from_i64(k23_oracle));

  // 6-cycle: degree-6 polynomial, cross-checked against the product route.
  const std::vector<long long> c6_expected{1, 0, 0, -2, 0, 0, 1};
  CHECK(zeta_inverse_det(six_cycle()) == from_i64(c6_expected));
}

TEST_CASE("dual-route equality on every corpus graph") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    if (g.num_edges() > 200) continue;
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    CHECK(zeta_inverse_det(g) == zeta_inverse_product(g, sd));
  }
}

TEST_CASE("degree identity and trivial zeros") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    CAPTURE(name);
    if (g.rank() < 1) continue;
    const ZetaPolynomial z = zeta_inverse_det(g);
    CHECK(exact::poly_degree(z) == g.num_edges());
    CHECK(g.num_edges() == (g.rank() - 1) + (g.n2 - g.n1) + 2 * g.n1);
    CHECK(z.front() == 1);

    // Z^-1(1) = 0 and Z^-1(1/(q1 q2)) = 0, evaluated exactly.
    CHECK(exact::poly_eval_rat(z, exact::Rat(1)) == 0);
    CHECK(exact::poly_eval_rat(z, exact::Rat(1, g.q1 * g.q2)) == 0);

    // (1 + q2 u) divides at least n2 - n1 times.
    exact::IntPoly rem = z;
    const exact::IntPoly dsfac{exact::Int(1), exact::Int(g.q2)};
    for (int k = 0; k < g.n2 - g.n1; ++k) {
      exact::IntPoly quot;
      REQUIRE(exact::poly_divide_exact(rem, dsfac, &quot));
      rem = quot;
    }
  }
}

TEST_CASE("zeta on trees degenerates to 1 and factorization refuses") {
  const Bigraph star = complete_bipartite(1, 4);
  const SpectralData sd = spectrum(star);
  const ZetaPolynomial det = zeta_inverse_det(star, 500);
  const ZetaPolynomial prod = zeta_inverse_product(star, sd);
  CHECK(det == exact::IntPoly{exact::Int(1)});
  CHECK(det == prod);
  CHECK_THROWS_AS(factorize(star, det, sd), Error);
  try {
    factorize(star, det, sd);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AcyclicGraph);
  }
}

TEST_CASE("size cap on the determinant route") {
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  CHECK_THROWS_AS(zeta_inverse_det(sk4, 10), Error);
  try {
    zeta_inverse_det(sk4, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
}

TEST_CASE("factorization multiplicities") {
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  const SpectralData sd4 = spectrum(sk4);
  const ZetaFactorization f4 = factorize(sk4, zeta_inverse_det(sk4), sd4);
  CHECK(f4.mult_st == 3);
  CHECK(f4.mult_ds == 2);
  CHECK(f4.mult_sph == 1);
  CHECK(f4.mult_nt == 0);
  REQUIRE(f4.quadratics.size() == 1);
  CHECK(f4.quadratics[0].c == Approx(-1.0));
  CHECK(f4.quadratics[0].mult == 3);

  const Bigraph k23 = complete_bipartite(2, 3);
  const SpectralData sd23 = spectrum(k23);
  const ZetaFactorization f23 = factorize(k23, zeta_inverse_det(k23), sd23);
  CHECK(f23.mult_st == 2);
  CHECK(f23.mult_ds == 2);
  CHECK(f23.mult_sph == 1);
  CHECK(f23.mult_nt == 1);
  CHECK(f23.quadratics.empty());
}

TEST_CASE("rh report on the positive and negative oracles") {
  const Bigraph sk4 = subdivision(SimpleGraph::complete(4));
  const SpectralData sd4 = spectrum(sk4);
  const RHReport rh4 = rh_report(sk4, factorize(sk4, zeta_inverse_det(sk4), sd4));
  CHECK(rh4.satisfied);
  // Nontrivial zeros are the roots of (1 + u + 2u^2)^3: (-1 +- i sqrt 7)/4.
  int nontrivial = 0;
  for (const auto& z : rh4.zeros) {
    if (z.cls == ZeroClass::Trivial) continue;
    ++nontrivial;
    CHECK(z.u.real() == Approx(-0.25));
    CHECK(std::abs(z.u.imag()) == Approx(std::sqrt(7.0) / 4.0));
    CHECK(std::abs(z.u) == Approx(1.0 / std::sqrt(2.0)));
  }
  CHECK(nontrivial == 6);

  const Bigraph k23 = complete_bipartite(2, 3);
  const SpectralData sd23 = spectrum(k23);
  const RHReport rh23 = rh_report(k23, factorize(k23, zeta_inverse_det(k23), sd23));
  CHECK_FALSE(rh23.satisfied);
  // Zero multiset is {1, 1, 1/2, -1, -1, -1/2}.
  std::multimap<double, ZeroClass> zeros;
  for (const auto& z : rh23.zeros) {
    CHECK(z.u.imag() == 0.0);
    zeros.insert({z.u.real(), z.cls});
  }
  CHECK(zeros.count(1.0) == 2);
  CHECK(zeros.count(0.5) == 1);
  CHECK(zeros.count(-1.0) == 2);
  CHECK(zeros.count(-0.5) == 1);
  // u = -1/2 = -1/q1 is not a trivial zero here.
  auto range = zeros.equal_range(-0.5);
  CHECK(range.first->second != ZeroClass::Trivial);
}

TEST_CASE("stars have no rh report") {
  const Bigraph star = complete_bipartite(1, 3);
  const SpectralData sd = spectrum(star);
  CHECK_THROWS_AS(factorize(star, zeta_inverse_product(star, sd), sd), Error);
}

TEST_CASE("rh <-> ramanujan equivalence across the corpus") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    if (g.rank() < 1) continue;
    CAPTURE(name);
    CHECK(check_rh_ramanujan_equivalence(g));
  }
}

TEST_CASE("nt multiplicity tracks weak Ramanujan-ness") {
  for (const auto& [name, g] : corpus::standard_corpus()) {
    if (g.rank() < 1) continue;
    CAPTURE(name);
    const SpectralData sd = spectrum(g);
    const ZetaFactorization f = factorize(g, zeta_inverse_product(g, sd), sd);
    CHECK((f.mult_nt == 0) == is_weakly_ramanujan(g, sd));
    CHECK(f.mult_ds >= g.n2 - g.n1);
    CHECK(f.mult_nt == f.mult_ds - (g.n2 - g.n1));
    CHECK(f.mult_st == g.rank());
    CHECK(f.mult_sph == 1);
  }
}
