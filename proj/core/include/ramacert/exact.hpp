#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

// Exact integer/rational kernels: division-free characteristic polynomials,
// fraction-free rank, and Sturm-chain root counting. Everything here is
// deterministic and allocation-heavy rather than clever; matrix sizes are
// desk scale (n <= ~500).

namespace ramacert::exact {

using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial, coefficients lowest degree first.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

// ---------------------------------------------------------------- matrices

struct MatI64 {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // row major

  MatI64() = default;
  MatI64(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

MatI64 mat_mul(const MatI64& x, const MatI64& y);
MatI64 mat_transpose(const MatI64& x);

// ------------------------------------------------------------ polynomials

void poly_trim(IntPoly& p);
IntPoly poly_add(const IntPoly& x, const IntPoly& y);
IntPoly poly_mul(const IntPoly& x, const IntPoly& y);
IntPoly poly_pow(const IntPoly& x, unsigned k);
IntPoly poly_derivative(const IntPoly& p);
int poly_degree(const IntPoly& p);  // -1 for zero polynomial

Int poly_eval(const IntPoly& p, const Int& x);
Rat poly_eval_rat(const IntPoly& p, const Rat& x);
// Sign of p at num/den (den > 0), computed without rationals.
int poly_sign_at(const IntPoly& p, const Int& num, const Int& den);

// True iff den divides num exactly; quotient written to *quot.
bool poly_divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quot);

// Primitive gcd with positive leading coefficient (subresultant-style).
IntPoly poly_gcd(const IntPoly& x, const IntPoly& y);
// p / gcd(p, p'): same distinct roots, multiplicity one.
IntPoly poly_squarefree(const IntPoly& p);

// Rational B with all real roots of p inside (-B, B).
Rat cauchy_root_bound(const IntPoly& p);

// ------------------------------------------------- characteristic polynomial

// Exact char poly det(tI - A) of a square integer matrix, lowest degree
// first, monic. Berkowitz is division-free; the modular variant runs
// Hessenberg reduction over word-size prime fields and CRT-lifts, which is
// what makes the |E| <= 500 zeta cap usable. Both return identical results.
IntPoly charpoly_berkowitz(const MatI64& A);
IntPoly charpoly_modular(const MatI64& A);
IntPoly charpoly(const MatI64& A);  // dispatches on size

// Exact rank over the integers (Bareiss fraction-free elimination).
int rank_bareiss(const MatI64& A);

// ------------------------------------------------------- real root counting

// Number of distinct real roots of p in the open interval (a, b).
// Endpoints must not be roots of p.
int count_roots_in(const IntPoly& p, const Rat& a, const Rat& b);

// Tarski query: sum of sign(g(x)) over distinct real roots x of p in (a, b).
// Requires gcd(p, g) constant and endpoints not roots of p.
int tarski_query(const IntPoly& p, const IntPoly& g, const Rat& a, const Rat& b);

// ------------------------------------------------------------------- misc

std::string to_string(const Int& v);

}  // namespace ramacert::exact
