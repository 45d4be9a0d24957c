#include "ramacert/exact.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ramacert/error.hpp"

namespace ramacert::exact {

namespace {

using MatZ = std::vector<Int>;  // row-major square scratch

}  // namespace

// ---------------------------------------------------------------- matrices

MatI64 mat_mul(const MatI64& x, const MatI64& y) {
  assert(x.cols == y.rows);
  MatI64 out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  }
  return out;
}

MatI64 mat_transpose(const MatI64& x) {
  MatI64 out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

// ------------------------------------------------------------ polynomials

void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly poly_add(const IntPoly& x, const IntPoly& y) {
  IntPoly out(std::max(x.size(), y.size()));
  for (size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  poly_trim(out);
  return out;
}

IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  if (x.empty() || y.empty()) return {};
  IntPoly out(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

IntPoly poly_pow(const IntPoly& x, unsigned k) {
  IntPoly out{1};
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, x);
  return out;
}

IntPoly poly_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  return out;
}

Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Rat poly_eval_rat(const IntPoly& p, const Rat& x) {
  Rat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

int poly_sign_at(const IntPoly& p, const Int& num, const Int& den) {
  // sign of p(num/den) * den^deg = sum c_k num^k den^(n-k)
  if (p.empty()) return 0;
  Int acc = 0;
  Int np = 1;  // num^k
  std::vector<Int> dp(p.size());
  dp[p.size() - 1] = 1;
  for (size_t i = p.size() - 1; i-- > 0;) dp[i] = dp[i + 1] * den;
  for (size_t k = 0; k < p.size(); ++k) {
    acc += p[k] * np * dp[k];
    np *= num;
  }
  return sgn(acc);
}

bool poly_divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quot) {
  IntPoly r = num;
  poly_trim(r);
  IntPoly d = den;
  poly_trim(d);
  if (d.empty()) return false;
  if (r.empty()) {
    if (quot) quot->clear();
    return true;
  }
  if (r.size() < d.size()) return false;
  IntPoly q(r.size() - d.size() + 1);
  const Int& lead = d.back();
  for (size_t i = q.size(); i-- > 0;) {
    Int c = r[i + d.size() - 1];
    if (c == 0) {
      q[i] = 0;
      continue;
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return false;
    q[i] = c / lead;
    for (size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
  }
  poly_trim(r);
  if (!r.empty()) return false;
  if (quot) *quot = std::move(q);
  return true;
}

namespace {

Int poly_content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
IntPoly poly_primitive(IntPoly p) {
  poly_trim(p);
  if (p.empty()) return p;
  Int g = poly_content(p);
  if (p.back() < 0) g = -g;
  for (Int& c : p) c /= g;
  return p;
}

// Pseudo-remainder of f by g scaled so that the result is a *positive*
// multiple of the true remainder (needed to preserve Sturm sign structure).
IntPoly pseudo_rem_positive(IntPoly f, const IntPoly& g) {
  poly_trim(f);
  const int dg = poly_degree(g);
  assert(dg >= 0);
  const Int& lg = g.back();
  int steps = 0;
  while (poly_degree(f) >= dg) {
    const int df = poly_degree(f);
    Int c = f.back();
    for (Int& x : f) x *= lg;
    for (int j = 0; j <= dg; ++j) f[df - dg + j] -= c * g[j];
    poly_trim(f);
    ++steps;
  }
  // f now equals lg^steps * rem; force a positive multiplier.
  if (lg < 0 && (steps % 2) != 0)
    for (Int& x : f) x = -x;
  return f;
}

// Generalized Sturm chain starting from (p0, p1); every element is kept
// primitive, which only rescales by positive constants.
std::vector<IntPoly> sturm_chain(IntPoly p0, IntPoly p1) {
  std::vector<IntPoly> chain;
  p0 = poly_primitive(std::move(p0));
  p1 = poly_primitive(std::move(p1));
  chain.push_back(p0);
  if (poly_degree(p1) < 0) return chain;
  chain.push_back(p1);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    if (poly_degree(b) < 0) break;
    IntPoly r = pseudo_rem_positive(a, b);
    if (r.empty()) break;
    for (Int& c : r) c = -c;
    chain.push_back(poly_primitive(std::move(r)));
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
  const Int num = x.get_num();
  const Int den = x.get_den();
  int var = 0, prev = 0;
  for (const IntPoly& p : chain) {
    const int s = poly_sign_at(p, num, den);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& x, const IntPoly& y) {
  IntPoly a = poly_primitive(x);
  IntPoly b = poly_primitive(y);
  if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
  while (poly_degree(b) >= 0) {
    IntPoly r = pseudo_rem_positive(a, b);
    a = std::move(b);
    b = poly_primitive(std::move(r));
  }
  return poly_primitive(std::move(a));
}

IntPoly poly_squarefree(const IntPoly& p) {
  IntPoly d = poly_derivative(p);
  if (d.empty()) return poly_primitive(p);
  IntPoly g = poly_gcd(p, d);
  if (poly_degree(g) <= 0) return poly_primitive(p);
  IntPoly q;
  const bool ok = poly_divide_exact(poly_primitive(p), g, &q);
  assert(ok);
  (void)ok;
  return poly_primitive(std::move(q));
}

Rat cauchy_root_bound(const IntPoly& p) {
  IntPoly q = p;
  poly_trim(q);
  if (q.size() <= 1) return Rat(1);
  Int maxc = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i) {
    Int a = abs(q[i]);
    if (a > maxc) maxc = a;
  }
  Rat b = Rat(maxc) / Rat(abs(q.back())) + 2;
  return b;
}

int count_roots_in(const IntPoly& p, const Rat& a, const Rat& b) {
  IntPoly sf = poly_squarefree(p);
  if (poly_degree(sf) <= 0) return 0;
  auto chain = sturm_chain(sf, poly_derivative(sf));
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int tarski_query(const IntPoly& p, const IntPoly& g, const Rat& a, const Rat& b) {
  IntPoly sf = poly_squarefree(p);
  if (poly_degree(sf) <= 0) return 0;
  auto chain = sturm_chain(sf, poly_mul(poly_derivative(sf), g));
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// ------------------------------------------------- characteristic polynomial

IntPoly charpoly_berkowitz(const MatI64& A) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  if (n == 0) return {1};
  // Leading-coefficient-first during the iteration.
  std::vector<Int> C{Int(1), Int(-A.at(0, 0))};
  std::vector<Int> v, w, q;
  for (int r = 2; r <= n; ++r) {
    // q = (1, -a_rr, -(R C), -(R M C), ..., -(R M^{r-2} C))
    q.assign(1, Int(1));
    q.push_back(Int(-A.at(r - 1, r - 1)));
    v.assign(r - 1, Int(0));
    for (int i = 0; i < r - 1; ++i) v[i] = A.at(i, r - 1);
    for (int j = 0; j <= r - 2; ++j) {
      Int dot = 0;
      for (int i = 0; i < r - 1; ++i) dot += v[i] * A.at(r - 1, i);
      q.push_back(-dot);
      if (j < r - 2) {
        w.assign(r - 1, Int(0));
        for (int i = 0; i < r - 1; ++i) {
          for (int k = 0; k < r - 1; ++k) {
            const std::int64_t m = A.at(i, k);
            if (m != 0) w[i] += m * v[k];
          }
        }
        v.swap(w);
      }
    }
    std::vector<Int> next(r + 1, Int(0));
    for (int i = 0; i <= r; ++i) {
      for (size_t j = 0; j < C.size(); ++j) {
        const int k = i - static_cast<int>(j);
        if (k >= 0 && k < static_cast<int>(q.size())) next[i] += q[k] * C[j];
      }
    }
    C.swap(next);
  }
  std::reverse(C.begin(), C.end());  // lowest degree first
  return C;
}

// ----- modular path: Hessenberg char poly over prime fields + CRT lift -----

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

const std::vector<u64>& prime_pool(size_t count) {
  static std::vector<u64> pool;
  u64 candidate = pool.empty() ? ((1ull << 61) - 1) : pool.back() - 2;
  while (pool.size() < count) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    pool.push_back(candidate);
    candidate -= 2;
  }
  return pool;
}

// Char poly of an n x n matrix over Z/p, lowest degree first.
std::vector<u64> charpoly_mod_p(const MatI64& A, u64 p) {
  const int n = A.rows;
  std::vector<std::vector<u64>> H(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t v = A.at(i, j) % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      H[i][j] = static_cast<u64>(v);
    }
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (H[i][j] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      H[pivot].swap(H[j + 1]);
      for (int i = 0; i < n; ++i) std::swap(H[i][pivot], H[i][j + 1]);
    }
    const u64 inv = powmod(H[j + 1][j], p - 2, p);
    for (int i = j + 2; i < n; ++i) {
      if (H[i][j] == 0) continue;
      const u64 f = mulmod(H[i][j], inv, p);
      // row_i -= f * row_{j+1};  col_{j+1} += f * col_i
      for (int k = 0; k < n; ++k) {
        u64 sub = mulmod(f, H[j + 1][k], p);
        H[i][k] = (H[i][k] + p - sub) % p;
      }
      for (int k = 0; k < n; ++k) {
        u64 add = mulmod(f, H[k][i], p);
        H[k][j + 1] = (H[k][j + 1] + add) % p;
      }
    }
  }
  // Char polys of leading principal minors of a Hessenberg matrix.
  std::vector<std::vector<u64>> cp(n + 1);
  cp[0] = {1};
  for (int m = 1; m <= n; ++m) {
    const std::vector<u64>& prev = cp[m - 1];
    std::vector<u64> cur(m + 1, 0);
    // (t - H[m-1][m-1]) * prev
    const u64 d = H[m - 1][m - 1];
    for (int i = 0; i < m; ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      u64 sub = mulmod(d, prev[i], p);
      cur[i] = (cur[i] + p - sub) % p;
    }
    u64 subprod = 1;
    for (int k = 1; k < m; ++k) {
      subprod = mulmod(subprod, H[m - k][m - k - 1], p);
      if (subprod == 0) break;
      const u64 coeff = mulmod(H[m - 1 - k][m - 1], subprod, p);
      if (coeff == 0) continue;
      const std::vector<u64>& lower = cp[m - 1 - k];
      for (size_t i = 0; i < lower.size(); ++i) {
        u64 sub = mulmod(coeff, lower[i], p);
        cur[i] = (cur[i] + p - sub) % p;
      }
    }
    cp[m] = std::move(cur);
  }
  return cp[n];
}

}  // namespace

IntPoly charpoly_modular(const MatI64& A) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  if (n == 0) return {1};
  // Coefficient bound: |c_k| <= C(n,k) rho^k <= (1 + rho)^n with
  // rho = max absolute row sum.
  Int rho = 0;
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long>(std::llabs(A.at(i, j)));
    if (s > rho) rho = s;
  }
  Int bound = 1;
  {
    Int base = rho + 1;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  }
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t nprimes = (bits + 2) / 60 + 1;
  const auto& primes = prime_pool(nprimes);

  std::vector<std::vector<u64>> residues(nprimes);
  for (size_t k = 0; k < nprimes; ++k) residues[k] = charpoly_mod_p(A, primes[k]);

  IntPoly out(n + 1);
  Int modulus, x, t, inv;
  for (int c = 0; c <= n; ++c) {
    modulus = 1;
    x = 0;
    for (size_t k = 0; k < nprimes; ++k) {
      const u64 p = primes[k];
      const u64 r = residues[k][c];
      const u64 xmod = mpz_fdiv_ui(x.get_mpz_t(), p);
      const u64 mmod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
      u64 diff = (r + p - xmod) % p;
      diff = mulmod(diff, powmod(mmod, p - 2, p), p);
      x += modulus * Int(static_cast<unsigned long>(diff));
      modulus *= Int(static_cast<unsigned long>(p));
    }
    if (x * 2 > modulus) x -= modulus;
    out[c] = x;
  }
  return out;
}

IntPoly charpoly(const MatI64& A) {
  return A.rows <= 48 ? charpoly_berkowitz(A) : charpoly_modular(A);
}

int rank_bareiss(const MatI64& A) {
  const int n = A.rows, m = A.cols;
  std::vector<Int> w(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) w[static_cast<size_t>(i) * m + j] = A.at(i, j);
  auto at = [&](int i, int j) -> Int& { return w[static_cast<size_t>(i) * m + j]; };

  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m; ++j) swap(at(pivot, j), at(rank, j));
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < m; ++j) {
        at(i, j) = (at(rank, col) * at(i, j) - at(i, col) * at(rank, j)) / prev;
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace ramacert::exact
