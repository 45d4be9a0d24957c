#include "ramacert/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "ramacert/error.hpp"

namespace ramacert {

namespace {

// Union-find over n1 + n2 vertices; color-2 vertex v maps to n1 + v.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

bool bigraph_connected(int n1, int n2, const std::vector<std::pair<int, int>>& edges) {
  if (n1 + n2 == 0) return false;
  Dsu dsu(n1 + n2);
  for (auto [u, v] : edges) dsu.merge(u, n1 + v);
  const int root = dsu.find(0);
  for (int i = 1; i < n1 + n2; ++i)
    if (dsu.find(i) != root) return false;
  return true;
}

// Deterministic cross-platform PRNG (splitmix64); std::shuffle and
// uniform_int_distribution are implementation-defined, which would break
// the byte-identical-output contract.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Unbiased draw in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }
};

}  // namespace

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int m, int n) {
  SimpleGraph g;
  g.n = m + n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.edges.emplace_back(i, m + j);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  SimpleGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(std::min(i, (i + 1) % n),
                                                   std::max(i, (i + 1) % n));
  return g;
}

SimpleGraph SimpleGraph::petersen() {
  SimpleGraph g;
  g.n = 10;
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));  // outer
    g.edges.emplace_back(i, 5 + i);                                            // spoke
    g.edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5),
                         std::max(5 + i, 5 + (i + 2) % 5));                     // inner
  }
  return g;
}

Bigraph validate(int n1, int n2, std::vector<std::pair<int, int>> edges,
                 bool allow_multi) {
  if (edges.empty()) fail(ErrorCode::EmptyGraph, "edge list is empty");
  if (n1 <= 0 || n2 <= 0)
    fail(ErrorCode::NotBiregular, "vertex counts must be positive");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n1 || v < 0 || v >= n2)
      fail(ErrorCode::NotBiregular, "edge endpoint out of range");
  }
  if (!allow_multi) {
    std::set<std::pair<int, int>> seen;
    for (auto e : edges) {
      if (!seen.insert(e).second)
        fail(ErrorCode::ParallelEdges,
             "parallel edge (" + std::to_string(e.first) + ", " +
                 std::to_string(e.second) + ")");
    }
  }
  std::vector<int> deg1(n1, 0), deg2(n2, 0);
  for (auto [u, v] : edges) {
    ++deg1[u];
    ++deg2[v];
  }
  for (int u = 0; u < n1; ++u)
    if (deg1[u] != deg1[0])
      fail(ErrorCode::NotBiregular, "color-1 vertex " + std::to_string(u) +
                                        " has degree " + std::to_string(deg1[u]) +
                                        ", expected " + std::to_string(deg1[0]));
  for (int v = 0; v < n2; ++v)
    if (deg2[v] != deg2[0])
      fail(ErrorCode::NotBiregular, "color-2 vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(deg2[v]) +
                                        ", expected " + std::to_string(deg2[0]));
  if (!bigraph_connected(n1, n2, edges))
    fail(ErrorCode::NotConnected, "graph is not connected");

  Bigraph x;
  x.q1 = deg1[0] - 1;
  x.q2 = deg2[0] - 1;
  x.n1 = n1;
  x.n2 = n2;
  x.edges = std::move(edges);
  if (x.q1 < x.q2) {  // orient so the larger valency is color 1
    std::swap(x.q1, x.q2);
    std::swap(x.n1, x.n2);
    for (auto& [u, v] : x.edges) std::swap(u, v);
  }
  return x;
}

Bigraph complete_bipartite(int m, int n) {
  if (m < 1 || n < m)
    fail(ErrorCode::InvalidArgument, "complete_bipartite requires 1 <= m <= n");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m) * n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, v);
  return validate(m, n, std::move(edges));
}

Bigraph subdivision(const SimpleGraph& g) {
  if (g.n == 0 || g.edges.empty()) fail(ErrorCode::EmptyGraph, "empty input graph");
  std::vector<int> deg(g.n, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
      fail(ErrorCode::NotRegular, "input must be a simple graph");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(ErrorCode::NotRegular, "input must be a simple graph (parallel edge)");
    ++deg[u];
    ++deg[v];
  }
  const int d = deg[0];
  for (int u = 0; u < g.n; ++u)
    if (deg[u] != d) fail(ErrorCode::NotRegular, "input graph is not regular");
  if (d < 3) fail(ErrorCode::NotRegular, "subdivision requires degree >= 3");
  {
    Dsu dsu(g.n);
    for (auto [u, v] : g.edges) dsu.merge(u, v);
    for (int i = 1; i < g.n; ++i)
      if (dsu.find(i) != dsu.find(0))
        fail(ErrorCode::NotConnected, "input graph is not connected");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges.size());
  for (size_t idx = 0; idx < g.edges.size(); ++idx) {
    edges.emplace_back(g.edges[idx].first, static_cast<int>(idx));
    edges.emplace_back(g.edges[idx].second, static_cast<int>(idx));
  }
  return validate(g.n, static_cast<int>(g.edges.size()), std::move(edges));
}

Bigraph random_biregular(int n1, int n2, int q1, int q2, std::uint64_t seed,
                         bool allow_multi, int max_retries) {
  if (n1 < 1 || n2 < 1 || q1 < 0 || q2 < 0 ||
      static_cast<long long>(n1) * (q1 + 1) != static_cast<long long>(n2) * (q2 + 1))
    fail(ErrorCode::InfeasibleDegrees,
         "need n1*(q1+1) == n2*(q2+1) with positive counts");

  const int m = n1 * (q1 + 1);
  std::vector<int> stubs2(m);
  {
    int k = 0;
    for (int v = 0; v < n2; ++v)
      for (int d = 0; d <= q2; ++d) stubs2[k++] = v;
  }
  SplitMix64 rng(seed ^ 0x5ca1ab1e00000000ull);
  std::vector<int> perm(m);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    perm = stubs2;
    for (int i = m - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    std::vector<std::pair<int, int>> edges(m);
    for (int i = 0; i < m; ++i) edges[i] = {i / (q1 + 1), perm[i]};
    if (!allow_multi) {
      std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
      if (static_cast<int>(seen.size()) != m) continue;
    }
    if (!bigraph_connected(n1, n2, edges)) continue;
    return validate(n1, n2, std::move(edges), allow_multi);
  }
  fail(ErrorCode::RetryLimitExceeded,
       "no simple connected sample after " + std::to_string(max_retries) +
           " attempts");
}

namespace {

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(ErrorCode::SyntaxError,
         "line " + std::to_string(line_no) + ": expected integer, got '" +
             std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Bigraph parse_edge_list(std::string_view text, bool allow_multi) {
  int n1 = -1, n2 = -1;
  bool saw_magic = false;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (!saw_magic) {
      if (toks.size() != 2 || toks[0] != "bigraph" || toks[1] != "1")
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": expected header 'bigraph 1'");
      saw_magic = true;
    } else if (n1 < 0) {
      if (toks.size() != 2)
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": expected '<n1> <n2>'");
      n1 = parse_int(toks[0], line_no);
      n2 = parse_int(toks[1], line_no);
    } else {
      if (toks.size() != 2)
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": expected '<u> <v>'");
      const int u = parse_int(toks[0], line_no);
      const int v = parse_int(toks[1], line_no);
      if (u < 0 || u >= n1 || v < 0 || v >= n2)
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": edge index out of range");
      edges.emplace_back(u, v);
    }
    if (pos > text.size()) break;
  }
  if (!saw_magic) fail(ErrorCode::SyntaxError, "line 1: missing 'bigraph 1' header");
  if (n1 < 0) fail(ErrorCode::SyntaxError, "missing '<n1> <n2>' line");
  return validate(n1, n2, std::move(edges), allow_multi);
}

std::string serialize(const Bigraph& x) {
  std::vector<std::pair<int, int>> sorted = x.edges;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "bigraph 1\n" << x.n1 << ' ' << x.n2 << '\n';
  for (auto [u, v] : sorted) out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph to_simple(const Bigraph& x) {
  SimpleGraph g;
  g.n = x.n1 + x.n2;
  g.edges.reserve(x.edges.size());
  for (auto [u, v] : x.edges) g.edges.emplace_back(u, x.n1 + v);
  return g;
}

}  // namespace ramacert
