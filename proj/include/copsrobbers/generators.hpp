#pragma once

// Graph factory: classical small fixtures, random models, subdivisions and the
// LPS Ramanujan graphs X^{p,q}.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/finite_field.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"
#include "copsrobbers/spectral.hpp"

namespace copsrobbers {

// ---------------------------------------------------------------- basics

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidInput("path needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  return Graph::from_edges(a + b, e);
}

inline Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw InvalidInput("directed cycle needs n >= 2");
  std::vector<Edge> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Digraph::from_arcs(n, arcs);
}

// Hamiltonian cycle 0..n-1 plus chords i -> i + shifts[i mod |shifts|].
inline Graph lcf_graph(std::size_t n, const std::vector<int>& shifts) {
  std::vector<Edge> e;
  const auto nn = static_cast<long>(n);
  for (long i = 0; i < nn; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % nn));
    long j = ((i + shifts[static_cast<std::size_t>(i) % shifts.size()]) % nn + nn) % nn;
    e.emplace_back(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
  }
  return Graph::from_edges(n, e);
}

// Generalized Petersen graph GP(n, k).
inline Graph generalized_petersen(std::size_t n, std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
    e.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + k) % n));
  }
  return Graph::from_edges(2 * n, e);
}

inline Graph petersen() { return generalized_petersen(5, 2); }
inline Graph heawood() { return lcf_graph(14, {5, -5}); }
inline Graph mcgee() { return lcf_graph(24, {12, 7, -7}); }
inline Graph tutte_coxeter() { return lcf_graph(30, {-13, -9, 7, -7, 9, 13}); }
inline Graph tutte_12_cage() {
  return lcf_graph(126, {17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17});
}

// Five pentagons P_h and five pentagrams Q_i; vertex j of P_h meets vertex
// h*i + j (mod 5) of Q_i.
inline Graph hoffman_singleton() {
  auto pent = [](int h, int j) { return static_cast<Vertex>(5 * h + j); };
  auto star = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + j); };
  std::vector<Edge> e;
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(pent(h, j), pent(h, (j + 1) % 5));
      e.emplace_back(star(h, j), star(h, (j + 2) % 5));
      for (int i = 0; i < 5; ++i) e.emplace_back(pent(h, j), star(i, (h * i + j) % 5));
    }
  return Graph::from_edges(50, e);
}

// A 60-vertex cubic graph of girth 9 (found by local search; the smallest
// cubic girth-9 graphs have 58 vertices).
inline Graph cubic_girth9() {
  static const std::vector<Edge> e = {
      {0, 20},  {0, 22},  {0, 33},  {1, 21},  {1, 22},  {1, 44},  {2, 11},  {2, 27},  {2, 37},  {3, 4},
      {3, 8},   {3, 25},  {4, 14},  {4, 57},  {5, 29},  {5, 43},  {5, 48},  {6, 21},  {6, 40},  {6, 43},
      {7, 27},  {7, 36},  {7, 55},  {8, 18},  {8, 44},  {9, 28},  {9, 36},  {9, 57},  {10, 26}, {10, 41},
      {10, 51}, {11, 25}, {11, 39}, {12, 42}, {12, 44}, {12, 56}, {13, 35}, {13, 39}, {13, 42}, {14, 20},
      {14, 47}, {15, 18}, {15, 34}, {15, 38}, {16, 28}, {16, 48}, {16, 53}, {17, 29}, {17, 41}, {17, 58},
      {18, 51}, {19, 37}, {19, 49}, {19, 51}, {20, 49}, {21, 45}, {22, 46}, {23, 32}, {23, 45}, {23, 53},
      {24, 33}, {24, 52}, {24, 53}, {25, 29}, {26, 40}, {26, 52}, {27, 31}, {28, 54}, {30, 32}, {30, 38},
      {30, 47}, {31, 47}, {31, 56}, {32, 58}, {33, 55}, {34, 43}, {34, 55}, {35, 38}, {35, 54}, {36, 59},
      {37, 45}, {39, 52}, {40, 57}, {41, 46}, {42, 50}, {46, 54}, {48, 56}, {49, 50}, {50, 59}, {58, 59}};
  return Graph::from_edges(60, e);
}

// Point-line incidence graph of PG(2, q); points are 0..N-1, lines N..2N-1.
inline Graph pg_incidence(int q) {
  if (q > 64) throw InvalidInput("pg_incidence: q > 64 not supported");
  FiniteField f(q);
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) pts.push_back({1, x, y});
  for (int y = 0; y < q; ++y) pts.push_back({0, 1, y});
  pts.push_back({0, 0, 1});
  const std::size_t n = pts.size();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = f.add(f.add(f.mul(pts[i][0], pts[j][0]), f.mul(pts[i][1], pts[j][1])), f.mul(pts[i][2], pts[j][2]));
      if (s == 0) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + j));
    }
  return Graph::from_edges(2 * n, e);
}

// ---------------------------------------------------------------- transforms

// Every edge becomes a path with k+1 edges; new vertices are appended in edge order.
inline Graph subdivide(const Graph& g, int k) {
  if (k < 0) throw InvalidInput("subdivide: k must be >= 0");
  std::vector<Edge> e;
  auto next = static_cast<Vertex>(g.order());
  for (const auto& [u, v] : g.edges()) {
    Vertex prev = u;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  return Graph::from_edges(static_cast<std::size_t>(next), e);
}

// ---------------------------------------------------------------- random models

inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_tree: n must be >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> pruefer(n - 2);
  for (auto& x : pruefer) x = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (auto x : pruefer) ++degree[x];
  std::vector<Edge> e;
  for (auto x : pruefer) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(static_cast<Vertex>(v));
  e.emplace_back(last[0], last[1]);
  return Graph::from_edges(n, e);
}

// Pairing model, rejecting loops and multi-edges; deterministic under seed.
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, int max_attempts = 100000) {
  if ((n * d) % 2 != 0) throw InvalidInput("random_regular: n*d must be even");
  if (d >= n && n > 0) throw InvalidInput("random_regular: need d < n");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) points.push_back(static_cast<Vertex>(v));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> e;
    bool simple = true;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = std::min(points[i], points[i + 1]);
      Vertex b = std::max(points[i], points[i + 1]);
      if (a == b || !seen.insert((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b)).second) simple = false;
      e.emplace_back(a, b);
    }
    if (simple) return Graph::from_edges(n, e);
  }
  throw ResourceError("random_regular: no simple pairing within " + std::to_string(max_attempts) + " attempts",
                      static_cast<unsigned long long>(max_attempts));
}

// Bipartite circulant (left i ~ right i..i+d-1 mod m) scrambled by random
// degree-preserving switches ab, cd -> ad, cb that keep the graph simple.
// Left side is [0,m), right side [m,2m).
inline Graph random_bipartite_regular(std::size_t m, std::size_t d, std::uint64_t seed) {
  if (d > m) throw InvalidInput("random_bipartite_regular: need d <= side size");
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      adj[i][(i + k) % m] = 1;
      e.emplace_back(i, (i + k) % m);
    }
  std::mt19937_64 rng(seed);
  if (!e.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    for (std::size_t it = 0; it < 20 * e.size(); ++it) {
      auto x = pick(rng), y = pick(rng);
      auto [a, b] = e[x];
      auto [c, dd] = e[y];
      if (a == c || b == dd || adj[a][dd] || adj[c][b]) continue;
      adj[a][b] = adj[c][dd] = 0;
      adj[a][dd] = adj[c][b] = 1;
      e[x] = {a, dd};
      e[y] = {c, b};
    }
  }
  std::vector<Edge> out;
  for (auto [a, b] : e) out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(m + b));
  return Graph::from_edges(2 * m, out);
}

// Each ordered pair becomes an arc independently with probability p.
inline Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("random_digraph: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Digraph::from_arcs(n, arcs);
}

// d-regular graph of girth >= min_girth: a random pairing followed by edge
// switches. Each accepted switch removes an edge lying on a short cycle and
// adds two edges lying on no short cycle, so the number of short cycles
// strictly drops.
inline Graph high_girth_regular(std::size_t n, std::size_t d, int min_girth, std::uint64_t seed,
                                long max_switch_attempts = 20000000) {
  if (min_girth < 3) return random_regular(n, d, seed);
  Graph start = random_regular(n, d, seed);
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = start.neighbors(static_cast<Vertex>(v));
    adj[v].assign(nb.begin(), nb.end());
  }
  auto has = [&](Vertex a, Vertex b) {
    const auto& r = adj[static_cast<std::size_t>(a)];
    return std::find(r.begin(), r.end(), b) != r.end();
  };
  auto drop = [&](Vertex a, Vertex b) {
    auto& ra = adj[static_cast<std::size_t>(a)];
    ra.erase(std::find(ra.begin(), ra.end(), b));
    auto& rb = adj[static_cast<std::size_t>(b)];
    rb.erase(std::find(rb.begin(), rb.end(), a));
  };
  auto link = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  auto reset = [&] {
    for (Vertex x : touched) dist[static_cast<std::size_t>(x)] = -1;
    touched.clear();
    queue.clear();
  };
  // Shortest a-b path avoiding the edge ab itself, truncated at `limit`.
  auto detour = [&](Vertex a, Vertex b, int limit) {
    reset();
    dist[static_cast<std::size_t>(a)] = 0;
    touched.push_back(a);
    queue.push_back(a);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      int dx = dist[static_cast<std::size_t>(x)];
      if (dx >= limit) break;
      for (Vertex y : adj[static_cast<std::size_t>(x)]) {
        if (x == a && y == b) continue;
        if (dist[static_cast<std::size_t>(y)] >= 0) continue;
        if (y == b) return dx + 1;
        dist[static_cast<std::size_t>(y)] = dx + 1;
        touched.push_back(y);
        queue.push_back(y);
      }
    }
    return limit + 1;
  };
  // An edge on a cycle shorter than min_girth through the BFS tree rooted at s.
  auto short_edge = [&](Vertex s) -> std::optional<Edge> {
    reset();
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      int dx = dist[static_cast<std::size_t>(x)];
      if (2 * dx + 1 >= min_girth) break;
      for (Vertex y : adj[static_cast<std::size_t>(x)]) {
        auto yi = static_cast<std::size_t>(y);
        if (dist[yi] < 0) {
          dist[yi] = dx + 1;
          parent[yi] = x;
          touched.push_back(y);
          queue.push_back(y);
        } else if (y != parent[static_cast<std::size_t>(x)] && dx + dist[yi] + 1 < min_girth) {
          return Edge{x, y};
        }
      }
    }
    return std::nullopt;
  };

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_slot(0, d - 1);
  long attempts = 0;
  for (std::size_t s = 0; s < n;) {
    auto bad = short_edge(static_cast<Vertex>(s));
    if (!bad) {
      ++s;
      continue;
    }
    auto [a, b] = *bad;
    bool switched = false;
    while (!switched) {
      if (++attempts > max_switch_attempts)
        throw ResourceError("high_girth_regular: switch budget exhausted", static_cast<unsigned long long>(max_switch_attempts));
      auto c = static_cast<Vertex>(pick_vertex(rng));
      Vertex dd = adj[static_cast<std::size_t>(c)][pick_slot(rng)];
      if (c == a || c == b || dd == a || dd == b || has(a, c) || has(b, dd)) continue;
      drop(a, b);
      drop(c, dd);
      link(a, c);
      link(b, dd);
      if (detour(a, c, min_girth - 2) >= min_girth - 1 && detour(b, dd, min_girth - 2) >= min_girth - 1) {
        switched = true;
      } else {
        drop(a, c);
        drop(b, dd);
        link(a, b);
        link(c, dd);
      }
    }
  }
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : adj[v])
      if (static_cast<Vertex>(v) < w) e.emplace_back(static_cast<Vertex>(v), w);
  return Graph::from_edges(n, e);
}

// ---------------------------------------------------------------- LPS

struct LpsParams {
  long p = 5;
  long q = 13;
  std::size_t max_n = 200000;

  long degree() const { return p + 1; }
  std::size_t order() const { return static_cast<std::size_t>(q * (q * q - 1)); }

  void validate() const {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput("lps: p=" + std::to_string(p) + " is not prime");
    if (p % 4 != 1) throw InvalidInput("lps: p must be 1 mod 4");
    if (!is_prime(static_cast<std::uint64_t>(q))) throw InvalidInput("lps: q=" + std::to_string(q) + " is not prime");
    if (q % 4 != 1) throw InvalidInput("lps: q must be 1 mod 4");
    if (q == p) throw InvalidInput("lps: p and q must differ");
    if (q * q <= p) throw InvalidInput("lps: need q > sqrt(p)");
    if (legendre(q, p) == 1) throw InvalidInput("lps: unsupported: (q/p) = 1 gives the non-bipartite branch");
    if (order() > max_n)
      throw InvalidInput("lps: q(q^2-1) = " + std::to_string(order()) + " exceeds max n " + std::to_string(max_n));
  }
};

struct LpsReport {
  long p = 0;
  long q = 0;
  long d = 0;
  std::size_t n = 0;
  std::size_t expected_n = 0;
  bool regular = false;
  bool bipartite = false;
  bool connected = false;
  int girth = 0;
  double girth_bound = 0.0;  // 4 ln q / ln p - 1
  bool girth_ok = false;
  double lambda2 = 0.0;
  double lambda2_residual = 0.0;
  bool ramanujan = false;
  std::vector<std::string> conditions;
  bool ok() const {
    return regular && bipartite && connected && n == expected_n && girth_ok && ramanujan;
  }
};

struct LpsGraph {
  Graph graph;
  LpsReport report;
};

namespace detail {

struct Mat2 {
  long a, b, c, d;
};

// The p+1 quaternion generators: a odd and positive, b, c, d even.
inline std::vector<std::array<long, 4>> lps_quaternions(long p) {
  std::vector<std::array<long, 4>> out;
  const long r = static_cast<long>(std::sqrt(static_cast<double>(p))) + 1;
  for (long a = 1; a <= r; a += 2)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c)
        for (long d = -r; d <= r; ++d)
          if (b % 2 == 0 && c % 2 == 0 && d % 2 == 0 && a * a + b * b + c * c + d * d == p) out.push_back({a, b, c, d});
  return out;
}

}  // namespace detail

// Cayley graph of PGL(2, q) with the LPS generators (no verification).
inline Graph lps_cayley(const LpsParams& params) {
  params.validate();
  const long p = params.p;
  const long q = params.q;
  auto quats = detail::lps_quaternions(p);
  if (static_cast<long>(quats.size()) != p + 1)
    throw InternalError("lps: found " + std::to_string(quats.size()) + " quaternion solutions, expected " +
                        std::to_string(p + 1));
  long iq = -1;
  for (long x = 0; x < q; ++x)
    if ((x * x + 1) % q == 0) {
      iq = x;
      break;
    }
  if (iq < 0) throw InternalError("lps: no square root of -1 mod q");
  auto mod = [q](long x) { return ((x % q) + q) % q; };
  std::vector<detail::Mat2> gens;
  for (const auto& [a, b, c, d] : quats)
    gens.push_back({mod(a + iq * b), mod(c + iq * d), mod(-c + iq * d), mod(a - iq * b)});

  // Normalise: scale so the first nonzero entry is 1.
  std::vector<long> inverse(static_cast<std::size_t>(q), 0);
  for (long x = 1; x < q; ++x)
    inverse[static_cast<std::size_t>(x)] =
        static_cast<long>(pow_mod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(q - 2), static_cast<std::uint64_t>(q)));
  auto key = [&](detail::Mat2 m) {
    long lead = m.a != 0 ? m.a : m.b;
    long s = inverse[static_cast<std::size_t>(lead)];
    m = {m.a * s % q, m.b * s % q, m.c * s % q, m.d * s % q};
    return static_cast<std::size_t>(((m.a * q + m.b) * q + m.c) * q + m.d);
  };

  const auto q4 = static_cast<std::size_t>(q * q * q * q);
  std::vector<Vertex> id(q4, -1);
  std::vector<detail::Mat2> elems;
  for (long a = 0; a <= 1; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d) {
          if (a == 0 && b != 1) continue;
          if (mod(a * d - b * c) == 0) continue;
          detail::Mat2 m{a, b, c, d};
          id[key(m)] = static_cast<Vertex>(elems.size());
          elems.push_back(m);
        }
  std::vector<Edge> e;
  for (std::size_t v = 0; v < elems.size(); ++v) {
    const auto& m = elems[v];
    for (const auto& s : gens) {
      detail::Mat2 prod{mod(m.a * s.a + m.b * s.c), mod(m.a * s.b + m.b * s.d), mod(m.c * s.a + m.d * s.c),
                        mod(m.c * s.b + m.d * s.d)};
      Vertex w = id[key(prod)];
      if (w < 0) throw InternalError("lps: product left the group");
      if (static_cast<Vertex>(v) < w) e.emplace_back(static_cast<Vertex>(v), w);
      else if (w < static_cast<Vertex>(v)) e.emplace_back(w, static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(elems.size(), e);
}

// Generates X^{p,q} and machine-checks every structural claim about it.
inline LpsGraph lps_graph(const LpsParams& params) {
  LpsGraph out{lps_cayley(params), {}};
  auto& r = out.report;
  const Graph& g = out.graph;
  r.p = params.p;
  r.q = params.q;
  r.d = params.degree();
  r.n = g.order();
  r.expected_n = params.order();
  r.regular = g.regular_degree() == r.d;
  r.bipartite = is_bipartite(g);
  r.connected = g.connected();
  r.girth = girth(g).value_or(0);
  r.girth_bound = 4.0 * std::log(static_cast<double>(params.q)) / std::log(static_cast<double>(params.p)) - 1.0;
  r.girth_ok = r.girth >= r.girth_bound;
  r.conditions = {"p prime, p = 1 mod 4", "q prime, q = 1 mod 4", "q > sqrt(p)", "(q/p) = -1"};
  if (r.regular && r.connected) {
    auto spec = second_eigenvalue(g);
    r.lambda2 = spec.lambda2;
    r.lambda2_residual = spec.residual;
    r.ramanujan = spec.lambda2 * spec.lambda2 <= 4.0 * static_cast<double>(r.d - 1) + 1e-6;
  }
  return out;
}

// ---------------------------------------------------------------- registry

struct FixtureInfo {
  std::string name;
  std::size_t n;
  long degree;
  int girth;
};

inline const std::vector<FixtureInfo>& fixture_registry() {
  static const std::vector<FixtureInfo> reg = {
      {"petersen", 10, 3, 5},         {"heawood", 14, 3, 6},        {"mcgee", 24, 3, 7},
      {"tutte_coxeter", 30, 3, 8},    {"tutte12", 126, 3, 12},      {"hoffman_singleton", 50, 7, 5},
      {"cubic_girth9", 60, 3, 9},
  };
  return reg;
}

inline Graph named_fixture(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "mcgee") return mcgee();
  if (name == "tutte_coxeter") return tutte_coxeter();
  if (name == "tutte12") return tutte_12_cage();
  if (name == "hoffman_singleton") return hoffman_singleton();
  if (name == "cubic_girth9") return cubic_girth9();
  throw InvalidInput("unknown fixture '" + name + "'");
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep, std::size_t max_parts = std::string::npos) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (parts.size() + 1 < max_parts) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) break;
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  parts.push_back(s.substr(start));
  return parts;
}

inline long parse_long(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("generator spec '" + spec + "': '" + s + "' is not an integer");
  }
}

}  // namespace detail

// Generator specs, e.g. "petersen", "cycle:8", "pg:3", "regular:20:3:7",
// "highgirth:4000:4:9:1", "lps:5:13", "subdivide:1:tutte12".
inline bool is_generator_spec(const std::string& spec) {
  static const std::vector<std::string> heads = {"cycle", "path", "complete", "kbip", "tree", "regular", "highgirth",
                                                 "lps", "pg", "subdivide", "bipreg"};
  auto head = detail::split(spec, ':', 2)[0];
  if (std::find(heads.begin(), heads.end(), head) != heads.end()) return true;
  for (const auto& f : fixture_registry())
    if (f.name == spec) return true;
  return false;
}

inline Graph generate(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  const std::string& head = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidInput("generator spec '" + spec + "': missing argument");
    return detail::parse_long(parts[i], spec);
  };
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1) throw InvalidInput("generator spec '" + spec + "': expected " + std::to_string(count) + " argument(s)");
  };
  auto size_arg = [&](std::size_t i) {
    long v = arg(i);
    if (v < 0) throw InvalidInput("generator spec '" + spec + "': negative argument");
    return static_cast<std::size_t>(v);
  };
  if (head == "subdivide") {
    auto sub = detail::split(spec, ':', 3);
    if (sub.size() != 3) throw InvalidInput("generator spec '" + spec + "': expected subdivide:k:<spec>");
    return subdivide(generate(sub[2]), static_cast<int>(detail::parse_long(sub[1], spec)));
  }
  if (head == "cycle") return need(1), cycle_graph(size_arg(1));
  if (head == "path") return need(1), path_graph(size_arg(1));
  if (head == "complete") return need(1), complete_graph(size_arg(1));
  if (head == "kbip") return need(2), complete_bipartite(size_arg(1), size_arg(2));
  if (head == "tree") return need(2), random_tree(size_arg(1), static_cast<std::uint64_t>(arg(2)));
  if (head == "regular") return need(3), random_regular(size_arg(1), size_arg(2), static_cast<std::uint64_t>(arg(3)));
  if (head == "highgirth")
    return need(4), high_girth_regular(size_arg(1), size_arg(2), static_cast<int>(arg(3)), static_cast<std::uint64_t>(arg(4)));
  if (head == "bipreg")
    return need(3), random_bipartite_regular(size_arg(1), size_arg(2), static_cast<std::uint64_t>(arg(3)));
  if (head == "pg") return need(1), pg_incidence(static_cast<int>(arg(1)));
  if (head == "lps") return need(2), lps_cayley(LpsParams{arg(1), arg(2)});
  return named_fixture(spec);
}

// Digraph specs: "dcycle:n", "digraph:n:p:seed", "bidirected:<spec>". Any
// other graph spec is read as its bidirected version.
inline bool is_digraph_spec(const std::string& spec) {
  auto head = detail::split(spec, ':', 2)[0];
  return head == "dcycle" || head == "digraph" || head == "bidirected" || is_generator_spec(spec);
}

inline Digraph generate_digraph(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  const std::string& head = parts[0];
  if (head == "bidirected") {
    auto sub = detail::split(spec, ':', 2);
    if (sub.size() != 2) throw InvalidInput("digraph spec '" + spec + "': expected bidirected:<spec>");
    return Digraph::bidirected(generate(sub[1]));
  }
  if (head == "dcycle") {
    if (parts.size() != 2) throw InvalidInput("digraph spec '" + spec + "': expected dcycle:n");
    long n = detail::parse_long(parts[1], spec);
    if (n < 2) throw InvalidInput("digraph spec '" + spec + "': need n >= 2");
    return directed_cycle(static_cast<std::size_t>(n));
  }
  if (head == "digraph") {
    if (parts.size() != 4) throw InvalidInput("digraph spec '" + spec + "': expected digraph:n:p:seed");
    long n = detail::parse_long(parts[1], spec);
    if (n < 1) throw InvalidInput("digraph spec '" + spec + "': need n >= 1");
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::exception&) {
      throw InvalidInput("digraph spec '" + spec + "': '" + parts[2] + "' is not a number");
    }
    return random_digraph(static_cast<std::size_t>(n), p, static_cast<std::uint64_t>(detail::parse_long(parts[3], spec)));
  }
  return Digraph::bidirected(generate(spec));
}

}  // namespace copsrobbers
