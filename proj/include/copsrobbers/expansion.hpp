#pragma once

// Vertex expansion h_gamma, the edge isoperimetric number, the ball-growth
// inequality and the Tanner eigenvalue bound for bipartite regular graphs.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/rational.hpp"
#include "copsrobbers/spectral.hpp"

namespace copsrobbers {

inline constexpr std::size_t kSubsetCap = 24;

struct ExpansionProfile {
  double gamma = 0.5;
  long set_cap = 0;  // largest |S| allowed, floor(n^(1-gamma))
  Rational epsilon;  // certified lower bound on h_gamma
  std::optional<Rational> exact;
  std::string method;  // "brute" or "spectral"
  std::vector<Vertex> witness;  // brute: a minimising S

  // spectral only
  Rational lambda;   // bound on the second eigenvalue of B B^T actually used
  double limit = 0;  // (d / lambda2)^2 - 1
  double quarter_limit = 0;  // d/4 - 1
  bool saturated = false;    // lambda2 numerically zero
  std::vector<std::pair<long, Rational>> profile;  // (|S|, lower bound on |dS|)
};

// Largest integer s with s <= n^(1-gamma).
inline long set_size_cap(std::size_t n, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidInput("gamma must lie in (0,1)");
  long double x = std::pow(static_cast<long double>(n), 1.0L - gamma);
  auto s = static_cast<long>(std::floor(x + 1e-12L));
  return std::max(0L, std::min(s, static_cast<long>(n)));
}

// dS: vertices outside S with a neighbour in S.
inline std::vector<Vertex> vertex_boundary(const Graph& g, std::span<const Vertex> S) {
  std::vector<char> in(g.order(), 0), out(g.order(), 0);
  for (Vertex v : S) {
    detail::check_vertex(g.order(), v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : S)
    for (Vertex w : g.neighbors(v))
      if (!in[static_cast<std::size_t>(w)]) out[static_cast<std::size_t>(w)] = 1;
  std::vector<Vertex> res;
  for (std::size_t w = 0; w < out.size(); ++w)
    if (out[w]) res.push_back(static_cast<Vertex>(w));
  return res;
}

// Number of edges with exactly one end in S.
inline std::size_t edge_boundary_size(const Graph& g, std::span<const Vertex> S) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : S) {
    detail::check_vertex(g.order(), v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t cut = 0;
  for (Vertex v : S)
    for (Vertex w : g.neighbors(v)) cut += !in[static_cast<std::size_t>(w)];
  return cut;
}

namespace detail {

inline void check_subset_cap(const Graph& g, const char* what) {
  if (g.order() > kSubsetCap)
    throw ResourceError(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds the subset cap " +
                            std::to_string(kSubsetCap),
                        1ULL << std::min<std::size_t>(g.order(), 63));
}

inline std::vector<std::uint32_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nb[v] |= 1u << w;
  return nb;
}

inline std::vector<Vertex> mask_vertices(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

// Visits every nonempty S with |S| <= cap, passing S and N(S) as masks.
template <class F>
void for_each_subset(const std::vector<std::uint32_t>& nb, long cap, F&& f) {
  const auto n = static_cast<int>(nb.size());
  auto rec = [&](auto&& self, int next, long size, std::uint32_t S, std::uint32_t N) -> void {
    for (int v = next; v < n; ++v) {
      std::uint32_t S2 = S | (1u << v), N2 = N | nb[static_cast<std::size_t>(v)];
      f(S2, N2);
      if (size + 1 < cap) self(self, v + 1, size + 1, S2, N2);
    }
  };
  if (cap >= 1) rec(rec, 0, 0, 0u, 0u);
}

}  // namespace detail

// Exact h_gamma = min |dS|/|S| over 0 < |S| <= n^(1-gamma).
inline ExpansionProfile h_gamma_bruteforce(const Graph& g, double gamma) {
  detail::check_subset_cap(g, "h_gamma_bruteforce");
  ExpansionProfile prof;
  prof.gamma = gamma;
  prof.method = "brute";
  prof.set_cap = set_size_cap(g.order(), gamma);
  if (prof.set_cap < 1) throw PreconditionError("h_gamma: no admissible set size");
  auto nb = detail::neighbour_masks(g);
  long best_num = -1, best_den = 1;
  std::uint32_t arg = 0;
  detail::for_each_subset(nb, prof.set_cap, [&](std::uint32_t S, std::uint32_t N) {
    long num = std::popcount(N & ~S), den = std::popcount(S);
    if (best_num < 0 || num * best_den < best_num * den) {
      best_num = num;
      best_den = den;
      arg = S;
    }
  });
  prof.exact = Rational(best_num, best_den);
  prof.epsilon = *prof.exact;
  prof.witness = detail::mask_vertices(arg);
  return prof;
}

struct IsoperimetricResult {
  Rational value;
  std::vector<Vertex> witness;
};

// h(G) = min |delta S|/|S| over 0 < |S| <= n/2, delta S the crossing edges.
inline IsoperimetricResult isoperimetric_number(const Graph& g) {
  detail::check_subset_cap(g, "isoperimetric_number");
  if (g.order() < 2) throw PreconditionError("isoperimetric number needs at least two vertices");
  std::vector<long> deg(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) deg[v] = static_cast<long>(g.degree(static_cast<Vertex>(v)));
  auto nb = detail::neighbour_masks(g);
  const auto n = static_cast<int>(g.order());
  const long cap = n / 2;
  long best_num = -1, best_den = 1;
  std::uint32_t arg = 0;
  auto rec = [&](auto&& self, int next, long size, std::uint32_t S, long cut) -> void {
    for (int v = next; v < n; ++v) {
      auto vi = static_cast<std::size_t>(v);
      long cut2 = cut + deg[vi] - 2L * std::popcount(nb[vi] & S);
      std::uint32_t S2 = S | (1u << v);
      if (best_num < 0 || cut2 * best_den < best_num * (size + 1)) {
        best_num = cut2;
        best_den = size + 1;
        arg = S2;
      }
      if (size + 1 < cap) self(self, v + 1, size + 1, S2, cut2);
    }
  };
  rec(rec, 0, 0, 0u, 0L);
  return {Rational(best_num, best_den), detail::mask_vertices(arg)};
}

// |B_r'(S)| for r' = 0..r by layered multi-source BFS.
inline std::vector<std::size_t> ball_sizes(const Graph& g, std::span<const Vertex> S, Hops r) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> frontier;
  for (Vertex v : S) {
    detail::check_vertex(g.order(), v);
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      frontier.push_back(v);
    }
  }
  std::vector<std::size_t> sizes{frontier.size()};
  for (Hops k = 1; k <= r; ++k) {
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          next.push_back(w);
        }
    sizes.push_back(sizes.back() + next.size());
    frontier = std::move(next);
  }
  return sizes;
}

struct BallGrowthOptions {
  std::size_t random_sets = 200;
  std::uint64_t seed = 1;
  std::size_t exhaustive_max_n = 18;
};

struct BallGrowthReport {
  bool exhaustive = false;
  std::size_t sets = 0;
  std::size_t checks = 0;  // (S, r') pairs
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

// |B_r'(S)| >= min{n^(1-gamma), |S|(1+eps)^r'} for r' <= r over singletons,
// edges and random sets of size <= n^(1-gamma); every such S when n is small.
inline BallGrowthReport check_ball_growth(const Graph& g, double gamma, double eps, Hops r,
                                          const BallGrowthOptions& opt = {}) {
  if (r < 0) throw InvalidInput("radius must be >= 0");
  if (eps < 0) throw InvalidInput("epsilon must be >= 0");
  const auto n = g.order();
  const long cap = set_size_cap(n, gamma);
  const long double target = std::pow(static_cast<long double>(n), 1.0L - gamma);
  BallGrowthReport rep;
  auto check = [&](std::span<const Vertex> S) {
    ++rep.sets;
    auto sizes = ball_sizes(g, S, r);
    for (Hops k = 0; k <= r; ++k) {
      ++rep.checks;
      long double need = std::min(target, static_cast<long double>(S.size()) * std::pow(1.0L + eps, k));
      if (static_cast<long double>(sizes[static_cast<std::size_t>(k)]) + 1e-9L < need) {
        std::string s = "S={";
        for (std::size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
        rep.violations.push_back(s + "} r=" + std::to_string(k) + ": |B|=" +
                                 std::to_string(sizes[static_cast<std::size_t>(k)]) + " < " +
                                 std::to_string(static_cast<double>(need)));
      }
    }
  };
  if (n <= opt.exhaustive_max_n && n <= kSubsetCap) {
    rep.exhaustive = true;
    detail::for_each_subset(detail::neighbour_masks(g), cap, [&](std::uint32_t S, std::uint32_t) {
      auto vs = detail::mask_vertices(S);
      check(vs);
    });
    return rep;
  }
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    Vertex s[] = {v};
    check(s);
  }
  if (cap >= 2)
    for (const auto& e : g.edges()) {
      Vertex s[] = {e.first, e.second};
      check(s);
    }
  std::mt19937_64 rng(opt.seed);
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < opt.random_sets && cap >= 1; ++i) {
    auto k = std::uniform_int_distribution<long>(1, cap)(rng);
    std::vector<Vertex> S;
    std::sample(all.begin(), all.end(), std::back_inserter(S), k, rng);
    check(S);
  }
  return rep;
}

// f(s) = d^2 s / (lambda + 2 (d^2 - lambda) s / n), n the total vertex count.
inline Rational tanner_bound(long d, const Rational& lambda, std::size_t n, long s) {
  if (d < 1) throw InvalidInput("tanner_bound: d must be >= 1");
  if (lambda <= 0) throw InvalidInput("tanner_bound: lambda must be positive");
  const Rational d2(d * d);
  if (lambda > d2) throw InvalidInput("tanner_bound: lambda exceeds d^2");
  if (s < 1 || 2 * static_cast<std::size_t>(s) > n) throw InvalidInput("tanner_bound: need 1 <= s <= n/2");
  return d2 * s / (lambda + 2 * (d2 - lambda) * s / static_cast<long>(n));
}

// Certified finite-n lower bound on h_gamma for a connected bipartite
// d-regular graph. For |S| = s split as a + b over the two sides,
// |dS| >= f(a) + f(b) - s; f is concave so only the extreme splits matter.
inline ExpansionProfile spectral_hgamma_bound(const SpectralReport& rep, double gamma) {
  if (!rep.bipartite) throw PreconditionError("spectral h_gamma bound needs a bipartite graph");
  if (rep.d < 1) throw PreconditionError("spectral h_gamma bound needs a regular graph");
  ExpansionProfile prof;
  prof.gamma = gamma;
  prof.method = "spectral";
  prof.set_cap = set_size_cap(rep.n, gamma);
  const long d = rep.d;
  const long side = static_cast<long>(rep.n / 2);
  const double l2 = std::abs(rep.lambda2) + rep.residual;
  prof.saturated = std::abs(rep.lambda2) <= rep.residual;
  prof.lambda = std::min(Rational(d * d), std::max(from_double(l2) * from_double(l2), Rational(1, 1000000000000LL)));
  prof.limit = prof.saturated ? INFINITY : std::pow(static_cast<double>(d) / rep.lambda2, 2) - 1.0;
  prof.quarter_limit = static_cast<double>(d) / 4.0 - 1.0;
  auto f = [&](long a) { return a == 0 ? Rational(0) : tanner_bound(d, prof.lambda, rep.n, a); };
  std::optional<Rational> eps;
  for (long s = 1; s <= prof.set_cap; ++s) {
    long lo = std::max(0L, s - side), hi = std::min(s, side);
    Rational b = std::min(f(lo) + f(s - lo), f(hi) + f(s - hi)) - s;
    if (b < 0) b = 0;
    prof.profile.emplace_back(s, b);
    Rational ratio = b / s;
    if (!eps || ratio < *eps) eps = ratio;
  }
  prof.epsilon = eps.value_or(Rational(0));
  return prof;
}

struct MeynielExponents {
  double corollary = 0;  // 1 - (1/2) log_{D-1}(1 + eps/D)
  double theorem = 0;    // 1 - (1/2) log_{D-1}(1 + eps)
};

inline MeynielExponents weak_meyniel_exponent(long max_degree, double eps) {
  if (max_degree < 3) throw InvalidInput("max degree must be >= 3");
  if (!(eps > 0) || eps > static_cast<double>(max_degree - 2))
    throw InvalidInput("epsilon must satisfy 0 < eps <= max_degree - 2");
  const double base = std::log(static_cast<double>(max_degree - 1));
  return {1.0 - 0.5 * std::log1p(eps / static_cast<double>(max_degree)) / base, 1.0 - 0.5 * std::log1p(eps) / base};
}

}  // namespace copsrobbers
