#pragma once

// Traps, trap distance and the t-dispersed property of digraphs.
//
// A (v,u)-trap is a pair of internally disjoint geodesics P: v -> x (at least
// one arc) and Q: u -> x with |Q| <= |P|; its length is |P|. When u = v both
// paths need two or more arcs. rho*(v,u) is the least trap length, which equals
// the least rho with S_rho(v) meeting B_rho(u).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

struct Trap {
  Vertex v = 0;
  Vertex u = 0;
  Vertex x = 0;  // tip
  std::vector<Vertex> P;  // v .. x
  std::vector<Vertex> Q;  // u .. x
  Hops length() const { return static_cast<Hops>(P.size()) - 1; }
  bool operator==(const Trap&) const = default;
};

inline constexpr std::size_t kDefaultTrapBudget = 2'000'000;

namespace detail {

// All geodesics source -> x, given the distance row from source.
inline void geodesics_to(const Digraph& d, std::span<const Hops> ds, Vertex x, std::vector<Vertex>& suffix,
                         std::vector<std::vector<Vertex>>& out, std::size_t& budget_left) {
  Hops k = ds[static_cast<std::size_t>(x)];
  suffix.push_back(x);
  if (k == 0) {
    if (budget_left == 0) throw ResourceError("geodesic enumeration exceeded its budget", kDefaultTrapBudget);
    --budget_left;
    out.emplace_back(suffix.rbegin(), suffix.rend());
  } else {
    for (Vertex w : d.in_neighbors(x))
      if (ds[static_cast<std::size_t>(w)] == k - 1) geodesics_to(d, ds, w, suffix, out, budget_left);
  }
  suffix.pop_back();
}

inline bool paths_meet_only_at(const std::vector<Vertex>& P, const std::vector<Vertex>& Q, Vertex x, bool shared_start) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    Vertex a = P[i];
    if (a == x) continue;
    if (shared_start && i == 0) continue;
    if (std::find(Q.begin(), Q.end(), a) != Q.end()) return false;
  }
  return true;
}

}  // namespace detail

namespace detail {

// Traps from explicit distance rows. dv and du only need to be exact up to
// max_len; `ball` lists the x with 1 <= dv[x] <= max_len.
inline std::vector<Trap> traps_from_rows(const Digraph& d, Vertex v, Vertex u, Hops max_len, std::span<const Hops> dv,
                                         std::span<const Hops> du, std::span<const Vertex> ball, std::size_t budget) {
  std::vector<Trap> traps;
  std::size_t left = budget;
  const bool same = v == u;
  try {
    for (Vertex x : ball) {
      auto xi = static_cast<std::size_t>(x);
      Hops lp = dv[xi], lq = du[xi];
      if (lp > max_len || lq == kUnreachable || lq > lp) continue;
      if (same && lp < 2) continue;
      std::vector<std::vector<Vertex>> Ps, Qs;
      std::vector<Vertex> suffix;
      geodesics_to(d, dv, x, suffix, Ps, left);
      if (same)
        Qs = Ps;
      else
        geodesics_to(d, du, x, suffix, Qs, left);
      for (const auto& P : Ps)
        for (const auto& Q : Qs) {
          if (left == 0) throw ResourceError("", budget);
          --left;
          if (same && !(P < Q)) continue;
          if (!paths_meet_only_at(P, Q, x, same)) continue;
          traps.push_back(Trap{v, u, x, P, Q});
        }
    }
  } catch (const ResourceError&) {
    throw ResourceError("trap enumeration for pair (" + std::to_string(v) + "," + std::to_string(u) +
                            ") exceeded the budget of " + std::to_string(budget) + " path pairs",
                        budget);
  }
  return traps;
}

inline std::vector<Vertex> ball_list(std::span<const Hops> dv, Hops radius) {
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < dv.size(); ++x)
    if (dv[x] >= 1 && dv[x] <= radius) out.push_back(static_cast<Vertex>(x));
  return out;
}

// Vertices u (ascending) with dist(u, x) <= radius for some x in `targets`.
inline std::vector<Vertex> reverse_reach(const Digraph& d, std::span<const Vertex> targets, Hops radius) {
  std::vector<Hops> dist(d.order(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex x : targets) {
    dist[static_cast<std::size_t>(x)] = 0;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    Hops dx = dist[static_cast<std::size_t>(x)];
    if (dx == radius) continue;
    for (Vertex w : d.in_neighbors(x))
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dx + 1;
        queue.push_back(w);
      }
  }
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < dist.size(); ++w)
    if (dist[w] != kUnreachable) out.push_back(static_cast<Vertex>(w));
  return out;
}

}  // namespace detail

// Every (v,u)-trap of length at most max_len. When v == u each unordered pair
// of paths is listed once (P lexicographically before Q).
inline std::vector<Trap> enumerate_traps(const Digraph& d, Vertex v, Vertex u, Hops max_len,
                                         std::size_t budget = kDefaultTrapBudget) {
  detail::check_vertex(d.order(), v);
  detail::check_vertex(d.order(), u);
  if (max_len < 0) throw InvalidInput("enumerate_traps: negative length bound");
  auto dv = bfs_distances(d, v, max_len);
  auto du = bfs_distances(d, u, max_len);
  auto ball = detail::ball_list(dv, max_len);
  return detail::traps_from_rows(d, v, u, max_len, dv, du, ball, budget);
}

inline std::vector<Trap> enumerate_traps(const DistanceOracle<Digraph>& oracle, Vertex v, Vertex u, Hops max_len,
                                         std::size_t budget = kDefaultTrapBudget) {
  return enumerate_traps(oracle.graph(), v, u, max_len, budget);
}

inline Hops trap_distance(const DistanceOracle<Digraph>& oracle, Vertex v, Vertex u) {
  const auto& d = oracle.graph();
  detail::check_vertex(d.order(), v);
  detail::check_vertex(d.order(), u);
  if (v == u) {
    // The sphere/ball identity needs v != u; fall back to the definition.
    Hops best = kUnreachable;
    for (const auto& tr : enumerate_traps(oracle, v, v, static_cast<Hops>(d.order()))) best = std::min(best, tr.length());
    return best;
  }
  auto dv = oracle.from(v);
  auto du = oracle.from(u);
  Hops best = kUnreachable;
  for (std::size_t x = 0; x < d.order(); ++x)
    if (dv[x] >= 1 && dv[x] != kUnreachable && du[x] <= dv[x]) best = std::min(best, dv[x]);
  return best;
}

inline Hops trap_distance(const Digraph& d, Vertex v, Vertex u) {
  detail::check_vertex(d.order(), v);
  detail::check_vertex(d.order(), u);
  if (v == u) {
    Hops best = kUnreachable;
    for (const auto& tr : enumerate_traps(d, v, v, static_cast<Hops>(d.order()))) best = std::min(best, tr.length());
    return best;
  }
  auto dv = bfs_distances(d, v);
  auto du = bfs_distances(d, u);
  Hops best = kUnreachable;
  for (std::size_t x = 0; x < d.order(); ++x)
    if (dv[x] >= 1 && dv[x] != kUnreachable && du[x] <= dv[x]) best = std::min(best, dv[x]);
  return best;
}

// Checks that tr really is a trap in d.
inline bool validate_trap(const DistanceOracle<Digraph>& oracle, const Trap& tr) {
  const auto& d = oracle.graph();
  auto walk_ok = [&](const std::vector<Vertex>& path, Vertex from) {
    if (path.empty() || path.front() != from || path.back() != tr.x) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!d.has_arc(path[i], path[i + 1])) return false;
    return oracle.dist(from, tr.x) == static_cast<Hops>(path.size()) - 1;
  };
  if (!walk_ok(tr.P, tr.v) || !walk_ok(tr.Q, tr.u)) return false;
  if (tr.P.size() < 2 || tr.Q.size() > tr.P.size()) return false;
  if (tr.v == tr.u && tr.Q.size() < 3) return false;
  return detail::paths_meet_only_at(tr.P, tr.Q, tr.x, tr.v == tr.u);
}

// The single-arc trap v -> u that exists whenever uv is a digon.
inline bool is_digon_trap(const Digraph& d, const Trap& tr) {
  return tr.P.size() == 2 && tr.Q.size() == 1 && tr.x == tr.u && d.is_digon(tr.v, tr.u);
}

inline bool traps_internally_disjoint(const Trap& a, const Trap& b) {
  auto verts = [](const Trap& t) {
    std::vector<Vertex> s(t.P.begin(), t.P.end());
    s.insert(s.end(), t.Q.begin(), t.Q.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  auto sa = verts(a), sb = verts(b);
  std::vector<Vertex> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  for (Vertex c : common)
    if (c != a.v && c != a.u) return false;
  return true;
}

struct DispersionOptions {
  bool digon_exception = true;
  std::size_t budget = kDefaultTrapBudget;  // per ordered pair
};

struct DispersionCertificate {
  enum class Witness { none, disjoint_traps, arc_trap };
  int t = 0;
  bool dispersed = true;
  bool digon_exception = true;
  Witness witness = Witness::none;
  std::optional<Trap> first;   // both witness kinds
  std::optional<Trap> second;  // disjoint_traps only
  std::optional<Edge> arc;     // arc_trap: the arc (u, v)
  std::size_t pairs_checked = 0;
  std::size_t traps_examined = 0;

  // Re-checks the witness against d.
  bool validate(const DistanceOracle<Digraph>& oracle) const {
    const auto& d = oracle.graph();
    switch (witness) {
      case Witness::none:
        return dispersed;
      case Witness::disjoint_traps:
        return !dispersed && first && second && validate_trap(oracle, *first) && validate_trap(oracle, *second) &&
               first->v == second->v && first->u == second->u && first->v != first->u && !(*first == *second) &&
               first->length() <= t && second->length() <= t && traps_internally_disjoint(*first, *second);
      case Witness::arc_trap:
        return !dispersed && first && arc && validate_trap(oracle, *first) && first->length() <= t &&
               arc->first == first->u && arc->second == first->v && d.has_arc(arc->first, arc->second) &&
               !(digon_exception && is_digon_trap(d, *first));
    }
    return false;
  }
};

// Checks both dispersion conditions over all ordered pairs. Stops at the first
// witness; pairs are scanned in (v, u) lexicographic order, so witnesses are
// deterministic. Only pairs that can have a trap of length <= t are enumerated.
inline DispersionCertificate is_t_dispersed(const Digraph& d, int t, const DispersionOptions& opt = {}) {
  if (t < 1) throw InvalidInput("is_t_dispersed: t must be >= 1");
  DispersionCertificate cert;
  cert.t = t;
  cert.digon_exception = opt.digon_exception;
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex v = 0; v < n; ++v) {
    auto dv = bfs_distances(d, v, t);
    auto ball = detail::ball_list(dv, t);
    for (Vertex u : detail::reverse_reach(d, ball, t)) {
      if (u == v) continue;
      ++cert.pairs_checked;
      auto du = bfs_distances(d, u, t);
      auto traps = detail::traps_from_rows(d, v, u, t, dv, du, ball, opt.budget);
      cert.traps_examined += traps.size();
      if (d.has_arc(u, v))
        for (const auto& tr : traps) {
          if (opt.digon_exception && is_digon_trap(d, tr)) continue;
          cert.dispersed = false;
          cert.witness = DispersionCertificate::Witness::arc_trap;
          cert.first = tr;
          cert.arc = Edge{u, v};
          return cert;
        }
      for (std::size_t i = 0; i < traps.size(); ++i)
        for (std::size_t j = i + 1; j < traps.size(); ++j)
          if (traps_internally_disjoint(traps[i], traps[j])) {
            cert.dispersed = false;
            cert.witness = DispersionCertificate::Witness::disjoint_traps;
            cert.first = traps[i];
            cert.second = traps[j];
            return cert;
          }
    }
  }
  return cert;
}

inline DispersionCertificate is_t_dispersed(const DistanceOracle<Digraph>& oracle, int t,
                                            const DispersionOptions& opt = {}) {
  return is_t_dispersed(oracle.graph(), t, opt);
}

struct LemmaReport {
  std::string lemma;
  bool holds = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // cases outside the hypothesis
  std::vector<std::string> counterexamples;  // first few

  void fail(std::string msg) {
    holds = false;
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(msg));
  }
};

namespace detail {

inline std::size_t count_geodesics(const Digraph& d, std::span<const Hops> ds, Vertex x, std::size_t cap,
                                   std::vector<std::size_t>& memo) {
  auto xi = static_cast<std::size_t>(x);
  if (memo[xi] != SIZE_MAX) return memo[xi];
  if (ds[xi] == 0) return memo[xi] = 1;
  std::size_t total = 0;
  for (Vertex w : d.in_neighbors(x))
    if (ds[static_cast<std::size_t>(w)] == ds[xi] - 1) total = std::min(cap, total + count_geodesics(d, ds, w, cap, memo));
  return memo[xi] = total;
}

}  // namespace detail

// For dist(v,x) <= t: the v-x geodesic is unique, and every arc u -> v has
// dist(u,x) > dist(v,x). With the digon exception the second claim also
// accepts the case where uv is a digon and the geodesic runs through u.
inline LemmaReport check_lemma_unique_geodesic(const Digraph& d, int t, bool digon_exception = true) {
  LemmaReport rep;
  rep.lemma = "unique_geodesic";
  const auto n = d.order();
  for (std::size_t v = 0; v < n; ++v) {
    auto vv = static_cast<Vertex>(v);
    auto dv = bfs_distances(d, vv, t);
    std::vector<std::vector<Hops>> din;
    for (Vertex u : d.in_neighbors(vv)) din.push_back(bfs_distances(d, u, t));
    std::vector<std::size_t> memo(n, SIZE_MAX);
    for (std::size_t x = 0; x < n; ++x) {
      if (dv[x] > t) continue;
      auto xv = static_cast<Vertex>(x);
      ++rep.checked;
      if (detail::count_geodesics(d, dv, xv, 2, memo) != 1)
        rep.fail("two geodesics from " + std::to_string(v) + " to " + std::to_string(x));
      auto ins = d.in_neighbors(vv);
      for (std::size_t k = 0; k < ins.size(); ++k) {
        Vertex u = ins[k];
        Hops dux = din[k][x];
        if (dux > dv[x]) continue;
        bool through_u = d.is_digon(u, vv) && dv[static_cast<std::size_t>(u)] + dux == dv[x];
        if (digon_exception && through_u) continue;
        rep.fail("arc " + std::to_string(u) + "->" + std::to_string(v) + " but dist(" + std::to_string(u) + "," +
                 std::to_string(x) + ")=" + std::to_string(dux) + " <= " + std::to_string(dv[x]));
      }
    }
  }
  return rep;
}

// All (v,u)-traps of length <= t leave v through the same out-neighbour.
inline LemmaReport check_lemma_same_outneighbor(const Digraph& d, int t, std::size_t budget = kDefaultTrapBudget) {
  LemmaReport rep;
  rep.lemma = "same_outneighbor";
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex v = 0; v < n; ++v) {
    auto dv = bfs_distances(d, v, t);
    auto ball = detail::ball_list(dv, t);
    for (Vertex u : detail::reverse_reach(d, ball, t)) {
      if (u == v) continue;
      auto du = bfs_distances(d, u, t);
      auto traps = detail::traps_from_rows(d, v, u, t, dv, du, ball, budget);
      if (traps.empty()) continue;
      ++rep.checked;
      for (const auto& tr : traps)
        if (tr.P[1] != traps.front().P[1]) {
          rep.fail("(" + std::to_string(v) + "," + std::to_string(u) + ")-traps leave through " +
                   std::to_string(traps.front().P[1]) + " and " + std::to_string(tr.P[1]));
          break;
        }
    }
  }
  return rep;
}

namespace detail {

// rho*(a, b) for every pair with rho*(a, b) <= cap; missing pairs exceed cap.
inline std::vector<std::map<Vertex, Hops>> capped_trap_distances(const Digraph& d, Hops cap) {
  const auto n = static_cast<Vertex>(d.order());
  std::vector<std::map<Vertex, Hops>> out(d.order());
  for (Vertex a = 0; a < n; ++a) {
    auto da = bfs_distances(d, a, cap);
    auto ball = ball_list(da, cap);
    for (Vertex b : reverse_reach(d, ball, cap)) {
      if (b == a) continue;
      auto db = bfs_distances(d, b, cap);
      Hops best = kUnreachable;
      for (Vertex x : ball) {
        auto xi = static_cast<std::size_t>(x);
        if (db[xi] <= da[xi]) best = std::min(best, da[xi]);
      }
      if (best <= cap) out[static_cast<std::size_t>(a)][b] = best;
    }
  }
  return out;
}

}  // namespace detail

// For v != u, v' in N+(v), u' in N+(u) with v' != u' and rho*(v',u') <= t:
// rho*(v,u) <= rho*(v',u') + 1.
// The argument prepends v and u to a least (v',u')-trap. Literal dispersion
// has no digons so that always gives paths; under the digon exception the
// (v',u')-trap may run straight back into v or u, and only traps avoiding them
// count towards the hypothesis.
inline LemmaReport check_lemma_rho_decrease(const Digraph& d, int t, bool digon_exception = true,
                                            std::size_t budget = kDefaultTrapBudget) {
  LemmaReport rep;
  rep.lemma = "rho_decrease";
  const auto n = static_cast<Vertex>(d.order());
  const bool filter = digon_exception && !d.digons().empty();
  auto rho = detail::capped_trap_distances(d, t + 1);
  auto at = [&](Vertex a, Vertex b) {
    const auto& row = rho[static_cast<std::size_t>(a)];
    auto it = row.find(b);
    return it == row.end() ? kUnreachable : it->second;
  };
  auto avoiding = [&](Vertex v2, Vertex u2, Vertex v, Vertex u) {
    Hops best = kUnreachable;
    for (const auto& tr : enumerate_traps(d, v2, u2, t, budget))
      if (std::find(tr.P.begin(), tr.P.end(), v) == tr.P.end() && std::find(tr.Q.begin(), tr.Q.end(), u) == tr.Q.end())
        best = std::min(best, tr.length());
    return best;
  };
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const Hops here = at(v, u);
      for (Vertex v2 : d.out_neighbors(v))
        for (Vertex u2 : d.out_neighbors(u)) {
          if (v2 == u2) continue;
          Hops r2 = at(v2, u2);
          if (r2 <= t && here > r2 + 1 && filter) r2 = avoiding(v2, u2, v, u);
          if (r2 > t) {
            ++rep.skipped;
            continue;
          }
          ++rep.checked;
          if (here > r2 + 1)
            rep.fail("rho*(" + std::to_string(v) + "," + std::to_string(u) + ") > " + std::to_string(r2 + 1) +
                     " but rho*(" + std::to_string(v2) + "," + std::to_string(u2) + ")=" + std::to_string(r2));
        }
    }
  return rep;
}

inline LemmaReport check_lemma_unique_geodesic(const DistanceOracle<Digraph>& o, int t, bool digon_exception = true) {
  return check_lemma_unique_geodesic(o.graph(), t, digon_exception);
}
inline LemmaReport check_lemma_same_outneighbor(const DistanceOracle<Digraph>& o, int t,
                                                std::size_t budget = kDefaultTrapBudget) {
  return check_lemma_same_outneighbor(o.graph(), t, budget);
}
inline LemmaReport check_lemma_rho_decrease(const DistanceOracle<Digraph>& o, int t, bool digon_exception = true,
                                            std::size_t budget = kDefaultTrapBudget) {
  return check_lemma_rho_decrease(o.graph(), t, digon_exception, budget);
}

}  // namespace copsrobbers
