#pragma once

// Plain-text edge lists.
//
//   # comment
//   n 10          optional header: vertex count
//   0 1           undirected edge
//   0 > 1         arc 0 -> 1 (digraph files)
//   0 = 1         digon shorthand: arcs 0 -> 1 and 1 -> 0
//
// Labels that are all non-negative integers (and below the header count, when
// present) are used as vertex ids directly. Any other label set is remapped to
// dense ids in order of first appearance and the mapping is returned.

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"

namespace copsrobbers {

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the label read from file
};

struct LoadedDigraph {
  Digraph digraph;
  std::vector<std::string> labels;
};

namespace detail {

enum class LinkKind { edge, arc, digon };

struct RawLink {
  std::string a;
  std::string b;
  LinkKind kind;
};

struct RawEdgeList {
  std::optional<std::size_t> header_n;
  std::vector<RawLink> links;
  bool directed = false;
};

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline RawEdgeList parse_raw(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    std::istringstream tokens{std::string(view)};
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    auto bad = [&] { return InvalidInput("edge list line " + std::to_string(lineno) + ": cannot parse '" + std::string(view) + "'"); };
    if (parts.size() == 2 && parts[0] == "n") {
      auto n = as_integer(parts[1]);
      if (!n || *n < 0) throw bad();
      if (raw.header_n) throw InvalidInput("edge list line " + std::to_string(lineno) + ": duplicate header");
      raw.header_n = static_cast<std::size_t>(*n);
    } else if (parts.size() == 2) {
      raw.links.push_back({parts[0], parts[1], LinkKind::edge});
    } else if (parts.size() == 3 && (parts[1] == ">" || parts[1] == "=")) {
      raw.directed = true;
      raw.links.push_back({parts[0], parts[2], parts[1] == ">" ? LinkKind::arc : LinkKind::digon});
    } else {
      throw bad();
    }
  }
  return raw;
}

struct IdMap {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
};

inline IdMap assign_ids(const RawEdgeList& raw) {
  IdMap map;
  bool numeric = true;
  long long max_label = -1;
  for (const auto& link : raw.links)
    for (const auto* s : {&link.a, &link.b}) {
      auto v = as_integer(*s);
      if (!v || *v < 0 || std::to_string(*v) != *s) {
        numeric = false;
      } else {
        max_label = std::max(max_label, *v);
      }
    }
  if (numeric && raw.header_n && max_label >= static_cast<long long>(*raw.header_n)) numeric = false;
  if (numeric) {
    map.n = raw.header_n ? *raw.header_n : static_cast<std::size_t>(max_label + 1);
    map.labels.resize(map.n);
    for (std::size_t i = 0; i < map.n; ++i) {
      map.labels[i] = std::to_string(i);
      map.ids.emplace(map.labels[i], static_cast<Vertex>(i));
    }
    return map;
  }
  for (const auto& link : raw.links)
    for (const auto* s : {&link.a, &link.b})
      if (map.ids.emplace(*s, static_cast<Vertex>(map.labels.size())).second) map.labels.push_back(*s);
  map.n = map.labels.size();
  if (raw.header_n) {
    if (*raw.header_n < map.n)
      throw InvalidInput("edge list header declares n=" + std::to_string(*raw.header_n) + " but " +
                         std::to_string(map.n) + " labels occur");
    while (map.labels.size() < *raw.header_n) map.labels.push_back("#" + std::to_string(map.labels.size()));
    map.n = *raw.header_n;
  }
  return map;
}

}  // namespace detail

inline LoadedGraph read_edge_list(std::istream& in) {
  auto raw = detail::parse_raw(in);
  if (raw.directed) throw InvalidInput("edge list contains arcs ('>' or '='); read it as a digraph");
  auto map = detail::assign_ids(raw);
  std::vector<Edge> edges;
  edges.reserve(raw.links.size());
  for (const auto& link : raw.links) edges.emplace_back(map.ids.at(link.a), map.ids.at(link.b));
  return {Graph::from_edges(map.n, edges), std::move(map.labels)};
}

// Plain `u v` lines are read as digons in a digraph file.
inline LoadedDigraph read_arc_list(std::istream& in) {
  auto raw = detail::parse_raw(in);
  auto map = detail::assign_ids(raw);
  std::vector<Edge> arcs;
  for (const auto& link : raw.links) {
    Vertex a = map.ids.at(link.a);
    Vertex b = map.ids.at(link.b);
    arcs.emplace_back(a, b);
    if (link.kind != detail::LinkKind::arc) arcs.emplace_back(b, a);
  }
  return {Digraph::from_arcs(map.n, arcs), std::move(map.labels)};
}

inline LoadedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline LoadedDigraph parse_arc_list(const std::string& text) {
  std::istringstream in(text);
  return read_arc_list(in);
}

// Byte-stable export: header, then edges (u < v) in sorted order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Digons are written once as `u = v` (u < v); remaining arcs as `u > v`.
inline void write_arc_list(std::ostream& out, const Digraph& d) {
  out << "n " << d.order() << '\n';
  for (const auto& [u, v] : d.arcs()) {
    if (d.has_arc(v, u)) {
      if (u < v) out << u << " = " << v << '\n';
    } else {
      out << u << " > " << v << '\n';
    }
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline std::string to_arc_list(const Digraph& d) {
  std::ostringstream out;
  write_arc_list(out, d);
  return out.str();
}

}  // namespace copsrobbers
