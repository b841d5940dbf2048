#pragma once

// The Hosoya index Z(G): the number of matchings of G, empty matching
// included, with parallel edge copies counted as distinct edges.
//
// Two independent routes live here on purpose. matching_counts() and
// hosoya_by_definition() enumerate k-edge matchings straight from the
// definition (guarded brute force); hosoya_index() computes the same number
// by component factorisation, a matchings DP on trees, and the edge
// recurrence Z(G) = Z(G-e) + Z(G-u-v) applied to cycle edges. The identity
// suites compare the two.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hosoya/bigrat.hpp"
#include "hosoya/multigraph.hpp"

namespace hosoya {

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p(G,k) for k = 0..floor(n/2). A set of aggregated edges that is a matching
// stands for prod(mult) ways of choosing one copy per edge, so the weighted
// enumeration below counts matchings of edge copies exactly.
inline std::vector<BigInt> matching_counts(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 16 && g.total_multiplicity() > 24) {
    throw SizeLimitError("matching_counts: graph exceeds the brute-force guard");
  }
  std::vector<BigInt> counts(static_cast<std::size_t>(n / 2) + 1);
  const auto& es = g.edges();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t k, const BigInt& weight) -> void {
    if (i == es.size()) {
      counts[k] += weight;
      return;
    }
    self(self, i + 1, k, weight);
    const Edge& e = es[i];
    if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
      self(self, i + 1, k + 1, weight * e.mult);
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  rec(rec, 0, 0, BigInt(1));
  return counts;
}

inline BigInt matching_count(const Multigraph& g, int k) {
  if (k < 0) throw std::invalid_argument("matching_count: k must be >= 0");
  auto counts = matching_counts(g);
  if (static_cast<std::size_t>(k) >= counts.size()) return 0;
  return counts[static_cast<std::size_t>(k)];
}

inline BigInt hosoya_by_definition(const Multigraph& g) {
  BigInt z = 0;
  for (const BigInt& c : matching_counts(g)) z += c;
  return z;
}

namespace detail {

// Matchings DP on a connected multigraph whose underlying simple graph is a
// tree. Per vertex: (all matchings of the subtree, matchings leaving the
// subtree root exposed); an edge of multiplicity t offers t copies that can
// match the root to the child.
inline BigInt tree_hosoya(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  auto adj = g.adjacency();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<long long> up_mult(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  parent[0] = -1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    for (auto [w, m] : adj[static_cast<std::size_t>(x)]) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = x;
      up_mult[static_cast<std::size_t>(w)] = m;
      order.push_back(w);
    }
  }
  std::vector<BigInt> all(static_cast<std::size_t>(n), BigInt(1));
  std::vector<BigInt> exposed(static_cast<std::size_t>(n), BigInt(1));
  for (std::size_t i = order.size(); i-- > 1;) {
    int c = order[i];
    int p = parent[static_cast<std::size_t>(c)];
    BigInt new_all = all[static_cast<std::size_t>(p)] * all[static_cast<std::size_t>(c)] +
                     BigInt(up_mult[static_cast<std::size_t>(c)]) *
                         exposed[static_cast<std::size_t>(p)] * exposed[static_cast<std::size_t>(c)];
    exposed[static_cast<std::size_t>(p)] *= all[static_cast<std::size_t>(c)];
    all[static_cast<std::size_t>(p)] = std::move(new_all);
  }
  return all[0];
}

using Memo = std::unordered_map<std::string, BigInt>;

inline BigInt z_of(const Multigraph& g, Memo& memo);

inline BigInt z_connected(const Multigraph& g, Memo& memo) {
  auto cyc = underlying_cycle_edge(g);
  if (!cyc) return tree_hosoya(g);
  std::string key = canonical_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto [u, v] = *cyc;
  BigInt z = z_of(delete_edge_copy(g, u, v), memo) + z_of(delete_vertices(g, {u, v}), memo);
  memo.emplace(std::move(key), z);
  return z;
}

inline BigInt z_of(const Multigraph& g, Memo& memo) {
  if (g.vertex_count() == 0) return 1;
  auto comps = components(g);
  if (comps.size() == 1) return z_connected(g, memo);
  BigInt z = 1;
  for (const Multigraph& c : comps) z *= z_connected(c, memo);
  return z;
}

}  // namespace detail

// Exact Z for any multigraph; fast for forests and for graphs of low cycle
// rank (every family in this library has rank <= 1). The memo table lives for
// one call only.
inline BigInt hosoya_index(const Multigraph& g) {
  detail::Memo memo;
  return detail::z_of(g, memo);
}

// ---------------------------------------------------------------------------
// Derivation traces: the full deletion/factorisation derivation of Z, with
// repeated subgraphs folded into references. Diagnostic tool; guarded.

struct TraceNode {
  enum class Kind {
    NoEdges,  // edgeless graph, Z = 1
    Product,  // component factorisation
    Split,    // Z(G) = Z(G - e) + Z(G - u - v); children in that order
    Ref,      // same subgraph as an earlier node
  };
  Kind kind;
  int id = 0;
  BigInt value;
  int vertices = 0;        // NoEdges
  int u = -1, v = -1;      // Split
  bool cycle_edge = false; // Split: whether (u,v) lies on a cycle
  int ref_id = -1;         // Ref
  std::vector<TraceNode> children;
};

struct HosoyaTrace {
  BigInt value;
  TraceNode root;
};

namespace detail {

struct TraceMemoEntry {
  int id;
  BigInt value;
};

inline TraceNode trace_rec(const Multigraph& g,
                           std::unordered_map<std::string, TraceMemoEntry>& memo, int& next_id) {
  if (g.edges().empty()) {
    TraceNode node;
    node.kind = TraceNode::Kind::NoEdges;
    node.id = next_id++;
    node.value = 1;
    node.vertices = g.vertex_count();
    return node;
  }
  std::string key = canonical_key(g);
  if (auto it = memo.find(key); it != memo.end()) {
    TraceNode node;
    node.kind = TraceNode::Kind::Ref;
    node.id = next_id++;
    node.value = it->second.value;
    node.ref_id = it->second.id;
    return node;
  }
  auto comps = components(g);
  TraceNode node;
  node.id = next_id++;
  if (comps.size() > 1) {
    node.kind = TraceNode::Kind::Product;
    node.value = 1;
    for (const Multigraph& c : comps) {
      node.children.push_back(trace_rec(c, memo, next_id));
      node.value *= node.children.back().value;
    }
  } else {
    node.kind = TraceNode::Kind::Split;
    auto cyc = underlying_cycle_edge(g);
    if (cyc) {
      node.cycle_edge = true;
      node.u = cyc->first;
      node.v = cyc->second;
    } else {
      node.u = g.edges().front().u;
      node.v = g.edges().front().v;
    }
    node.children.push_back(trace_rec(delete_edge_copy(g, node.u, node.v), memo, next_id));
    node.children.push_back(trace_rec(delete_vertices(g, {node.u, node.v}), memo, next_id));
    node.value = node.children[0].value + node.children[1].value;
  }
  memo.emplace(std::move(key), TraceMemoEntry{node.id, node.value});
  return node;
}

}  // namespace detail

inline HosoyaTrace hosoya_trace(const Multigraph& g) {
  if (g.total_multiplicity() > 40) {
    throw SizeLimitError("hosoya_trace: graph exceeds the trace guard");
  }
  std::unordered_map<std::string, detail::TraceMemoEntry> memo;
  int next_id = 0;
  HosoyaTrace t;
  t.root = detail::trace_rec(g, memo, next_id);
  t.value = t.root.value;
  return t;
}

namespace detail {

inline void format_trace_rec(const TraceNode& n, const std::string& prefix, int depth,
                             std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += prefix;
  out += "#" + std::to_string(n.id) + " Z=" + n.value.str() + " ";
  switch (n.kind) {
    case TraceNode::Kind::NoEdges:
      out += "no edges (" + std::to_string(n.vertices) + " vertices)\n";
      break;
    case TraceNode::Kind::Product:
      out += "product of " + std::to_string(n.children.size()) + " components\n";
      for (const TraceNode& c : n.children) format_trace_rec(c, "", depth + 1, out);
      break;
    case TraceNode::Kind::Split:
      out += std::string("split on ") + (n.cycle_edge ? "cycle edge" : "edge") + " (" +
             std::to_string(n.u) + "," + std::to_string(n.v) + ")\n";
      format_trace_rec(n.children[0], "G-e: ", depth + 1, out);
      format_trace_rec(n.children[1], "G-uv: ", depth + 1, out);
      break;
    case TraceNode::Kind::Ref:
      out += "see #" + std::to_string(n.ref_id) + "\n";
      break;
  }
}

}  // namespace detail

inline std::string format_trace(const HosoyaTrace& t) {
  std::string out;
  detail::format_trace_rec(t.root, "", 0, out);
  return out;
}

}  // namespace hosoya
