#pragma once

// Undirected multigraph with aggregated edge multiplicities, plus the
// deletion/split operations the matching recurrences need. Graphs are values:
// the free operations never mutate their input, they return new graphs with
// vertices re-indexed densely in the original order.
//
// Text format "hgraph v1":
//     hgraph 1
//     vertices N
//     e U V M        (one line per edge, 0-based endpoints, multiplicity M)

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

struct Edge {
  int u;           // u < v, no loops
  int v;
  long long mult;  // >= 1
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.mult == b.mult;
}

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n_vertices) : n_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("Multigraph: negative vertex count");
  }

  // Aggregates parallel copies: adding (u,v) twice yields one edge of mult 2.
  void add_edge(int u, int v, long long mult = 1) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("add_edge: vertex out of range");
    }
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    if (mult < 1) throw std::invalid_argument("add_edge: multiplicity must be >= 1");
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>{u, v},
                               [](const Edge& e, const std::pair<int, int>& key) {
                                 return std::pair<int, int>{e.u, e.v} < key;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) {
      it->mult += mult;
    } else {
      edges_.insert(it, Edge{u, v, mult});
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  long long multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges_) {
      if (e.u == u && e.v == v) return e.mult;
    }
    return 0;
  }

  long long total_multiplicity() const {
    long long t = 0;
    for (const Edge& e : edges_) t += e.mult;
    return t;
  }

  // Sorted adjacency over the underlying simple graph, multiplicities attached.
  std::vector<std::vector<std::pair<int, long long>>> adjacency() const {
    std::vector<std::vector<std::pair<int, long long>>> adj(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.mult);
      adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.mult);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted by (u, v)
};

inline bool operator==(const Multigraph& a, const Multigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}
inline bool operator!=(const Multigraph& a, const Multigraph& b) { return !(a == b); }

// Removes one copy of edge (u,v); the edge disappears when its multiplicity
// reaches zero. The vertex set is unchanged.
inline Multigraph delete_edge_copy(const Multigraph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  Multigraph out(g.vertex_count());
  bool found = false;
  for (const Edge& e : g.edges()) {
    if (e.u == u && e.v == v) {
      found = true;
      if (e.mult > 1) out.add_edge(e.u, e.v, e.mult - 1);
    } else {
      out.add_edge(e.u, e.v, e.mult);
    }
  }
  if (!found) {
    throw std::invalid_argument("delete_edge_copy: no edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  return out;
}

// Induced multigraph on the vertices not in vs, re-indexed densely in the
// original order.
inline Multigraph delete_vertices(const Multigraph& g, const std::vector<int>& vs) {
  const int n = g.vertex_count();
  std::vector<char> drop(static_cast<std::size_t>(n), 0);
  for (int v : vs) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
    }
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!drop[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = next++;
  }
  Multigraph out(next);
  for (const Edge& e : g.edges()) {
    int ru = remap[static_cast<std::size_t>(e.u)];
    int rv = remap[static_cast<std::size_t>(e.v)];
    if (ru >= 0 && rv >= 0) out.add_edge(ru, rv, e.mult);
  }
  return out;
}

namespace detail {

// Component label per vertex; labels are 0-based in order of smallest member.
inline std::vector<int> component_labels(const Multigraph& g, int* count_out = nullptr) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    int id = count++;
    label[static_cast<std::size_t>(start)] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto [w, m] : adj[static_cast<std::size_t>(queue[head])]) {
        (void)m;
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
  }
  if (count_out) *count_out = count;
  return label;
}

}  // namespace detail

// Connected components in order of their smallest original vertex. Isolated
// vertices are single-vertex components.
inline std::vector<Multigraph> components(const Multigraph& g) {
  int count = 0;
  std::vector<int> label = detail::component_labels(g, &count);
  std::vector<Multigraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int id = 0; id < count; ++id) {
    std::vector<int> others;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (label[static_cast<std::size_t>(v)] != id) others.push_back(v);
    }
    out.push_back(delete_vertices(g, others));
  }
  return out;
}

// An edge lying on a cycle of the underlying simple graph, or nullopt when
// that graph is a forest. Parallel copies of one edge do not count as a cycle.
inline std::optional<std::pair<int, int>> underlying_cycle_edge(const Multigraph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    visited[static_cast<std::size_t>(start)] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [w, m] : adj[static_cast<std::size_t>(x)]) {
        (void)m;
        if (w == parent[static_cast<std::size_t>(x)]) continue;
        if (visited[static_cast<std::size_t>(w)]) return std::pair<int, int>{std::min(x, w), std::max(x, w)};
        visited[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = x;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

// Memoization key: a BFS re-labelling normalised by degree class. Equal keys
// imply isomorphic graphs (the key spells out the whole re-labelled edge
// list); relabellings produced by dense re-indexing collide reliably. Full
// isomorphism canonisation is not attempted.
inline std::string canonical_key(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return "0|";
  auto adj = g.adjacency();
  std::vector<long long> multdeg(static_cast<std::size_t>(n), 0);
  std::vector<int> simpdeg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    multdeg[static_cast<std::size_t>(e.u)] += e.mult;
    multdeg[static_cast<std::size_t>(e.v)] += e.mult;
    simpdeg[static_cast<std::size_t>(e.u)] += 1;
    simpdeg[static_cast<std::size_t>(e.v)] += 1;
  }
  std::pair<long long, int> best{multdeg[0], simpdeg[0]};
  for (int v = 1; v < n; ++v) {
    best = std::min(best, {multdeg[static_cast<std::size_t>(v)], simpdeg[static_cast<std::size_t>(v)]});
  }

  std::string smallest;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (std::pair<long long, int>{multdeg[static_cast<std::size_t>(root)],
                                  simpdeg[static_cast<std::size_t>(root)]} != best) {
      continue;
    }
    std::fill(order.begin(), order.end(), -1);
    int next = 0;
    queue.clear();
    auto visit = [&](int v) {
      order[static_cast<std::size_t>(v)] = next++;
      queue.push_back(v);
    };
    visit(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto [w, m] : adj[static_cast<std::size_t>(queue[head])]) {
        (void)m;
        if (order[static_cast<std::size_t>(w)] == -1) visit(w);
      }
      if (head + 1 == queue.size() && next < n) {
        // continue with the next unreached component, smallest original id first
        for (int v = 0; v < n; ++v) {
          if (order[static_cast<std::size_t>(v)] == -1) {
            visit(v);
            break;
          }
        }
      }
    }
    std::vector<Edge> relabelled;
    relabelled.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
      int a = order[static_cast<std::size_t>(e.u)];
      int b = order[static_cast<std::size_t>(e.v)];
      relabelled.push_back(Edge{std::min(a, b), std::max(a, b), e.mult});
    }
    std::sort(relabelled.begin(), relabelled.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::string enc = std::to_string(n) + "|";
    for (const Edge& e : relabelled) {
      enc += std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.mult) + ";";
    }
    if (smallest.empty() || enc < smallest) smallest = std::move(enc);
  }
  return smallest;
}

inline std::string format_hgraph(const Multigraph& g) {
  std::string out = "hgraph 1\nvertices " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.mult) + "\n";
  }
  return out;
}

inline Multigraph parse_hgraph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header) || header != "hgraph 1") {
    throw std::invalid_argument("hgraph: expected header line 'hgraph 1'");
  }
  std::string vline;
  long long n = -1;
  if (next_line(vline)) {
    std::istringstream vs(vline);
    std::string word;
    if (!(vs >> word >> n) || word != "vertices" || n < 0 || (vs >> word)) n = -1;
  }
  if (n < 0) throw std::invalid_argument("hgraph: expected 'vertices N' with N >= 0");
  Multigraph g(static_cast<int>(n));
  std::string eline;
  while (next_line(eline)) {
    std::istringstream es(eline);
    std::string tag, extra;
    long long u, v, m;
    if (!(es >> tag >> u >> v >> m) || tag != "e" || (es >> extra)) {
      throw std::invalid_argument("hgraph: malformed line '" + eline + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("hgraph: vertex out of range in '" + eline + "'");
    }
    if (u == v) throw std::invalid_argument("hgraph: loop at vertex " + std::to_string(u));
    if (m < 1) throw std::invalid_argument("hgraph: multiplicity must be >= 1 in '" + eline + "'");
    if (g.multiplicity(static_cast<int>(u), static_cast<int>(v)) != 0) {
      throw std::invalid_argument("hgraph: duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v), m);
  }
  return g;
}

inline Multigraph parse_hgraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hgraph(in);
}

}  // namespace hosoya
