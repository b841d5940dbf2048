#pragma once

// Builders for the graph families whose Hosoya indices have continued
// fraction counterparts, the graph <-> fraction transforms between them, and
// the closed-form recurrences of the staggered-ring family.
//
// Naming of the caterpillar-bond family D_n(x_1..x_n; y_1..y_{n-1}): a spine
// of n vertices where spine vertex i carries x_i - 1 pendant edges and spine
// edge i is a y_i-fold bond. Its Hosoya index is the final convergent
// numerator of the fraction with a_0 = x_1, a_i = x_{i+1}, b_i = y_i.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigrat.hpp"
#include "hosoya/contfrac.hpp"
#include "hosoya/multigraph.hpp"

namespace hosoya {

struct CaterpillarBondParams {
  std::vector<long long> xs;  // branch counts + 1 per spine vertex, all >= 1
  std::vector<long long> ys;  // bond multiplicities, len = len(xs) - 1
};

// Staggered ring U(n, m; r, s): an even cycle of 2n vertices whose edge
// multiplicities alternate r, s around the cycle, with m pendants per ring
// vertex. M is the value the ring recurrence steps by.
struct RingParams {
  long long n = 1;
  long long m = 0;
  long long r = 1;
  long long s = 1;

  long long M() const { return (m + 1) * (m + 1) + r + s; }
  long long rs() const { return r * s; }
};

namespace detail {

inline void validate_caterpillar(const CaterpillarBondParams& p) {
  if (p.xs.empty()) throw std::invalid_argument("caterpillar-bond: xs must be non-empty");
  if (p.ys.size() + 1 != p.xs.size()) {
    throw std::invalid_argument("caterpillar-bond: need len(ys) = len(xs) - 1");
  }
  for (long long x : p.xs) {
    if (x < 1) throw std::invalid_argument("caterpillar-bond: xs entries must be >= 1");
  }
  for (long long y : p.ys) {
    if (y < 1) throw std::invalid_argument("caterpillar-bond: ys entries must be >= 1");
  }
}

inline void validate_ring(const RingParams& p) {
  if (p.n < 1) throw std::invalid_argument("ring: n must be >= 1");
  if (p.m < 0) throw std::invalid_argument("ring: m must be >= 0");
  if (p.r < 1 || p.s < 1) throw std::invalid_argument("ring: r and s must be >= 1");
}

}  // namespace detail

inline Multigraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Multigraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Spine vertices come first (0..n-1), then the pendants of each spine vertex
// in order.
inline Multigraph caterpillar_bond(const CaterpillarBondParams& p) {
  detail::validate_caterpillar(p);
  const int n = static_cast<int>(p.xs.size());
  long long total = n;
  for (long long x : p.xs) total += x - 1;
  Multigraph g(static_cast<int>(total));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, p.ys[static_cast<std::size_t>(i)]);
  int next = n;
  for (int i = 0; i < n; ++i) {
    for (long long j = 1; j < p.xs[static_cast<std::size_t>(i)]; ++j) g.add_edge(i, next++);
  }
  return g;
}

// The fraction whose final convergent numerator is Z of the graph, and back.
inline GeneralCF caterpillar_cf(const CaterpillarBondParams& p) {
  detail::validate_caterpillar(p);
  GeneralCF cf;
  cf.a0 = p.xs[0];
  for (std::size_t i = 1; i < p.xs.size(); ++i) cf.terms.push_back({p.ys[i - 1], p.xs[i]});
  return cf;
}

inline CaterpillarBondParams params_from_cf(const GeneralCF& cf) {
  CaterpillarBondParams p;
  p.xs.push_back(cf.a0);
  for (const CFTerm& t : cf.terms) {
    p.xs.push_back(t.a);
    p.ys.push_back(t.b);
  }
  return p;
}

// Cutting a cycle open: C_n becomes D_{n-1}(1,..,1,2; 2,1,..,1).
inline CaterpillarBondParams cycle_to_caterpillar_bond(int n) {
  if (n < 3) throw std::invalid_argument("cycle_to_caterpillar_bond: n must be >= 3");
  CaterpillarBondParams p;
  p.xs.assign(static_cast<std::size_t>(n - 1), 1);
  p.xs.back() = 2;
  p.ys.assign(static_cast<std::size_t>(n - 2), 1);
  p.ys.front() = 2;
  return p;
}

// Comb ring C_{n,a,b}: cycle of n vertices, every edge a b-fold bond, every
// vertex carrying a pendants. Ring vertices first, then pendants per vertex.
inline Multigraph comb_cyclic(int n, long long a, long long b) {
  if (n < 3) throw std::invalid_argument("comb_cyclic: n must be >= 3");
  if (a < 0) throw std::invalid_argument("comb_cyclic: a must be >= 0");
  if (b < 1) throw std::invalid_argument("comb_cyclic: b must be >= 1");
  Multigraph g(static_cast<int>(n + static_cast<long long>(n) * a));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, b);
  int next = n;
  for (int i = 0; i < n; ++i) {
    for (long long j = 0; j < a; ++j) g.add_edge(i, next++);
  }
  return g;
}

// Same index as the ring comb: D_n(a+1,..,a+1; 2b, b,..,b).
inline CaterpillarBondParams comb_to_caterpillar_bond(int n, long long a, long long b) {
  if (n < 3) throw std::invalid_argument("comb_to_caterpillar_bond: n must be >= 3");
  if (a < 0 || b < 1) throw std::invalid_argument("comb_to_caterpillar_bond: need a >= 0, b >= 1");
  CaterpillarBondParams p;
  p.xs.assign(static_cast<std::size_t>(n), a + 1);
  p.ys.assign(static_cast<std::size_t>(n - 1), b);
  p.ys.front() = 2 * b;
  return p;
}

// For n = 1 the alternation degenerates: two vertices joined by r+s parallel
// edges, m pendants each. Ring vertices first, then pendants per ring vertex.
inline Multigraph ring_graph(const RingParams& p) {
  detail::validate_ring(p);
  const long long ring = (p.n == 1) ? 2 : 2 * p.n;
  Multigraph g(static_cast<int>(ring + ring * p.m));
  if (p.n == 1) {
    g.add_edge(0, 1, p.r + p.s);
  } else {
    for (long long i = 0; i < ring; ++i) {
      g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % ring), (i % 2 == 0) ? p.r : p.s);
    }
  }
  int next = static_cast<int>(ring);
  for (long long i = 0; i < ring; ++i) {
    for (long long j = 0; j < p.m; ++j) g.add_edge(static_cast<int>(i), next++);
  }
  return g;
}

// u_n by the integer recurrence u_k = M u_{k-1} - rs u_{k-2}, u_0 = 2,
// u_1 = M. This is the power sum of the two roots of x^2 - Mx + rs, so it
// matches the surd closed form without any floating point.
inline BigInt ring_hosoya_closed(long long M, long long rs, long long n) {
  if (n < 0) throw std::invalid_argument("ring_hosoya_closed: n must be >= 0");
  BigInt prev = 2, cur = M;
  if (n == 0) return prev;
  for (long long k = 2; k <= n; ++k) {
    BigInt next = BigInt(M) * cur - BigInt(rs) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigInt ring_hosoya_closed(const RingParams& p, long long n) {
  detail::validate_ring(p);
  return ring_hosoya_closed(p.M(), p.rs(), n);
}

// Splitting the ring at its s-fold bond: Z(ring) = Z(first) + s * Z(second)
// where first = D_{2n}(m+1,..; r,s,r,..,r) and second =
// D_{2n-2}(m+1,..; s,r,s,..,s). Defined for n >= 2.
inline std::pair<CaterpillarBondParams, CaterpillarBondParams> ring_decomposition_parts(
    const RingParams& p) {
  detail::validate_ring(p);
  if (p.n < 2) throw std::invalid_argument("ring_decomposition_parts: n must be >= 2");
  CaterpillarBondParams f;
  f.xs.assign(static_cast<std::size_t>(2 * p.n), p.m + 1);
  for (std::size_t j = 0; j + 1 < f.xs.size(); ++j) f.ys.push_back(j % 2 == 0 ? p.r : p.s);
  CaterpillarBondParams g;
  g.xs.assign(static_cast<std::size_t>(2 * p.n - 2), p.m + 1);
  for (std::size_t j = 0; j + 1 < g.xs.size(); ++j) g.ys.push_back(j % 2 == 0 ? p.s : p.r);
  return {f, g};
}

namespace detail {

inline long long spec_vertex_count(const TreeCFSpec& s) {
  long long total = 1 + s.pendants;
  for (const TreeCFChild& c : s.children) total += spec_vertex_count(c.spec);
  return total;
}

inline void attach_spec(Multigraph& g, const TreeCFSpec& s, int root, int& next) {
  for (long long j = 0; j < s.pendants; ++j) g.add_edge(root, next++);
  for (const TreeCFChild& c : s.children) {
    int child_root = next++;
    g.add_edge(root, child_root, c.bond);
    attach_spec(g, c.spec, child_root, next);
  }
}

}  // namespace detail

// The rooted multigraph a spec blueprints: `pendants` pendant edges at the
// root plus a b-fold bond down to each child subtree. Z of this graph equals
// the numerator of eval_tree_cf(s).
inline Multigraph tree_of_spec(const TreeCFSpec& s) {
  Multigraph g(static_cast<int>(detail::spec_vertex_count(s)));
  int next = 1;
  detail::attach_spec(g, s, 0, next);
  return g;
}

// Named prefix of an integer sequence defined by a second-order linear
// recurrence; values[k] is the k-th term starting at k = 0.
struct Sequence {
  std::string name;
  std::vector<BigInt> values;
};

inline BigInt fibonacci(long long n) {
  if (n < 0) throw std::invalid_argument("fibonacci: n must be >= 0");
  BigInt a = 0, b = 1;  // F_0, F_1
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

inline BigInt lucas(long long n) {
  if (n < 0) throw std::invalid_argument("lucas: n must be >= 0");
  BigInt a = 2, b = 1;  // L_0, L_1
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

inline Sequence fibonacci_sequence(long long count) {
  Sequence s{"fibonacci", {}};
  for (long long k = 0; k < count; ++k) s.values.push_back(fibonacci(k));
  return s;
}

inline Sequence lucas_sequence(long long count) {
  Sequence s{"lucas", {}};
  for (long long k = 0; k < count; ++k) s.values.push_back(lucas(k));
  return s;
}

// u_0..u_{count-1} of u_k = M u_{k-1} - rs u_{k-2}; the ring family's index
// sequence when M and rs come from RingParams.
inline Sequence ring_u_sequence(long long M, long long rs, long long count) {
  if (count < 0) throw std::invalid_argument("ring_u_sequence: count must be >= 0");
  Sequence s{"u(M=" + std::to_string(M) + ",rs=" + std::to_string(rs) + ")", {}};
  for (long long k = 0; k < count; ++k) {
    if (k < 2) {
      s.values.push_back(k == 0 ? BigInt(2) : BigInt(M));
    } else {
      s.values.push_back(BigInt(M) * s.values[static_cast<std::size_t>(k - 1)] -
                         BigInt(rs) * s.values[static_cast<std::size_t>(k - 2)]);
    }
  }
  return s;
}

// The naphthalene carbon skeleton with its drawn double bonds: two fused
// hexagons, 10 vertices, 5 double and 6 single edges. Regression fixture for
// the oracle; no continued fraction is associated with it.
inline Multigraph naphthalene_fixture() {
  Multigraph g(10);
  g.add_edge(0, 2, 2);
  g.add_edge(0, 3, 1);
  g.add_edge(1, 3, 1);
  g.add_edge(1, 4, 2);
  g.add_edge(2, 5, 1);
  g.add_edge(3, 6, 2);
  g.add_edge(4, 7, 1);
  g.add_edge(5, 8, 2);
  g.add_edge(6, 8, 1);
  g.add_edge(6, 9, 1);
  g.add_edge(7, 9, 2);
  return g;
}

}  // namespace hosoya
