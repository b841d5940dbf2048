#pragma once

// Seeded generators for the randomized identity suites. Draws are mapped from
// raw engine output by modulo so a given seed produces the same cases on any
// standard library (std::uniform_int_distribution is not pinned down by the
// standard).

#include <cstdint>
#include <random>

#include "hosoya/contfrac.hpp"
#include "hosoya/families.hpp"
#include "hosoya/multigraph.hpp"

namespace hosoya {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  long long below(long long k) {  // uniform-ish in [0, k)
    return static_cast<long long>(eng_() % static_cast<std::uint64_t>(k));
  }

  long long in(long long lo, long long hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

inline CaterpillarBondParams random_caterpillar(Sampler& rng, int max_spine, long long max_x,
                                                long long max_y) {
  CaterpillarBondParams p;
  long long n = rng.in(1, max_spine);
  for (long long i = 0; i < n; ++i) p.xs.push_back(rng.in(1, max_x));
  for (long long i = 0; i + 1 < n; ++i) p.ys.push_back(rng.in(1, max_y));
  return p;
}

inline Multigraph random_multigraph(Sampler& rng, int max_vertices, long long max_total_mult) {
  int n = static_cast<int>(rng.in(1, max_vertices));
  Multigraph g(n);
  if (n < 2) return g;
  long long budget = rng.in(0, max_total_mult);
  for (long long i = 0; i < budget; ++i) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n - 1));
    if (v >= u) ++v;
    g.add_edge(u, v, 1);  // aggregates into multiplicities
  }
  return g;
}

inline TreeCFSpec random_tree_cf(Sampler& rng, int max_depth, int max_children,
                                 long long max_pendants, long long max_bond) {
  TreeCFSpec s;
  s.pendants = rng.in(0, max_pendants);
  if (max_depth > 1) {
    long long k = rng.in(0, max_children);
    for (long long i = 0; i < k; ++i) {
      long long bond = rng.in(1, max_bond);
      s.children.push_back({bond, random_tree_cf(rng, max_depth - 1, max_children, max_pendants,
                                                 max_bond)});
    }
  }
  return s;
}

}  // namespace hosoya
