#pragma once

// Machine checks of the identities the library is built on. Each suite
// produces one row per case so mismatches point at concrete parameters.
// All comparisons are exact.

#include <cstdint>
#include <string>
#include <vector>

#include "hosoya/bigrat.hpp"
#include "hosoya/contfrac.hpp"
#include "hosoya/families.hpp"
#include "hosoya/oracle.hpp"
#include "hosoya/sampling.hpp"

namespace hosoya {

struct VerifyRow {
  std::string text;
  bool ok;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyRow> rows;

  bool all_ok() const {
    for (const VerifyRow& r : rows) {
      if (!r.ok) return false;
    }
    return true;
  }
  std::size_t passed() const {
    std::size_t c = 0;
    for (const VerifyRow& r : rows) c += r.ok ? 1 : 0;
    return c;
  }
};

struct Range {
  long long lo;
  long long hi;  // inclusive
};

namespace detail {

inline std::string join_ll(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

// Random caterpillar-bond graphs: oracle Z equals the final convergent
// numerator of the matching fraction.
inline VerifyReport verify_lemma1(std::uint64_t seed, int samples, int max_spine, long long max_x,
                                  long long max_y) {
  VerifyReport rep{"lemma1", {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    CaterpillarBondParams p = random_caterpillar(rng, max_spine, max_x, max_y);
    BigInt oracle = hosoya_index(caterpillar_bond(p));
    BigInt cf = convergents(caterpillar_cf(p)).back().p;
    rep.rows.push_back({"sample=" + std::to_string(i) + " xs=" + detail::join_ll(p.xs) +
                            " ys=" + detail::join_ll(p.ys) + " oracle=" + oracle.str() +
                            " cf=" + cf.str(),
                        oracle == cf});
  }
  return rep;
}

// Random multigraphs: definition count, edge/vertex deletion identities and
// component factorisation all agree.
inline VerifyReport verify_lemma2(std::uint64_t seed, int samples, int max_vertices,
                                  long long max_mult) {
  VerifyReport rep{"lemma2", {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    Multigraph g = random_multigraph(rng, max_vertices, max_mult);
    BigInt z = hosoya_index(g);
    bool ok = z == hosoya_by_definition(g);
    for (const Edge& e : g.edges()) {
      ok = ok && z == hosoya_index(delete_edge_copy(g, e.u, e.v)) + hosoya_index(delete_vertices(g, {e.u, e.v}));
    }
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      BigInt sum = hosoya_index(delete_vertices(g, {v}));
      for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) sum += BigInt(e.mult) * hosoya_index(delete_vertices(g, {e.u, e.v}));
      }
      ok = ok && z == sum;
    }
    BigInt product = 1;
    for (const Multigraph& c : components(g)) product *= hosoya_index(c);
    ok = ok && z == product;
    rep.rows.push_back({"sample=" + std::to_string(i) + " vertices=" +
                            std::to_string(g.vertex_count()) + " mult=" +
                            std::to_string(g.total_multiplicity()) + " Z=" + z.str(),
                        ok});
  }
  return rep;
}

// Staggered rings: oracle, backward fraction numerator and closed-form
// recurrence give the same u_n.
inline VerifyReport verify_theorem1(Range n, Range m, Range r, Range s) {
  VerifyReport rep{"theorem1", {}};
  for (long long nn = n.lo; nn <= n.hi; ++nn) {
    for (long long mm = m.lo; mm <= m.hi; ++mm) {
      for (long long rr = r.lo; rr <= r.hi; ++rr) {
        for (long long ss = s.lo; ss <= s.hi; ++ss) {
          RingParams p{nn, mm, rr, ss};
          BigInt oracle = hosoya_index(ring_graph(p));
          BigInt cf = eval_negative_ring_cf(p.M(), p.rs(), nn).p;
          BigInt closed = ring_hosoya_closed(p, nn);
          rep.rows.push_back({"n=" + std::to_string(nn) + " m=" + std::to_string(mm) + " r=" +
                                  std::to_string(rr) + " s=" + std::to_string(ss) + " oracle=" +
                                  oracle.str() + " cf=" + cf.str() + " closed=" + closed.str(),
                              oracle == cf && cf == closed});
        }
      }
    }
  }
  return rep;
}

// Backward-to-positive conversion (only defined for M > 2rs): the positive
// fraction's numerator equals u_n and the Z of its caterpillar-bond graph.
inline VerifyReport verify_remark2(Range n, Range m, Range r, Range s) {
  VerifyReport rep{"remark2", {}};
  for (long long nn = std::max(n.lo, 2LL); nn <= n.hi; ++nn) {
    for (long long mm = m.lo; mm <= m.hi; ++mm) {
      for (long long rr = r.lo; rr <= r.hi; ++rr) {
        for (long long ss = s.lo; ss <= s.hi; ++ss) {
          RingParams p{nn, mm, rr, ss};
          if (p.M() <= 2 * p.rs()) continue;
          GeneralCF cf = negative_to_positive(p.M(), p.rs(), nn);
          BigInt num = convergents(cf).back().p;
          BigInt u = ring_hosoya_closed(p, nn);
          BigInt oracle = hosoya_index(caterpillar_bond(params_from_cf(cf)));
          rep.rows.push_back({"n=" + std::to_string(nn) + " m=" + std::to_string(mm) + " r=" +
                                  std::to_string(rr) + " s=" + std::to_string(ss) + " cf=" +
                                  num.str() + " u=" + u.str() + " oracle=" + oracle.str(),
                              num == u && num == oracle});
        }
      }
    }
  }
  return rep;
}

namespace detail {

// The worked radial part: 2 + 2/(3 + 3/3), one pendant at the centre share.
inline TreeCFSpec radial_example_part() {
  return cf_chain(2, {TreeCFChild{2, cf_leaf(3)}, TreeCFChild{3, cf_leaf(3)}});
}

}  // namespace detail

// m-fold radial graphs built from the worked example part: fraction
// numerator, closed formula (18m+12)*12^(m-1) and the oracle agree.
inline VerifyReport verify_radial(Range m) {
  VerifyReport rep{"radial", {}};
  TreeCFSpec part = detail::radial_example_part();
  for (long long mm = std::max(m.lo, 1LL); mm <= m.hi; ++mm) {
    TreeCFSpec spec = radial_spec(mm, part);
    FormalFraction cf = eval_tree_cf(spec);
    BigInt formula = BigInt(18 * mm + 12) * boost::multiprecision::pow(BigInt(12),
                                                                       static_cast<unsigned>(mm - 1));
    BigInt oracle = hosoya_index(tree_of_spec(spec));
    rep.rows.push_back({"m=" + std::to_string(mm) + " cf=" + to_string(cf) + " formula=" +
                            formula.str() + " oracle=" + oracle.str(),
                        cf.num == formula && cf.num == oracle});
  }
  return rep;
}

// Ring-to-caterpillar transforms: cycles against Lucas numbers and combs
// against their bond form.
inline VerifyReport verify_transforms(Range cycle_n, Range comb_n, Range comb_a, Range comb_b) {
  VerifyReport rep{"transforms", {}};
  for (long long n = std::max(cycle_n.lo, 3LL); n <= cycle_n.hi; ++n) {
    BigInt oracle = hosoya_index(cycle_graph(static_cast<int>(n)));
    BigInt cf = convergents(caterpillar_cf(cycle_to_caterpillar_bond(static_cast<int>(n)))).back().p;
    BigInt l = lucas(n);
    rep.rows.push_back({"cycle n=" + std::to_string(n) + " oracle=" + oracle.str() + " cf=" +
                            cf.str() + " lucas=" + l.str(),
                        oracle == cf && cf == l});
  }
  for (long long n = std::max(comb_n.lo, 3LL); n <= comb_n.hi; ++n) {
    for (long long a = comb_a.lo; a <= comb_a.hi; ++a) {
      for (long long b = std::max(comb_b.lo, 1LL); b <= comb_b.hi; ++b) {
        CaterpillarBondParams p = comb_to_caterpillar_bond(static_cast<int>(n), a, b);
        BigInt comb = hosoya_index(comb_cyclic(static_cast<int>(n), a, b));
        BigInt bond = hosoya_index(caterpillar_bond(p));
        BigInt cf = convergents(caterpillar_cf(p)).back().p;
        rep.rows.push_back({"comb n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" +
                                std::to_string(b) + " comb=" + comb.str() + " dbond=" + bond.str() +
                                " cf=" + cf.str(),
                            comb == bond && bond == cf});
      }
    }
  }
  return rep;
}

}  // namespace hosoya
