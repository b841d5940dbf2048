#pragma once

// Finite continued fractions in the four shapes this library evaluates:
//
//   GeneralCF    a0 + b1/(a1 + b2/(a2 + ...)), positive integer entries,
//                with the (p_n, q_n) convergent recurrences
//                    p_n = a_n p_{n-1} + b_n p_{n-2}
//                    q_n = a_n q_{n-1} + b_n q_{n-2}
//                kept unreduced.
//   NegativeCF   M - rs/(M - rs/(... - rs/(M - M/2))), the backward fraction
//                whose convergents are the staggered-ring values u_n.
//   TreeCFSpec   a recursive spec in which an entry may be a whole branched
//                fraction of its own; doubles as a rooted multigraph
//                blueprint. A chain-shaped spec is an ordinary GeneralCF, a
//                root with several children is a multidimensional fraction.
//
// All evaluation is exact and cancellation-free (see bigrat.hpp), so the
// resulting pairs can be compared against Hosoya indices verbatim.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hosoya/bigrat.hpp"

namespace hosoya {

struct CFTerm {
  long long b;  // partial numerator
  long long a;  // partial denominator
};

struct GeneralCF {
  long long a0 = 1;
  std::vector<CFTerm> terms;
};

struct Convergent {
  BigInt p;
  BigInt q;
};

inline bool operator==(const Convergent& x, const Convergent& y) {
  return x.p == y.p && x.q == y.q;
}

namespace detail {

inline void validate_cf(const GeneralCF& cf) {
  if (cf.a0 < 1) throw std::invalid_argument("GeneralCF: a0 must be >= 1");
  for (const CFTerm& t : cf.terms) {
    if (t.a < 1 || t.b < 1) {
      throw std::invalid_argument("GeneralCF: all entries must be >= 1");
    }
  }
}

}  // namespace detail

// All convergents (p_0,q_0)..(p_n,q_n), unreduced.
inline std::vector<Convergent> convergents(const GeneralCF& cf) {
  detail::validate_cf(cf);
  std::vector<Convergent> out;
  out.reserve(cf.terms.size() + 1);
  out.push_back({BigInt(cf.a0), BigInt(1)});
  if (cf.terms.empty()) return out;
  out.push_back({BigInt(cf.a0) * cf.terms[0].a + cf.terms[0].b, BigInt(cf.terms[0].a)});
  for (std::size_t i = 1; i < cf.terms.size(); ++i) {
    const auto& [b, a] = cf.terms[i];
    out.push_back({BigInt(a) * out[i].p + BigInt(b) * out[i - 1].p,
                   BigInt(a) * out[i].q + BigInt(b) * out[i - 1].q});
  }
  return out;
}

// Folds the fraction from the innermost term outward under the
// no-cancellation rules. The resulting pair equals the last convergent
// exactly, not merely as a rational value.
inline FormalFraction eval_bottom_up(const GeneralCF& cf) {
  detail::validate_cf(cf);
  FormalFraction value(BigInt(cf.terms.empty() ? cf.a0 : cf.terms.back().a));
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    long long head = (i == 0) ? cf.a0 : cf.terms[i - 1].a;
    value = FormalFraction(BigInt(head)) + over(BigInt(cf.terms[i].b), value);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Backward (negative) continued fractions for the staggered-ring family.

struct NegativeCF {
  long long M;   // repeated head entry
  long long rs;  // repeated partial numerator
  long long n;   // number of head entries before the closing -M/2
};

// Evaluates M - rs/(M - ... - rs/(M - M/2)) with n heads, bottom up and
// unreduced; the result pair is (u_n, u_{n-1}) with u_0 = 2, u_1 = M.
// Requires M^2 >= 4rs: that keeps every u_k positive, which the den > 0
// bookkeeping of the formal pairs depends on. Every staggered ring satisfies
// it, since M = (m+1)^2 + r + s > 2*sqrt(rs).
inline Convergent eval_negative_ring_cf(long long M, long long rs, long long n) {
  if (M < 1 || rs < 1) throw std::invalid_argument("negative cf: M and rs must be >= 1");
  if (n < 1) throw std::invalid_argument("negative cf: n must be >= 1");
  if (M * M < 4 * rs) throw std::invalid_argument("negative cf: requires M^2 >= 4rs");
  FormalFraction x = FormalFraction(BigInt(M)) - FormalFraction(BigInt(M), BigInt(2));
  for (long long k = 2; k <= n; ++k) {
    x = FormalFraction(BigInt(M)) - over(BigInt(rs), x);
  }
  return {x.num, x.den};
}

inline Convergent eval_negative_ring_cf(const NegativeCF& cf) {
  return eval_negative_ring_cf(cf.M, cf.rs, cf.n);
}

// For M > 2rs the backward fraction converts into an ordinary positive one:
//   M-1 + 1/1 + rs/(M-rs-1) + 1/1 + ... + rs/(M-rs-1) + 1/1 + 2rs/(M-2rs)
// with 2n-3 terms under the brace, i.e. n-2 repetitions of the middle pair.
// Its final convergent numerator is u_n.
inline GeneralCF negative_to_positive(long long M, long long rs, long long n) {
  if (n < 2) throw std::invalid_argument("negative_to_positive: n must be >= 2");
  if (M <= 2 * rs) throw std::invalid_argument("negative_to_positive: requires M > 2rs");
  GeneralCF cf;
  cf.a0 = M - 1;
  cf.terms.push_back({1, 1});
  for (long long i = 0; i < n - 2; ++i) {
    cf.terms.push_back({rs, M - rs - 1});
    cf.terms.push_back({1, 1});
  }
  cf.terms.push_back({2 * rs, M - 2 * rs});
  return cf;
}

// ---------------------------------------------------------------------------
// Branched / multidimensional fractions.

struct TreeCFChild;

// value(node) = (pendants + 1) + sum over children of b / value(child),
// evaluated formally. As a graph: a vertex with `pendants` pendant edges and
// a b-fold bond down to each child.
struct TreeCFSpec {
  long long pendants = 0;
  std::vector<TreeCFChild> children;
};

struct TreeCFChild {
  long long bond;
  TreeCFSpec spec;
};

namespace detail {

inline void validate_tree_cf(const TreeCFSpec& s) {
  if (s.pendants < 0) throw std::invalid_argument("TreeCFSpec: pendants must be >= 0");
  for (const TreeCFChild& c : s.children) {
    if (c.bond < 1) throw std::invalid_argument("TreeCFSpec: bond must be >= 1");
    validate_tree_cf(c.spec);
  }
}

}  // namespace detail

inline FormalFraction eval_tree_cf(const TreeCFSpec& spec) {
  detail::validate_tree_cf(spec);
  auto rec = [](auto&& self, const TreeCFSpec& s) -> FormalFraction {
    FormalFraction value(BigInt(s.pendants + 1));
    for (const TreeCFChild& c : s.children) {
      value = value + over(BigInt(c.bond), self(self, c.spec));
    }
    return value;
  };
  return rec(rec, spec);
}

// Integer entry A as a spec: A - 1 pendants, value A/1.
inline TreeCFSpec cf_leaf(long long a) {
  if (a < 1) throw std::invalid_argument("cf_leaf: entry must be >= 1");
  return TreeCFSpec{a - 1, {}};
}

// Chain a0 + b1/A1 + b2/A2 + ... + bn/An: each tail entry hangs the next one
// as its last child.
inline TreeCFSpec cf_chain(long long a0, std::vector<TreeCFChild> tail) {
  if (a0 < 1) throw std::invalid_argument("cf_chain: a0 must be >= 1");
  TreeCFSpec root{a0 - 1, {}};
  if (tail.empty()) return root;
  for (std::size_t i = tail.size() - 1; i >= 1; --i) {
    tail[i - 1].spec.children.push_back(std::move(tail[i]));
  }
  root.children.push_back(std::move(tail[0]));
  return root;
}

inline TreeCFSpec chain_of(const GeneralCF& cf) {
  detail::validate_cf(cf);
  std::vector<TreeCFChild> tail;
  tail.reserve(cf.terms.size());
  for (const CFTerm& t : cf.terms) tail.push_back({t.b, cf_leaf(t.a)});
  return cf_chain(cf.a0, std::move(tail));
}

// m radial parts sharing one centre: the part's root folds into the centre,
// so the head becomes m * part.pendants and the part's tails repeat m times.
inline TreeCFSpec radial_spec(long long m, const TreeCFSpec& part) {
  if (m < 1) throw std::invalid_argument("radial_spec: m must be >= 1");
  TreeCFSpec root{m * part.pendants, {}};
  for (long long i = 0; i < m; ++i) {
    for (const TreeCFChild& c : part.children) root.children.push_back(c);
  }
  return root;
}

inline FormalFraction radial_cf(long long m, long long a0, std::vector<TreeCFChild> tail) {
  return eval_tree_cf(radial_spec(m, cf_chain(a0, std::move(tail))));
}

// ---------------------------------------------------------------------------
// JSON spec files.
//   GeneralCF:  {"a0": int, "terms": [[b, a], ...]}
//   NegativeCF: {"M": int, "rs": int, "n": int}
//   TreeCFSpec: {"pendants": int, "children": [[b, <spec or integer>], ...]}

namespace detail {

inline long long json_int_field(const nlohmann::json& j, const char* key, long long min_value) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("cf spec: missing or non-integer field '") + key + "'");
  }
  long long v = j.at(key).get<long long>();
  if (v < min_value) {
    throw std::invalid_argument(std::string("cf spec: field '") + key + "' must be >= " +
                                std::to_string(min_value));
  }
  return v;
}

}  // namespace detail

inline GeneralCF general_cf_from_json(const nlohmann::json& j) {
  GeneralCF cf;
  cf.a0 = detail::json_int_field(j, "a0", 1);
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) throw std::invalid_argument("cf spec: 'terms' must be an array");
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
        throw std::invalid_argument("cf spec: each term must be an integer pair [b, a]");
      }
      CFTerm term{t[0].get<long long>(), t[1].get<long long>()};
      if (term.a < 1 || term.b < 1) throw std::invalid_argument("cf spec: term entries must be >= 1");
      cf.terms.push_back(term);
    }
  }
  return cf;
}

inline NegativeCF negative_cf_from_json(const nlohmann::json& j) {
  return NegativeCF{detail::json_int_field(j, "M", 1), detail::json_int_field(j, "rs", 1),
                    detail::json_int_field(j, "n", 1)};
}

inline TreeCFSpec tree_cf_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    long long a = j.get<long long>();
    if (a < 1) throw std::invalid_argument("cf spec: integer entry must be >= 1");
    return cf_leaf(a);
  }
  TreeCFSpec spec;
  spec.pendants = detail::json_int_field(j, "pendants", 0);
  if (j.contains("children")) {
    if (!j.at("children").is_array()) {
      throw std::invalid_argument("cf spec: 'children' must be an array");
    }
    for (const auto& c : j.at("children")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer()) {
        throw std::invalid_argument("cf spec: each child must be a pair [b, spec]");
      }
      long long bond = c[0].get<long long>();
      if (bond < 1) throw std::invalid_argument("cf spec: child bond must be >= 1");
      spec.children.push_back({bond, tree_cf_from_json(c[1])});
    }
  }
  return spec;
}

inline nlohmann::json to_json(const TreeCFSpec& spec) {
  nlohmann::json children = nlohmann::json::array();
  for (const TreeCFChild& c : spec.children) {
    children.push_back(nlohmann::json::array({c.bond, to_json(c.spec)}));
  }
  return nlohmann::json{{"pendants", spec.pendants}, {"children", children}};
}

inline nlohmann::json to_json(const GeneralCF& cf) {
  nlohmann::json terms = nlohmann::json::array();
  for (const CFTerm& t : cf.terms) terms.push_back(nlohmann::json::array({t.b, t.a}));
  return nlohmann::json{{"a0", cf.a0}, {"terms", terms}};
}

}  // namespace hosoya
