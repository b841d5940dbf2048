#pragma once

// Shared helpers for the test suites: a gcd-reducing reference rational (so
// formal results can be cross-checked by value against ordinary arithmetic)
// and builders for the worked fraction specs used in several suites.

#include <utility>

#include "hosoya/bigrat.hpp"
#include "hosoya/contfrac.hpp"

namespace testsupport {

struct RedRat {
  hosoya::BigInt n, d;

  RedRat(hosoya::BigInt nn, hosoya::BigInt dd) : n(std::move(nn)), d(std::move(dd)) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    hosoya::BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(n), d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
  RedRat(long long v) : n(v), d(1) {}

  RedRat operator+(const RedRat& o) const { return {n * o.d + d * o.n, d * o.d}; }
  RedRat operator-(const RedRat& o) const { return {n * o.d - d * o.n, d * o.d}; }
  bool operator==(const RedRat& o) const { return n == o.n && d == o.d; }
};

inline RedRat value_of(const hosoya::FormalFraction& x) { return {x.num, x.den}; }

// Reference evaluation of a general fraction with reducing arithmetic.
inline RedRat eval_reduced(const hosoya::GeneralCF& cf) {
  RedRat v(cf.terms.empty() ? cf.a0 : cf.terms.back().a);
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    RedRat flipped{hosoya::BigInt(cf.terms[i].b) * v.d, v.n};
    v = RedRat(i == 0 ? cf.a0 : cf.terms[i - 1].a) + flipped;
  }
  return v;
}

// The radial part of the worked example: 2 + 2/(3 + 3/3).
inline hosoya::TreeCFSpec radial_example_part() {
  return hosoya::cf_chain(2, {hosoya::TreeCFChild{2, hosoya::cf_leaf(3)},
                              hosoya::TreeCFChild{3, hosoya::cf_leaf(3)}});
}

// The periodic two-branch fraction truncated at `levels` levels below the
// root: every node has two pendants, internal bonds are 2-fold, each internal
// node has two children.
inline hosoya::TreeCFSpec periodic_two_branch(int levels) {
  hosoya::TreeCFSpec s;
  s.pendants = 2;
  if (levels > 0) {
    for (int i = 0; i < 2; ++i) s.children.push_back({2, periodic_two_branch(levels - 1)});
  }
  return s;
}

}  // namespace testsupport
