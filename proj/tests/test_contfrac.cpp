#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hosoya/contfrac.hpp"
#include "hosoya/families.hpp"
#include "hosoya/sampling.hpp"
#include "support.hpp"

using namespace hosoya;
using hosoya::BigInt;
using hosoya::Convergent;
using hosoya::FormalFraction;
using hosoya::GeneralCF;
using hosoya::TreeCFChild;
using hosoya::TreeCFSpec;
using testsupport::RedRat;

TEST_CASE("convergent recurrences") {
  GeneralCF cf{2, {{2, 3}, {3, 3}}};
  auto cs = convergents(cf);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == Convergent{2, 1});
  CHECK(cs[1] == Convergent{8, 3});
  CHECK(cs[2] == Convergent{30, 12});  // unreduced: not 5/2

  auto depth0 = convergents(GeneralCF{5, {}});
  REQUIRE(depth0.size() == 1);
  CHECK(depth0[0] == Convergent{5, 1});

  GeneralCF cv4{3, {{2, 3}, {1, 3}, {1, 3}}};
  auto cv = convergents(cv4);
  REQUIRE(cv.size() == 4);
  CHECK(cv[3] == Convergent{119, 33});

  CHECK_THROWS_AS(convergents(GeneralCF{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(convergents(GeneralCF{2, {{0, 3}}}), std::invalid_argument);
}

TEST_CASE("bottom-up folding lands exactly on the last convergent") {
  CHECK(eval_bottom_up(GeneralCF{2, {{2, 3}, {3, 3}}}) == FormalFraction(30, 12));
  CHECK(eval_bottom_up(GeneralCF{7, {}}) == FormalFraction(7, 1));
  CHECK(eval_bottom_up(GeneralCF{3, {{2, 3}, {1, 3}, {1, 3}}}) == FormalFraction(119, 33));

  hosoya::Sampler rng(31);
  for (int i = 0; i < 200; ++i) {
    GeneralCF cf;
    cf.a0 = rng.in(1, 5);
    long long len = rng.in(0, 6);
    for (long long j = 0; j < len; ++j) cf.terms.push_back({rng.in(1, 5), rng.in(1, 5)});
    FormalFraction folded = eval_bottom_up(cf);
    Convergent last = convergents(cf).back();
    CHECK(folded.num == last.p);
    CHECK(folded.den == last.q);
    // and the value agrees with plain reducing arithmetic
    CHECK(testsupport::value_of(folded) == testsupport::eval_reduced(cf));
  }
}

TEST_CASE("backward ring fraction") {
  Convergent benzene = eval_negative_ring_cf(7, 2, 3);
  CHECK(benzene == Convergent{301, 45});
  CHECK(eval_negative_ring_cf(7, 2, 1) == Convergent{7, 2});
  CHECK(eval_negative_ring_cf(4, 2, 4) == Convergent{136, 40});

  CHECK_THROWS_AS(eval_negative_ring_cf(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(eval_negative_ring_cf(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(eval_negative_ring_cf(3, 1, 0), std::invalid_argument);
  // outside M^2 >= 4rs the convergents would go negative; rejected
  CHECK_THROWS_AS(eval_negative_ring_cf(3, 6, 2), std::invalid_argument);
}

TEST_CASE("backward fraction satisfies the three-term recurrence") {
  for (long long M : {3, 4, 7, 11, 24}) {
    for (long long rs : {1, 2, 6, 16}) {
      if (M * M < 4 * rs) continue;
      Convergent prev = eval_negative_ring_cf(M, rs, 1);
      CHECK(prev == Convergent{BigInt(M), 2});
      for (long long n = 2; n <= 7; ++n) {
        Convergent cur = eval_negative_ring_cf(M, rs, n);
        CHECK(cur.q == prev.p);  // denominators are the previous numerators
        CHECK(cur.p == BigInt(M) * prev.p - BigInt(rs) * prev.q);
        prev = cur;
      }
    }
  }
}

TEST_CASE("backward-to-positive conversion") {
  GeneralCF cf3 = negative_to_positive(7, 2, 3);
  CHECK(cf3.a0 == 6);
  REQUIRE(cf3.terms.size() == 4);
  CHECK(cf3.terms[0].b == 1);
  CHECK(cf3.terms[0].a == 1);
  CHECK(cf3.terms[1].b == 2);
  CHECK(cf3.terms[1].a == 4);
  CHECK(cf3.terms[2].b == 1);
  CHECK(cf3.terms[2].a == 1);
  CHECK(cf3.terms[3].b == 4);
  CHECK(cf3.terms[3].a == 3);
  CHECK(convergents(cf3).back().p == 301);

  GeneralCF cf2 = negative_to_positive(7, 2, 2);
  CHECK(cf2.a0 == 6);
  REQUIRE(cf2.terms.size() == 2);
  CHECK(cf2.terms[0].b == 1);
  CHECK(cf2.terms[0].a == 1);
  CHECK(cf2.terms[1].b == 4);
  CHECK(cf2.terms[1].a == 3);
  CHECK(convergents(cf2).back().p == 45);

  CHECK(convergents(negative_to_positive(5, 2, 2)).back().p == 21);

  CHECK_THROWS_AS(negative_to_positive(4, 2, 3), std::invalid_argument);  // M <= 2rs
  CHECK_THROWS_AS(negative_to_positive(7, 2, 1), std::invalid_argument);  // n < 2

  // numerator equals u_n across a parameter sweep
  for (long long M = 3; M <= 12; ++M) {
    for (long long rs = 1; 2 * rs < M; ++rs) {
      for (long long n = 2; n <= 6; ++n) {
        CHECK(convergents(negative_to_positive(M, rs, n)).back().p ==
              hosoya::ring_hosoya_closed(M, rs, n));
      }
    }
  }
}

TEST_CASE("tree fraction basics") {
  CHECK(eval_tree_cf(hosoya::cf_leaf(5)) == FormalFraction(5, 1));
  CHECK(eval_tree_cf(TreeCFSpec{4, {}}) == FormalFraction(5, 1));

  TreeCFSpec bad{-1, {}};
  CHECK_THROWS_AS(eval_tree_cf(bad), std::invalid_argument);
  TreeCFSpec bad_bond{0, {{0, hosoya::cf_leaf(1)}}};
  CHECK_THROWS_AS(eval_tree_cf(bad_bond), std::invalid_argument);
}

TEST_CASE("periodic two-branch fraction at three levels") {
  TreeCFSpec spec = testsupport::periodic_two_branch(3);
  CHECK(eval_tree_cf(spec) == FormalFraction(143118495, 35605089));
}

TEST_CASE("radial fractions of the worked part") {
  std::vector<TreeCFChild> tail{{2, hosoya::cf_leaf(3)}, {3, hosoya::cf_leaf(3)}};
  CHECK(hosoya::radial_cf(1, 2, tail) == FormalFraction(30, 12));
  CHECK(hosoya::radial_cf(2, 2, tail) == FormalFraction(576, 144));
  CHECK(hosoya::radial_cf(3, 2, tail) == FormalFraction(9504, 1728));
  CHECK(hosoya::radial_cf(8, 2, tail).num == BigInt(5589762048LL));
}

TEST_CASE("chain-shaped specs fold like the plain fraction") {
  hosoya::Sampler rng(32);
  for (int i = 0; i < 100; ++i) {
    GeneralCF cf;
    cf.a0 = rng.in(1, 4);
    long long len = rng.in(0, 5);
    for (long long j = 0; j < len; ++j) cf.terms.push_back({rng.in(1, 4), rng.in(1, 4)});
    CHECK(eval_tree_cf(hosoya::chain_of(cf)) == eval_bottom_up(cf));
  }
}

namespace {

void reverse_children(TreeCFSpec& s) {
  std::reverse(s.children.begin(), s.children.end());
  for (TreeCFChild& c : s.children) reverse_children(c.spec);
}

}  // namespace

TEST_CASE("child order does not change the formal pair") {
  hosoya::Sampler rng(33);
  for (int i = 0; i < 100; ++i) {
    TreeCFSpec s = hosoya::random_tree_cf(rng, 4, 3, 3, 3);
    TreeCFSpec reversed = s;
    reverse_children(reversed);
    CHECK(eval_tree_cf(s) == eval_tree_cf(reversed));
  }
}

TEST_CASE("a pendant folds into a unit child leaf") {
  hosoya::Sampler rng(34);
  for (int i = 0; i < 100; ++i) {
    TreeCFSpec s = hosoya::random_tree_cf(rng, 3, 3, 3, 3);
    s.pendants += 1;  // ensure there is a pendant to fold
    TreeCFSpec folded = s;
    folded.pendants -= 1;
    folded.children.push_back({1, TreeCFSpec{0, {}}});
    CHECK(eval_tree_cf(s) == eval_tree_cf(folded));
  }
}

TEST_CASE("json spec files") {
  auto general = nlohmann::json::parse(R"({"a0": 2, "terms": [[2,3],[3,3]]})");
  GeneralCF cf = hosoya::general_cf_from_json(general);
  CHECK(eval_bottom_up(cf) == FormalFraction(30, 12));

  auto negative = nlohmann::json::parse(R"({"M": 7, "rs": 2, "n": 3})");
  CHECK(eval_negative_ring_cf(hosoya::negative_cf_from_json(negative)) == Convergent{301, 45});

  auto tree = nlohmann::json::parse(
      R"({"pendants": 1, "children": [[2, {"pendants": 2, "children": [[3, 3]]}]]})");
  TreeCFSpec part = hosoya::tree_cf_from_json(tree);  // integer child = leaf shorthand
  CHECK(eval_tree_cf(hosoya::radial_spec(1, part)) == FormalFraction(30, 12));

  // round trip through to_json
  CHECK(hosoya::tree_cf_from_json(hosoya::to_json(part)).pendants == part.pendants);
  CHECK(eval_tree_cf(hosoya::tree_cf_from_json(hosoya::to_json(part))) ==
        eval_tree_cf(part));
  GeneralCF cf_rt = hosoya::general_cf_from_json(hosoya::to_json(cf));
  CHECK(eval_bottom_up(cf_rt) == eval_bottom_up(cf));

  CHECK_THROWS_AS(hosoya::general_cf_from_json(nlohmann::json::parse(R"({"a0": 0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hosoya::general_cf_from_json(nlohmann::json::parse(R"({"terms": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hosoya::general_cf_from_json(nlohmann::json::parse(R"({"a0": 2, "terms": [[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hosoya::negative_cf_from_json(nlohmann::json::parse(R"({"M": 7, "rs": 2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hosoya::tree_cf_from_json(nlohmann::json::parse(R"({"pendants": -1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hosoya::tree_cf_from_json(nlohmann::json::parse(R"({"pendants": 0, "children": [[0, 3]]})")),
                  std::invalid_argument);
}
