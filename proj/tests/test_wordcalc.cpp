#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "semabs/wordcalc.hpp"
#include "testutil.hpp"

using namespace semabs;

namespace {

bool has_rule(const RewriteSystem& rs, const Exponents& lead, const Exponents& trail) {
  return std::any_of(rs.rules.begin(), rs.rules.end(), [&](const BinomialRule& r) {
    return r.lead == lead && r.trail == trail;
  });
}

bool has_pair(const CentralPairSet& ps, const Exponents& a, const Exponents& b) {
  return std::any_of(ps.pairs.begin(), ps.pairs.end(), [&](const RelationPair& p) {
    return (p.lhs == a && p.rhs == b) || (p.lhs == b && p.rhs == a);
  });
}

}  // namespace

TEST_CASE("degrevlex and deglex disagree exactly where expected") {
  MonomialOrder drl{OrderKind::DegRevLex};
  MonomialOrder dl{OrderKind::DegLex};
  // ab vs c^2: both orders put ab on top
  CHECK(drl.compare({1, 1, 0}, {0, 0, 2}) > 0);
  CHECK(dl.compare({1, 1, 0}, {0, 0, 2}) > 0);
  // ac vs b^2: deglex prefers ac, degrevlex prefers b^2
  CHECK(dl.compare({1, 0, 1}, {0, 2, 0}) > 0);
  CHECK(drl.compare({1, 0, 1}, {0, 2, 0}) < 0);
  // degree dominates everything
  CHECK(drl.compare({0, 0, 3}, {1, 1, 0}) > 0);
  // elimination block: any block-1 content beats block-2-only monomials
  MonomialOrder elim{OrderKind::EliminationBlock, 2};
  CHECK(elim.compare({1, 0, 0, 0}, {0, 0, 5, 5}) > 0);
  CHECK(elim.compare({0, 0, 1, 0}, {0, 0, 0, 2}) < 0);
}

TEST_CASE("completion of the plane instance keeps its two rules") {
  RewriteSystem rs = complete(testutil::z2());
  CHECK(rs.confluent);
  REQUIRE(rs.rules.size() == 2);
  CHECK(has_rule(rs, {1, 1, 0, 0}, {0, 0, 0, 0}));
  CHECK(has_rule(rs, {0, 0, 1, 1}, {0, 0, 0, 0}));
  CHECK(normal_form(rs, {2, 1, 0, 0}) == Exponents{1, 0, 0, 0});
  CHECK(normal_form(rs, {3, 3, 2, 2}) == Exponents{0, 0, 0, 0});
}

TEST_CASE("completion under deglex gains the cube rule") {
  RewriteSystem rs = complete(testutil::twopoint(), MonomialOrder{OrderKind::DegLex});
  CHECK(rs.confluent);
  REQUIRE(rs.rules.size() == 3);
  CHECK(has_rule(rs, {1, 1, 0}, {0, 0, 2}));  // ab -> c^2
  CHECK(has_rule(rs, {1, 0, 1}, {0, 2, 0}));  // ac -> b^2
  CHECK(has_rule(rs, {0, 3, 0}, {0, 0, 3}));  // b^3 -> c^3, from the S-pair on abc
}

TEST_CASE("completion under degrevlex reaches a different but equivalent system") {
  RewriteSystem rs = complete(testutil::twopoint());
  CHECK(rs.confluent);
  REQUIRE(rs.rules.size() == 3);
  CHECK(has_rule(rs, {1, 1, 0}, {0, 0, 2}));  // ab -> c^2
  CHECK(has_rule(rs, {0, 2, 0}, {1, 0, 1}));  // b^2 -> ac
  CHECK(has_rule(rs, {2, 0, 1}, {0, 1, 2}));  // a^2 c -> b c^2
}

TEST_CASE("different orders induce the same word problem") {
  RewriteSystem drl = complete(testutil::twopoint());
  RewriteSystem dl = complete(testutil::twopoint(), MonomialOrder{OrderKind::DegLex});
  // all words up to length 5: equal normal forms under one order iff under the other
  std::map<Exponents, std::set<Exponents>> cls_drl, cls_dl;
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Exponents m{i, j, n - i - j};
        cls_drl[normal_form(drl, m)].insert(m);
        cls_dl[normal_form(dl, m)].insert(m);
      }
  std::set<std::set<Exponents>> parts_drl, parts_dl;
  for (auto& [k, v] : cls_drl) parts_drl.insert(v);
  for (auto& [k, v] : cls_dl) parts_dl.insert(v);
  CHECK(parts_drl == parts_dl);
}

TEST_CASE("level growth of the free walk and the plane walk") {
  RewriteSystem free2 = complete(testutil::free_comm(2));
  CayleyLevels cl = cayley_levels(free2, 2);
  REQUIRE(cl.levels.size() == 3);
  CHECK(cl.levels[0].size() == 1);
  CHECK(cl.levels[1].size() == 2);
  CHECK(cl.levels[2].size() == 3);

  RewriteSystem rz2 = complete(testutil::z2());
  CayleyLevels cl2 = cayley_levels(rz2, 2);
  CHECK(cl2.levels[1].size() == 4);
  CHECK(cl2.levels[2].size() == 9);  // 8 neighbors at distance 2 plus the origin

  RewriteSystem rz = complete(testutil::z_pair());
  CayleyLevels clz = cayley_levels(rz, 2);
  CHECK(clz.levels[1].size() == 2);
  CHECK(clz.levels[2].size() == 3);  // +2, 0, -2
}

TEST_CASE("levels are ordered so that level 1 follows generator order") {
  RewriteSystem rs = complete(testutil::tripod());
  CayleyLevels cl = cayley_levels(rs, 1);
  REQUIRE(cl.levels[1].size() == 3);
  CHECK(cl.levels[1][0] == Exponents{1, 0, 0});
  CHECK(cl.levels[1][1] == Exponents{0, 1, 0});
  CHECK(cl.levels[1][2] == Exponents{0, 0, 1});
}

TEST_CASE("edge counts agree with direct multinomial path counting") {
  for (const Presentation& p : {testutil::z2(), testutil::tripod(), testutil::z5()}) {
    RewriteSystem rs = complete(p);
    const int depth = 4;
    CayleyLevels cl = cayley_levels(rs, depth);
    // dynamic count along edges
    std::vector<Int> paths{1};
    for (int n = 0; n < depth; ++n) {
      std::vector<Int> next(cl.levels[n + 1].size(), 0);
      for (const auto& e : cl.edges[n]) next[e.target] += paths[e.source];
      paths = std::move(next);
    }
    // direct count: words of length `depth` grouped by normal form
    std::map<Exponents, Int> direct;
    const std::size_t k = rs.var_count;
    std::function<void(std::size_t, int, Exponents&)> gen =
        [&](std::size_t pos, int left, Exponents& acc) {
          if (pos + 1 == k) {
            acc[pos] = left;
            direct[normal_form(rs, acc)] += multinomial(acc);
            return;
          }
          for (int t = 0; t <= left; ++t) {
            acc[pos] = t;
            gen(pos + 1, left - t, acc);
          }
        };
    Exponents acc(k, 0);
    gen(0, depth, acc);
    REQUIRE(direct.size() == cl.levels[depth].size());
    for (std::size_t i = 0; i < cl.levels[depth].size(); ++i)
      CHECK(paths[i] == direct.at(cl.levels[depth][i]));
  }
}

TEST_CASE("exact central pairs of the plane instance") {
  CentralPairSet ps = central_pairs_exact(testutil::z2());
  CHECK(ps.exact);
  REQUIRE(ps.pairs.size() == 1);
  CHECK(has_pair(ps, {1, 1, 0, 0}, {0, 0, 1, 1}));
}

TEST_CASE("exact central pairs of the space instance form a chain") {
  CentralPairSet ps = central_pairs_exact(testutil::z3());
  CHECK(ps.exact);
  REQUIRE(ps.pairs.size() == 2);
  for (const auto& p : ps.pairs) {
    CHECK(vec_sum(p.lhs) == 2);
    CHECK(vec_sum(p.rhs) == 2);
  }
  // the three products e1e2, e3e4, e5e6 must be linked into one component
  auto block = [](const Exponents& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i / 2;
    return std::size_t(3);
  };
  std::set<std::set<std::size_t>> links;
  for (const auto& p : ps.pairs) {
    CHECK(block(p.lhs) != block(p.rhs));
    links.insert({block(p.lhs), block(p.rhs)});
  }
  CHECK(links.size() == 2);  // two distinct independent equations
}

TEST_CASE("exact central pairs of the free instance are empty") {
  CentralPairSet ps = central_pairs_exact(testutil::free_comm(3));
  CHECK(ps.exact);
  CHECK(ps.pairs.empty());
}

TEST_CASE("exact central pairs of the plain integer walk are empty") {
  CentralPairSet ps = central_pairs_exact(testutil::z_pair());
  CHECK(ps.exact);
  CHECK(ps.pairs.empty());
}

TEST_CASE("exact central pairs of the 0/+6/-1 walk need length seven") {
  CentralPairSet ps = central_pairs_exact(testutil::z_steps());
  CHECK(ps.exact);
  REQUIRE(ps.pairs.size() == 1);
  CHECK(ps.pairs[0].lhs == Exponents{7, 0, 0});
  CHECK(ps.pairs[0].rhs == Exponents{0, 1, 6});
}

TEST_CASE("exact central pairs of the tripod keep the common letter") {
  CentralPairSet ps = central_pairs_exact(testutil::tripod());
  CHECK(ps.exact);
  REQUIRE(ps.pairs.size() == 1);
  CHECK(has_pair(ps, {1, 1, 0}, {1, 0, 1}));  // ab = ac, not b = c
}

TEST_CASE("exact central pairs of the two-point instance") {
  CentralPairSet ps = central_pairs_exact(testutil::twopoint());
  CHECK(ps.exact);
  CHECK(has_pair(ps, {1, 1, 0}, {0, 0, 2}));
  CHECK(has_pair(ps, {1, 0, 1}, {0, 2, 0}));
}

TEST_CASE("exact central pairs of the cyclic group") {
  CentralPairSet ps = central_pairs_exact(testutil::z5());
  CHECK(ps.exact);
  REQUIRE(ps.pairs.size() == 1);
  CHECK(has_pair(ps, {5, 0}, {0, 5}));
}

TEST_CASE("enumerated pairs agree with the exact route") {
  struct Case {
    Presentation p;
    int depth;
  };
  for (const auto& [p, depth] : std::initializer_list<Case>{{testutil::z2(), 4},
                                                            {testutil::tripod(), 4},
                                                            {testutil::twopoint(), 4},
                                                            {testutil::z5(), 6},
                                                            {testutil::z_steps(), 7}}) {
    RewriteSystem rs = complete(p);
    CentralPairSet exact = central_pairs_exact(p);
    CentralPairSet enumerated = central_pairs_enumerated(rs, depth);
    CHECK(!enumerated.exact);
    CHECK(enumerated.depth_bound == depth);
    CHECK(exact.pairs == enumerated.pairs);  // both canonicalized the same way
    // The semantic form of the same statement: each set derives the other.
    for (const auto& q : exact.pairs) CHECK(pair_generated(q.lhs, q.rhs, enumerated.pairs));
    for (const auto& q : enumerated.pairs) CHECK(pair_generated(q.lhs, q.rhs, exact.pairs));
  }
}

TEST_CASE("enumerated pairs at the depth from the worked examples") {
  RewriteSystem rs = complete(testutil::twopoint());
  CentralPairSet ps = central_pairs_enumerated(rs, 2);
  REQUIRE(ps.pairs.size() == 2);
  CHECK(has_pair(ps, {1, 1, 0}, {0, 0, 2}));
  CHECK(has_pair(ps, {1, 0, 1}, {0, 2, 0}));

  RewriteSystem rz = complete(testutil::z_steps());
  CHECK(central_pairs_enumerated(rz, 6).pairs.empty());
  CHECK(central_pairs_enumerated(rz, 7).pairs.size() == 1);
}

TEST_CASE("aliases produce length-1 central pairs") {
  Presentation p = parse_presentation(
      "generators: a b\ncopies: a' = a\nrelations: a + b = 0\n");
  CentralPairSet ps = central_pairs_exact(p);
  CHECK(ps.exact);
  CHECK(has_pair(ps, {1, 0, 0}, {0, 0, 1}));  // a = a'
}

TEST_CASE("branching matches homogeneity of the completed rules") {
  CHECK(is_branching(complete(testutil::tripod())));
  CHECK(is_branching(complete(testutil::twopoint())));
  CHECK(is_branching(complete(testutil::free_comm(2))));
  CHECK(!is_branching(complete(testutil::z2())));
  CHECK(!is_branching(complete(testutil::z5())));
  CHECK(!is_branching(complete(testutil::z_steps())));
}

TEST_CASE("cancellation witness for the tripod is (b, c, a)") {
  RewriteSystem rs = complete(testutil::tripod());
  auto w = cancellativity_witness(rs, 2);
  REQUIRE(w.has_value());
  CHECK(w->a == Exponents{0, 1, 0});
  CHECK(w->b == Exponents{0, 0, 1});
  CHECK(w->c == Exponents{1, 0, 0});
}

TEST_CASE("no cancellation witness in the group instances") {
  CHECK(!cancellativity_witness(complete(testutil::z2()), 3).has_value());
  CHECK(!cancellativity_witness(complete(testutil::z5()), 4).has_value());
  CHECK(!cancellativity_witness(complete(testutil::z_pair()), 4).has_value());
}

TEST_CASE("the two-point instance is not cancellative") {
  RewriteSystem rs = complete(testutil::twopoint());
  auto w = cancellativity_witness(rs, 3);
  REQUIRE(w.has_value());
  // returned triple really witnesses a + c == b + c with a != b
  CHECK(w->a != w->b);
  Exponents ac = w->a, bc = w->b;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    ac[i] += w->c[i];
    bc[i] += w->c[i];
  }
  CHECK(normal_form(rs, ac) == normal_form(rs, bc));
}

TEST_CASE("resource caps degrade to a flagged partial system") {
  // tiny step budget: completion cannot finish, flag must say so
  RewriteSystem rs = complete(testutil::twopoint(), MonomialOrder{},
                              CompletionLimits{10000, 0});
  CHECK(!rs.confluent);
  CHECK_THROWS_AS(central_pairs_enumerated(rs, 3), PreconditionError);
  RewriteSystem ok = complete(testutil::twopoint());
  CHECK_THROWS_AS(cayley_levels(ok, 5, 3), ResourceLimitError);
}

TEST_CASE("normal form rejects malformed input") {
  RewriteSystem rs = complete(testutil::z2());
  CHECK_THROWS_AS(normal_form(rs, {1, 0}), PreconditionError);
  CHECK_THROWS_AS(normal_form(rs, {-1, 0, 0, 0}), PreconditionError);
}
