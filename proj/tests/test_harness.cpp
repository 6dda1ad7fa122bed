#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "semabs/absolute.hpp"
#include "semabs/descriptor_json.hpp"
#include "semabs/harness.hpp"
#include "testutil.hpp"

using namespace semabs;

namespace {

DistributionPoint exact_mu(std::initializer_list<Rat> xs) {
  return make_exact_distribution(RatVec(xs));
}

}  // namespace

TEST_CASE("central verification passes on product-matching measures") {
  RewriteSystem rs = complete(testutil::z2());
  for (auto mu : {exact_mu({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}),
                  exact_mu({Rat(1, 2), Rat(1, 12), Rat(1, 4), Rat(1, 6)})}) {
    VerificationReport report = verify_central(rs, mu, 4);
    CHECK(report.passed);
    CHECK(report.witnesses.empty());
    CHECK(report.depth == 4);
    CHECK(report.exact_arithmetic);
  }
}

TEST_CASE("central verification fails with the first violating pair") {
  RewriteSystem rs = complete(testutil::z2());
  VerificationReport report =
      verify_central(rs, exact_mu({Rat(1, 2), Rat(1, 8), Rat(1, 4), Rat(1, 8)}), 2);
  CHECK_FALSE(report.passed);
  REQUIRE(report.witnesses.size() == 1);
  const PathWitness& w = report.witnesses[0];
  CHECK(w.vertex == Exponents{0, 0, 0, 0});
  CHECK(w.level == 2);
  CHECK(w.path_a == "a + b");
  CHECK(w.prob_a == "1/16");
  CHECK(w.path_b == "c + d");
  CHECK(w.prob_b == "1/32");
}

TEST_CASE("free instances verify vacuously") {
  RewriteSystem rs = complete(testutil::free_comm(2));
  CHECK(verify_central(rs, exact_mu({Rat(1, 3), Rat(2, 3)}), 5).passed);
  CHECK(verify_central(rs, exact_mu({Rat(1, 100), Rat(99, 100)}), 5).passed);
}

TEST_CASE("torsion shows up only at the right depth") {
  RewriteSystem rs = complete(testutil::z5());
  DistributionPoint skew = exact_mu({Rat(2, 5), Rat(3, 5)});
  // The shortest equal pair has length 5, so depth 4 sees nothing.
  CHECK(verify_central(rs, skew, 4).passed);
  VerificationReport report = verify_central(rs, skew, 5);
  CHECK_FALSE(report.passed);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].path_a == "5p");
  CHECK(report.witnesses[0].path_b == "5m");
  CHECK(report.witnesses[0].prob_a == "32/3125");
  CHECK(report.witnesses[0].prob_b == "243/3125");
  CHECK(verify_central(rs, exact_mu({Rat(1, 2), Rat(1, 2)}), 5).passed);
}

TEST_CASE("identity-step instance needs depth seven") {
  RewriteSystem rs = complete(testutil::z_steps());
  DistributionPoint off = exact_mu({Rat(1, 2), Rat(1, 4), Rat(1, 4)});
  auto eqs = centrality_equations(central_pairs_exact(rs.source));
  CHECK_FALSE(is_precentral(eqs, off));
  CHECK(verify_central(rs, off, 6).passed);  // too shallow to see p + 6m = 7i
  CHECK_FALSE(verify_central(rs, off, 7).passed);
  CHECK(verify_central(rs, exact_mu({Rat(1, 3), Rat(1, 3), Rat(1, 3)}), 7).passed);
}

TEST_CASE("verification agrees with the equation test on sample measures") {
  for (const Presentation& p :
       {testutil::z2(), testutil::tripod(), testutil::twopoint(), testutil::z5()}) {
    CAPTURE(p.name);
    RewriteSystem rs = complete(p);
    auto eqs = centrality_equations(central_pairs_exact(p));
    const std::size_t n = p.generators.size();
    std::vector<RatVec> samples;
    for (const Stratum& st : strata(eqs, n)) samples.push_back(st.sample.exact);
    // A few deliberately lopsided measures.
    for (int k = 2; k <= 4; ++k) {
      RatVec w(n, Rat(1, static_cast<int>(n) + k - 1));
      w[0] = Rat(k, static_cast<int>(n) + k - 1);
      samples.push_back(w);
    }
    for (const RatVec& w : samples) {
      DistributionPoint mu = make_exact_distribution(w);
      CHECK(is_precentral(eqs, mu) == verify_central(rs, mu, 5).passed);
    }
  }
}

TEST_CASE("verification input checks") {
  RewriteSystem rs = complete(testutil::z2());
  CHECK_THROWS_AS(verify_central(rs, exact_mu({Rat(1, 2), Rat(1, 2)}), 3), PreconditionError);
  CHECK_THROWS_AS(
      verify_central(rs, exact_mu({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}), -1),
      PreconditionError);
  CHECK_THROWS_AS(
      verify_central(rs, exact_mu({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}), 4, 10),
      ResourceLimitError);
}

TEST_CASE("float verification never asserts exactly") {
  RewriteSystem rs = complete(testutil::z2());
  VerificationReport ok = verify_central(rs, make_float_distribution({0.25, 0.25, 0.25, 0.25}), 3);
  CHECK(ok.passed);
  CHECK_FALSE(ok.exact_arithmetic);
  VerificationReport bad =
      verify_central(rs, make_float_distribution({0.5, 0.125, 0.25, 0.125}), 2);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.exact_arithmetic);
}

TEST_CASE("shift identity for positive-probability prefixes") {
  RewriteSystem rs = complete(testutil::z2());
  DistributionPoint mu = exact_mu({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  CHECK(verify_shift(rs, mu, {0, 0, 0, 0}, 3));  // empty prefix: identity translation
  CHECK(verify_shift(rs, mu, {1, 0, 1, 0}, 3));
  CHECK(verify_shift(rs, mu, {2, 1, 0, 0}, 2));

  RewriteSystem tw = complete(testutil::twopoint());
  DistributionPoint atom = exact_mu({Rat(1), Rat(0), Rat(0)});
  CHECK(verify_shift(tw, atom, {3, 0, 0}, 2));
  CHECK_THROWS_AS(verify_shift(tw, atom, {0, 1, 0}, 2), PreconditionError);

  CHECK(verify_shift(rs, make_float_distribution({0.25, 0.25, 0.25, 0.25}), {1, 0, 0, 0}, 2));
  CHECK_THROWS_AS(verify_shift(rs, mu, {1, 0}, 2), PreconditionError);
}

TEST_CASE("walks are reproducible and consistent") {
  RewriteSystem rs = complete(testutil::z2());
  DistributionPoint mu = exact_mu({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  WalkSample a = walk_sample(rs, mu, 50, 12345);
  WalkSample b = walk_sample(rs, mu, 50, 12345);
  CHECK(a == b);
  CHECK(a.steps.size() == 50);

  // The endpoint is the canonical form of the accumulated steps.
  Exponents total(4, 0);
  for (std::size_t s : a.steps) ++total[s];
  CHECK(a.endpoint == normal_form(rs, total));

  WalkSample c = walk_sample(rs, mu, 50, 54321);
  CHECK(a.steps != c.steps);
}

TEST_CASE("point-mass walk never leaves the ray") {
  RewriteSystem rs = complete(testutil::twopoint());
  WalkSample w = walk_sample(rs, exact_mu({Rat(1), Rat(0), Rat(0)}), 7, 9);
  CHECK(w.steps == std::vector<std::size_t>(7, 0));
  CHECK(w.endpoint == Exponents{7, 0, 0});
}

TEST_CASE("simulation matches the exact two-step law of the line walk") {
  RewriteSystem rs = complete(testutil::z_pair());
  DistributionPoint mu = exact_mu({Rat(1, 2), Rat(1, 2)});
  SimulationStats stats = simulate(rs, mu, 2, 20000, 7);
  CHECK(stats.trials == 20000);
  CHECK(stats.steps == 2);

  double total = 0;
  for (const auto& [endpoint, f] : stats.frequencies) total += f;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  REQUIRE(stats.exact_probabilities.size() == 3);
  CHECK(stats.exact_probabilities[0].first == Exponents{0, 0});
  CHECK(stats.exact_probabilities[0].second == Rat(1, 2));
  CHECK(stats.exact_probabilities[1].first == Exponents{0, 2});
  CHECK(stats.exact_probabilities[1].second == Rat(1, 4));
  CHECK(stats.exact_probabilities[2].first == Exponents{2, 0});
  CHECK(stats.exact_probabilities[2].second == Rat(1, 4));
  CHECK(stats.max_sigma < 4.0);
}

TEST_CASE("simulation is bit-identical under one seed and independent of batching") {
  RewriteSystem rs = complete(testutil::z2());
  DistributionPoint mu = exact_mu({Rat(1, 2), Rat(1, 12), Rat(1, 4), Rat(1, 6)});
  SimulationStats a = simulate(rs, mu, 6, 3000, 42);
  SimulationStats b = simulate(rs, mu, 6, 3000, 42);
  CHECK(a.frequencies == b.frequencies);
  CHECK(a.exact_probabilities == b.exact_probabilities);
  CHECK(a.max_sigma == b.max_sigma);

  SimulationStats c = simulate(rs, mu, 6, 3000, 43);
  CHECK(a.frequencies != c.frequencies);

  Rat law_total(0);
  for (const auto& [endpoint, p] : a.exact_probabilities) law_total += p;
  CHECK(law_total == Rat(1));
}

TEST_CASE("simulation edge cases") {
  RewriteSystem rs = complete(testutil::z_pair());
  DistributionPoint mu = exact_mu({Rat(1, 2), Rat(1, 2)});
  SimulationStats empty = simulate(rs, mu, 5, 0, 1);
  CHECK(empty.trials == 0);
  CHECK(empty.frequencies.empty());
  CHECK(empty.exact_probabilities.empty());
  CHECK(empty.max_sigma == 0.0);

  // Tiny width cap: frequencies survive, the exact law is skipped.
  SimulationStats capped = simulate(rs, mu, 5, 100, 1, 2);
  CHECK_FALSE(capped.frequencies.empty());
  CHECK(capped.exact_probabilities.empty());

  CHECK_THROWS_AS(simulate(rs, mu, -1, 10, 1), PreconditionError);
  CHECK_THROWS_AS(simulate(rs, mu, 5, -1, 1), PreconditionError);
}

TEST_CASE("descriptor documents round-trip through text") {
  for (const Presentation& p :
       {testutil::z2(), testutil::z3(), testutil::tripod(), testutil::twopoint(),
        testutil::z_steps(), testutil::zxz2(), testutil::z3gen(), testutil::z5(),
        testutil::z_pair(), testutil::free_comm(2), testutil::free_comm(3)}) {
    CAPTURE(p.name);
    AbsoluteDescriptor d = describe_absolute(p);
    std::string once = write_descriptor(d);
    DescriptorDocument doc = read_document(once);
    CHECK(doc == document_from(d));
    CHECK(write_document(doc) == once);
  }
}

TEST_CASE("descriptor JSON carries the full plane-walk summary") {
  AbsoluteDescriptor d = describe_absolute(testutil::z2());
  DescriptorDocument doc = document_from(d);
  CHECK(doc.generators == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(doc.semigroup_class == "group");
  CHECK(doc.absolute_dimension == 2);
  CHECK(doc.central_lattice ==
        std::vector<std::vector<long long>>{{1, 1, -1, -1}});
  REQUIRE(doc.equations.size() == 1);
  CHECK(doc.equations[0].lhs == std::vector<int>{1, 1, 0, 0});
  CHECK(doc.equations[0].rhs == std::vector<int>{0, 0, 1, 1});
  CHECK(doc.chart_complement_basis.size() == 2);
  CHECK(doc.polytope_vertices.size() == 4);
  CHECK(doc.polytope_facets.size() == 4);
  for (const auto& f : doc.polytope_facets) CHECK(f.offset == "1");
  REQUIRE(doc.strata.size() == 9);
  CHECK(doc.strata.back().support == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(doc.strata.back().sample ==
        std::vector<std::string>{"1/4", "1/4", "1/4", "1/4"});
  CHECK(doc.strata.back().exact);
  CHECK(doc.topology_claim == "closed_disk(2)");
  CHECK(doc.exact);

  std::string text = write_document(doc);
  CHECK(text.find("\"class\": \"group\"") != std::string::npos);
  CHECK(text.find("\"topology_claim\": \"closed_disk(2)\"") != std::string::npos);
  CHECK(text.find("\"complement_basis\"") != std::string::npos);
}

TEST_CASE("descriptor JSON for a noncancellative instance") {
  AbsoluteDescriptor d = describe_absolute(testutil::tripod());
  DescriptorDocument doc = document_from(d);
  CHECK(doc.semigroup_class == "auto");
  CHECK(doc.topology_claim == "compact_stratified");
  REQUIRE(doc.strata.size() == 5);
  CHECK(doc.strata[3].support == std::vector<std::string>{"b", "c"});
  CHECK(doc.strata[3].sample == std::vector<std::string>{"0", "1/2", "1/2"});
}

TEST_CASE("descriptor reader rejects malformed input") {
  CHECK_THROWS_AS(read_document("not json at all"), ParseError);
  CHECK_THROWS_AS(read_document("{}"), ParseError);
  CHECK_THROWS_AS(read_document(R"({"generators": 3})"), ParseError);

  AbsoluteDescriptor d = describe_absolute(testutil::z_pair());
  std::string good = write_descriptor(d);
  std::string bad = good;
  auto pos = bad.find("\"1/2\"");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 5, "\"x/2\"");
  CHECK_THROWS_AS(read_document(bad), ParseError);
}
