#include <gtest/gtest.h>

#include <set>

#include "gexp/constructor.hpp"
#include "gexp/errors.hpp"
#include "gexp/orders.hpp"

using namespace gexp;

namespace {

Weight fw(const RootDatum& d, std::vector<int> c) { return weight_from_fundamental(d, c); }

std::vector<std::pair<Family, int>> sweep_cases() {
  return {{Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 2},
          {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4}};
}

}  // namespace

TEST(Constructor, EvenExamples) {
  RootDatum c3 = build_root_datum(Family::C, 3);
  auto a = construct(c3, fw(c3, {0, 0, 2}));
  EXPECT_EQ(a.case_used, ConstructionCase::A);
  EXPECT_EQ(a.partition.flat, (std::vector<int>{1, 1, 1, 1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(a.c2, (std::vector<int>{8, 4, 0}));
  EXPECT_TRUE(a.ok());

  auto b = construct(c3, fw(c3, {4, 0, 0}));
  EXPECT_EQ(b.case_used, ConstructionCase::A);
  EXPECT_EQ(b.partition.flat, (std::vector<int>{0, 0, 0, 0, 1, 1, 2, 2, 2}));
  EXPECT_TRUE(b.ok());

  RootDatum b3 = build_root_datum(Family::B, 3);
  auto c = construct(b3, fw(b3, {4, 0, 2}));
  EXPECT_EQ(c.partition.flat, (std::vector<int>{0, 0, 0, 0, 1, 1, 0, 0, 0}));
  EXPECT_TRUE(c.ok());
}

TEST(Constructor, OddIndexExampleTypeB) {
  RootDatum b3 = build_root_datum(Family::B, 3);
  auto cert = construct(b3, fw(b3, {4, 0, 0}));
  EXPECT_EQ(cert.partition.flat, (std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cert.case_used, ConstructionCase::C);
  EXPECT_EQ(cert.odd_indices, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(cert.ok());
}

TEST(Constructor, PairingExampleTypeC) {
  RootDatum c4 = build_root_datum(Family::C, 4);
  auto cert = construct(c4, fw(c4, {0, 0, 0, 1}));
  EXPECT_EQ(cert.case_used, ConstructionCase::B);
  EXPECT_EQ(cert.pairing, (std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(*cert.lambda_prime, fw(c4, {0, 2, 0, 0}));
  GPartition expected(4);
  for (int i = 1; i <= 4; ++i) expected.ms(i) = 2;
  expected.m(3, 4) = expected.mp(3, 4) = 1;
  expected.m(2, 4) = 2;
  expected.mp(2, 4) = 1;
  expected.m(1, 2) = expected.mp(1, 2) = 1;
  expected.m(1, 3) = 1;
  expected.m(1, 4) = expected.mp(1, 4) = 1;
  EXPECT_EQ(cert.partition, expected);
  EXPECT_TRUE(cert.ok());
}

TEST(Constructor, Preconditions) {
  RootDatum c3 = build_root_datum(Family::C, 3);
  // dominant, below 2rho in dominance but not coordinatewise
  try {
    construct(c3, Weight(std::vector<int>{8, 8, 8}));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("coordinatewise"), std::string::npos);
  }
  try {
    construct(c3, 2 * c3.rho + c3.theta);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("dominance"), std::string::npos);
  }
  RootDatum a2 = build_root_datum(Family::A, 2);
  EXPECT_THROW(construct(a2, Weight::zero(3)), ConfigError);
}

// Every weight below 2rho in both orders gets a valid certificate, and the
// structural properties of each construction hold.
TEST(Constructor, SweepWithStructure) {
  for (auto [f, n] : sweep_cases()) {
    RootDatum d = build_root_datum(f, n);
    auto rep = certify_theorem(d);
    EXPECT_GT(rep.total, 0);
    EXPECT_EQ(rep.passed, rep.total) << d.name();
    for (const auto& fail : rep.failures) ADD_FAILURE() << d.name() << " " << fail.lambda.to_string() << " " << fail.stage;
    for (const Certificate& cert : rep.certificates) {
      const GPartition& p = cert.partition;
      if (cert.case_used == ConstructionCase::A) {
        for (int i = 1; i <= n; ++i) {
          if (i < n) EXPECT_LE(aux_N(p, i), 0);
          for (int j = i + 1; j <= n; ++j) EXPECT_EQ(aux_M(p, i, j), 0);
        }
      } else if (cert.case_used == ConstructionCase::B) {
        std::set<std::pair<int, int>> pairs(cert.pairing.begin(), cert.pairing.end());
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            EXPECT_LE(p.m(i, j), 2);
            EXPECT_LE(p.mp(i, j), 1);
            EXPECT_EQ(p.m(i, j) > p.mp(i, j), pairs.count({i, j}) == 1) << d.name() << cert.lambda.to_string();
          }
      } else {
        EXPECT_EQ(f, Family::B);
        for (int i = 1; i <= n; ++i) {
          EXPECT_LE(p.ms(i), 1);
          for (int j = i + 1; j <= n; ++j) EXPECT_EQ(aux_M(p, i, j), 0);
        }
      }
    }
  }
}

TEST(Constructor, PreferOddIndexCaseInTypeB) {
  for (int n : {2, 3, 4}) {
    RootDatum d = build_root_datum(Family::B, n);
    CertifyOptions opts;
    opts.prefer_case_c = true;
    auto rep = certify_theorem(d, opts);
    EXPECT_EQ(rep.passed, rep.total) << d.name();
  }
}

TEST(Constructor, OracleConfirmsAllWeightsBelowTwoRho) {
  RootDatum b2 = build_root_datum(Family::B, 2);
  CertifyOptions opts;
  opts.oracle = true;
  auto rep = certify_theorem(b2, opts);
  EXPECT_TRUE(rep.oracle_run);
  EXPECT_GT(rep.oracle_total, 0);
  EXPECT_EQ(rep.oracle_confirmed, rep.oracle_total);
  EXPECT_TRUE(rep.failures.empty());

  RootDatum c3 = build_root_datum(Family::C, 3);
  auto r3 = certify_theorem(c3, opts);
  EXPECT_EQ(r3.oracle_total, 35);
  EXPECT_EQ(r3.oracle_confirmed, 35);
  EXPECT_EQ(r3.total, 29);
  EXPECT_EQ(r3.passed, 29);

  CertifyOptions none;
  none.rank_bound = 0;
  auto empty = certify_theorem(c3, none);
  EXPECT_EQ(empty.total, 0);
  EXPECT_TRUE(empty.certificates.empty());
}
