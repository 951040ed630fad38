#include <gtest/gtest.h>

#include "gexp/errors.hpp"
#include "gexp/genexp.hpp"
#include "gexp/orders.hpp"
#include "gexp/recurrence.hpp"
#include "gexp/weyl_oracle.hpp"

using namespace gexp;

namespace {

Weight fw(const RootDatum& d, std::vector<int> c) { return weight_from_fundamental(d, c); }
LaurentQS t(int e) { return LaurentQS::t_power(e); }
LaurentQS q() { return LaurentQS::q(); }

}  // namespace

TEST(Recurrence, RowExamplesTypeB) {
  RootDatum b3 = build_root_datum(Family::B, 3);
  auto row = minuscule_row(b3, fw(b3, {0, 1, 0}));
  // (1 - q t^4)(t + 1) / t^{5/2}
  const LaurentQS diag = ((LaurentQS(1) - q() * t(4)) * (t(1) + LaurentQS(1))).shifted_s(-5);
  EXPECT_EQ(row.entries.at(fw(b3, {0, 1, 0})), diag);
  EXPECT_EQ(closed::lambda_diag_B(2, 3), diag);

  auto r1 = minuscule_row(b3, fw(b3, {1, 0, 0}));
  ASSERT_EQ(r1.entries.size(), 2U);
  // -(t - q) t^2 / t^{5/2}
  EXPECT_EQ(r1.entries.at(Weight::zero(3)), -((t(1) - q()) * t(2)).shifted_s(-5));
}

TEST(Recurrence, Preconditions) {
  RootDatum b3 = build_root_datum(Family::B, 3);
  EXPECT_THROW(minuscule_row(b3, Weight::zero(3)), ConfigError);
  EXPECT_THROW(minuscule_row(b3, fw(b3, {0, 0, 1})), ConfigError);  // spin weight
  EXPECT_THROW(minuscule_row(b3, Weight(std::vector<int>{0, 2, 0})), ConfigError);
  EXPECT_THROW(minuscule_row(build_root_datum(Family::A, 2), Weight::zero(3)), ConfigError);
  RowCaps tiny;
  tiny.max_orbit = 3;
  EXPECT_THROW(minuscule_row(b3, fw(b3, {0, 1, 0}), tiny), ResourceError);
  EXPECT_THROW(verify_aggregate(build_root_datum(Family::C, 3), 1), ConfigError);
  EXPECT_THROW(verify_aggregate(b3, 4), ConfigError);
}

TEST(Recurrence, MinusculeCoweights) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
    RootDatum d = build_root_datum(f, n);
    const Weight om = minuscule_coweight(d);
    for (const Weight& a : d.positive_roots) {
      int dot = 0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * om[i];
      EXPECT_TRUE(dot == 0 || dot == 4 || dot == -4) << d.name();  // doubled twice
    }
  }
}

// Rows are supported below lambda, carry a diagonal entry, and vanish on the
// oracle generalized-exponent vector at q = 0.
TEST(Recurrence, RowsAnnihilateOracleVector) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4}}) {
    RootDatum d = build_root_datum(f, n);
    int rows = 0;
    for (const Weight& lam : enumerate_dominant_below(d, d.theta + d.theta)) {
      if (lam.is_zero() || !d.in_root_lattice(lam)) continue;
      ++rows;
      auto row = minuscule_row(d, lam);
      EXPECT_TRUE(row_respects_dominance(d, row)) << d.name() << lam.to_string();
      ASSERT_TRUE(row.entries.count(lam)) << d.name() << lam.to_string();
      LaurentQS sum;
      for (const auto& [mu, c] : row.entries) sum += c.at_q0() * LaurentQS::from_t(lusztig_E(d, mu));
      EXPECT_TRUE(sum.is_zero()) << d.name() << " " << lam.to_string() << " " << sum.to_string();
    }
    EXPECT_GT(rows, 2) << d.name();
  }
}

TEST(Recurrence, ZeroConjugateCounts) {
  RootDatum b3 = build_root_datum(Family::B, 3);
  EXPECT_EQ(omega0_count(b3, 2).brute, 2);
  EXPECT_EQ(omega0_count(b3, 0).brute, 1);
  RootDatum d5 = build_root_datum(Family::D, 5);
  auto c = omega0_count(d5, 2);
  EXPECT_EQ(c.brute, 5);
  EXPECT_TRUE(c.agree());
  for (int n = 2; n <= 6; ++n) {
    RootDatum b = build_root_datum(Family::B, n);
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(omega0_count(b, k).agree()) << "B" << n << " k=" << k;
  }
  for (int n = 3; n <= 7; ++n) {
    RootDatum d = build_root_datum(Family::D, n);
    for (int k = 0; k <= n / 2; ++k) EXPECT_TRUE(omega0_count(d, k).agree()) << "D" << n << " k=" << k;
  }
}

TEST(Recurrence, AggregationIntegers) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto a = a_integers(Family::B, k, n);
      EXPECT_EQ(a[0], 0);
      EXPECT_EQ(a[static_cast<std::size_t>(k)], 1);
      if (k >= 2) {
        auto prev = a_integers(Family::B, k - 1, n - 1);
        for (int h = 1; h < k; ++h) EXPECT_EQ(a[static_cast<std::size_t>(h + 1)], prev[static_cast<std::size_t>(h)]);
      }
    }
    EXPECT_EQ(a_integers(Family::B, 2, n)[1], 1);
  }
  EXPECT_EQ(a_integers(Family::D, 2, 5).back(), 1);
  EXPECT_THROW(a_integers(Family::C, 2, 5), ConfigError);
}

TEST(Recurrence, ClosedFormAlgebra) {
  auto half = [](int e) { return LaurentQS::monomial(0, e); };
  for (int n = 2; n <= 7; ++n) {
    // p as the four-term sum
    const LaurentQS p4 = half(2 * n - 1) - q() * half(-(2 * n - 1)) + half(-(2 * n - 3)) - q() * half(2 * n - 3);
    EXPECT_EQ(closed::p_B(n), p4);
    EXPECT_EQ(closed::gamma2_B(n), closed::gamma2_B(n - 1) - closed::p_B(n));
    EXPECT_EQ(closed::gamma1_B(n), closed::gamma1_B(n + 1));
    const LaurentQS r4 = half(2 * (n - 1)) - q() * half(-2 * (n - 1)) + half(-2 * (n - 2)) - q() * half(2 * (n - 2));
    EXPECT_EQ(closed::r_D(n), r4);
  }
  EXPECT_EQ(closed::lambda_diag_D(2, 4, true), 2 * closed::lambda_diag_D(2, 4, false));
  EXPECT_EQ(closed::lambda_diag_D(2, 5, true), closed::lambda_diag_D(2, 5, false));
}

TEST(Recurrence, AggregateTypeB) {
  for (int n : {2, 3, 4, 5}) {
    RootDatum d = build_root_datum(Family::B, n);
    for (int k = 1; k <= n; ++k) {
      auto rep = verify_aggregate(d, k);
      EXPECT_GT(rep.checks.size(), 3U);
      for (const Check& c : rep.checks) EXPECT_TRUE(c.pass) << d.name() << " k=" << k << " " << c.name << " " << c.detail;
    }
  }
}

// Everything agrees in type D except the printed doubled diagonal at n = 2k,
// where the engine produces the undoubled value.
TEST(Recurrence, AggregateTypeD) {
  for (int n : {4, 5, 6}) {
    RootDatum d = build_root_datum(Family::D, n);
    for (int k = 1; k <= n / 2; ++k) {
      auto rep = verify_aggregate(d, k);
      for (const Check& c : rep.checks) {
        const bool doubled = n == 2 * k && c.name.rfind("diagonal", 0) == 0;
        EXPECT_EQ(c.pass, !doubled) << d.name() << " k=" << k << " " << c.name << " " << c.detail;
      }
    }
  }
  RootDatum d4 = build_root_datum(Family::D, 4);
  auto row = minuscule_row(d4, recurrence_weight(d4, 2));
  EXPECT_EQ(row.entries.at(recurrence_weight(d4, 2)), closed::lambda_diag_D(2, 4, false));
}
