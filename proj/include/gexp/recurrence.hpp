#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gexp/poly.hpp"
#include "gexp/rootdata.hpp"

namespace gexp {

/// One reduced minuscule recurrence: sum over mu of entries[mu] * C_mu = 0,
/// every mu dominant and below lambda.
struct RecurrenceRow {
  Weight lambda;
  std::map<Weight, LaurentQS> entries;
};

struct RowCaps {
  std::size_t max_orbit = 500'000;
};

/// epsilon_1 for B and D, (1/2, ..., 1/2) for C, in doubled coordinates.
Weight minuscule_coweight(const RootDatum& d);

/// Raw recurrence for dominant nonzero lambda in the root lattice, reduced
/// into the dominant chamber with signs.
RecurrenceRow minuscule_row(const RootDatum& d, const Weight& lambda, const RowCaps& caps = {});

/// True when every entry is below lambda in dominance and only lambda itself
/// sits on the diagonal.
bool row_respects_dominance(const RootDatum& d, const RecurrenceRow& row);

/// Weight with recurrence index k in rank n (B: omega_k, or 2 omega_n at
/// k = n; D: omega_{2k}, omega_{n-1}+omega_n or 2 omega_n; C: omega_{2k}).
Weight recurrence_weight(const RootDatum& d, int k);
/// Largest recurrence index of the datum.
int recurrence_top(const RootDatum& d);

struct Omega0Count {
  std::int64_t brute = 0;   // orbit points conjugated to 0, by reduction
  std::int64_t shapes = 0;  // orbit points of the predicted coordinate shapes
  std::int64_t closed = 0;  // closed-form cardinality
  bool same_set = false;    // shape points are exactly the brute-force points
  bool agree() const { return same_set && brute == shapes && brute == closed; }
};

/// Orbit points of recurrence_weight(d, k) conjugated to 0 (types B and D).
Omega0Count omega0_count(const RootDatum& d, int k);
std::int64_t omega0_closed(Family f, int k, int n);

/// Integers A_h^{k,n} for h = 0..k (entry 0 is always 0), types B and D.
std::vector<std::int64_t> a_integers(Family f, int k, int n);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success
};

struct AggregateReport {
  std::string family;
  int rank = 0;
  int k = 0;
  std::vector<Check> checks;
  bool ok() const;
};

/// Symbolic comparison of the aggregated recurrence sum_i A_i R_i and the
/// raw-row coefficients with their closed forms, for recurrence index k.
AggregateReport verify_aggregate(const RootDatum& d, int k);

/// Closed forms used by the checks.
namespace closed {
LaurentQS lambda_diag_B(int k, int n);
LaurentQS p_B(int n);
LaurentQS gamma1_B(int n);
LaurentQS gamma2_B(int n);
/// Diagonal coefficient in type D; doubled at n = 2k when printed is set.
LaurentQS lambda_diag_D(int k, int n, bool printed);
LaurentQS b_D(int k, int n);
LaurentQS r_D(int n);
}  // namespace closed

}  // namespace gexp
