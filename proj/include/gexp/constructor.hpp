#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gexp/gpartitions.hpp"
#include "gexp/rootdata.hpp"
#include "gexp/weyl_oracle.hpp"

namespace gexp {

enum class ConstructionCase { A, B, C };
std::string case_name(ConstructionCase c);

/// An explicit admissible partition associated to 2rho - lambda for the pair
/// (rho, rho), with the data used to build it.
struct Certificate {
  Weight lambda;
  std::vector<int> c2;  // twice c_i = 2|rho_i| - |lambda_i|
  ConstructionCase case_used = ConstructionCase::A;
  std::vector<std::pair<int, int>> pairing;  // Case B, 1-based
  std::vector<int> odd_indices;              // Case C, 1-based
  std::optional<Weight> lambda_prime;        // Cases B and C
  GPartition partition;
  bool associated_ok = false;
  bool admissible_ok = false;
  bool ok() const { return associated_ok && admissible_ok; }
};

/// Row-by-row construction from even c values (c[i-1] = c_i, not doubled).
GPartition construct_even(Family f, const std::vector<int>& c);

/// Requires lambda dominant with lambda <= 2rho in both orders; throws
/// ConfigError naming the failed test otherwise. prefer_case_c routes type B
/// weights with odd c values through the odd-index construction.
Certificate construct(const RootDatum& d, const Weight& lambda, bool prefer_case_c = false);

struct CertifyFailure {
  Weight lambda;
  std::string stage;  // "construct", "associated", "admissible", "oracle"
};

struct CertifyReport {
  std::string family;
  int rank = 0;
  int total = 0;
  int passed = 0;
  std::vector<CertifyFailure> failures;
  std::vector<Certificate> certificates;
  bool oracle_run = false;
  int oracle_total = 0;      // weights below 2rho in dominance
  int oracle_confirmed = 0;  // of those, present in V_rho (x) V_rho
};

struct CertifyOptions {
  bool oracle = false;
  bool prefer_case_c = false;
  int rank_bound = 12;  // ranks above the bound give an empty report
  OracleCaps caps{};
};

CertifyReport certify_theorem(const RootDatum& d, const CertifyOptions& opts = {});

}  // namespace gexp
