#pragma once

#include <vector>

#include "gexp/rootdata.hpp"

namespace gexp {

struct OrderReport {
  Weight mu;
  Weight lambda;
  bool dominance_leq = false;
  bool coordinatewise_leq = false;
  /// Doubled partial sums of lambda - mu.
  std::vector<int> partial_sums2;
  /// lambda - mu is integral and, for C/D, has even coordinate sum.
  bool parity_ok = false;
};

OrderReport compare_weights(const RootDatum& d, const Weight& mu, const Weight& lambda);

/// mu <= lambda: lambda - mu is a nonnegative integer combination of simple roots.
bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda);

/// lambda_i - mu_i >= 0 and |lambda_i| >= |mu_i| for every coordinate.
bool coordinatewise_leq(const Weight& mu, const Weight& lambda);

enum class BelowFilter { dominance, dominance_and_coordinatewise, small };

/// Dominant weights below a dominant bound, sorted ascending by doubled coordinates.
std::vector<Weight> enumerate_dominant_below(const RootDatum& d, const Weight& bound,
                                             BelowFilter filter = BelowFilter::dominance);

/// Same set computed by walking down from the bound one positive root at a
/// time through dominant weights. Slower; kept as an independent check and
/// used for families without a box enumeration.
std::vector<Weight> enumerate_by_root_descent(const RootDatum& d, const Weight& bound);

/// Root-lattice weight with neither 2*theta nor 2*theta_short below it.
bool is_small(const RootDatum& d, const Weight& lambda);

struct DeltaI {
  Weight weight;   // 2 rho - sum of the chosen simple roots
  int components;  // connected components of the Dynkin subdiagram on I
};

/// I holds 1-based simple-root indices.
DeltaI two_rho_minus_delta(const RootDatum& d, const std::vector<int>& I);

}  // namespace gexp
