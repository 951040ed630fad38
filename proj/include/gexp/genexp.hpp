#pragma once

#include <map>
#include <string>
#include <vector>

#include "gexp/poly.hpp"
#include "gexp/rootdata.hpp"
#include "gexp/weyl_oracle.hpp"

namespace gexp {

/// (n)_t = 1 + t + ... + t^(n-1).
PolyT t_analog(int n);
/// Gaussian binomial via the Pascal rule; throws ConfigError for k outside [0, n].
PolyT t_binomial(int n, int k);

/// A small weight with a closed formula, with its index in the recurrences:
/// B: k for omega_k (k < n) and k = n for 2 omega_n; C: k for omega_{2k};
/// D: k for omega_{2k}, and k = floor(n/2) for omega_{n-1}+omega_n (n odd)
/// or 2 omega_n (n even). 2 omega_{n-1} in even D shares index n/2.
struct CoveredWeight {
  int index;
  Weight weight;
  std::string label;
};

/// Covered small weights of B/C/D including the zero weight (index 0),
/// sorted by index.
std::vector<CoveredWeight> covered_weights(const RootDatum& d);

/// E for the adjoint and little adjoint representations from the exponents.
PolyT base_E_theta(const RootDatum& d);
PolyT base_E_theta_short(const RootDatum& d);  // throws for simply laced data

/// Closed formula for a covered weight; ConfigError if the weight has none.
PolyT closed_E(const RootDatum& d, const Weight& lambda);

enum class DLeadingCoefficient {
  /// 2(t^{2k}-1)/(t^{2k-1}(t-1)) when n = 2k, as printed.
  as_stated,
  /// (t^{2k}-1)/(t^{n-1}(t-1)) for every n, as produced by the reduced
  /// recurrence itself.
  from_rows,
};

/// Table of E over covered_weights computed from the q = 0 recurrences,
/// seeded with base_E_theta / base_E_theta_short.
std::map<Weight, PolyT> recur_E(const RootDatum& d, DLeadingCoefficient mode = DLeadingCoefficient::from_rows);

/// Coefficients b_i and c_k of the type-B relation at q = 0.
PolyT b_coeff_B(int n, int i);
PolyT c_coeff_B(int k);

/// First N+1 coefficients of E_lambda(t) / prod (1 - t^(e_i+1)).
PolyT symmetric_series(const RootDatum& d, const Weight& lambda, int N, const OracleCaps& caps = {});

}  // namespace gexp
