#pragma once

#include <cstdint>
#include <map>

#include "gexp/poly.hpp"
#include "gexp/rootdata.hpp"

namespace gexp {

using WeightMultMap = std::map<Weight, std::int64_t>;
/// Dominant highest weight -> multiplicity.
using Decomposition = std::map<Weight, std::int64_t>;

struct OracleCaps {
  std::size_t max_weights = 4'000'000;     // weight-system size in freudenthal
  std::uint64_t max_group_order = 200'000;  // |W| for lusztig_E
};

/// Multiplicities of the dominant weights of V_lambda.
WeightMultMap dominant_character(const RootDatum& d, const Weight& lambda, const OracleCaps& caps = {});

/// Full weight system of V_lambda with multiplicities.
WeightMultMap freudenthal(const RootDatum& d, const Weight& lambda, const OracleCaps& caps = {});

/// Multiplicity of an arbitrary weight in V_lambda.
std::int64_t weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu);

std::int64_t weyl_dim(const RootDatum& d, const Weight& lambda);

/// V_lambda (x) V_mu by reducing lambda + (weights of the smaller factor).
Decomposition klimyk_tensor(const RootDatum& d, const Weight& lambda, const Weight& mu, const OracleCaps& caps = {});

/// Same rule always running over the weights of the second factor.
Decomposition klimyk_tensor_over_second(const RootDatum& d, const Weight& lambda, const Weight& mu,
                                        const OracleCaps& caps = {});

/// Sum over k of (number of multisets of k positive roots adding to beta) t^k.
PolyT q_kostant(const RootDatum& d, const Weight& beta);

/// Generalized-exponent polynomial: alternating sum of q_kostant over the
/// dot-orbit of lambda.
PolyT lusztig_E(const RootDatum& d, const Weight& lambda, const OracleCaps& caps = {});

}  // namespace gexp
