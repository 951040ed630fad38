#pragma once

#include <map>
#include <string>
#include <vector>

#include "gexp/poly.hpp"
#include "gexp/rootdata.hpp"
#include "gexp/weyl_oracle.hpp"

namespace gexp {

/// Weight -> polynomial whose t^k coefficient is the multiplicity of the
/// weight in the k-th exterior power.
struct GradedCharacter {
  std::map<Weight, PolyT> coeffs;
  int dim = 0;  // dimension of the underlying module
};

struct ExteriorCaps {
  int max_dim = 24;
};

/// Product of (1 + t e^mu) over the weights of the module.
GradedCharacter graded_exterior_character(const RootDatum& d, const WeightMultMap& module,
                                          const ExteriorCaps& caps = {});

/// Graded multiplicity P(V_nu, Lambda M, t) of every occurring V_nu, by
/// peeling off the highest remaining dominant weight. Throws InternalError if
/// a multiplicity goes negative.
std::map<Weight, PolyT> graded_decompose(const RootDatum& d, const GradedCharacter& gc,
                                         const OracleCaps& caps = {});

/// prod (1 + t^{2e_i+1}).
PolyT hks_invariants(const RootDatum& d);
/// (1 + t^{-1}) prod_{i<n} (t^{2e_i+1} + 1) sum_i t^{2e_i}, exponents ascending.
PolyT bazlov_adjoint(const RootDatum& d);
/// t^{|Phi+|-|I|} (t+1)^{n-c(I)} (t^2+1)^{|I|-c(I)} (t^3+1)^{c(I)} for a set I of
/// simple-root indices (1-based).
PolyT reeder_delta(const RootDatum& d, const std::vector<int>& subset);

/// Factorized form of P(V_lambda, Lambda g, t) built from E_lambda(t^2): B
/// omega_k (k < n) and C omega_{2k}; ConfigError otherwise.
PolyT factorized_small(const RootDatum& d, const Weight& lambda);

struct ExteriorCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExteriorReport {
  std::string family;
  int rank = 0;
  std::string module;  // "adjoint" or "little-adjoint"
  int dim = 0;
  std::vector<ExteriorCheck> checks;
  std::map<Weight, PolyT> decomposition;
  bool ok() const;
};

/// Brute-force decomposition of Lambda g and the reference identities.
ExteriorReport verify_exterior_adjoint(const RootDatum& d, const ExteriorCaps& caps = {});
/// Brute-force decomposition of Lambda V_{theta_s}, the 2^{|Delta_s|} identity
/// and the status of the 2 rho_s conjecture.
ExteriorReport verify_exterior_little_adjoint(const RootDatum& d, const ExteriorCaps& caps = {});

}  // namespace gexp
