#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gexp/rootdata.hpp"

namespace gexp {

/// Nonnegative coefficients of a weight over the positive roots of B/C/D:
/// m(i,j) on e_i - e_j, mp(i,j) on e_i + e_j, ms(i) on e_i. Indices are
/// 1-based. The flat layout is m12, mp12, m13, mp13, ..., m(n-1)n, mp(n-1)n,
/// ms1, ..., msn.
struct GPartition {
  int n = 0;
  std::vector<int> flat;

  GPartition() = default;
  explicit GPartition(int rank);
  static GPartition from_flat(int rank, std::vector<int> values);

  static std::size_t pair_index(int n, int i, int j);  // position of m(i,j)
  int& m(int i, int j) { return flat[pair_index(n, i, j)]; }
  int& mp(int i, int j) { return flat[pair_index(n, i, j) + 1]; }
  int& ms(int i) { return flat[static_cast<std::size_t>(n * (n - 1) + i - 1)]; }
  int m(int i, int j) const;
  int mp(int i, int j) const;
  int ms(int i) const;

  friend bool operator==(const GPartition&, const GPartition&) = default;
  friend auto operator<=>(const GPartition& a, const GPartition& b) { return a.flat <=> b.flat; }
  std::string to_string() const;
};

/// Valid for the family: nonnegative, even singles for C, zero singles for D.
bool is_valid_partition(Family f, const GPartition& p);

Weight weight_of(const GPartition& p);

/// A position in the ordered index set 0bar < 1 < 1bar < ... < n < nbar.
struct TIndex {
  int value = 0;
  bool bar = false;
  int order_key() const { return 2 * value + (bar ? 1 : 0); }
  std::string to_string() const;
  friend auto operator<=>(const TIndex&, const TIndex&) = default;
};

enum class FormKind { L, N0, N1 };

struct FormKey {
  FormKind kind;
  int j;
  TIndex t;
  friend auto operator<=>(const FormKey&, const FormKey&) = default;
  std::string to_string() const;
};

/// A linear form in the flat coordinates divided by den (1 or 2).
struct LinearForm {
  std::vector<std::pair<int, int>> terms;  // (flat index, coefficient)
  int den = 1;
  std::int64_t eval_scaled(const std::vector<int>& flat) const;  // numerator only
  std::int64_t eval(const std::vector<int>& flat) const;          // throws if not integral
};

/// The forms admitted for this family and rank, keyed by (kind, j, t).
std::map<FormKey, LinearForm> bz_forms(Family f, int n);

/// The same forms for j < n written from the interleaved Delta definitions.
std::map<FormKey, LinearForm> bz_forms_from_deltas(Family f, int n);

using FormValues = std::map<FormKey, std::int64_t>;

FormValues evaluate_forms(const RootDatum& d, const GPartition& p);

// Auxiliary quantities M(i,j), N(i), R(i,j), S(i,j) on a partition; zero
// outside their index range.
int aux_M(const GPartition& p, int i, int j);
int aux_N(const GPartition& p, int i);
int aux_R(const GPartition& p, int i, int j);
int aux_S(const GPartition& p, int i, int j);

/// a, b: fundamental coefficients of lambda and mu.
bool is_admissible(const RootDatum& d, const GPartition& p, const std::vector<int>& a, const std::vector<int>& b);

struct LRCount {
  std::int64_t count = 0;
  std::vector<GPartition> witnesses;  // sorted by flat layout
};

/// Multiplicity of V_nu in V_lambda (x) V_mu as the number of admissible
/// partitions associated to lambda + mu - nu.
LRCount count_lr(const RootDatum& d, const Weight& lambda, const Weight& mu, const Weight& nu,
                 bool keep_witnesses = false);

}  // namespace gexp
