#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gexp {

enum class Family { A, B, C, D, G2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws ConfigError

/// A weight in the epsilon basis, stored as twice its coordinates so that
/// spin weights and rho in type B stay integral.
struct Weight {
  std::vector<int> c2;

  Weight() = default;
  explicit Weight(std::vector<int> doubled) : c2(std::move(doubled)) {}
  static Weight zero(std::size_t len) { return Weight(std::vector<int>(len, 0)); }

  std::size_t size() const { return c2.size(); }
  int operator[](std::size_t i) const { return c2[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(int k, Weight a);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "(5/2,3/2,1/2)" style, halving on display.
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

struct Reduction {
  Weight lambda;
  int sign;
};

class RootDatum {
 public:
  Family family;
  int rank = 0;
  /// Number of epsilon coordinates: rank for B/C/D, rank+1 for A, 3 for G2.
  int dim = 0;

  std::vector<Weight> positive_roots;
  std::vector<bool> root_is_short;  // parallel to positive_roots
  std::vector<Weight> simple_roots;
  std::vector<Weight> fundamental_weights;
  Weight rho;
  Weight rho_short;
  Weight theta;
  std::optional<Weight> theta_short;
  std::vector<int> exponents;
  int coxeter_number = 0;
  int num_short_simple = 0;

  bool simply_laced() const { return !theta_short.has_value(); }
  std::string name() const { return family_name(family) + std::to_string(rank); }

  /// Invariant form on doubled coordinates, scaled by a datum-wide positive
  /// constant. Only ratios are meaningful.
  std::int64_t form(const Weight& a, const Weight& b) const;
  /// <v, alpha_i^vee> for the i-th simple root.
  int simple_pairing(const Weight& v, int i) const;
  /// <v, alpha^vee> for an arbitrary root.
  int coroot_pairing(const Weight& v, const Weight& alpha) const;
  Weight reflect(const Weight& v, const Weight& alpha) const;
  Weight simple_reflect(const Weight& v, int i) const;

  /// Canonical representative: for A, subtract the last coordinate from
  /// all; identity otherwise. Every weight handed out is canonical.
  Weight canon(Weight v) const;
  Weight make(std::vector<int> doubled) const;  // validates length, canonicalizes

  bool is_dominant(const Weight& v) const;
  bool is_integral_weight(const Weight& v) const;  // in the weight lattice
  bool in_root_lattice(const Weight& v) const;

  /// Coefficients of beta in the simple roots, or nullopt when beta is not
  /// in the root lattice.
  std::optional<std::vector<int>> simple_coords(const Weight& beta) const;

  /// Fundamental-weight coefficients of an integral weight.
  std::vector<int> fundamental_coords(const Weight& v) const;

  std::uint64_t weyl_group_order() const;

  /// W-orbit of v via breadth-first simple reflections; sorted.
  std::vector<Weight> orbit(const Weight& v) const;

  /// Dominant representative of v and the length parity of the element used.
  Reduction to_dominant(const Weight& v) const;

  /// String such as "2w1+w3" for the fundamental expansion.
  std::string fundamental_label(const Weight& v) const;
};

/// Enforces the supported ranks: A>=1, B/C>=2, D>=3, G2 only with rank 2.
RootDatum build_root_datum(Family family, int rank);

/// Same construction without the rank policy (B1, C1, D2 allowed); used for
/// the subsystems that appear in coefficient recursions.
RootDatum build_subsystem_datum(Family family, int rank);

Weight weight_from_fundamental(const RootDatum& d, const std::vector<int>& coeffs);

/// sigma(mu + rho) = lambda + rho with lambda dominant; nullopt if mu + rho
/// lies on a wall.
std::optional<Reduction> reduce_to_dominant(const RootDatum& d, const Weight& mu);

}  // namespace gexp
