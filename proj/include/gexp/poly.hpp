#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gexp {

/// Sparse integer polynomial in one variable t. Negative exponents are
/// allowed so the same type carries Laurent intermediates; E-polynomials
/// and graded multiplicities never have them.
class PolyT {
 public:
  using Coeff = std::int64_t;

  PolyT() = default;
  PolyT(Coeff constant);  // NOLINT(google-explicit-constructor)

  static PolyT monomial(int exponent, Coeff coeff = 1);
  static PolyT from_coeffs(const std::vector<Coeff>& coeffs);  // c0 + c1 t + ...

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int degree() const;      // highest exponent; throws on zero
  int low_degree() const;  // lowest exponent; throws on zero
  Coeff at_one() const;
  Coeff evaluate(Coeff t) const;  // nonnegative exponents only
  bool nonnegative_coeffs() const;
  bool has_negative_exponents() const;

  /// Coefficients c_0..c_deg as a dense vector; requires no negative exponents.
  std::vector<Coeff> dense() const;

  PolyT shifted(int by) const;             // multiply by t^by
  PolyT substitute_power(int m) const;     // t -> t^m
  PolyT truncated(int max_exponent) const; // drop terms above max_exponent

  PolyT& operator+=(const PolyT& rhs);
  PolyT& operator-=(const PolyT& rhs);
  PolyT& operator*=(const PolyT& rhs);
  PolyT& operator*=(Coeff c);
  void add_term(int exponent, Coeff coeff);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator*(PolyT a, Coeff c) { return a *= c; }
  friend PolyT operator*(Coeff c, PolyT a) { return a *= c; }
  friend PolyT operator-(PolyT a);
  friend bool operator==(const PolyT& a, const PolyT& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  std::string to_string(const char* var = "t") const;

 private:
  std::map<int, Coeff> terms_;
};

PolyT pow(const PolyT& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const PolyT& p);

/// Quotient and remainder of Laurent long division. The divisor's leading
/// coefficient must divide every intermediate leading coefficient.
std::pair<PolyT, PolyT> divmod(const PolyT& num, const PolyT& den);

/// num / den, throwing InternalError when the remainder is nonzero.
PolyT exact_divide(const PolyT& num, const PolyT& den);

/// Sparse Laurent polynomial in q and s, with s^2 = t. Keys are
/// (q-exponent, s-exponent).
class LaurentQS {
 public:
  using Coeff = std::int64_t;
  using Key = std::pair<int, int>;

  LaurentQS() = default;
  LaurentQS(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentQS monomial(int q_exp, int s_exp, Coeff coeff = 1);
  static LaurentQS q() { return monomial(1, 0); }
  static LaurentQS s() { return monomial(0, 1); }
  static LaurentQS t_power(int t_exp) { return monomial(0, 2 * t_exp); }
  /// Embeds a polynomial in t (s-exponents doubled).
  static LaurentQS from_t(const PolyT& p);

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int q_exp, int s_exp) const;
  void add_term(int q_exp, int s_exp, Coeff coeff);

  LaurentQS at_q0() const;
  /// Converts a q-free value to PolyT in t; throws if any s-exponent is odd
  /// or a q-exponent is nonzero.
  PolyT to_t() const;
  LaurentQS shifted_s(int by) const;  // multiply by s^by

  LaurentQS& operator+=(const LaurentQS& rhs);
  LaurentQS& operator-=(const LaurentQS& rhs);
  LaurentQS& operator*=(Coeff c);
  friend LaurentQS operator+(LaurentQS a, const LaurentQS& b) { return a += b; }
  friend LaurentQS operator-(LaurentQS a, const LaurentQS& b) { return a -= b; }
  friend LaurentQS operator*(const LaurentQS& a, const LaurentQS& b);
  friend LaurentQS operator*(LaurentQS a, Coeff c) { return a *= c; }
  friend LaurentQS operator*(Coeff c, LaurentQS a) { return a *= c; }
  friend LaurentQS operator-(LaurentQS a);
  friend bool operator==(const LaurentQS& a, const LaurentQS& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentQS& a, const LaurentQS& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Key, Coeff> terms_;
};

LaurentQS pow(const LaurentQS& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const LaurentQS& p);

}  // namespace gexp
