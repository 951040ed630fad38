#include "gexp/poly.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "gexp/errors.hpp"

namespace gexp {

namespace {

void append_term(std::ostringstream& os, bool first, std::int64_t c, const std::string& mono) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  std::int64_t a = std::llabs(c);
  if (mono.empty()) {
    os << a;
  } else {
    if (a != 1) os << a << "*";
    os << mono;
  }
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---- PolyT ----

PolyT::PolyT(Coeff constant) {
  if (constant != 0) terms_[0] = constant;
}

PolyT PolyT::monomial(int exponent, Coeff coeff) {
  PolyT p;
  p.add_term(exponent, coeff);
  return p;
}

PolyT PolyT::from_coeffs(const std::vector<Coeff>& coeffs) {
  PolyT p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

void PolyT::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyT::Coeff PolyT::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int PolyT::degree() const {
  if (terms_.empty()) throw InternalError("degree of zero polynomial");
  return terms_.rbegin()->first;
}

int PolyT::low_degree() const {
  if (terms_.empty()) throw InternalError("low degree of zero polynomial");
  return terms_.begin()->first;
}

PolyT::Coeff PolyT::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

PolyT::Coeff PolyT::evaluate(Coeff t) const {
  if (has_negative_exponents()) throw InternalError("evaluate with negative exponent");
  Coeff acc = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    // Horner over the gaps between stored exponents.
    auto next = std::next(it);
    int lower = next == terms_.rend() ? 0 : next->first;
    acc += it->second;
    for (int k = lower; k < it->first; ++k) acc *= t;
  }
  return acc;
}

bool PolyT::nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool PolyT::has_negative_exponents() const {
  return !terms_.empty() && terms_.begin()->first < 0;
}

std::vector<PolyT::Coeff> PolyT::dense() const {
  if (terms_.empty()) return {};
  if (has_negative_exponents()) throw InternalError("dense view of Laurent polynomial");
  std::vector<Coeff> out(static_cast<std::size_t>(degree()) + 1, 0);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

PolyT PolyT::shifted(int by) const {
  PolyT p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

PolyT PolyT::substitute_power(int m) const {
  if (m == 0) return PolyT(at_one());
  PolyT p;
  for (const auto& [e, c] : terms_) p.add_term(e * m, c);
  return p;
}

PolyT PolyT::truncated(int max_exponent) const {
  PolyT p;
  for (const auto& [e, c] : terms_)
    if (e <= max_exponent) p.terms_.emplace(e, c);
  return p;
}

PolyT& PolyT::operator+=(const PolyT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PolyT& PolyT::operator*=(const PolyT& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyT& PolyT::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  PolyT p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

PolyT operator-(PolyT a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string PolyT::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, power(var, e));
    first = false;
  }
  return os.str();
}

PolyT pow(const PolyT& base, unsigned exponent) {
  PolyT result(1);
  PolyT b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::pair<PolyT, PolyT> divmod(const PolyT& num, const PolyT& den) {
  if (den.is_zero()) throw InternalError("division by zero polynomial");
  const int dlo = den.low_degree();
  const int dhi = den.degree();
  const PolyT::Coeff lead = den.coeff(dhi);
  PolyT q;
  PolyT r = num;
  // Long division from the top, stopping once the remainder can no longer
  // contain the divisor's span; Laurent terms are handled by the low bound.
  const int floor_exp = num.is_zero() ? 0 : num.low_degree() - dlo;
  while (!r.is_zero() && r.degree() - dhi >= floor_exp) {
    const int e = r.degree() - dhi;
    const PolyT::Coeff c = r.coeff(r.degree());
    if (c % lead != 0) break;
    const PolyT step = PolyT::monomial(e, c / lead);
    q += step;
    r -= step * den;
  }
  return {q, r};
}

PolyT exact_divide(const PolyT& num, const PolyT& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw InternalError("non-exact division: (" + num.to_string() + ") / (" + den.to_string() + ")");
  return q;
}

std::ostream& operator<<(std::ostream& os, const PolyT& p) { return os << p.to_string(); }

// ---- LaurentQS ----

LaurentQS::LaurentQS(Coeff constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

LaurentQS LaurentQS::monomial(int q_exp, int s_exp, Coeff coeff) {
  LaurentQS p;
  p.add_term(q_exp, s_exp, coeff);
  return p;
}

LaurentQS LaurentQS::from_t(const PolyT& p) {
  LaurentQS out;
  for (const auto& [e, c] : p.terms()) out.add_term(0, 2 * e, c);
  return out;
}

LaurentQS::Coeff LaurentQS::coeff(int q_exp, int s_exp) const {
  auto it = terms_.find({q_exp, s_exp});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentQS::add_term(int q_exp, int s_exp, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{q_exp, s_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentQS LaurentQS::at_q0() const {
  LaurentQS out;
  for (const auto& [k, c] : terms_)
    if (k.first == 0) out.terms_.emplace(k, c);
  return out;
}

PolyT LaurentQS::to_t() const {
  PolyT out;
  for (const auto& [k, c] : terms_) {
    if (k.first != 0) throw InternalError("to_t: q-dependent value " + to_string());
    if (k.second % 2 != 0) throw InternalError("to_t: half-integer t power in " + to_string());
    out.add_term(k.second / 2, c);
  }
  return out;
}

LaurentQS LaurentQS::shifted_s(int by) const {
  LaurentQS out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first, k.second + by}, c);
  return out;
}

LaurentQS& LaurentQS::operator+=(const LaurentQS& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentQS& LaurentQS::operator-=(const LaurentQS& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentQS& LaurentQS::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentQS operator*(const LaurentQS& a, const LaurentQS& b) {
  LaurentQS p;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) p.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return p;
}

LaurentQS operator-(LaurentQS a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentQS::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono = power("q", k.first);
    std::string sp = power("s", k.second);
    if (!mono.empty() && !sp.empty()) mono += "*";
    mono += sp;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

LaurentQS pow(const LaurentQS& base, unsigned exponent) {
  LaurentQS result(1);
  LaurentQS b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentQS& p) { return os << p.to_string(); }

}  // namespace gexp
