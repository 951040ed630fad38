#include "gexp/genexp.hpp"

#include <algorithm>

#include "gexp/errors.hpp"

namespace gexp {

PolyT t_analog(int n) {
  if (n < 0) throw ConfigError("t-analog of a negative integer");
  PolyT p;
  for (int i = 0; i < n; ++i) p.add_term(i, 1);
  return p;
}

PolyT t_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw ConfigError("t-binomial (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
  // row[k] of the Pascal triangle, built up to n
  std::vector<PolyT> row{PolyT(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<PolyT> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      PolyT v;
      if (j <= m - 1) v += row[static_cast<std::size_t>(j)];
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)].shifted(m - j);
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

PolyT t2(const PolyT& p) { return p.substitute_power(2); }
PolyT mono(int e) { return PolyT::monomial(e); }
PolyT tm1(int e) { return mono(e) - PolyT(1); }  // t^e - 1
PolyT tp1(int e) { return mono(e) + PolyT(1); }  // t^e + 1

void require_bcd(const RootDatum& d) {
  if (d.family != Family::B && d.family != Family::C && d.family != Family::D)
    throw ConfigError("generalized-exponent formulas cover B, C, D only");
}

Weight fund(const RootDatum& d, int i, int mult = 1) {
  return mult * d.fundamental_weights[static_cast<std::size_t>(i - 1)];
}

// Closed formula by recurrence index (both spin weights of even D share one).
PolyT closed_by_index(const RootDatum& d, int k) {
  const int n = d.rank;
  if (k == 0) return PolyT(1);
  switch (d.family) {
    case Family::B: {
      if (k == n) return mono(n - n / 2) * t2(t_binomial(n, n / 2));
      const int s = k / 2;
      if (k % 2 == 0) return mono(s) * t2(t_binomial(n, s));
      return mono(n - s) * t2(t_binomial(n, s));
    }
    case Family::C:
      return exact_divide(mono(2 * k) * t2(t_analog(n - 2 * k + 1)) * t2(t_binomial(n, k)),
                          t2(t_analog(n - k + 1)));
    case Family::D: {
      const PolyT bin = t2(t_binomial(n, k));
      if (2 * k <= n - 2) return exact_divide(mono(k) * tp1(n - 2 * k) * bin, tp1(n));
      if (n % 2 == 1) return exact_divide(mono(n / 2) * tp1(1) * t2(t_binomial(n, n / 2)), tp1(n));
      return exact_divide(mono(n / 2) * t2(t_binomial(n, n / 2)), tp1(n));
    }
    default: break;
  }
  throw ConfigError("no closed formula for " + d.name());
}

}  // namespace

std::vector<CoveredWeight> covered_weights(const RootDatum& d) {
  require_bcd(d);
  const int n = d.rank;
  std::vector<CoveredWeight> out;
  auto add = [&](int k, const Weight& w) { out.push_back({k, w, d.fundamental_label(w)}); };
  add(0, Weight::zero(static_cast<std::size_t>(d.dim)));
  switch (d.family) {
    case Family::B:
      for (int k = 1; k < n; ++k) add(k, fund(d, k));
      add(n, fund(d, n, 2));
      break;
    case Family::C:
      for (int k = 1; 2 * k <= n; ++k) add(k, fund(d, 2 * k));
      break;
    case Family::D:
      for (int k = 1; 2 * k <= n - 2; ++k) add(k, fund(d, 2 * k));
      if (n % 2 == 1) {
        add(n / 2, fund(d, n - 1) + fund(d, n));
      } else {
        add(n / 2, fund(d, n - 1, 2));
        add(n / 2, fund(d, n, 2));
      }
      break;
    default: break;
  }
  return out;
}

PolyT base_E_theta(const RootDatum& d) {
  const int n = d.rank;
  switch (d.family) {
    case Family::A: return mono(1) * t_analog(n);
    case Family::B:
    case Family::C: return mono(1) * t2(t_analog(n));
    case Family::D: return exact_divide(t2(t_analog(n)) * mono(1) * tp1(n - 2), tp1(n));
    case Family::G2: return mono(1) + mono(5);
  }
  throw InternalError("unknown family");
}

PolyT base_E_theta_short(const RootDatum& d) {
  const int n = d.rank;
  switch (d.family) {
    case Family::B: return mono(n);
    case Family::C: return mono(2) * t2(t_analog(n - 1));
    default: break;
  }
  throw ConfigError("no little-adjoint formula for " + d.name());
}

PolyT closed_E(const RootDatum& d, const Weight& lambda) {
  require_bcd(d);
  for (const CoveredWeight& cw : covered_weights(d))
    if (cw.weight == lambda) return closed_by_index(d, cw.index);
  throw ConfigError("no closed formula for " + d.fundamental_label(lambda) + " in " + d.name());
}

PolyT b_coeff_B(int n, int i) { return -(mono(n - i + 1) * tm1(2 * i - 1)); }
PolyT c_coeff_B(int k) { return tm1(k); }

namespace {

// q = 0 values of the type-D recurrence coefficients as Laurent polynomials.
PolyT d_leading(int k, int n, DLeadingCoefficient mode) {
  PolyT v = t_analog(2 * k).shifted(-(n - 1));
  if (mode == DLeadingCoefficient::as_stated && n == 2 * k) v *= 2;
  return v;
}

PolyT d_b(int k, int n) {
  if (n == 2 * k) return t_analog(2 * k).shifted(1 - k);
  return (t_analog(n) * tp1(n - 2 * k)).shifted(1 - (n - k));
}

}  // namespace

std::map<Weight, PolyT> recur_E(const RootDatum& d, DLeadingCoefficient mode) {
  require_bcd(d);
  const int n = d.rank;
  const auto covered = covered_weights(d);
  int top = 0;
  for (const auto& cw : covered) top = std::max(top, cw.index);
  std::vector<PolyT> E(static_cast<std::size_t>(top) + 1);
  auto at = [&](int k) -> PolyT& { return E[static_cast<std::size_t>(k)]; };
  at(0) = PolyT(1);

  switch (d.family) {
    case Family::B:
      at(1) = base_E_theta_short(d);
      if (top >= 2) at(2) = base_E_theta(d);
      for (int k = 3; k <= top; ++k) {
        PolyT rhs;
        for (int i = 1; i <= k / 2; ++i) rhs -= b_coeff_B(n, n - k + i + 1) * at(k - 2 * i);
        for (int i = 1; i <= (k + 1) / 2; ++i) rhs -= b_coeff_B(n, i) * at(k - 2 * i + 1);
        at(k) = exact_divide(rhs, c_coeff_B(k));
      }
      break;
    case Family::C:
      if (top >= 1) at(1) = base_E_theta_short(d);
      for (int k = 1; k < top; ++k) {
        PolyT num = mono(2) * tm1(2 * (n - 2 * k - 1)) * tm1(2 * (n - k + 1)) * at(k);
        at(k + 1) = exact_divide(num, tm1(2 * (n - 2 * k + 1)) * tm1(2 * (k + 1)));
      }
      break;
    case Family::D:
      at(1) = base_E_theta(d);
      for (int k = 2; k <= top; ++k) {
        PolyT rhs;
        for (int i = 1; i <= k; ++i) rhs += d_b(i, n - 2 * (k - i)) * at(k - i);
        at(k) = exact_divide(rhs, d_leading(k, n, mode));
      }
      break;
    default: break;
  }

  std::map<Weight, PolyT> out;
  for (const auto& cw : covered) out[cw.weight] = at(cw.index);
  return out;
}

PolyT symmetric_series(const RootDatum& d, const Weight& lambda, int N, const OracleCaps& caps) {
  if (N < 0) throw ConfigError("series length must be nonnegative");
  PolyT e;
  bool have = false;
  if (d.family == Family::B || d.family == Family::C || d.family == Family::D) {
    for (const auto& cw : covered_weights(d))
      if (cw.weight == lambda) {
        e = closed_by_index(d, cw.index);
        have = true;
      }
  }
  if (!have) e = lusztig_E(d, lambda, caps);
  PolyT series = e.truncated(N);
  for (int ex : d.exponents) {
    PolyT geo;
    for (int j = 0; j * (ex + 1) <= N; ++j) geo.add_term(j * (ex + 1), 1);
    series = (series * geo).truncated(N);
  }
  return series;
}

}  // namespace gexp
