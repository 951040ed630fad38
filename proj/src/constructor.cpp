#include "gexp/constructor.hpp"

#include <algorithm>
#include <cstdlib>

#include "gexp/errors.hpp"
#include "gexp/orders.hpp"

namespace gexp {

std::string case_name(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::A: return "A";
    case ConstructionCase::B: return "B";
    case ConstructionCase::C: return "C";
  }
  return "?";
}

GPartition construct_even(Family f, const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  auto ci = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
  for (int v : c)
    if (v < 0 || v % 2 != 0) throw InternalError("even construction needs nonnegative even c values");
  GPartition p(n);
  p.ms(n) = ci(n) == 0 ? 0 : 2;
  if (f != Family::C && p.ms(n) != 0) throw InternalError("last single coefficient must vanish outside type C");

  // Row i-1 from row i.
  for (int i = n; i >= 2; --i) {
    const int prev = ci(i - 1);
    if (prev == 0) continue;
    if (prev == ci(i) + 2) {
      p.ms(i - 1) = p.ms(i);
      for (int j = i + 1; j <= n; ++j) {
        p.m(i - 1, j) = p.m(i, j);
        p.mp(i - 1, j) = p.mp(i, j);
      }
      p.m(i - 1, i) = 1;
      p.mp(i - 1, i) = 1;
    } else if (prev <= ci(i)) {
      p.ms(i - 1) = p.ms(i);
      // columns carrying row i, largest first, with j_0 = n + 1
      std::vector<int> cols{n + 1};
      for (int j = n; j > i; --j)
        if (p.m(i, j) != 0) cols.push_back(j);
      const int s = p.ms(i) == 0 ? prev / 2 : prev / 2 - 1;
      // past the last carrying column every remaining column of row i is zero
      const std::size_t si = static_cast<std::size_t>(s);
      const int lo = si < cols.size() ? cols[si] : i + 1;
      for (int j = lo; j <= n; ++j) {
        p.m(i - 1, j) = p.m(i, j);
        p.mp(i - 1, j) = p.mp(i, j);
      }
    } else {
      throw InternalError("c values increase by more than 2 between rows " + std::to_string(i - 1) + " and " +
                          std::to_string(i));
    }
  }
  return p;
}

namespace {

std::vector<int> c_values(const RootDatum& d, const Weight& lambda) {
  std::vector<int> c;
  for (int i = 0; i < d.rank; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const int c2 = 2 * std::abs(d.rho[k]) - std::abs(lambda[k]);
    if (c2 % 2 != 0) throw ConfigError("weight " + lambda.to_string() + " has half-integral coordinates");
    c.push_back(c2 / 2);
  }
  return c;
}

std::vector<int> odd_positions(const std::vector<int>& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] % 2 != 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Weight shifted(const Weight& lambda, int index, int by) {
  Weight w = lambda;
  w.c2[static_cast<std::size_t>(index - 1)] += 2 * by;
  return w;
}

}  // namespace

Certificate construct(const RootDatum& d, const Weight& lambda, bool prefer_case_c) {
  if (d.family != Family::B && d.family != Family::C && d.family != Family::D)
    throw ConfigError("explicit construction is defined for B, C, D only");
  if (lambda.size() != static_cast<std::size_t>(d.dim)) throw ConfigError("weight length does not match rank");
  if (!d.is_integral_weight(lambda) || !d.is_dominant(lambda))
    throw ConfigError("weight " + lambda.to_string() + " is not dominant integral");
  const Weight two_rho = 2 * d.rho;
  if (!dominance_leq(d, lambda, two_rho))
    throw ConfigError("dominance test failed: " + lambda.to_string() + " is not below 2rho");
  if (!coordinatewise_leq(lambda, two_rho))
    throw ConfigError("coordinatewise test failed: " + lambda.to_string() + " is not below 2rho");

  Certificate cert;
  cert.lambda = lambda;
  const std::vector<int> c = c_values(d, lambda);
  for (int v : c) cert.c2.push_back(2 * v);
  const std::vector<int> odd = odd_positions(c);
  const int n = d.rank;
  const int lam_n = lambda[static_cast<std::size_t>(n - 1)];
  const bool b_applies = odd.size() % 2 == 0 && (c[static_cast<std::size_t>(n - 1)] % 2 == 0 || lam_n != 0);

  if (odd.empty()) {
    cert.case_used = ConstructionCase::A;
    cert.partition = construct_even(d.family, c);
  } else if (b_applies && !(prefer_case_c && d.family == Family::B)) {
    cert.case_used = ConstructionCase::B;
    const std::size_t k = odd.size() / 2;
    Weight lp = lambda;
    for (std::size_t j = 0; j < k; ++j) {
      cert.pairing.emplace_back(odd[j], odd[j + k]);
      lp = shifted(shifted(lp, odd[j], 1), odd[j + k], -1);
    }
    cert.lambda_prime = lp;
    cert.partition = construct_even(d.family, c_values(d, lp));
    for (auto [a, b] : cert.pairing) cert.partition.m(a, b) += 1;
  } else if (d.family == Family::B) {
    cert.case_used = ConstructionCase::C;
    cert.odd_indices = odd;
    Weight lp = lambda;
    for (int i : odd) lp = shifted(lp, i, 1);
    cert.lambda_prime = lp;
    cert.partition = construct_even(d.family, c_values(d, lp));
    for (int i : odd) cert.partition.ms(i) = 1;
  } else {
    throw InternalError("no construction applies to " + lambda.to_string() + " in " + d.name());
  }

  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  cert.associated_ok = weight_of(cert.partition) == two_rho - lambda;
  cert.admissible_ok = is_admissible(d, cert.partition, ones, ones);
  return cert;
}

CertifyReport certify_theorem(const RootDatum& d, const CertifyOptions& opts) {
  CertifyReport rep;
  rep.family = family_name(d.family);
  rep.rank = d.rank;
  if (d.rank > opts.rank_bound) return rep;
  const Weight two_rho = 2 * d.rho;
  for (const Weight& lam : enumerate_dominant_below(d, two_rho, BelowFilter::dominance_and_coordinatewise)) {
    ++rep.total;
    try {
      Certificate cert = construct(d, lam, opts.prefer_case_c);
      if (!cert.associated_ok)
        rep.failures.push_back({lam, "associated"});
      else if (!cert.admissible_ok)
        rep.failures.push_back({lam, "admissible"});
      else
        ++rep.passed;
      rep.certificates.push_back(std::move(cert));
    } catch (const InternalError& e) {
      rep.failures.push_back({lam, std::string("construct: ") + e.what()});
    }
  }
  if (opts.oracle) {
    rep.oracle_run = true;
    const Decomposition dec = klimyk_tensor(d, d.rho, d.rho, opts.caps);
    for (const Weight& lam : enumerate_dominant_below(d, two_rho)) {
      ++rep.oracle_total;
      auto it = dec.find(lam);
      if (it != dec.end() && it->second > 0)
        ++rep.oracle_confirmed;
      else
        rep.failures.push_back({lam, "oracle"});
    }
  }
  return rep;
}

}  // namespace gexp
