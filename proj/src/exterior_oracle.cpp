#include "gexp/exterior_oracle.hpp"

#include <algorithm>
#include <set>

#include "gexp/errors.hpp"
#include "gexp/genexp.hpp"
#include "gexp/orders.hpp"

namespace gexp {

namespace {

std::vector<int> sorted_exponents(const RootDatum& d) {
  std::vector<int> e = d.exponents;
  std::sort(e.begin(), e.end());
  return e;
}

PolyT one_plus(int e) { return PolyT(1) + PolyT::monomial(e); }

std::int64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string subset_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

GradedCharacter graded_exterior_character(const RootDatum& d, const WeightMultMap& module, const ExteriorCaps& caps) {
  std::int64_t total = 0;
  for (const auto& [w, m] : module) {
    if (m < 0) throw ConfigError("negative multiplicity in module character");
    total += m;
  }
  if (total > caps.max_dim)
    throw ResourceError("module of dimension " + std::to_string(total) + " exceeds the exterior cap " +
                        std::to_string(caps.max_dim));

  // weight lines ordered by first coordinate
  std::vector<Weight> lines;
  for (const auto& [w, m] : module)
    for (std::int64_t i = 0; i < m; ++i) lines.push_back(w);
  std::stable_sort(lines.begin(), lines.end(), [](const Weight& a, const Weight& b) { return a[0] < b[0]; });

  GradedCharacter gc;
  gc.dim = static_cast<int>(total);
  gc.coeffs[Weight::zero(static_cast<std::size_t>(d.dim))] = PolyT(1);
  for (const Weight& mu : lines) {
    std::map<Weight, PolyT> next = gc.coeffs;
    for (const auto& [nu, p] : gc.coeffs) next[d.canon(nu + mu)] += p.shifted(1);
    gc.coeffs = std::move(next);
  }
  return gc;
}

std::map<Weight, PolyT> graded_decompose(const RootDatum& d, const GradedCharacter& gc, const OracleCaps& caps) {
  std::map<Weight, PolyT> work;
  for (const auto& [w, p] : gc.coeffs)
    if (d.is_dominant(w) && !p.is_zero()) work[w] = p;

  // strictly increasing along positive roots, so the top entry is a highest weight
  auto height = [&](const Weight& w) { return d.form(w, d.rho); };
  std::map<Weight, PolyT> out;
  while (!work.empty()) {
    auto top = work.begin();
    for (auto it = work.begin(); it != work.end(); ++it) {
      const auto h = height(it->first), ht = height(top->first);
      if (h > ht || (h == ht && top->first < it->first)) top = it;
    }
    const Weight nu = top->first;
    const PolyT p = top->second;
    out[nu] = p;
    for (const auto& [mu, m] : dominant_character(d, nu, caps)) {
      auto it = work.find(mu);
      PolyT rest = (it == work.end() ? PolyT() : it->second) - p * m;
      if (!rest.nonnegative_coeffs())
        throw InternalError("peeling " + nu.to_string() + " left a negative multiplicity at " + mu.to_string());
      if (rest.is_zero()) {
        if (it != work.end()) work.erase(it);
      } else {
        work[mu] = rest;
      }
    }
  }
  return out;
}

PolyT hks_invariants(const RootDatum& d) {
  PolyT p(1);
  for (int e : d.exponents) p *= one_plus(2 * e + 1);
  return p;
}

PolyT bazlov_adjoint(const RootDatum& d) {
  const std::vector<int> e = sorted_exponents(d);
  PolyT p = PolyT(1) + PolyT::monomial(-1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) p *= one_plus(2 * e[i] + 1);
  PolyT sum;
  for (int x : e) sum.add_term(2 * x, 1);
  return p * sum;
}

PolyT reeder_delta(const RootDatum& d, const std::vector<int>& subset) {
  const int c = two_rho_minus_delta(d, subset).components;
  const int sz = static_cast<int>(subset.size());
  const int n = d.rank;
  return PolyT::monomial(static_cast<int>(d.positive_roots.size()) - sz) * pow(one_plus(1), static_cast<unsigned>(n - c)) *
         pow(one_plus(2), static_cast<unsigned>(sz - c)) * pow(one_plus(3), static_cast<unsigned>(c));
}

PolyT factorized_small(const RootDatum& d, const Weight& lambda) {
  const std::vector<int> e = sorted_exponents(d);
  const int n = d.rank;
  auto prod_upto = [&](int m) {
    PolyT p(1);
    for (int i = 0; i < m; ++i) p *= one_plus(2 * e[static_cast<std::size_t>(i)] + 1);
    return p;
  };
  int first = -1, second = -1;
  for (int k = 1; k <= n; ++k) {
    if (d.fundamental_weights[static_cast<std::size_t>(k - 1)] != lambda) continue;
    if (d.family == Family::B && k < n) {
      const int s = k / 2;
      first = k % 2 == 0 ? n - s : s;
      second = k % 2 == 0 ? s - 1 : n - s - 1;
    } else if (d.family == Family::C && k % 2 == 0) {
      first = n - k / 2;
      second = k / 2 - 1;
    }
  }
  if (first < 0) throw ConfigError("no factorized form for " + d.fundamental_label(lambda) + " in " + d.name());
  return (PolyT(1) + PolyT::monomial(-1)) * prod_upto(first) * prod_upto(second) *
         closed_E(d, lambda).substitute_power(2);
}

bool ExteriorReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExteriorCheck& c) { return c.pass; });
}

namespace {

ExteriorCheck poly_check(const std::string& name, const PolyT& got, const PolyT& want) {
  ExteriorCheck c{name, got == want, ""};
  if (!c.pass) c.detail = "computed " + got.to_string() + " vs reference " + want.to_string();
  return c;
}

PolyT lookup(const std::map<Weight, PolyT>& m, const Weight& w) {
  auto it = m.find(w);
  return it == m.end() ? PolyT() : it->second;
}

ExteriorCheck binomial_check(const GradedCharacter& gc) {
  bool pass = true;
  std::string why;
  for (int k = 0; k <= gc.dim; ++k) {
    std::int64_t s = 0;
    for (const auto& [w, p] : gc.coeffs) s += p.coeff(k);
    if (s != binom(gc.dim, k)) {
      pass = false;
      why += "degree " + std::to_string(k) + " sums to " + std::to_string(s) + "; ";
    }
  }
  return {"graded dimensions are binomial", pass, why};
}

// Totals at t = 1 against factor * (V_a (x) V_a).
ExteriorCheck tensor_total_check(const RootDatum& d, const std::string& name, const std::map<Weight, PolyT>& dec,
                                 const Weight& a, std::int64_t factor) {
  const Decomposition tensor = klimyk_tensor(d, a, a);
  std::set<Weight> keys;
  for (const auto& [w, p] : dec) keys.insert(w);
  for (const auto& [w, m] : tensor) keys.insert(w);
  bool pass = true;
  std::string why;
  for (const Weight& w : keys) {
    const std::int64_t got = lookup(dec, w).at_one();
    auto it = tensor.find(w);
    const std::int64_t want = factor * (it == tensor.end() ? 0 : it->second);
    if (got != want) {
      pass = false;
      why += d.fundamental_label(w) + ": " + std::to_string(got) + " vs " + std::to_string(want) + "; ";
    }
  }
  return {name, pass, why};
}

ExteriorReport start_report(const RootDatum& d, const std::string& module, const Weight& top,
                            const ExteriorCaps& caps, GradedCharacter& gc) {
  ExteriorReport rep;
  rep.family = family_name(d.family);
  rep.rank = d.rank;
  rep.module = module;
  gc = graded_exterior_character(d, freudenthal(d, top), caps);
  rep.dim = gc.dim;
  rep.decomposition = graded_decompose(d, gc);
  rep.checks.push_back(binomial_check(gc));
  return rep;
}

}  // namespace

ExteriorReport verify_exterior_adjoint(const RootDatum& d, const ExteriorCaps& caps) {
  GradedCharacter gc;
  ExteriorReport rep = start_report(d, "adjoint", d.theta, caps, gc);
  const auto& dec = rep.decomposition;
  const Weight zero = Weight::zero(static_cast<std::size_t>(d.dim));
  const std::int64_t scale = std::int64_t{1} << d.rank;

  rep.checks.push_back(poly_check("invariants: product of (1+t^(2e+1))", lookup(dec, zero), hks_invariants(d)));
  rep.checks.push_back(poly_check("adjoint graded multiplicity", lookup(dec, d.theta), bazlov_adjoint(d)));

  for (unsigned mask = 0; mask < (1U << d.rank); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < d.rank; ++i)
      if (mask & (1U << i)) subset.push_back(i + 1);
    const Weight w = two_rho_minus_delta(d, subset).weight;
    rep.checks.push_back(poly_check("2rho-delta_I, I=" + subset_label(subset), lookup(dec, w), reeder_delta(d, subset)));
  }

  rep.checks.push_back(tensor_total_check(d, "totals equal 2^rank (V_rho x V_rho)", dec, d.rho, scale));

  // among root-lattice weights, the bound 2^rank dim V^0 is attained exactly on small ones
  {
    bool pass = true;
    std::string why;
    for (const Weight& w : enumerate_dominant_below(d, 2 * d.rho)) {
      if (!d.in_root_lattice(w)) continue;
      const std::int64_t got = lookup(dec, w).at_one();
      const std::int64_t bound = scale * weight_multiplicity(d, w, zero);
      if (got > bound || (got == bound) != is_small(d, w)) {
        pass = false;
        why += d.fundamental_label(w) + ": " + std::to_string(got) + " vs bound " + std::to_string(bound) + "; ";
      }
    }
    rep.checks.push_back({"multiplicity bound, equality exactly for small weights", pass, why});
  }

  for (const Weight& w : d.fundamental_weights) {
    PolyT want;
    try {
      want = factorized_small(d, w);
    } catch (const ConfigError&) {
      continue;
    }
    rep.checks.push_back(poly_check("factorized form for " + d.fundamental_label(w), lookup(dec, w), want));
  }
  return rep;
}

ExteriorReport verify_exterior_little_adjoint(const RootDatum& d, const ExteriorCaps& caps) {
  if (!d.theta_short) throw ConfigError(d.name() + " is simply laced; it has no little adjoint representation");
  GradedCharacter gc;
  ExteriorReport rep = start_report(d, "little-adjoint", *d.theta_short, caps, gc);
  const auto& dec = rep.decomposition;
  rep.checks.push_back(tensor_total_check(d, "totals equal 2^|short simple| (V_rho_s x V_rho_s)", dec, d.rho_short,
                                          std::int64_t{1} << d.num_short_simple));

  const std::vector<Weight> below = enumerate_dominant_below(d, 2 * d.rho_short);
  std::set<Weight> want(below.begin(), below.end()), got;
  for (const auto& [w, p] : dec) got.insert(w);
  std::string why;
  for (const Weight& w : want)
    if (!got.count(w)) why += "missing " + d.fundamental_label(w) + "; ";
  for (const Weight& w : got)
    if (!want.count(w)) why += "extra " + d.fundamental_label(w) + "; ";
  rep.checks.push_back({"components are the dominant weights below 2rho_s", got == want, why});
  return rep;
}

}  // namespace gexp
