#include "gexp/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "gexp/errors.hpp"

namespace gexp {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "G" || s == "G2" || s == "g" || s == "g2") return Family::G2;
  throw ConfigError("unknown family '" + s + "'");
}

// ---- Weight ----

bool Weight::is_zero() const {
  return std::all_of(c2.begin(), c2.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < c2.size(); ++i) c2[i] += o.c2[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < c2.size(); ++i) c2[i] -= o.c2[i];
  return *this;
}

Weight operator-(Weight a) {
  for (int& x : a.c2) x = -x;
  return a;
}

Weight operator*(int k, Weight a) {
  for (int& x : a.c2) x *= k;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c2.size(); ++i) {
    if (i) os << ",";
    if (c2[i] % 2 == 0)
      os << c2[i] / 2;
    else
      os << c2[i] << "/2";
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : w.c2) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- RootDatum ----

std::int64_t RootDatum::form(const Weight& a, const Weight& b) const {
  std::int64_t dot = 0;
  for (int i = 0; i < dim; ++i) dot += static_cast<std::int64_t>(a.c2[i]) * b.c2[i];
  if (family != Family::A) return dot;
  // Form on R^{n+1} / (1,...,1): invariant under shifting either argument.
  std::int64_t sa = std::accumulate(a.c2.begin(), a.c2.end(), std::int64_t{0});
  std::int64_t sb = std::accumulate(b.c2.begin(), b.c2.end(), std::int64_t{0});
  return static_cast<std::int64_t>(dim) * dot - sa * sb;
}

int RootDatum::coroot_pairing(const Weight& v, const Weight& alpha) const {
  const std::int64_t num = 2 * form(v, alpha);
  const std::int64_t den = form(alpha, alpha);
  if (num % den != 0) throw ConfigError("weight " + v.to_string() + " is not integral for " + name());
  return static_cast<int>(num / den);
}

int RootDatum::simple_pairing(const Weight& v, int i) const {
  return coroot_pairing(v, simple_roots[static_cast<std::size_t>(i)]);
}

Weight RootDatum::reflect(const Weight& v, const Weight& alpha) const {
  const int k = coroot_pairing(v, alpha);
  Weight out = v;
  for (int i = 0; i < dim; ++i) out.c2[i] -= k * alpha.c2[i];
  return canon(std::move(out));
}

Weight RootDatum::simple_reflect(const Weight& v, int i) const {
  return reflect(v, simple_roots[static_cast<std::size_t>(i)]);
}

Weight RootDatum::canon(Weight v) const {
  if (family == Family::A) {
    const int last = v.c2.back();
    if (last != 0)
      for (int& x : v.c2) x -= last;
  }
  return v;
}

Weight RootDatum::make(std::vector<int> doubled) const {
  if (static_cast<int>(doubled.size()) != dim)
    throw ConfigError("weight has " + std::to_string(doubled.size()) + " coordinates, " + name() + " needs " +
                      std::to_string(dim));
  if (family == Family::G2 && doubled[0] + doubled[1] + doubled[2] != 0)
    throw ConfigError("G2 weights must have coordinate sum zero");
  return canon(Weight(std::move(doubled)));
}

bool RootDatum::is_integral_weight(const Weight& v) const {
  for (const auto& a : simple_roots)
    if ((2 * form(v, a)) % form(a, a) != 0) return false;
  return true;
}

bool RootDatum::is_dominant(const Weight& v) const {
  if (!is_integral_weight(v)) return false;
  for (int i = 0; i < rank; ++i)
    if (simple_pairing(v, i) < 0) return false;
  return true;
}

bool RootDatum::in_root_lattice(const Weight& v) const { return simple_coords(v).has_value(); }

std::optional<std::vector<int>> RootDatum::simple_coords(const Weight& beta) const {
  const int n = rank;
  std::vector<int> b(beta.c2);
  if (family == Family::A) {
    const int s = std::accumulate(b.begin(), b.end(), 0);
    if (s % dim != 0) return std::nullopt;
    for (int& x : b) x -= s / dim;
  }
  for (int x : b)
    if (x % 2 != 0) return std::nullopt;
  for (int& x : b) x /= 2;

  std::vector<int> S(static_cast<std::size_t>(dim));
  std::partial_sum(b.begin(), b.end(), S.begin());
  std::vector<int> c(static_cast<std::size_t>(n));
  switch (family) {
    case Family::A:
      for (int k = 0; k < n; ++k) c[k] = S[k];
      break;
    case Family::B:
      for (int k = 0; k < n; ++k) c[k] = S[k];
      break;
    case Family::C:
      for (int k = 0; k + 1 < n; ++k) c[k] = S[k];
      if (S[n - 1] % 2 != 0) return std::nullopt;
      c[n - 1] = S[n - 1] / 2;
      break;
    case Family::D: {
      for (int k = 0; k + 2 < n; ++k) c[k] = S[k];
      const int s1 = n >= 2 ? S[n - 2] : 0;
      const int bn = b[n - 1];
      if ((s1 - bn) % 2 != 0) return std::nullopt;
      c[n - 2] = (s1 - bn) / 2;
      c[n - 1] = (s1 + bn) / 2;
      break;
    }
    case Family::G2:
      if (b[0] + b[1] + b[2] != 0) return std::nullopt;
      c[1] = b[2];
      c[0] = b[0] + 2 * b[2];
      break;
  }
  return c;
}

std::vector<int> RootDatum::fundamental_coords(const Weight& v) const {
  std::vector<int> out(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) out[i] = simple_pairing(v, i);
  return out;
}

std::uint64_t RootDatum::weyl_group_order() const {
  std::uint64_t fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= static_cast<std::uint64_t>(i);
  switch (family) {
    case Family::A: return fact * static_cast<std::uint64_t>(rank + 1);
    case Family::B:
    case Family::C: return fact << rank;
    case Family::D: return fact << (rank - 1);
    case Family::G2: return 12;
  }
  return 0;
}

std::vector<Weight> RootDatum::orbit(const Weight& v) const {
  std::unordered_set<Weight, WeightHash> seen{canon(v)};
  std::deque<Weight> queue{canon(v)};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      if (simple_pairing(cur, i) == 0) continue;
      Weight nxt = simple_reflect(cur, i);
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Reduction RootDatum::to_dominant(const Weight& v) const {
  Weight cur = canon(v);
  int sign = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rank; ++i) {
      if (simple_pairing(cur, i) < 0) {
        cur = simple_reflect(cur, i);
        sign = -sign;
        moved = true;
      }
    }
  }
  return {cur, sign};
}

std::string RootDatum::fundamental_label(const Weight& v) const {
  const auto c = fundamental_coords(v);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    if (c[i] == 0) continue;
    if (!first && c[i] > 0) os << "+";
    if (c[i] == -1)
      os << "-";
    else if (c[i] != 1)
      os << c[i];
    os << "w" << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---- construction ----

namespace {

Weight unit(int dim, int i, int scale = 2) {
  Weight w = Weight::zero(static_cast<std::size_t>(dim));
  w.c2[static_cast<std::size_t>(i)] = scale;
  return w;
}

Weight pair_root(int dim, int i, int j, int sign) {
  Weight w = Weight::zero(static_cast<std::size_t>(dim));
  w.c2[static_cast<std::size_t>(i)] = 2;
  w.c2[static_cast<std::size_t>(j)] = 2 * sign;
  return w;
}

Weight ones_prefix(int dim, int k, int value) {
  Weight w = Weight::zero(static_cast<std::size_t>(dim));
  for (int i = 0; i < k; ++i) w.c2[static_cast<std::size_t>(i)] = value;
  return w;
}

Weight half_sum(const std::vector<Weight>& roots, const std::vector<bool>* mask, int dim) {
  Weight s = Weight::zero(static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (mask == nullptr || (*mask)[k]) s += roots[k];
  for (int& x : s.c2) x /= 2;
  return s;
}

RootDatum build(Family family, int n) {
  RootDatum d;
  d.family = family;
  d.rank = n;
  d.dim = family == Family::A ? n + 1 : (family == Family::G2 ? 3 : n);
  const int m = d.dim;

  if (family == Family::G2) {
    auto w = [](int a, int b, int c) { return Weight({2 * a, 2 * b, 2 * c}); };
    d.positive_roots = {w(1, -1, 0), w(-2, 1, 1), w(-1, 0, 1), w(0, -1, 1), w(1, -2, 1), w(-1, -1, 2)};
    d.root_is_short = {true, false, true, true, false, false};
    d.simple_roots = {w(1, -1, 0), w(-2, 1, 1)};
    d.fundamental_weights = {w(0, -1, 1), w(-1, -1, 2)};
    d.theta = w(-1, -1, 2);
    d.theta_short = w(0, -1, 1);
    d.exponents = {1, 5};
    d.coxeter_number = 6;
    d.num_short_simple = 1;
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        d.positive_roots.push_back(pair_root(m, i, j, -1));
        d.root_is_short.push_back(family == Family::C);
        if (family != Family::A) {
          d.positive_roots.push_back(pair_root(m, i, j, +1));
          d.root_is_short.push_back(family == Family::C);
        }
      }
    if (family == Family::B || family == Family::C)
      for (int i = 0; i < n; ++i) {
        d.positive_roots.push_back(unit(m, i, family == Family::B ? 2 : 4));
        d.root_is_short.push_back(family == Family::B);
      }
    if (family == Family::A || family == Family::D) d.root_is_short.assign(d.positive_roots.size(), true);

    const int chain = family == Family::A ? n : n - 1;
    for (int i = 0; i < chain; ++i) d.simple_roots.push_back(pair_root(m, i, i + 1, -1));
    switch (family) {
      case Family::B: d.simple_roots.push_back(unit(m, n - 1, 2)); break;
      case Family::C: d.simple_roots.push_back(unit(m, n - 1, 4)); break;
      case Family::D:
        if (n >= 2) d.simple_roots.push_back(pair_root(m, n - 2, n - 1, +1));
        break;
      default: break;
    }

    for (int i = 1; i <= n; ++i) d.fundamental_weights.push_back(ones_prefix(m, i, 2));
    if (family == Family::B) d.fundamental_weights[n - 1] = ones_prefix(m, n, 1);
    if (family == Family::D && n >= 2) {
      d.fundamental_weights[n - 1] = ones_prefix(m, n, 1);
      Weight w = ones_prefix(m, n, 1);
      w.c2[n - 1] = -1;
      d.fundamental_weights[n - 2] = w;
    }

    switch (family) {
      case Family::A:
        d.theta = d.canon(pair_root(m, 0, m - 1, -1));
        for (int i = 1; i <= n; ++i) d.exponents.push_back(i);
        d.coxeter_number = n + 1;
        break;
      case Family::B:
        d.theta = n >= 2 ? pair_root(m, 0, 1, +1) : unit(m, 0, 2);
        d.theta_short = unit(m, 0, 2);
        for (int i = 1; i <= n; ++i) d.exponents.push_back(2 * i - 1);
        d.coxeter_number = 2 * n;
        d.num_short_simple = 1;
        break;
      case Family::C:
        d.theta = unit(m, 0, 4);
        if (n >= 2) d.theta_short = pair_root(m, 0, 1, +1);
        for (int i = 1; i <= n; ++i) d.exponents.push_back(2 * i - 1);
        d.coxeter_number = 2 * n;
        d.num_short_simple = n - 1;
        break;
      case Family::D:
        d.theta = pair_root(m, 0, 1, +1);
        for (int i = 1; i < n; ++i) d.exponents.push_back(2 * i - 1);
        d.exponents.push_back(n - 1);
        std::sort(d.exponents.begin(), d.exponents.end());
        d.coxeter_number = 2 * n - 2;
        break;
      default: break;
    }
  }

  d.rho = d.canon(half_sum(d.positive_roots, nullptr, m));
  d.rho_short = d.simply_laced() ? d.rho : d.canon(half_sum(d.positive_roots, &d.root_is_short, m));
  return d;
}

}  // namespace

RootDatum build_root_datum(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) || ((family == Family::B || family == Family::C) && rank >= 2) ||
                  (family == Family::D && rank >= 3) || (family == Family::G2 && rank == 2);
  if (!ok) throw ConfigError("unsupported root datum " + family_name(family) + std::to_string(rank));
  if (rank > 12) throw ConfigError("rank " + std::to_string(rank) + " exceeds the supported maximum 12");
  return build(family, rank);
}

RootDatum build_subsystem_datum(Family family, int rank) {
  if (rank < 1 || family == Family::G2 || family == Family::A) return build_root_datum(family, rank);
  if (family == Family::D && rank < 2) throw ConfigError("D1 is not a root system");
  return build(family, rank);
}

Weight weight_from_fundamental(const RootDatum& d, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != d.rank)
    throw ConfigError("expected " + std::to_string(d.rank) + " fundamental coefficients, got " +
                      std::to_string(coeffs.size()));
  Weight w = Weight::zero(static_cast<std::size_t>(d.dim));
  for (int i = 0; i < d.rank; ++i) w += coeffs[i] * d.fundamental_weights[i];
  return d.canon(std::move(w));
}

std::optional<Reduction> reduce_to_dominant(const RootDatum& d, const Weight& mu) {
  Reduction r = d.to_dominant(mu + d.rho);
  for (int i = 0; i < d.rank; ++i)
    if (d.simple_pairing(r.lambda, i) == 0) return std::nullopt;
  return Reduction{d.canon(r.lambda - d.rho), r.sign};
}

}  // namespace gexp
