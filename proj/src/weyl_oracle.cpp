#include "gexp/weyl_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gexp/errors.hpp"
#include "gexp/orders.hpp"

namespace gexp {

namespace {

void require_dominant(const RootDatum& d, const Weight& w) {
  if (static_cast<int>(w.size()) != d.dim || !d.is_dominant(w))
    throw ConfigError(w.to_string() + " is not a dominant weight of " + d.name());
}

int height(const RootDatum& d, const Weight& beta) {
  auto c = d.simple_coords(beta);
  if (!c) throw InternalError("height of a non-root-lattice vector");
  return std::accumulate(c->begin(), c->end(), 0);
}

std::mutex cache_mutex;
std::map<std::pair<std::string, Weight>, WeightMultMap> dominant_cache;

WeightMultMap compute_dominant_character(const RootDatum& d, const Weight& lambda) {
  std::vector<Weight> dom = enumerate_dominant_below(d, lambda);
  std::stable_sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    return height(d, d.canon(lambda - a)) < height(d, d.canon(lambda - b));
  });

  const Weight lr = lambda + d.rho;
  const std::int64_t top = d.form(lr, lr);
  WeightMultMap mult;
  for (const Weight& mu : dom) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (const Weight& a : d.positive_roots) {
      for (int k = 1;; ++k) {
        Weight up = d.canon(mu + k * a);
        Weight rep = d.to_dominant(up).lambda;
        auto it = mult.find(rep);
        if (it == mult.end()) break;
        acc += it->second * d.form(up, a);
      }
    }
    const Weight mr = mu + d.rho;
    const std::int64_t den = top - d.form(mr, mr);
    if (den <= 0 || (2 * acc) % den != 0)
      throw InternalError("Freudenthal recursion not integral at " + mu.to_string() + " in V" + lambda.to_string());
    const std::int64_t m = 2 * acc / den;
    if (m <= 0) throw InternalError("nonpositive multiplicity at " + mu.to_string());
    mult[mu] = m;
  }
  return mult;
}

}  // namespace

WeightMultMap dominant_character(const RootDatum& d, const Weight& lambda, const OracleCaps&) {
  require_dominant(d, lambda);
  const auto key = std::make_pair(d.name(), lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = dominant_cache.find(key);
    if (it != dominant_cache.end()) return it->second;
  }
  WeightMultMap mult = compute_dominant_character(d, lambda);
  std::lock_guard<std::mutex> lock(cache_mutex);
  dominant_cache.emplace(key, mult);
  return mult;
}

WeightMultMap freudenthal(const RootDatum& d, const Weight& lambda, const OracleCaps& caps) {
  const WeightMultMap dom = dominant_character(d, lambda, caps);
  WeightMultMap all;
  for (const auto& [mu, m] : dom) {
    for (const Weight& w : d.orbit(mu)) all.emplace(w, m);
    if (all.size() > caps.max_weights)
      throw ResourceError("weight system of V" + lambda.to_string() + " exceeds " + std::to_string(caps.max_weights) +
                          " weights");
  }
  return all;
}

std::int64_t weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  const WeightMultMap dom = dominant_character(d, lambda);
  auto it = dom.find(d.to_dominant(mu).lambda);
  return it == dom.end() ? 0 : it->second;
}

std::int64_t weyl_dim(const RootDatum& d, const Weight& lambda) {
  require_dominant(d, lambda);
  const Weight lr = lambda + d.rho;
  __int128 num = 1, den = 1;
  for (const Weight& a : d.positive_roots) {
    num *= d.form(lr, a);
    den *= d.form(d.rho, a);
    __int128 x = num < 0 ? -num : num, y = den;
    while (y != 0) {
      __int128 r = x % y;
      x = y;
      y = r;
    }
    if (x > 1) {
      num /= x;
      den /= x;
    }
  }
  if (den != 1) throw InternalError("Weyl dimension not integral");
  return static_cast<std::int64_t>(num);
}

Decomposition klimyk_tensor_over_second(const RootDatum& d, const Weight& lambda, const Weight& mu,
                                        const OracleCaps& caps) {
  require_dominant(d, lambda);
  require_dominant(d, mu);
  Decomposition out;
  for (const auto& [nu, m] : freudenthal(d, mu, caps)) {
    auto r = reduce_to_dominant(d, d.canon(lambda + nu));
    if (!r) continue;
    out[r->lambda] += r->sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw InternalError("negative tensor multiplicity at " + it->first.to_string());
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

Decomposition klimyk_tensor(const RootDatum& d, const Weight& lambda, const Weight& mu, const OracleCaps& caps) {
  if (weyl_dim(d, lambda) < weyl_dim(d, mu)) return klimyk_tensor_over_second(d, mu, lambda, caps);
  return klimyk_tensor_over_second(d, lambda, mu, caps);
}

namespace {

// Graded partition counts for every beta in the box 0 <= c <= bound (simple
// coordinates), filled root by root as an unbounded knapsack.
class KostantBox {
 public:
  KostantBox(const RootDatum& d, const std::vector<int>& bound) : bound_(bound) {
    std::size_t size = 1;
    for (int b : bound_) size *= static_cast<std::size_t>(b + 1);
    table_.assign(size, PolyT());
    table_[0] = PolyT(1);
    std::vector<std::vector<int>> roots;
    for (const Weight& a : d.positive_roots) roots.push_back(*d.simple_coords(a));
    std::vector<int> x(bound_.size());
    for (const auto& a : roots) {
      if (!fits(a)) continue;
      for (std::size_t idx = 0; idx < size; ++idx) {
        unpack(idx, x);
        bool ok = true;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x[i] < a[i]) ok = false;
        if (!ok) continue;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a[i];
        const PolyT& prev = table_[pack(x)];
        if (!prev.is_zero()) table_[idx] += prev.shifted(1);
      }
    }
  }

  const PolyT& at(const std::vector<int>& c) const {
    static const PolyT zero;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] < 0 || c[i] > bound_[i]) return zero;
    return table_[pack(c)];
  }

 private:
  bool fits(const std::vector<int>& a) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > bound_[i]) return false;
    return true;
  }
  std::size_t pack(const std::vector<int>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx = idx * static_cast<std::size_t>(bound_[i] + 1) + static_cast<std::size_t>(c[i]);
    return idx;
  }
  void unpack(std::size_t idx, std::vector<int>& c) const {
    for (std::size_t i = c.size(); i-- > 0;) {
      const auto base = static_cast<std::size_t>(bound_[i] + 1);
      c[i] = static_cast<int>(idx % base);
      idx /= base;
    }
  }

  std::vector<int> bound_;
  std::vector<PolyT> table_;
};

}  // namespace

PolyT q_kostant(const RootDatum& d, const Weight& beta) {
  auto c = d.simple_coords(d.canon(beta));
  if (!c) return PolyT();
  for (int x : *c)
    if (x < 0) return PolyT();
  KostantBox box(d, *c);
  return box.at(*c);
}

PolyT lusztig_E(const RootDatum& d, const Weight& lambda, const OracleCaps& caps) {
  require_dominant(d, lambda);
  if (d.weyl_group_order() > caps.max_group_order)
    throw ResourceError("|W| = " + std::to_string(d.weyl_group_order()) + " exceeds the cap " +
                        std::to_string(caps.max_group_order));
  auto top = d.simple_coords(lambda);
  if (!top) throw ConfigError(lambda.to_string() + " is not in the root lattice");
  KostantBox box(d, *top);
  PolyT e;
  for (const Weight& v : d.orbit(lambda + d.rho)) {
    auto c = d.simple_coords(d.canon(v - d.rho));
    if (!c) continue;
    const PolyT& p = box.at(*c);
    if (p.is_zero()) continue;
    e += d.to_dominant(v).sign * p;
  }
  return e;
}

}  // namespace gexp
