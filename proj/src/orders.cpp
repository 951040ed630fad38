#include "gexp/orders.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gexp/errors.hpp"

namespace gexp {

namespace {

void check_same_datum(const RootDatum& d, const Weight& a, const Weight& b) {
  if (static_cast<int>(a.size()) != d.dim || static_cast<int>(b.size()) != d.dim)
    throw ConfigError("weight does not belong to " + d.name());
}

// Nonincreasing doubled vectors with entries in [lo, hi] stepping by 2 from
// the bound's parity; the last D coordinate may be negative.
void box_recurse(const RootDatum& d, const Weight& bound, std::vector<int>& cur, int pos, int hi,
                 std::vector<Weight>& out) {
  const int n = d.rank;
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  const int parity = std::abs(bound.c2[static_cast<std::size_t>(pos)]) % 2;
  const bool last_d = d.family == Family::D && pos == n - 1;
  int lo = last_d ? -hi : 0;
  if ((lo % 2 + 2) % 2 != parity) ++lo;
  for (int v = lo; v <= hi; v += 2) {
    cur[static_cast<std::size_t>(pos)] = v;
    box_recurse(d, bound, cur, pos + 1, last_d ? hi : v, out);
  }
}

}  // namespace

OrderReport compare_weights(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  check_same_datum(d, mu, lambda);
  OrderReport r;
  r.mu = mu;
  r.lambda = lambda;
  Weight diff = d.canon(lambda - mu);
  r.partial_sums2.resize(diff.size());
  std::partial_sum(diff.c2.begin(), diff.c2.end(), r.partial_sums2.begin());
  r.parity_ok = std::all_of(diff.c2.begin(), diff.c2.end(), [](int x) { return x % 2 == 0; });
  if (r.parity_ok && (d.family == Family::C || d.family == Family::D)) r.parity_ok = r.partial_sums2.back() % 4 == 0;
  r.dominance_leq = dominance_leq(d, mu, lambda);
  r.coordinatewise_leq = coordinatewise_leq(mu, lambda);
  return r;
}

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  check_same_datum(d, mu, lambda);
  auto c = d.simple_coords(d.canon(lambda - mu));
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

bool coordinatewise_leq(const Weight& mu, const Weight& lambda) {
  if (mu.size() != lambda.size()) throw ConfigError("coordinatewise order: length mismatch");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (lambda.c2[i] < mu.c2[i]) return false;
    if (std::abs(lambda.c2[i]) < std::abs(mu.c2[i])) return false;
  }
  return true;
}

std::vector<Weight> enumerate_by_root_descent(const RootDatum& d, const Weight& bound) {
  if (!d.is_dominant(bound)) throw ConfigError("bound " + bound.to_string() + " is not dominant");
  std::unordered_set<Weight, WeightHash> seen{bound};
  std::deque<Weight> queue{bound};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : d.positive_roots) {
      Weight nxt = d.canon(cur - a);
      if (!d.is_dominant(nxt)) continue;
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> enumerate_dominant_below(const RootDatum& d, const Weight& bound, BelowFilter filter) {
  if (static_cast<int>(bound.size()) != d.dim) throw ConfigError("bound does not belong to " + d.name());
  if (!d.is_dominant(bound)) throw ConfigError("bound " + bound.to_string() + " is not dominant");

  std::vector<Weight> below;
  if (d.family == Family::B || d.family == Family::C || d.family == Family::D) {
    // Every dominant mu <= bound has mu_1 <= bound_1, which caps all coordinates.
    std::vector<Weight> box;
    std::vector<int> cur(static_cast<std::size_t>(d.rank), 0);
    box_recurse(d, bound, cur, 0, bound.c2[0], box);
    for (auto& w : box)
      if (d.is_dominant(w) && dominance_leq(d, w, bound)) below.push_back(std::move(w));
    std::sort(below.begin(), below.end());
  } else {
    below = enumerate_by_root_descent(d, bound);
  }

  std::vector<Weight> out;
  for (auto& w : below) {
    bool keep = true;
    if (filter == BelowFilter::dominance_and_coordinatewise) keep = coordinatewise_leq(w, bound);
    if (filter == BelowFilter::small) keep = is_small(d, w);
    if (keep) out.push_back(std::move(w));
  }
  return out;
}

bool is_small(const RootDatum& d, const Weight& lambda) {
  if (!d.in_root_lattice(lambda)) return false;
  if (dominance_leq(d, d.canon(2 * d.theta), lambda)) return false;
  if (d.theta_short && dominance_leq(d, d.canon(2 * *d.theta_short), lambda)) return false;
  return true;
}

DeltaI two_rho_minus_delta(const RootDatum& d, const std::vector<int>& I) {
  std::set<int> idx;
  for (int i : I) {
    if (i < 1 || i > d.rank) throw ConfigError("simple root index " + std::to_string(i) + " out of range");
    idx.insert(i - 1);
  }
  Weight w = 2 * d.rho;
  for (int i : idx) w -= d.simple_roots[static_cast<std::size_t>(i)];

  // Components of the induced Dynkin subgraph, by union-find on the index set.
  std::vector<int> parent(static_cast<std::size_t>(d.rank));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(idx.size());
  for (int i : idx)
    for (int j : idx)
      if (i < j && d.form(d.simple_roots[i], d.simple_roots[j]) != 0) {
        int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
  return {d.canon(std::move(w)), components};
}

}  // namespace gexp
