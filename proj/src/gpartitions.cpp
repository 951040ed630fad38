#include "gexp/gpartitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gexp/errors.hpp"

namespace gexp {

// ---- GPartition ----

GPartition::GPartition(int rank) : n(rank), flat(static_cast<std::size_t>(rank * rank), 0) {}

GPartition GPartition::from_flat(int rank, std::vector<int> values) {
  if (values.size() != static_cast<std::size_t>(rank * rank))
    throw ConfigError("partition needs " + std::to_string(rank * rank) + " entries, got " +
                      std::to_string(values.size()));
  GPartition p(rank);
  p.flat = std::move(values);
  return p;
}

std::size_t GPartition::pair_index(int n, int i, int j) {
  if (i < 1 || j <= i || j > n) throw InternalError("pair index out of range");
  // pairs (i, j) before row i: sum over rows h < i of (n - h)
  int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::size_t>(2 * (before + (j - i - 1)));
}

int GPartition::m(int i, int j) const {
  if (i < 1 || j <= i || j > n) return 0;
  return flat[pair_index(n, i, j)];
}

int GPartition::mp(int i, int j) const {
  if (i < 1 || j <= i || j > n) return 0;
  return flat[pair_index(n, i, j) + 1];
}

int GPartition::ms(int i) const {
  if (i < 1 || i > n) return 0;
  return flat[static_cast<std::size_t>(n * (n - 1) + i - 1)];
}

std::string GPartition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < flat.size(); ++k) os << (k ? "," : "") << flat[k];
  os << "]";
  return os.str();
}

bool is_valid_partition(Family f, const GPartition& p) {
  if (f != Family::B && f != Family::C && f != Family::D) return false;
  if (p.flat.size() != static_cast<std::size_t>(p.n * p.n)) return false;
  for (int v : p.flat)
    if (v < 0) return false;
  for (int i = 1; i <= p.n; ++i) {
    if (f == Family::C && p.ms(i) % 2 != 0) return false;
    if (f == Family::D && p.ms(i) != 0) return false;
  }
  return true;
}

Weight weight_of(const GPartition& p) {
  std::vector<int> c(static_cast<std::size_t>(p.n), 0);
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      c[i - 1] += p.m(i, j) + p.mp(i, j);
      c[j - 1] += p.mp(i, j) - p.m(i, j);
    }
    c[i - 1] += p.ms(i);
  }
  for (int& v : c) v *= 2;
  return Weight(std::move(c));
}

std::string TIndex::to_string() const { return std::to_string(value) + (bar ? "bar" : ""); }

std::string FormKey::to_string() const {
  switch (kind) {
    case FormKind::L: return "L_" + std::to_string(j) + "^" + t.to_string();
    case FormKind::N0: return "N_" + std::to_string(j) + "^(" + t.to_string() + ",0)";
    case FormKind::N1: return "N_" + std::to_string(j) + "^(" + t.to_string() + ",1)";
  }
  return "?";
}

std::int64_t LinearForm::eval_scaled(const std::vector<int>& flat) const {
  std::int64_t s = 0;
  for (auto [idx, c] : terms) s += static_cast<std::int64_t>(c) * flat[static_cast<std::size_t>(idx)];
  return s;
}

std::int64_t LinearForm::eval(const std::vector<int>& flat) const {
  std::int64_t s = eval_scaled(flat);
  if (s % den != 0) throw InternalError("form value is not integral");
  return s / den;
}

// ---- form construction ----

namespace {

// Sparse linear expression over flat indices.
struct Ex {
  std::map<int, int> c;
  Ex& operator+=(const Ex& o) {
    for (auto [k, v] : o.c) c[k] += v;
    return *this;
  }
  Ex& operator-=(const Ex& o) {
    for (auto [k, v] : o.c) c[k] -= v;
    return *this;
  }
  friend Ex operator+(Ex a, const Ex& b) { return a += b; }
  friend Ex operator-(Ex a, const Ex& b) { return a -= b; }
  friend Ex operator*(int k, Ex a) {
    for (auto& [i, v] : a.c) v *= k;
    return a;
  }
  LinearForm to_form(int den = 1) const {
    LinearForm f;
    f.den = den;
    for (auto [k, v] : c)
      if (v != 0) f.terms.emplace_back(k, v);
    return f;
  }
};

struct Vars {
  int n;
  Ex var(std::size_t idx) const {
    Ex e;
    e.c[static_cast<int>(idx)] = 1;
    return e;
  }
  Ex m(int i, int j) const { return (i >= 1 && i < j && j <= n) ? var(GPartition::pair_index(n, i, j)) : Ex{}; }
  Ex mp(int i, int j) const {
    return (i >= 1 && i < j && j <= n) ? var(GPartition::pair_index(n, i, j) + 1) : Ex{};
  }
  Ex ms(int i) const {
    return (i >= 1 && i <= n) ? var(static_cast<std::size_t>(n * (n - 1) + i - 1)) : Ex{};
  }
  Ex M(int i, int j) const { return m(i, j) - mp(i, j); }
  Ex N(int i) const { return ms(i) - ms(i + 1); }
  Ex R(int i, int j) const { return mp(i, j) - mp(i + 1, j); }
  Ex S(int i, int j) const { return m(i, j) - m(i + 1, j) + mp(i, j) - mp(i + 1, j); }
};

bool is_bcd(Family f) { return f == Family::B || f == Family::C || f == Family::D; }

// Largest j carrying N forms (beyond the j = n and j = n-1 specials in D).
int last_n_row(Family f, int n) { return f == Family::D ? n - 2 : n - 1; }

// Order keys for the admissible t of each form, inclusive ranges.
int last_n0_key(Family f, int n) { return f == Family::D ? 2 * (n - 1) : 2 * n; }

}  // namespace

std::map<FormKey, LinearForm> bz_forms(Family f, int n) {
  if (!is_bcd(f)) throw ConfigError("partition forms exist only for B, C, D");
  Vars V{n};
  std::map<FormKey, LinearForm> out;

  // L_j for j < n
  for (int j = 1; j <= n - 1; ++j) {
    for (int v = 0; v <= j - 1; ++v) {
      Ex e;
      for (int i = 1; i <= v; ++i) e += V.M(i, j + 1) - V.M(i, j);
      e += V.m(v + 1, j + 1);
      out[{FormKind::L, j, {v, true}}] = e.to_form();
      if (v >= 1) {
        Ex u;
        for (int i = 1; i <= v - 1; ++i) u += V.M(i, j + 1) - V.M(i, j);
        u -= V.M(v, j);
        u += V.m(v, j + 1);
        out[{FormKind::L, j, {v, false}}] = u.to_form();
      }
    }
  }

  // L_n
  if (f == Family::D) {
    for (int v = 0; v <= n - 2; ++v) {
      Ex e;
      for (int i = 1; i <= v; ++i) e -= V.M(i, n) + V.M(i, n - 1);
      e += V.mp(v + 1, n);
      out[{FormKind::L, n, {v, true}}] = e.to_form();
      if (v >= 1) {
        Ex u;
        for (int i = 1; i <= v - 1; ++i) u -= V.M(i, n);
        for (int i = 1; i <= v; ++i) u -= V.M(i, n - 1);
        u += V.mp(v, n);
        out[{FormKind::L, n, {v, false}}] = u.to_form();
      }
    }
  } else {
    // B: -2 sum M(i,n) + m_s ; C: (-2 sum M(i,n) + m_s) / 2
    const int den = f == Family::C ? 2 : 1;
    for (int v = 0; v <= n - 1; ++v) {
      Ex sum;
      for (int i = 1; i <= v; ++i) sum += V.M(i, n);
      out[{FormKind::L, n, {v, true}}] = ((-2) * sum + V.ms(v + 1)).to_form(den);
      if (v >= 1) out[{FormKind::L, n, {v, false}}] = ((-2) * sum + V.ms(v)).to_form(den);
    }
  }

  // N forms for the generic rows
  for (int j = 1; j <= last_n_row(f, n); ++j) {
    auto rsum = [&](int hi) {
      Ex e;
      for (int l = j + 1; l <= hi; ++l) e += V.R(j, l + 1);
      return e;
    };
    auto ssum = [&](int lo) {
      Ex e;
      for (int l = lo; l <= n - 1; ++l) e += V.S(j, l + 1);
      return e;
    };
    const Ex head = V.mp(j, j + 1);
    for (int key = 2 * j + 1; key <= last_n0_key(f, n); ++key) {
      const int v = key / 2;
      const bool bar = key % 2 == 1;
      Ex e = head;
      if (bar) {
        e += rsum(v);
      } else if (v < n) {
        e += rsum(v - 1) + V.mp(j, v + 1) - V.m(j + 1, v + 1);
      } else {
        e += rsum(n - 1) + V.N(j);
      }
      out[{FormKind::N0, j, {v, bar}}] = e.to_form();
    }
    for (int key = 2 * j + 2; key <= 2 * n; ++key) {
      const int v = key / 2;
      const bool bar = key % 2 == 1;
      Ex e = head + V.N(j) + rsum(v - 1) + ssum(v);
      if (!bar) e += V.M(j, v);
      out[{FormKind::N1, j, {v, bar}}] = e.to_form();
    }
  }

  // N_n^(n,1), and N_{n-1}^(n,1) in D
  if (f == Family::B) out[{FormKind::N1, n, {n, false}}] = V.ms(n).to_form();
  if (f == Family::C) out[{FormKind::N1, n, {n, false}}] = V.ms(n).to_form(2);
  if (f == Family::D) {
    out[{FormKind::N1, n, {n, false}}] = V.mp(n - 1, n).to_form();
    const int j = n - 1;
    out[{FormKind::N1, j, {n, false}}] = (V.mp(j, j + 1) + V.N(j) + V.M(j, n)).to_form();
  }
  return out;
}

std::map<FormKey, LinearForm> bz_forms_from_deltas(Family f, int n) {
  if (!is_bcd(f)) throw ConfigError("partition forms exist only for B, C, D");
  Vars V{n};
  // Delta between two indices of 0bar < 1 < 1bar < ... ; a mixed pair reads
  // mp(i,j+1) - m(i+1,j+1) below the last column and m_i - m_{i+1} on it.
  auto mixed = [&](int i, int j) { return j < n ? V.mp(i, j + 1) - V.m(i + 1, j + 1) : V.N(i); };
  auto delta = [&](TIndex a, TIndex b) -> Ex {
    if (!a.bar && !b.bar) return a.value < b.value ? V.M(a.value, b.value) : Ex{};
    if (a.bar && b.bar) return V.M(a.value + 1, b.value + 1);
    return mixed(a.value, b.value);
  };
  auto index_at = [](int key) { return TIndex{key / 2, key % 2 == 1}; };

  std::map<FormKey, LinearForm> out;
  for (int j = 1; j <= n - 1; ++j) {
    const TIndex tj{j, false};
    for (int key = 1; key < 2 * j; ++key) {
      Ex e;
      for (int s = 1; s <= key; ++s) e -= delta(index_at(s), tj);
      out[{FormKind::L, j, index_at(key)}] = e.to_form();
    }
  }
  for (int j = 1; j <= last_n_row(f, n); ++j) {
    const TIndex jb{j, true};
    auto n0 = [&](int key) {
      Ex e = delta(jb, TIndex{j, false});
      for (int s = 2 * (j + 1); s <= key; ++s) e += delta(jb, index_at(s));
      return e;
    };
    for (int key = 2 * j + 1; key <= last_n0_key(f, n); ++key) out[{FormKind::N0, j, index_at(key)}] = n0(key).to_form();
    const Ex top = n0(2 * n);
    for (int key = 2 * j + 2; key <= 2 * n; ++key) {
      Ex e = top;
      for (int s = key; s <= 2 * n; ++s) e += delta(TIndex{j, false}, index_at(s));
      out[{FormKind::N1, j, index_at(key)}] = e.to_form();
    }
  }
  return out;
}

FormValues evaluate_forms(const RootDatum& d, const GPartition& p) {
  if (p.n != d.rank) throw ConfigError("partition rank does not match the root datum");
  FormValues out;
  for (const auto& [k, form] : bz_forms(d.family, d.rank)) out[k] = form.eval(p.flat);
  return out;
}

int aux_M(const GPartition& p, int i, int j) { return p.m(i, j) - p.mp(i, j); }
int aux_N(const GPartition& p, int i) { return p.ms(i) - p.ms(i + 1); }
int aux_R(const GPartition& p, int i, int j) { return p.mp(i, j) - p.mp(i + 1, j); }
int aux_S(const GPartition& p, int i, int j) { return p.m(i, j) - p.m(i + 1, j) + p.mp(i, j) - p.mp(i + 1, j); }

namespace {

int form_bound(const FormKey& k, const std::vector<int>& a, const std::vector<int>& b) {
  const auto& v = k.kind == FormKind::L ? a : b;
  return v[static_cast<std::size_t>(k.j - 1)];
}

}  // namespace

bool is_admissible(const RootDatum& d, const GPartition& p, const std::vector<int>& a, const std::vector<int>& b) {
  if (p.n != d.rank || !is_valid_partition(d.family, p)) return false;
  if (a.size() != static_cast<std::size_t>(d.rank) || b.size() != static_cast<std::size_t>(d.rank))
    throw ConfigError("bound vectors must have one entry per fundamental weight");
  for (const auto& [k, form] : bz_forms(d.family, d.rank))
    if (form.eval_scaled(p.flat) > static_cast<std::int64_t>(form_bound(k, a, b)) * form.den) return false;
  return true;
}

// ---- counting ----

namespace {

class LRSearch {
 public:
  LRSearch(const RootDatum& d, std::vector<int> target, const std::vector<int>& a, const std::vector<int>& b,
           bool keep)
      : n_(d.rank), family_(d.family), target_(std::move(target)), cur_(n_), keep_(keep) {
    // Visit order: row i's pair variables, then its single.
    std::vector<int> pos(static_cast<std::size_t>(n_ * n_), 0);
    int p = 0;
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        std::size_t idx = GPartition::pair_index(n_, i, j);
        pos[idx] = p++;
        pos[idx + 1] = p++;
      }
      pos[static_cast<std::size_t>(n_ * (n_ - 1) + i - 1)] = p++;
    }
    checks_.resize(static_cast<std::size_t>(n_ * n_));
    forms_ = bz_forms(family_, n_);
    for (const auto& [k, form] : forms_) {
      int last = 0;
      for (auto [idx, c] : form.terms) last = std::max(last, pos[static_cast<std::size_t>(idx)]);
      checks_[static_cast<std::size_t>(last)].push_back(
          {&form, static_cast<std::int64_t>(form_bound(k, a, b)) * form.den});
    }
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        std::size_t idx = GPartition::pair_index(n_, i, j);
        order_.push_back({idx, pos[idx]});
        order_.push_back({idx + 1, pos[idx + 1]});
      }
    }
  }

  LRCount run() {
    row(1);
    if (keep_) std::sort(result_.witnesses.begin(), result_.witnesses.end());
    return std::move(result_);
  }

 private:
  struct Check {
    const LinearForm* form;
    std::int64_t limit;
  };
  struct Slot {
    std::size_t flat;
    int pos;
  };

  bool checks_pass(int pos) const {
    for (const Check& c : checks_[static_cast<std::size_t>(pos)])
      if (c.form->eval_scaled(cur_.flat) > c.limit) return false;
    return true;
  }

  // first slot of row i within order_
  std::size_t row_start(int i) const {
    std::size_t k = 0;
    for (int h = 1; h < i; ++h) k += static_cast<std::size_t>(2 * (n_ - h));
    return k;
  }

  void row(int i) {
    if (i > n_) {
      ++result_.count;
      if (keep_) result_.witnesses.push_back(cur_);
      return;
    }
    int r = target_[static_cast<std::size_t>(i - 1)];
    for (int h = 1; h < i; ++h) r -= cur_.mp(h, i) - cur_.m(h, i);
    if (r < 0) return;
    const std::size_t begin = row_start(i);
    const std::size_t end = begin + static_cast<std::size_t>(2 * (n_ - i));
    slot(i, begin, end, r);
  }

  void slot(int i, std::size_t k, std::size_t end, int left) {
    if (k == end) {
      if (family_ == Family::C && left % 2 != 0) return;
      if (family_ == Family::D && left != 0) return;
      cur_.ms(i) = left;
      if (checks_pass(single_pos(i))) row(i + 1);
      cur_.ms(i) = 0;
      return;
    }
    const Slot s = order_[k];
    for (int v = 0; v <= left; ++v) {
      cur_.flat[s.flat] = v;
      if (checks_pass(s.pos)) slot(i, k + 1, end, left - v);
    }
    cur_.flat[s.flat] = 0;
  }

  int single_pos(int i) const {
    // row h occupies 2(n-h) + 1 positions
    int p = 0;
    for (int h = 1; h < i; ++h) p += 2 * (n_ - h) + 1;
    return p + 2 * (n_ - i);
  }

  int n_;
  Family family_;
  std::vector<int> target_;
  GPartition cur_;
  bool keep_;
  std::map<FormKey, LinearForm> forms_;
  std::vector<std::vector<Check>> checks_;
  std::vector<Slot> order_;
  LRCount result_;
};

}  // namespace

LRCount count_lr(const RootDatum& d, const Weight& lambda, const Weight& mu, const Weight& nu, bool keep_witnesses) {
  if (!is_bcd(d.family)) throw ConfigError("partition counting is defined for B, C, D only");
  for (const Weight* w : {&lambda, &mu, &nu}) {
    if (w->size() != static_cast<std::size_t>(d.dim)) throw ConfigError("weight length does not match rank");
    if (!d.is_integral_weight(*w) || !d.is_dominant(*w))
      throw ConfigError("weight " + w->to_string() + " is not dominant integral");
  }
  const Weight diff = lambda + mu - nu;
  std::vector<int> target;
  for (int c : diff.c2) {
    if (c % 2 != 0) return {};
    target.push_back(c / 2);
  }
  LRSearch search(d, std::move(target), d.fundamental_coords(lambda), d.fundamental_coords(mu), keep_witnesses);
  return search.run();
}

}  // namespace gexp
