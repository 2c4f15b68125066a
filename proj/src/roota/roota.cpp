#include "macd/roota.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace macd {

namespace {

void check_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw RankError("rank mismatch: " + a.to_string() + " vs " + b.to_string());
}

int raw_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Partitions of `total` into at most `parts` parts, as weakly decreasing
// vectors of length `parts`.
void partitions(int total, int parts, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const int remaining = parts - static_cast<int>(cur.size());
  for (int p = std::min(total, max_part); p >= 0; --p) {
    if (p * remaining < total) break;
    cur.push_back(p);
    partitions(total - p, parts, p, cur, out);
    cur.pop_back();
  }
}

// Partial sums of lam - mu over the first n-1 coordinates, after shifting mu
// to the coordinate sum of lam.  Empty when the cosets differ.
std::vector<int> simple_root_coefficients(const Weight& mu, const Weight& lam) {
  const int n = lam.rank();
  const int diff = lam.size() - mu.size();
  if (diff % n != 0) return {};
  const int shift = diff / n;
  std::vector<int> partial;
  int acc = 0;
  for (int i = 0; i + 1 < n; ++i) {
    acc += lam[i] - (mu[i] + shift);
    partial.push_back(acc);
  }
  return partial;
}

}  // namespace

Weight::Weight(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw RankError("weight needs at least one coordinate");
  canonicalize();
}

void Weight::canonicalize() {
  const int last = coords_.back();
  if (last != 0)
    for (auto& c : coords_) c -= last;
}

Weight Weight::root(int n, int i, int j) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] += 1;
  v[static_cast<std::size_t>(j)] -= 1;
  return Weight(std::move(v));
}

Weight Weight::fundamental(int n, int r) {
  if (r < 0 || r > n) throw PreconditionError("fundamental weight index out of range");
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::fill(v.begin(), v.begin() + r, 1);
  return Weight(std::move(v));
}

Weight Weight::parse(std::string_view text) {
  std::vector<int> v;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw ParseError("malformed weight '" + std::string(text) + "'");
    v.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(v));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>());
}

int Weight::size() const { return raw_sum(coords_); }

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords_) c = -c;
  w.canonicalize();
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  canonicalize();
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  canonicalize();
  return *this;
}

Weight operator*(int c, const Weight& w) {
  Weight r = w;
  for (auto& x : r.coords_) x *= c;
  return r;
}

Weight Weight::permuted(const std::vector<int>& perm) const {
  std::vector<int> v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[static_cast<std::size_t>(perm[i])];
  return Weight(std::move(v));
}

Fraction pairing(const Weight& a, const Weight& b) {
  check_same_rank(a, b);
  std::int64_t dot = 0;
  for (int i = 0; i < a.rank(); ++i) dot += static_cast<std::int64_t>(a[i]) * b[i];
  const std::int64_t n = a.rank();
  return Fraction(dot * n - static_cast<std::int64_t>(a.size()) * b.size(), n);
}

bool dominance_leq(const Weight& mu, const Weight& lam) {
  check_same_rank(mu, lam);
  if (mu.rank() == 1) return true;
  const auto partial = simple_root_coefficients(mu, lam);
  if (partial.empty()) return false;
  return std::all_of(partial.begin(), partial.end(), [](int s) { return s >= 0; });
}

int height_difference(const Weight& mu, const Weight& lam) {
  const auto partial = simple_root_coefficients(mu, lam);
  return std::accumulate(partial.begin(), partial.end(), 0);
}

RootData::RootData(int n_) : n(n_), rho(Weight::zero(n_)) {
  if (n < 2) throw PreconditionError("root system A_{n-1} needs n >= 2");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positive_roots.push_back(Weight::root(n, i, j));
  for (int i = 0; i + 1 < n; ++i) simple_roots.push_back(Weight::root(n, i, i + 1));
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - 1 - i;
  rho = Weight(std::move(r));
}

std::vector<Weight> RootData::roots() const {
  std::vector<Weight> all = positive_roots;
  for (const auto& a : positive_roots) all.push_back(-a);
  return all;
}

const RootData& root_data(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<RootData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RootData>(n);
  return *slot;
}

std::vector<Weight> dominant_below(const Weight& lam) {
  if (!lam.is_dominant()) throw PreconditionError("dominant_below: " + lam.to_string() + " is not dominant");
  const int n = lam.rank();
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(lam.size(), n, lam.size(), cur, parts);
  std::vector<Weight> out;
  for (auto& p : parts) {
    Weight mu(std::move(p));
    if (dominance_leq(mu, lam)) out.push_back(std::move(mu));
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    const int ha = height_difference(a, lam);
    const int hb = height_difference(b, lam);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<Weight> weyl_orbit(const Weight& lam) {
  std::vector<int> v = lam.coords();
  std::sort(v.begin(), v.end());
  std::set<Weight> seen;
  do {
    seen.insert(Weight(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return {seen.begin(), seen.end()};
}

std::vector<Weight> lambda_r_weights(int n, int r) {
  if (n < 2 || r < 1 || r > n - 1)
    throw PreconditionError("exterior power index r=" + std::to_string(r) +
                            " out of range for n=" + std::to_string(n));
  std::vector<Weight> out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  // prev_permutation from 1..10..0 walks subsets in lexicographic order
  do {
    out.emplace_back(mask);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

Weight dominant_of(const Weight& w) {
  std::vector<int> v = w.coords();
  std::sort(v.begin(), v.end(), std::greater<>());
  return Weight(std::move(v));
}

std::vector<Weight> dominant_weights_up_to(int n, int max_size) {
  std::vector<Weight> out;
  for (int s = 0; s <= max_size; ++s) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(s, n - 1, s, cur, parts);
    for (auto& p : parts) {
      p.push_back(0);
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

}  // namespace macd
