#pragma once

// Brute-force recount of the configuration numbers directly from their
// definition in the symmetric group S^d: tuples (p1, p2, t_1, ..., t_k),
// k = 2g - 2, with p1 p2 p1^-1 p2^-1 t_1 ... t_k = id and every t_i a
// transposition (s_i t_i), s_i < t_i. Optional filters:
//   monotone   - larger elements weakly increase along the sequence
//   transitive - the generated group has a single orbit on {1..d}
//
// Monotone counts reproduce H (disconnected) and F (transitive); unrestricted
// counts reproduce B and C.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cuegenus/exact.hpp"

namespace cuegenus {

/// Raised when a brute-force request exceeds what the oracle will enumerate.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection of {1..d}. Stored 0-based; one-line notation at the interface is 1-based.
class Permutation {
 public:
  explicit Permutation(int d) : images_(static_cast<std::size_t>(d)) {
    if (d < 0) throw std::invalid_argument("negative permutation degree");
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Permutation from_one_line(const std::vector<int>& one_based) {
    Permutation p(static_cast<int>(one_based.size()));
    std::vector<bool> seen(one_based.size(), false);
    for (std::size_t i = 0; i < one_based.size(); ++i) {
      const int v = one_based[i] - 1;
      if (v < 0 || v >= static_cast<int>(one_based.size()) || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("not a permutation in one-line notation");
      }
      seen[static_cast<std::size_t>(v)] = true;
      p.images_[i] = v;
    }
    return p;
  }

  static Permutation transposition(int d, int s, int t) {
    if (s < 1 || t < 1 || s > d || t > d || s == t) {
      throw std::invalid_argument("bad transposition");
    }
    Permutation p(d);
    std::swap(p.images_[static_cast<std::size_t>(s - 1)], p.images_[static_cast<std::size_t>(t - 1)]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of i (1-based).
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }

  std::vector<int> one_line() const {
    std::vector<int> v;
    for (int x : images_) v.push_back(x + 1);
    return v;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    Permutation r(a.degree());
    for (std::size_t i = 0; i < a.images_.size(); ++i) {
      r.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    }
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return r;
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
    }
    return cycles;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct ConfigCountQuery {
  int d = 1;
  int g = 1;
  bool monotone = true;
  bool transitive = false;
};

namespace detail {

inline constexpr int kMaxOracleDegree = 7;
using Perm = std::array<std::int8_t, kMaxOracleDegree>;

struct TinyUnionFind {
  std::array<std::int8_t, kMaxOracleDegree> parent{};
  int components = 0;

  explicit TinyUnionFind(int d) : components(d) {
    for (int i = 0; i < d; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    --components;
  }
};

class ConfigEnumerator {
 public:
  ConfigEnumerator(int d, int k, bool monotone, bool transitive)
      : d_(d), k_(k), monotone_(monotone), transitive_(transitive) {
    Perm p{};
    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    do {
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    for (int t = 1; t < d; ++t) {
      for (int s = 0; s < t; ++s) transpositions_.push_back({s, t});
    }
  }

  std::size_t pair_rows() const { return perms_.size(); }

  /// Configurations whose first permutation is perms_[row].
  std::uint64_t count_row(std::size_t row) const {
    const Perm& p1 = perms_[row];
    const Perm p1inv = inverse(p1);
    std::uint64_t total = 0;
    std::vector<std::array<int, 2>> chosen;
    chosen.reserve(static_cast<std::size_t>(k_));
    for (const Perm& p2 : perms_) {
      // residual = (p1 p2 p1^-1 p2^-1)^-1 = p2 p1 p2^-1 p1^-1 must equal t_1 ... t_k.
      const Perm residual = compose(compose(compose(p2, p1), inverse(p2)), p1inv);
      TinyUnionFind base(d_);
      if (transitive_) {
        for (int i = 0; i < d_; ++i) {
          base.join(i, p1[static_cast<std::size_t>(i)]);
          base.join(i, p2[static_cast<std::size_t>(i)]);
        }
      }
      total += extend(residual, k_, 0, base, chosen);
    }
    return total;
  }

 private:
  static Perm compose(const Perm& a, const Perm& b) {
    Perm r{};
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
  }

  Perm inverse(const Perm& a) const {
    Perm r{};
    for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(i);
    return r;
  }

  int cycles(const Perm& a) const {
    std::array<bool, kMaxOracleDegree> seen{};
    int c = 0;
    for (int i = 0; i < d_; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++c;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = a[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
      }
    }
    return c;
  }

  bool accept(const TinyUnionFind& base, const std::vector<std::array<int, 2>>& chosen) const {
    if (!transitive_) return true;
    TinyUnionFind uf = base;
    for (const auto& t : chosen) uf.join(t[0], t[1]);
    return uf.components == 1;
  }

  // Counts sequences t_1..t_remaining whose product is residual, each with larger
  // element >= floor when monotone.
  std::uint64_t extend(const Perm& residual, int remaining, int floor, const TinyUnionFind& base,
                       std::vector<std::array<int, 2>>& chosen) const {
    const int distance = d_ - cycles(residual);
    if (distance > remaining || (remaining - distance) % 2 != 0) return 0;
    if (remaining == 0) return accept(base, chosen) ? 1 : 0;
    std::uint64_t total = 0;
    for (const auto& t : transpositions_) {
      if (monotone_ && t[1] < floor) continue;
      // t_1 (t_2 ... t_k) = residual  =>  t_2 ... t_k = t_1 residual.
      Perm next = residual;
      for (int i = 0; i < d_; ++i) {
        auto& v = next[static_cast<std::size_t>(i)];
        if (v == t[0]) {
          v = static_cast<std::int8_t>(t[1]);
        } else if (v == t[1]) {
          v = static_cast<std::int8_t>(t[0]);
        }
      }
      chosen.push_back(t);
      total += extend(next, remaining - 1, t[1], base, chosen);
      chosen.pop_back();
    }
    return total;
  }

  int d_;
  int k_;
  bool monotone_;
  bool transitive_;
  std::vector<Perm> perms_;
  std::vector<std::array<int, 2>> transpositions_;
};

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline Integer run_enumeration(int d, int k, bool monotone, bool transitive, unsigned jobs) {
  const ConfigEnumerator e(d, k, monotone, transitive);
  const unsigned workers =
      std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(e.pair_rows()));
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t row = w; row < e.pair_rows(); row += workers) {
          partial[w] += e.count_row(row);
        }
      });
    }
  }
  Integer total = 0;
  for (std::uint64_t p : partial) total += Integer(static_cast<unsigned long>(p));
  return total;
}

}  // namespace detail

/// Largest (2g - 2) ln(d^2) the configuration oracle accepts.
inline constexpr double kOracleWorkBudget = 15.0;

inline void check_config_capacity(const ConfigCountQuery& q) {
  if (q.d < 1 || q.g < 1) throw std::invalid_argument("oracle needs d >= 1 and g >= 1");
  const double work = (2.0 * q.g - 2.0) * std::log(double(q.d) * q.d);
  if (q.d > 6 || work > kOracleWorkBudget) {
    throw CapacityError("oracle capacity exceeded for d=" + std::to_string(q.d) +
                        ", g=" + std::to_string(q.g) +
                        " (limits: d <= 6 and (2g-2) ln(d^2) <= 15)");
  }
}

/// Number of configurations matching the query; jobs = 0 uses all cores.
inline Integer count_configs(const ConfigCountQuery& q, unsigned jobs = 0) {
  check_config_capacity(q);
  if (q.d == 1) return q.g == 1 ? 1 : 0;
  return detail::run_enumeration(q.d, 2 * q.g - 2, q.monotone, q.transitive, jobs);
}

/// Commuting pairs in S^d, optionally only those generating a transitive subgroup.
inline Integer count_commuting_pairs(int d, bool transitive, unsigned jobs = 0) {
  if (d < 1) throw std::invalid_argument("count_commuting_pairs needs d >= 1");
  if (d > detail::kMaxOracleDegree) {
    throw CapacityError("oracle capacity exceeded for commuting pairs: d=" + std::to_string(d) +
                        " (limit d <= 7)");
  }
  if (d == 1) return 1;
  return detail::run_enumeration(d, 0, false, transitive, jobs);
}

}  // namespace cuegenus
