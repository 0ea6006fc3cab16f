#pragma once

// Young diagrams, their contents, and content-based symmetric functions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuegenus/exact.hpp"

namespace cuegenus {

inline constexpr int kUnboundedRows = std::numeric_limits<int>::max();

/// A Young diagram: weakly decreasing positive parts. The empty diagram has size 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw std::invalid_argument("partition parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.assign(static_cast<std::size_t>(parts_.front()), 0);
      for (int r : parts_) {
        for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
      }
    }
    return Partition(std::move(cols));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Calls visit(parts) for every partition of d with at most max_rows rows, in
/// lexicographically decreasing order. The span is only valid during the call.
template <typename Visitor>
void for_each_partition(int d, int max_rows, Visitor&& visit) {
  if (d < 0) throw std::invalid_argument("partition size must be nonnegative");
  if (max_rows < 0) throw std::invalid_argument("max_rows must be nonnegative");
  if (d == 0) {
    visit(std::span<const int>{});
    return;
  }
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(d));
  // Recursive fill: choose the next part <= previous part, bounded by remaining cells.
  std::function<void(int, int)> fill = [&](int remaining, int cap) {
    if (remaining == 0) {
      visit(std::span<const int>(stack));
      return;
    }
    if (static_cast<int>(stack.size()) >= max_rows) return;
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      stack.push_back(k);
      fill(remaining - k, k);
      stack.pop_back();
    }
  };
  fill(d, d);
}

/// Every partition of d with at most max_rows rows, lexicographically decreasing.
/// d = 0 yields the empty sequence.
inline std::vector<Partition> enumerate_partitions(int d, int max_rows = kUnboundedRows) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  for_each_partition(d, max_rows, [&](std::span<const int> p) {
    out.emplace_back(std::vector<int>(p.begin(), p.end()));
  });
  return out;
}

/// p(d) by Euler's pentagonal number recurrence.
inline Integer partition_count(int d) {
  if (d < 0) throw std::invalid_argument("partition_count: negative size");
  std::vector<Integer> p(static_cast<std::size_t>(d) + 1);
  p[0] = 1;
  for (int n = 1; n <= d; ++n) {
    Integer s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      if (plus) {
        s += p[static_cast<std::size_t>(n - g1)];
      } else {
        s -= p[static_cast<std::size_t>(n - g1)];
      }
      if (g2 <= n) {
        if (plus) {
          s += p[static_cast<std::size_t>(n - g2)];
        } else {
          s -= p[static_cast<std::size_t>(n - g2)];
        }
      }
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  return p[static_cast<std::size_t>(d)];
}

/// Row-major cell contents (column index minus row index), from raw parts.
inline std::vector<int> contents(std::span<const int> parts) {
  std::vector<int> c;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    for (int col = 1; col <= parts[i]; ++col) c.push_back(col - row);
  }
  return c;
}

inline std::vector<int> contents(const Partition& lambda) { return contents(lambda.parts()); }

/// prod over cells of (x + c(cell)).
inline Rational content_polynomial(const Partition& lambda, const Rational& x) {
  Rational r = 1;
  for (int c : contents(lambda)) r *= x + c;
  return r;
}

/// Integer-argument content product over raw parts; N^lambda for x = N.
inline Integer content_product(std::span<const int> parts, long x) {
  Integer r = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const long row = static_cast<long>(i) + 1;
    for (long col = 1; col <= parts[i]; ++col) r *= x + col - row;
  }
  return r;
}

/// All complete homogeneous polynomials h_0..h_max_degree evaluated at values.
/// Prefix recurrence: h_r(x_1..x_k) = h_r(x_1..x_{k-1}) + x_k h_{r-1}(x_1..x_k).
inline std::vector<Integer> complete_homogeneous_all(int max_degree, std::span<const int> values) {
  if (max_degree < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  std::vector<Integer> h(static_cast<std::size_t>(max_degree) + 1, 0);
  h[0] = 1;
  for (int x : values) {
    for (int r = 1; r <= max_degree; ++r) {
      h[static_cast<std::size_t>(r)] += x * h[static_cast<std::size_t>(r - 1)];
    }
  }
  return h;
}

inline Integer complete_homogeneous(int r, std::span<const int> values) {
  return complete_homogeneous_all(r, values).back();
}

/// Dominance order: every prefix sum of lambda is <= that of mu.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("dominance_leq: partitions of different sizes");
  }
  const std::size_t n = static_cast<std::size_t>(std::max(lambda.rows(), mu.rows()));
  long a = 0;
  long b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += i < static_cast<std::size_t>(lambda.rows()) ? lambda[i] : 0;
    b += i < static_cast<std::size_t>(mu.rows()) ? mu[i] : 0;
    if (a > b) return false;
  }
  return true;
}

}  // namespace cuegenus
