#pragma once

// Coefficient families of the expected CUE spherical integral
//
//   K_N(q) = 1 + sum_d K_N^d q^d / d!,   L_N = log K_N,
//
// and of its genus expansion. Everything is computed from sums over Young
// diagrams of content polynomials and complete homogeneous polynomials of
// contents, followed by exact formal exp/log:
//
//   K_N^d = d! sum_{lambda, rows <= N} N^d / N^lambda
//   H_g^d = d! sum_lambda h_{2g-2}(contents)           (disconnected, monotone)
//   B_g^d = d! sum_lambda (sum of contents)^{2g-2}      (disconnected, classical)
//   F = log K   (exponential in q, ordinary in t)
//   C = log B   (exponential in q and in t)
//
// For 1 <= d <= N, K_N^d = sum_g N^{2-2g} H_g^d and L_N^d = sum_g N^{2-2g} F_g^d.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuegenus/exact.hpp"
#include "cuegenus/partitions.hpp"
#include "cuegenus/pseries.hpp"

namespace cuegenus {

inline void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

/// sum over diagrams with at most N rows of N^d / N^lambda (= K_N^d / d!).
inline Rational kn_plain_coefficient(int N, int d) {
  require_positive(N, "N");
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  if (d == 0) return 1;
  const Integer Nd = pow(Integer(N), static_cast<unsigned>(d));
  Rational sum = 0;
  for_each_partition(d, N, [&](std::span<const int> parts) {
    sum += ratio(Nd, content_product(parts, N));
  });
  return sum;
}

/// K_N^d = d! sum_{lambda in Y_N^d} N^d / N^lambda.
inline Rational kn_coefficient(int N, int d) {
  require_positive(d, "d");
  return kn_plain_coefficient(N, d) * Rational(factorial(static_cast<unsigned>(d)));
}

/// d! sum_{lambda in Y^d} prod (1 + c/N)^{-1}, valid in the stable range d <= N.
inline Rational stable_rational_evaluation(int N, int d) {
  require_positive(N, "N");
  require_positive(d, "d");
  if (d > N) throw std::invalid_argument("stable evaluation needs d <= N");
  const Rational t(1, N);
  Rational sum = 0;
  for_each_partition(d, kUnboundedRows, [&](std::span<const int> parts) {
    Rational term = 1;
    for (int c : contents(parts)) term /= 1 + t * c;
    sum += term;
  });
  return sum * Rational(factorial(static_cast<unsigned>(d)));
}

/// Table of H_g^d (convention exponential_q): K(q,t) = 1 + sum q^d/d! sum t^{2g-2} H_g^d.
inline GenusTable k_genus_table(int D, int G) {
  if (D < 0) throw std::invalid_argument("D must be >= 0");
  require_positive(G, "G");
  GenusTable t = GenusTable::unit(D, G, Convention::exponential_q);
  const int rmax = 2 * G - 2;
  for (int d = 1; d <= D; ++d) {
    std::vector<Integer> sums(static_cast<std::size_t>(rmax) + 1, 0);
    for_each_partition(d, kUnboundedRows, [&](std::span<const int> parts) {
      auto h = complete_homogeneous_all(rmax, contents(parts));
      for (int g = 1; g <= G; ++g) sums[2 * g - 2] += h[2 * g - 2];
    });
    const Integer df = factorial(static_cast<unsigned>(d));
    for (int g = 1; g <= G; ++g) t.at(d, g) = Rational(df * sums[2 * g - 2]);
  }
  return t;
}

/// H_g^d = d! sum_{lambda in Y^d} h_{2g-2}(contents of lambda).
inline Integer h_coefficient(int g, int d) {
  require_positive(g, "g");
  require_positive(d, "d");
  return k_genus_table(d, g).at(d, g).get_num();
}

/// Table of B_g^d (convention exponential_qt).
inline GenusTable b_genus_table(int D, int G) {
  if (D < 0) throw std::invalid_argument("D must be >= 0");
  require_positive(G, "G");
  GenusTable t = GenusTable::unit(D, G, Convention::exponential_qt);
  for (int d = 1; d <= D; ++d) {
    std::vector<Integer> sums(static_cast<std::size_t>(G), 0);
    for_each_partition(d, kUnboundedRows, [&](std::span<const int> parts) {
      long s = 0;
      for (int c : contents(parts)) s += c;
      Integer p = 1;
      for (int g = 1; g <= G; ++g) {
        sums[static_cast<std::size_t>(g - 1)] += p;
        p *= s * s;
      }
    });
    const Integer df = factorial(static_cast<unsigned>(d));
    for (int g = 1; g <= G; ++g) t.at(d, g) = Rational(df * sums[static_cast<std::size_t>(g - 1)]);
  }
  return t;
}

/// B_g^d = d! sum_{lambda in Y^d} (sum of contents)^{2g-2}.
inline Integer b_coefficient(int g, int d) {
  require_positive(g, "g");
  require_positive(d, "d");
  return b_genus_table(d, g).at(d, g).get_num();
}

/// F_g^d for d <= D, g <= G: the formal logarithm of the H table.
inline GenusTable f_table(int D, int G) { return bivariate_log(k_genus_table(D, G)); }

/// C_g^d for d <= D, g <= G: logarithm of the B table, exponential in both markers.
inline GenusTable c_table(int D, int G) { return bivariate_log(b_genus_table(D, G)); }

/// exp of the F table with genera 1..m removed; entries count disconnected
/// monotone configurations whose components all have genus >= m + 1.
/// m = 0 reproduces the full H table.
inline GenusTable tail_normalized_table(int m, const GenusTable& F) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  GenusTable trimmed = F;
  for (int d = 0; d <= F.max_degree(); ++d) {
    for (int g = 1; g <= std::min(m, F.max_genus()); ++g) trimmed.at(d, g) = 0;
  }
  return bivariate_exp(trimmed);
}

inline GenusTable tail_normalized_table(int m, int D, int G) {
  return tail_normalized_table(m, f_table(D, G));
}

/// K_N(q) to order D, plain coefficients.
inline QSeries kn_series(int N, int D) {
  require_positive(N, "N");
  QSeries s = QSeries::zero(D);
  for (int d = 0; d <= D; ++d) s[d] = kn_plain_coefficient(N, d);
  return s;
}

inline QSeries ln_series(int N, int D) { return series_log(kn_series(N, D)); }

/// F_g(q) = sum F_g^d q^d / d! as a plain series, from an F table.
inline QSeries genus_series(const GenusTable& table, int g) {
  return QSeries(table.to_plain().genus_column(g));
}

/// Delta_{mN} = L_N - sum_{g<=m} N^{2-2g} F_g. Constant term is 0.
inline QSeries delta_series(int m, int N, const QSeries& ln, const GenusTable& F) {
  require_positive(m, "m");
  require_positive(N, "N");
  if (F.max_genus() < m) throw std::invalid_argument("F table has too few genera for m");
  if (F.max_degree() < ln.order()) throw std::invalid_argument("F table has too few degrees");
  QSeries delta = ln;
  const Integer N2 = Integer(N) * N;
  const GenusTable plain = F.to_plain();
  for (int g = 1; g <= m; ++g) {
    const Rational w(1, pow(N2, static_cast<unsigned>(g - 1)));
    for (int d = 0; d <= ln.order(); ++d) delta[d] -= w * plain.at(d, g);
  }
  return delta;
}

inline QSeries delta_series(int m, int N, int D) {
  return delta_series(m, N, ln_series(N, D), f_table(D, m));
}

/// K_{mN} = exp(Delta_{mN}) = K_N exp(-sum_{g<=m} N^{2-2g} F_g).
inline QSeries concentration_series(int m, int N, const QSeries& ln, const GenusTable& F) {
  return series_exp(delta_series(m, N, ln, F));
}

/// Stirling numbers of the second kind S(n, k) from the triangle recurrence.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    rows_.assign(static_cast<std::size_t>(n_max) + 1, {});
    for (int n = 0; n <= n_max; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.assign(static_cast<std::size_t>(n) + 1, 0);
      row[0] = n == 0 ? 1 : 0;
      for (int k = 1; k <= n; ++k) {
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        Integer a = k <= n - 1 ? prev[static_cast<std::size_t>(k)] : Integer(0);
        row[static_cast<std::size_t>(k)] = k * a + prev[static_cast<std::size_t>(k - 1)];
      }
    }
  }

  Integer operator()(int n, int k) const {
    if (n < 0 || k < 0) throw std::invalid_argument("Stirling indices must be >= 0");
    if (n >= static_cast<int>(rows_.size())) throw std::out_of_range("Stirling triangle too small");
    if (k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

inline Integer stirling2(int n, int k) { return StirlingTriangle(n)(n, k); }

/// A failed bound check: which bound, where, and the two sides.
struct BoundViolation {
  std::string bound;
  int d = 0;
  int g = 0;
  std::string detail;
};

/// d^{g-1} / (2^{g-1} (g-1)!) <= H_g^d / H_1^d <= S(d-1+2g-2, d-1) on d_min <= d <= d_max,
/// 1 <= g <= g_max. The lower bound is false at d = 1 (H_g^1 = 0 for g >= 2), so d_min defaults to 2.
inline std::optional<BoundViolation> check_stirling_sandwich(int d_max, int g_max, int d_min = 2) {
  require_positive(d_max, "d_max");
  require_positive(g_max, "g_max");
  require_positive(d_min, "d_min");
  const GenusTable H = k_genus_table(d_max, g_max);
  const StirlingTriangle S(d_max - 1 + 2 * g_max - 2);
  for (int d = d_min; d <= d_max; ++d) {
    for (int g = 1; g <= g_max; ++g) {
      const Rational mean = H.at(d, g) / H.at(d, 1);
      const Rational lower = ratio(pow(Integer(d), static_cast<unsigned>(g - 1)),
                                   pow(Integer(2), static_cast<unsigned>(g - 1)) * factorial(static_cast<unsigned>(g - 1)));
      const Rational upper(S(d - 1 + 2 * g - 2, d - 1));
      if (mean < lower || mean > upper) {
        return BoundViolation{"stirling-sandwich", d, g,
                              to_string(lower) + " <= " + to_string(mean) + " <= " + to_string(upper)};
      }
    }
  }
  return std::nullopt;
}

/// h_{2g-2}(contents) >= (sum c^2)^{g-1} / (2^{g-1} (g-1)!) for every diagram with d <= d_max, g <= g_max.
inline std::optional<BoundViolation> check_hunter_bound(int d_max, int g_max) {
  require_positive(d_max, "d_max");
  require_positive(g_max, "g_max");
  std::optional<BoundViolation> out;
  for (int d = 1; d <= d_max && !out; ++d) {
    for_each_partition(d, kUnboundedRows, [&](std::span<const int> parts) {
      if (out) return;
      const auto c = contents(parts);
      const auto h = complete_homogeneous_all(2 * g_max - 2, c);
      Integer square_sum = 0;
      for (int x : c) square_sum += x * x;
      for (int g = 1; g <= g_max; ++g) {
        const Rational lower = ratio(pow(square_sum, static_cast<unsigned>(g - 1)),
                                     pow(Integer(2), static_cast<unsigned>(g - 1)) * factorial(static_cast<unsigned>(g - 1)));
        const Integer& value = h[static_cast<std::size_t>(2 * g - 2)];
        if (Rational(value) < lower) {
          out = BoundViolation{"hunter", d, g,
                               Partition(std::vector<int>(parts.begin(), parts.end())).to_string() + ": " +
                                   to_string(value) + " < " + to_string(lower)};
          return;
        }
      }
    });
  }
  return out;
}

/// S(m, n) < e^n n^{m-n} for m = d-1+2g-2, n = d-1 >= 1 on the same range, certified
/// against the rational lower bound 2.718281828 for e.
inline std::optional<BoundViolation> check_stirling_growth(int d_max, int g_max) {
  require_positive(d_max, "d_max");
  require_positive(g_max, "g_max");
  const StirlingTriangle S(d_max - 1 + 2 * g_max - 2);
  const Rational e_lower = ratio(2718281828, 1000000000);
  for (int d = 2; d <= d_max; ++d) {
    for (int g = 1; g <= g_max; ++g) {
      const int n = d - 1;
      const int m = n + 2 * g - 2;
      const Rational rhs = pow(e_lower, static_cast<unsigned>(n)) * Rational(pow(Integer(n), static_cast<unsigned>(m - n)));
      const Rational lhs(S(m, n));
      if (!(lhs < rhs)) {
        return BoundViolation{"stirling-growth", d, g,
                              "S(" + std::to_string(m) + "," + std::to_string(n) + ") = " + to_string(lhs)};
      }
    }
  }
  return std::nullopt;
}

/// Smallest N^lambda over diagrams of size d with at most N rows.
inline std::pair<Integer, Partition> min_content_product(int N, int d) {
  require_positive(N, "N");
  require_positive(d, "d");
  std::optional<Integer> best;
  Partition arg;
  for_each_partition(d, N, [&](std::span<const int> parts) {
    Integer v = content_product(parts, N);
    if (!best || v < *best) {
      best = v;
      arg = Partition(std::vector<int>(parts.begin(), parts.end()));
    }
  });
  return {*best, arg};
}

enum class Family { KN, H, F, B, C, LN, Delta };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::KN: return "KN";
    case Family::H: return "H";
    case Family::F: return "F";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::LN: return "LN";
    case Family::Delta: return "Delta";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  for (Family f : {Family::KN, Family::H, Family::F, Family::B, Family::C, Family::LN,
                   Family::Delta}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown coefficient family: " + s);
}

/// One exact coefficient. Unused indices are ignored.
struct CoefficientRequest {
  Family family = Family::H;
  int d = 1;
  int g = 1;
  int N = 1;
  int m = 1;

  void validate() const {
    require_positive(d, "d");
    switch (family) {
      case Family::H:
      case Family::F:
      case Family::B:
      case Family::C: require_positive(g, "g"); break;
      case Family::KN:
      case Family::LN: require_positive(N, "N"); break;
      case Family::Delta:
        require_positive(N, "N");
        require_positive(m, "m");
        break;
    }
  }
};

inline Rational evaluate(const CoefficientRequest& req) {
  req.validate();
  const Rational df(factorial(static_cast<unsigned>(req.d)));
  switch (req.family) {
    case Family::KN: return kn_coefficient(req.N, req.d);
    case Family::H: return Rational(h_coefficient(req.g, req.d));
    case Family::B: return Rational(b_coefficient(req.g, req.d));
    case Family::F: return f_table(req.d, req.g).at(req.d, req.g);
    case Family::C: return c_table(req.d, req.g).at(req.d, req.g);
    case Family::LN: return ln_series(req.N, req.d)[req.d] * df;
    case Family::Delta: return delta_series(req.m, req.N, req.d)[req.d] * df;
  }
  return 0;
}

}  // namespace cuegenus
