#pragma once

// Eisenstein series and exact fitting of q-series by polynomials in E2, E4, E6.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cuegenus/exact.hpp"
#include "cuegenus/hurwitz.hpp"
#include "cuegenus/partitions.hpp"
#include "cuegenus/pseries.hpp"

namespace cuegenus {

/// B_0..B_n with B_1 = -1/2, from sum_{j<=n} C(n+1, j) B_j = 0.
class BernoulliCache {
 public:
  const Rational& operator()(int n) {
    if (n < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
    while (static_cast<int>(values_.size()) <= n) {
      const int m = static_cast<int>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      Rational s = 0;
      for (int j = 0; j < m; ++j) {
        s += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) *
             values_[static_cast<std::size_t>(j)];
      }
      values_.push_back(-s / (m + 1));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::vector<Rational> values_;
};

inline Rational bernoulli(int n) {
  BernoulliCache cache;
  return cache(n);
}

/// zeta(1 - 2k) = -B_{2k} / (2k).
inline Rational zeta_at_negative_odd(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return -bernoulli(2 * k) / (2 * k);
}

/// E_{2k} = 1 + (2 / zeta(1-2k)) sum_n sigma_{2k-1}(n) q^n, truncated at D.
inline QSeries eisenstein(int k, int D) {
  if (k < 1) throw std::invalid_argument("eisenstein: k must be >= 1");
  const Rational factor = Rational(2) / zeta_at_negative_odd(k);
  QSeries e = QSeries::one(D);
  for (int n = 1; n <= D; ++n) {
    e[n] = factor * Rational(divisor_sigma(static_cast<unsigned>(2 * k - 1), static_cast<unsigned>(n)));
  }
  return e;
}

/// E2^e2 E4^e4 E6^e6.
struct Monomial {
  int e2 = 0;
  int e4 = 0;
  int e6 = 0;

  int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const {
    std::string s;
    auto part = [&](const char* name, int e) {
      if (e == 0) return;
      if (!s.empty()) s += " ";
      s += name;
      if (e > 1) s += "^" + std::to_string(e);
    };
    part("E2", e2);
    part("E4", e4);
    part("E6", e6);
    return s.empty() ? "1" : s;
  }
};

/// Every monomial of weight <= max_weight, ordered by weight then descending E2 power.
inline std::vector<Monomial> monomial_basis(int max_weight) {
  std::vector<Monomial> out;
  for (int c = 0; 6 * c <= max_weight; ++c) {
    for (int b = 0; 4 * b + 6 * c <= max_weight; ++b) {
      for (int a = 0; 2 * a + 4 * b + 6 * c <= max_weight; ++a) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    if (x.weight() != y.weight()) return x.weight() < y.weight();
    return x > y;
  });
  return out;
}

/// Exact-rational combination of monomials; zero coefficients are never stored.
class QuasimodularPoly {
 public:
  void set(const Monomial& m, const Rational& c) {
    if (m.e2 < 0 || m.e4 < 0 || m.e6 < 0) throw std::invalid_argument("negative exponent");
    if (sgn(c) == 0) {
      terms_.erase(m);
    } else {
      terms_[m] = c;
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int max_weight() const {
    int w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
  }

  /// Highest weight first, e.g. "1/10368 E2^3 - 1/17280 E2 E4 - ...".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
      return x.first > y.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [m, coeff] : ordered) {
      if (first) {
        if (sgn(coeff) < 0) s += "-";
      } else {
        s += sgn(coeff) < 0 ? " - " : " + ";
      }
      const Rational c = abs(coeff);
      const std::string mono = m.to_string();
      if (mono == "1") {
        s += c.get_str();
      } else {
        s += (c == 1 ? "" : c.get_str() + " ") + mono;
      }
      first = false;
    }
    return s;
  }

  friend bool operator==(const QuasimodularPoly&, const QuasimodularPoly&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Substitutes the Eisenstein expansions, exactly, to order D.
inline QSeries poly_to_series(const QuasimodularPoly& p, int D) {
  QSeries out = QSeries::zero(D);
  if (p.empty()) return out;
  const QSeries gens[3] = {eisenstein(1, D), eisenstein(2, D), eisenstein(3, D)};
  std::map<std::pair<int, int>, QSeries> powers;  // (generator, exponent)
  std::function<const QSeries&(int, int)> power = [&](int which, int e) -> const QSeries& {
    auto key = std::make_pair(which, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    QSeries r = e == 0 ? QSeries::one(D) : series_mul(power(which, e - 1), gens[which]);
    return powers.emplace(key, std::move(r)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    QSeries term = series_mul(series_mul(power(0, m.e2), power(1, m.e4)), power(2, m.e6));
    out += term * c;
  }
  return out;
}

/// Returned when a fit solves but does not reproduce the series.
struct FitFailure {
  int first_mismatch_degree = -1;
  Rational expected;
  Rational fitted;
  QuasimodularPoly candidate;

  std::string message() const {
    return "fit does not validate: first mismatch at q^" + std::to_string(first_mismatch_degree) +
           " (series " + expected.get_str() + ", fit " + fitted.get_str() + ")";
  }
};

using FitResult = std::variant<QuasimodularPoly, FitFailure>;

namespace detail {

// Fraction-free (Bareiss) elimination on an integer matrix with r >= n rows and
// n + 1 columns (the last one is the right-hand side). Returns the solution of
// the first n pivot rows, or nullopt if the coefficient block has rank < n.
inline std::optional<std::vector<Rational>> bareiss_solve(std::vector<std::vector<Integer>> m,
                                                          std::size_t n) {
  const std::size_t rows = m.size();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < rows && m[pivot][k] == 0) ++pivot;
    if (pivot == rows) return std::nullopt;
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(m[k][j]) * x[j];
    x[k] = acc / Rational(m[k][k]);
  }
  return x;
}

}  // namespace detail

/// Solves for the polynomial of weight <= max_weight matching s on q^0..q^fit_degree,
/// then requires exact agreement on q^(fit_degree+1)..q^validate_degree.
/// Throws std::invalid_argument when the system is underdetermined or s is too short.
inline FitResult fit_quasimodular(const QSeries& s, int max_weight, int fit_degree,
                                  int validate_degree) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
  if (fit_degree < 0 || validate_degree <= fit_degree) {
    throw std::invalid_argument("need 0 <= fit_degree < validate_degree");
  }
  if (s.order() < validate_degree) {
    throw std::invalid_argument("series has coefficients only to q^" + std::to_string(s.order()));
  }
  const auto basis = monomial_basis(max_weight);
  const std::size_t n = basis.size();
  if (static_cast<std::size_t>(fit_degree) + 1 < n) {
    throw std::invalid_argument("underdetermined fit: " + std::to_string(n) + " monomials but only " +
                                std::to_string(fit_degree + 1) + " fitted coefficients");
  }
  std::vector<QSeries> columns;
  for (const auto& m : basis) {
    QuasimodularPoly single;
    single.set(m, 1);
    columns.push_back(poly_to_series(single, fit_degree));
  }
  std::vector<std::vector<Integer>> matrix;
  for (int row = 0; row <= fit_degree; ++row) {
    const Integer den = s[row].get_den();
    std::vector<Integer> r;
    for (const auto& col : columns) r.push_back(col[row].get_num() * den);  // basis coefficients are integers
    r.push_back(s[row].get_num());
    matrix.push_back(std::move(r));
  }
  auto solution = detail::bareiss_solve(std::move(matrix), n);
  if (!solution) {
    throw std::invalid_argument("underdetermined fit: coefficient matrix is rank deficient");
  }
  QuasimodularPoly p;
  for (std::size_t i = 0; i < n; ++i) p.set(basis[i], (*solution)[i]);
  const QSeries fitted = poly_to_series(p, validate_degree);
  for (int d = 0; d <= validate_degree; ++d) {
    if (fitted[d] != s[d]) return FitFailure{d, s[d], fitted[d], p};
  }
  return p;
}

/// Smallest even weight cap <= max_cap whose fit validates, with its polynomial.
inline std::optional<std::pair<int, QuasimodularPoly>> fit_minimal_weight(const QSeries& s,
                                                                          int max_cap,
                                                                          int fit_degree,
                                                                          int validate_degree) {
  for (int w = 0; w <= max_cap; w += 2) {
    auto r = fit_quasimodular(s, w, fit_degree, validate_degree);
    if (auto* p = std::get_if<QuasimodularPoly>(&r)) return std::make_pair(w, *p);
  }
  return std::nullopt;
}

/// d! sum_{n | d} 1/n, the exponential coefficients of sum q^n / (n (1 - q^n)).
inline Rational f1_closed_form(int d) {
  require_positive(d, "d");
  Rational s = 0;
  for (int n = 1; n <= d; ++n) {
    if (d % n == 0) s += Rational(1, n);
  }
  return s * Rational(factorial(static_cast<unsigned>(d)));
}

/// Genus-one column of the F table versus the divisor closed form and versus
/// the logarithm of the partition generating function, for d <= D.
inline bool verify_f1_closed_form(int D, const GenusTable& F) {
  require_positive(D, "D");
  if (F.max_degree() < D) throw std::invalid_argument("F table too short");
  QSeries euler = QSeries::zero(D);
  for (int d = 0; d <= D; ++d) euler[d] = Rational(partition_count(d));
  const auto log_euler = series_log(euler).to_exponential();
  for (int d = 1; d <= D; ++d) {
    const Rational closed = f1_closed_form(d);
    if (F.at(d, 1) != closed || log_euler[static_cast<std::size_t>(d)] != closed) return false;
  }
  return true;
}

inline bool verify_f1_closed_form(int D) { return verify_f1_closed_form(D, f_table(D, 1)); }

}  // namespace cuegenus
