#pragma once

// Truncated power series in q over exact rationals, and the genus-graded
// bivariate series in q and t where t only appears as t^{2g-2}.
//
// Storage is always plain coefficients. Tables carry a convention flag saying
// which factorials divide the stored entries; conversion happens once, at the
// boundary, in to_plain()/with_convention().

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuegenus/exact.hpp"

namespace cuegenus {

/// c_0 + c_1 q + ... + c_D q^D.
class QSeries {
 public:
  QSeries() : coeffs_(1, Rational(0)) {}

  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
  }

  static QSeries zero(int D) { return QSeries(std::vector<Rational>(check_order(D) + 1, 0)); }

  static QSeries one(int D) {
    QSeries s = zero(D);
    s.coeffs_[0] = 1;
    return s;
  }

  /// From exponential coefficients a_d, meaning sum a_d q^d / d!.
  static QSeries from_exponential(const std::vector<Rational>& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) {
      c[d] = a[d] / Rational(factorial(static_cast<unsigned>(d)));
    }
    return QSeries(std::move(c));
  }

  /// d! c_d for every d.
  std::vector<Rational> to_exponential() const {
    std::vector<Rational> a(coeffs_.size());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      a[d] = coeffs_[d] * Rational(factorial(static_cast<unsigned>(d)));
    }
    return a;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t d) const { return coeffs_[d]; }
  Rational& operator[](std::size_t d) { return coeffs_[d]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  QSeries truncated(int D) const {
    if (D > order()) throw std::invalid_argument("cannot extend a truncated series");
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + D + 1));
  }

  QSeries& operator+=(const QSeries& o) {
    require_same_order(o);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    require_same_order(o);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
  }
  QSeries& operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& k) { return a *= k; }
  friend QSeries operator*(const Rational& k, QSeries a) { return a *= k; }
  friend bool operator==(const QSeries&, const QSeries&) = default;

  void require_same_order(const QSeries& o) const {
    if (o.order() != order()) {
      throw std::invalid_argument("series truncation mismatch: " + std::to_string(order()) +
                                  " vs " + std::to_string(o.order()));
    }
  }

 private:
  static std::size_t check_order(int D) {
    if (D < 0) throw std::invalid_argument("negative truncation order");
    return static_cast<std::size_t>(D);
  }

  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order.
inline QSeries series_mul(const QSeries& a, const QSeries& b) {
  a.require_same_order(b);
  const int D = a.order();
  QSeries r = QSeries::zero(D);
  for (int i = 0; i <= D; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= D; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Formal log of a series with constant term 1, via d L_d = d a_d - sum_{j<d} j L_j a_{d-j}.
inline QSeries series_log(const QSeries& a) {
  if (a[0] != 1) throw std::domain_error("series_log: constant term must be 1");
  const int D = a.order();
  QSeries L = QSeries::zero(D);
  for (int d = 1; d <= D; ++d) {
    Rational acc = d * a[d];
    for (int j = 1; j < d; ++j) acc -= j * L[j] * a[d - j];
    L[d] = acc / d;
  }
  return L;
}

/// Formal exp of a series with constant term 0, via d b_d = sum_{j<=d} j a_j b_{d-j}.
inline QSeries series_exp(const QSeries& a) {
  if (sgn(a[0]) != 0) throw std::domain_error("series_exp: constant term must be 0");
  const int D = a.order();
  QSeries b = QSeries::zero(D);
  b[0] = 1;
  for (int d = 1; d <= D; ++d) {
    Rational acc = 0;
    for (int j = 1; j <= d; ++j) acc += j * a[j] * b[d - j];
    b[d] = acc / d;
  }
  return b;
}

/// How stored entries T[d][g] relate to the coefficient of q^d t^{2g-2}.
enum class Convention {
  plain,          // coefficient = T
  exponential_q,  // coefficient = T / d!
  exponential_qt  // coefficient = T / (d! (2g-2)!)
};

inline std::string to_string(Convention c) {
  switch (c) {
    case Convention::plain: return "plain";
    case Convention::exponential_q: return "exponential_q";
    case Convention::exponential_qt: return "exponential_qt";
  }
  return "?";
}

inline Convention convention_from_string(const std::string& s) {
  if (s == "plain") return Convention::plain;
  if (s == "exponential_q") return Convention::exponential_q;
  if (s == "exponential_qt") return Convention::exponential_qt;
  throw std::invalid_argument("unknown coefficient convention: " + s);
}

/// Entries T[d][g] for 0 <= d <= D and 1 <= g <= G.
class GenusTable {
 public:
  GenusTable(int D, int G, Convention convention) : D_(D), G_(G), convention_(convention) {
    if (D < 0 || G < 1) throw std::invalid_argument("GenusTable needs D >= 0 and G >= 1");
    entries_.assign(static_cast<std::size_t>(D + 1),
                    std::vector<Rational>(static_cast<std::size_t>(G), Rational(0)));
  }

  /// Table of an exp-type series: 1 at (0, 1), zero elsewhere.
  static GenusTable unit(int D, int G, Convention convention) {
    GenusTable t(D, G, convention);
    t.at(0, 1) = 1;
    return t;
  }

  int max_degree() const { return D_; }
  int max_genus() const { return G_; }
  Convention convention() const { return convention_; }

  const Rational& at(int d, int g) const { return entries_.at(idx(d)).at(gidx(g)); }
  Rational& at(int d, int g) { return entries_.at(idx(d)).at(gidx(g)); }

  /// Column g as a q-series in the table's own convention.
  std::vector<Rational> genus_column(int g) const {
    std::vector<Rational> col;
    for (int d = 0; d <= D_; ++d) col.push_back(at(d, g));
    return col;
  }

  /// Multiplier m(d, g) with coefficient = T * m.
  Rational scale(int d, int g, Convention c) const {
    switch (c) {
      case Convention::plain: return 1;
      case Convention::exponential_q:
        return Rational(1, factorial(static_cast<unsigned>(d)));
      case Convention::exponential_qt:
        return Rational(1, factorial(static_cast<unsigned>(d)) *
                               factorial(static_cast<unsigned>(2 * g - 2)));
    }
    return 1;
  }

  GenusTable with_convention(Convention target) const {
    if (target == convention_) return *this;
    GenusTable out(D_, G_, target);
    for (int d = 0; d <= D_; ++d) {
      for (int g = 1; g <= G_; ++g) {
        out.at(d, g) = at(d, g) * scale(d, g, convention_) / scale(d, g, target);
      }
    }
    return out;
  }

  GenusTable to_plain() const { return with_convention(Convention::plain); }

  friend bool operator==(const GenusTable&, const GenusTable&) = default;

 private:
  std::size_t idx(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("degree index out of range");
    return static_cast<std::size_t>(d);
  }
  std::size_t gidx(int g) const {
    if (g < 1 || g > G_) throw std::out_of_range("genus index out of range");
    return static_cast<std::size_t>(g - 1);
  }

  int D_;
  int G_;
  Convention convention_;
  std::vector<std::vector<Rational>> entries_;
};

namespace detail {

// A q^d coefficient of a bivariate series: a polynomial in u = t^2 with
// u^{g-1} at index g-1, truncated at genus G. Genera combine as g1 + g2 - 1.
using GenusPoly = std::vector<Rational>;

inline void add_product(GenusPoly& acc, const Rational& k, const GenusPoly& a, const GenusPoly& b) {
  const std::size_t G = acc.size();
  for (std::size_t i = 0; i < G; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < G; ++j) {
      if (sgn(b[j]) == 0) continue;
      acc[i + j] += k * a[i] * b[j];
    }
  }
}

inline std::vector<GenusPoly> rows_of(const GenusTable& plain) {
  std::vector<GenusPoly> rows;
  for (int d = 0; d <= plain.max_degree(); ++d) {
    GenusPoly r;
    for (int g = 1; g <= plain.max_genus(); ++g) r.push_back(plain.at(d, g));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline GenusTable table_of(const std::vector<GenusPoly>& rows, int G) {
  GenusTable t(static_cast<int>(rows.size()) - 1, G, Convention::plain);
  for (std::size_t d = 0; d < rows.size(); ++d) {
    for (int g = 1; g <= G; ++g) t.at(static_cast<int>(d), g) = rows[d][static_cast<std::size_t>(g - 1)];
  }
  return t;
}

}  // namespace detail

/// Formal log in C[[q, t]] of a table with constant term 1. Result keeps the
/// input's convention. Every entry with g <= G is exact, because products only
/// raise the genus (g1 + g2 - 1 >= max(g1, g2)).
inline GenusTable bivariate_log(const GenusTable& K) {
  const int D = K.max_degree();
  const int G = K.max_genus();
  auto a = detail::rows_of(K.to_plain());
  if (a[0][0] != 1) throw std::domain_error("bivariate_log: constant term must be 1");
  for (int g = 2; g <= G; ++g) {
    if (sgn(a[0][static_cast<std::size_t>(g - 1)]) != 0) {
      throw std::domain_error("bivariate_log: constant term must be 1");
    }
  }
  std::vector<detail::GenusPoly> L(static_cast<std::size_t>(D + 1),
                                   detail::GenusPoly(static_cast<std::size_t>(G), 0));
  for (int d = 1; d <= D; ++d) {
    detail::GenusPoly acc(static_cast<std::size_t>(G));
    for (int g = 0; g < G; ++g) acc[g] = d * a[d][g];
    for (int j = 1; j < d; ++j) detail::add_product(acc, Rational(-j), L[j], a[d - j]);
    for (auto& x : acc) x /= d;
    L[d] = std::move(acc);
  }
  return detail::table_of(L, G).with_convention(K.convention());
}

/// Formal exp of a table with zero constant term; inverse of bivariate_log.
inline GenusTable bivariate_exp(const GenusTable& L) {
  const int D = L.max_degree();
  const int G = L.max_genus();
  auto a = detail::rows_of(L.to_plain());
  for (const auto& x : a[0]) {
    if (sgn(x) != 0) throw std::domain_error("bivariate_exp: constant term must be 0");
  }
  std::vector<detail::GenusPoly> b(static_cast<std::size_t>(D + 1),
                                   detail::GenusPoly(static_cast<std::size_t>(G), 0));
  b[0][0] = 1;
  for (int d = 1; d <= D; ++d) {
    detail::GenusPoly acc(static_cast<std::size_t>(G), 0);
    for (int j = 1; j <= d; ++j) detail::add_product(acc, Rational(j), a[j], b[d - j]);
    for (auto& x : acc) x /= d;
    b[d] = std::move(acc);
  }
  return detail::table_of(b, G).with_convention(L.convention());
}

}  // namespace cuegenus
