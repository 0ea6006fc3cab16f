#pragma once

// Binary64 evaluation of exact series: Euler product, Ramanujan's value at
// q = e^{-pi}, decay of the genus-expansion remainder, and concentration of the
// normalized integral. Exact identities are never checked here; these are the
// desk-scale floating checks.

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuegenus/hurwitz.hpp"
#include "cuegenus/pseries.hpp"

namespace cuegenus {

/// e^{-1}: evaluation of the model's series is refused at or beyond this radius.
inline constexpr double kDomainRadius = 0.36787944117144233;

enum class Domain { model, unrestricted };

inline void require_model_domain(double q) {
  if (!(q >= 0.0 && q < kDomainRadius)) {
    throw std::domain_error("q = " + std::to_string(q) + " lies outside [0, e^-1)");
  }
}

/// p(0..n) in binary64, by the pentagonal recurrence.
inline std::vector<double> partition_counts_double(int n) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0.0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

/// sum_{d > D} (|q| e)^d p(d): crude bound on the dropped terms of a series whose
/// d-th coefficient is at most e^d p(d).
inline double truncation_tail_estimate(double q, int D) {
  const double x = std::abs(q) * std::numbers::e;
  if (x == 0.0) return 0.0;
  if (x >= 1.0) return INFINITY;
  const int extra = 5000;  // p(d) stays finite in binary64 well past this
  const auto p = partition_counts_double(D + extra);
  double sum = 0.0;
  double xd = std::pow(x, D);
  for (int d = D + 1; d <= D + extra; ++d) {
    xd *= x;
    const double term = xd * p[static_cast<std::size_t>(d)];
    sum += term;
    if (term < 1e-18 * sum && d > D + 50) break;
  }
  return sum;
}

struct SeriesValue {
  double value = 0.0;
  double tail_estimate = 0.0;
};

/// Horner evaluation of the truncation at a real point, plus a tail estimate.
inline SeriesValue eval_series(const QSeries& s, double q, Domain domain = Domain::model) {
  if (domain == Domain::model && !(std::abs(q) < kDomainRadius)) {
    throw std::domain_error("q = " + std::to_string(q) + " lies outside the disc |q| < e^-1");
  }
  double v = 0.0;
  for (int d = s.order(); d >= 0; --d) v = v * q + s[d].get_d();
  const double tail = domain == Domain::model ? truncation_tail_estimate(q, s.order()) : 0.0;
  return {v, tail};
}

/// prod_{n <= n_max} (1 - q^n)^{-1}; n_max = 0 picks the cutoff automatically so
/// that the dropped factors change the value by less than 1e-14.
inline double euler_product(double q, int n_max = 0) {
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("euler_product needs 0 <= q < 1");
  if (q == 0.0) return 1.0;
  if (n_max <= 0) {
    // prod_{n > M} (1 - q^n)^{-1} - 1 ~ q^{M+1} / (1 - q)^2.
    n_max = 1;
    while (std::pow(q, n_max + 1) / ((1 - q) * (1 - q)) >= 1e-16) ++n_max;
  }
  double r = 1.0;
  for (int n = 1; n <= n_max; ++n) r /= 1.0 - std::pow(q, n);
  return r;
}

/// sum_{d <= D} p(d) q^d.
inline double partition_sum(double q, int D) {
  const auto p = partition_counts_double(D);
  double v = 0.0;
  for (int d = D; d >= 0; --d) v = v * q + p[static_cast<std::size_t>(d)];
  return v;
}

/// Lanczos approximation (g = 7, nine terms) for x >= 1/2; smaller positive
/// arguments are shifted up with Gamma(x) = Gamma(x + 1) / x.
inline double lanczos_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma: only positive arguments are supported");
  if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
  static constexpr double kCoeffs[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double a = kCoeffs[0];
  const double t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += kCoeffs[i] / (z + i);
  return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

inline double gamma_quarter() { return lanczos_gamma(0.25); }

/// 2^{7/8} pi^{3/4} / (e^{pi/24} Gamma(1/4)): the partition generating function at q = e^{-pi}.
inline double ramanujan_closed_form() {
  const double pi = std::numbers::pi;
  return std::pow(2.0, 7.0 / 8.0) * std::pow(pi, 0.75) / (std::exp(pi / 24.0) * gamma_quarter());
}

struct ConvergenceRow {
  int N = 0;
  double q = 0.0;
  int m = 0;
  double scaled_value = 0.0;  // N^{2m-2} |Delta_{mN}(q)| or N^{2m-2} |K_{mN}(q) - 1|
  double tail_estimate = 0.0; // same scaling applied to the truncation tail bound
  int D = 0;
  bool warning = false;       // tail estimate exceeds tolerance * scaled_value
};

inline constexpr int kDefaultTruncation = 40;
inline constexpr double kDefaultTailTolerance = 1e-2;

namespace detail {

inline ConvergenceRow make_row(int N, double q, int m, int D, const QSeries& s, bool minus_one,
                               double tolerance) {
  const SeriesValue v = eval_series(s, q);
  const double scale = std::pow(double(N), 2 * m - 2);
  ConvergenceRow row;
  row.N = N;
  row.q = q;
  row.m = m;
  row.D = D;
  row.scaled_value = scale * std::abs(minus_one ? v.value - 1.0 : v.value);
  row.tail_estimate = scale * v.tail_estimate;
  row.warning = row.tail_estimate > tolerance * row.scaled_value;
  return row;
}

}  // namespace detail

/// Rows of N^{2m-2} |Delta_{mN}(q)| from exact coefficients. F must cover D and m.
inline std::vector<ConvergenceRow> convergence_table(double q, std::span<const int> Ns, int m,
                                                     const GenusTable& F,
                                                     int D = kDefaultTruncation,
                                                     double tolerance = kDefaultTailTolerance) {
  require_model_domain(q);
  require_positive(m, "m");
  std::vector<ConvergenceRow> rows;
  for (int N : Ns) {
    const QSeries delta = delta_series(m, N, ln_series(N, D), F);
    rows.push_back(detail::make_row(N, q, m, D, delta, false, tolerance));
  }
  return rows;
}

inline std::vector<ConvergenceRow> convergence_table(double q, std::span<const int> Ns, int m,
                                                     int D = kDefaultTruncation) {
  require_model_domain(q);
  return convergence_table(q, Ns, m, f_table(D, m), D);
}

/// Rows of N^{2m-2} |K_{mN}(q) - 1| with K_{mN} = exp(Delta_{mN}).
inline std::vector<ConvergenceRow> concentration_table(double q, int m, std::span<const int> Ns,
                                                       const GenusTable& F,
                                                       int D = kDefaultTruncation,
                                                       double tolerance = kDefaultTailTolerance) {
  require_model_domain(q);
  require_positive(m, "m");
  std::vector<ConvergenceRow> rows;
  for (int N : Ns) {
    const QSeries k = concentration_series(m, N, ln_series(N, D), F);
    rows.push_back(detail::make_row(N, q, m, D, k, true, tolerance));
  }
  return rows;
}

inline std::vector<ConvergenceRow> concentration_table(double q, int m, std::span<const int> Ns,
                                                       int D = kDefaultTruncation) {
  require_model_domain(q);
  return concentration_table(q, m, Ns, f_table(D, m), D);
}

/// sup_{1 <= d <= d_max} (delta e)^d p(d) (d - 1)^{2m}: the constant bounding the
/// stable part of N^{2m-2} |K_{mN} - 1| on the disc of radius delta.
inline double concentration_constant(double delta, int m, int d_max = 200) {
  require_model_domain(delta);
  const auto p = partition_counts_double(d_max);
  double best = 0.0;
  for (int d = 1; d <= d_max; ++d) {
    const double v = std::pow(delta * std::numbers::e, d) * p[static_cast<std::size_t>(d)] *
                     std::pow(double(d - 1), 2 * m);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace cuegenus
