#include "r2r/bounds.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "r2r/summation.hpp"

namespace r2r {

namespace {

void require_at_least(int n, int lo, const char* what) {
  if (n < lo) throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(lo));
}

void require_nonnegative(double t, const char* what) {
  if (!(t >= 0)) throw std::invalid_argument(std::string(what) + ": t must be nonnegative");
}

// base^exponent with 0^0 = 1.
double power(double base, double exponent) { return exponent == 0 ? 1.0 : std::pow(base, exponent); }

double log_binomial(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

// sum_{k=1}^{n-1} weight * ((n^2 - n - k^2 - k) / n^2)^(2t), smallest terms first.
double hook_family_sum(int n, double weight, double t) {
  const auto nn = static_cast<std::int64_t>(n);
  const double n2 = static_cast<double>(nn * nn);
  CompensatedSum<double> sum;
  for (std::int64_t k = nn - 1; k >= 1; --k) {
    const double base = static_cast<double>(nn * nn - nn - k * k - k) / n2;
    sum += weight * power(base, 2 * t);
  }
  return sum.value();
}

}  // namespace

double cutoff_time(int n, double c) {
  require_at_least(n, 3, "cutoff_time");
  const double x = n;
  return 0.75 * x * std::log(x) - 0.25 * x * std::log(std::log(x)) + c * x;
}

double cyclic_to_random_time(int n, double c) {
  require_at_least(n, 3, "cyclic_to_random_time");
  const double x = n;
  return 1.5 * x * std::log(x) + c * x;
}

double l2_bound_exact(const Spectrum& s, unsigned t) {
  const Partition trivial{s.n};
  CompensatedSum<long double> sum;
  for (const SpectrumEntry& e : s.entries) {
    if (e.multiplicity == 0 || (e.lambda == trivial && e.mu.empty())) continue;
    const long double mult = e.multiplicity.convert_to<long double>();
    const long double v = e.value.to_long_double();
    sum += t == 0 ? mult : mult * std::pow(v, 2.0L * t);
  }
  return static_cast<double>(sum.value());
}

double largesteig_term(int n, double t) {
  require_at_least(n, 2, "largesteig_term");
  require_nonnegative(t, "largesteig_term");
  return hook_family_sum(n, n - 1.0, t);
}

AnalyticBoundReport analytic_upper_bound_report(int n, double t) {
  require_at_least(n, 2, "analytic_upper_bound");
  require_nonnegative(t, "analytic_upper_bound");
  const double x = n;
  const double n2 = x * x;
  const bool may_truncate = n > 200;

  AnalyticBoundReport report;
  report.last_k.reserve(static_cast<std::size_t>(n - 1));
  CompensatedSum<double> outer;
  for (int l = 1; l < n; ++l) {
    const double prefactor = l * std::log(x) - 2.0 * t * l / x;
    CompensatedSum<double> inner;
    double previous = HUGE_VAL;
    int k = 0;
    for (; k <= n - l; ++k) {
      const double log_term = prefactor + log_binomial(k + l, l - 1) - 2.0 * t * (double(k) * k + double(k) * l) / n2;
      const double term = std::exp(log_term);
      inner += term;
      if (may_truncate && term < previous && term < 1e-18 * inner.value()) {
        report.truncated = report.truncated || k < n - l;
        break;
      }
      previous = term;
    }
    report.last_k.push_back(std::min(k, n - l));
    outer += inner.value();
  }
  report.value = outer.value();
  report.crude_term = std::exp(std::lgamma(x + 1) - 2.0 * t * std::log(2.0));
  if (t > 0)
    for (int l = 2; l <= n / 2; ++l)
      report.closed_form_inner.push_back(std::exp(2.0 * l + 0.5 * l * std::log(n2 / (2.0 * t))));
  return report;
}

double analytic_upper_bound(int n, double t) {
  require_at_least(n, 2, "analytic_upper_bound");
  require_nonnegative(t, "analytic_upper_bound");
  return analytic_upper_bound_report(n, t).value;
}

double word_lower_bound_witness(int n, int m, double t) {
  if (m < 2 || m > n) throw std::invalid_argument("word_lower_bound_witness: need 2 <= m <= n");
  require_nonnegative(t, "word_lower_bound_witness");
  return hook_family_sum(n, m - 1.0, t);
}

double word_lower_bound_simplified(int n, int m, double t) {
  if (m < 2 || m > n) throw std::invalid_argument("word_lower_bound_simplified: need 2 <= m <= n");
  require_nonnegative(t, "word_lower_bound_simplified");
  const double x = n;
  return (std::sqrt(x) - 1) * (m - 1.0) * power(1 - 2 / x, 2 * t);
}

double word_lower_bound_time(int n, int m, double c) {
  const double x = n;
  return x / 4 * std::log(static_cast<double>(m)) + x / 8 * std::log(x) - c * x;
}

}  // namespace r2r
