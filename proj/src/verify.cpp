#include "r2r/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "r2r/bounds.hpp"
#include "r2r/io.hpp"
#include "r2r/oracle/distribution.hpp"
#include "r2r/oracle/transition_matrix.hpp"
#include "r2r/partition.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/tableau.hpp"

namespace r2r::verify {

namespace {

using io::format_double;

CheckResult check(std::string suite, std::string name, bool passed, std::string detail) {
  return {std::move(suite), std::move(name), passed, std::move(detail)};
}

std::vector<double> expanded_values(const Spectrum& s) {
  std::vector<double> values;
  for (const auto& e : s.entries)
    for (BigInt k = 0; k < e.multiplicity; ++k) values.push_back(e.value.to_double());
  std::sort(values.rbegin(), values.rend());
  return values;
}

CheckResult compare_with_oracle(const std::string& name, const Spectrum& s, const oracle::TransitionMatrix& m) {
  const std::vector<double> formula = expanded_values(s);
  const std::vector<double> numeric = oracle::numeric_eigenvalues(m);
  if (formula.size() != numeric.size())
    return check("spectra", name, false,
                 "count " + std::to_string(formula.size()) + " vs " + std::to_string(numeric.size()));
  double worst = 0;
  for (std::size_t i = 0; i < formula.size(); ++i) worst = std::max(worst, std::abs(formula[i] - numeric[i]));
  return check("spectra", name, worst <= 1e-8,
               std::to_string(formula.size()) + " values, max diff " + (worst <= 1e-12 ? "<=1e-12" : format_double(worst)));
}

const std::vector<Partition>& oracle_evaluations() {
  static const std::vector<Partition> nus{{2, 1}, {2, 2}, {2, 1, 1}, {3, 1}, {2, 2, 1}};
  return nus;
}

void spectra_suite(int n_max, std::vector<CheckResult>& out) {
  for (int n = 2; n <= std::min(n_max, 6); ++n)
    out.push_back(compare_with_oracle("formula=oracle n=" + std::to_string(n), full_spectrum(n), oracle::build_r2r_matrix(n)));
  for (const Partition& nu : oracle_evaluations())
    if (nu.size() <= n_max)
      out.push_back(compare_with_oracle("formula=oracle nu=" + nu.to_string(), spectrum_with_evaluation(nu),
                                        oracle::build_r2r_multiset(nu)));
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    const auto p = oracle::build_r2r_matrix(n);
    const auto aa = oracle::adjoint_product(oracle::build_r2t_matrix(n));
    const bool equal = aa.denominator == p.denominator && aa.counts == p.counts;
    out.push_back(check("spectra", "P=A*A n=" + std::to_string(n), equal, "exact integer numerators over n^2"));
  }
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    const Spectrum s = full_spectrum(n);
    const Eigen::MatrixXd p = oracle::build_r2r_matrix(n).as<double>();
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(p.rows(), p.cols());
    double worst = 0;
    for (unsigned t = 0; t <= 10; ++t) {
      worst = std::max(worst, std::abs(power.trace() - static_cast<double>(spectral_trace(s, t))));
      power = power * p;
    }
    out.push_back(check("spectra", "trace(P^t) n=" + std::to_string(n), worst <= 1e-9,
                        "t<=10, max diff " + (worst <= 1e-12 ? std::string("<=1e-12") : format_double(worst))));
  }
}

void bijection_suite(int n_max, std::vector<CheckResult>& out) {
  {
    const StandardTableau q({{1, 3, 4}, {2, 6, 7}, {5}});
    const StandardTableau p = rsw_forward(q, Partition{4, 3, 2});
    const StandardTableau expected({{1, 2, 3, 6}, {4, 5, 9}, {7, 8}});
    const auto [mu, back] = rsw_inverse(expected);
    out.push_back(check("bijection", "worked example [4,3,2]/[3,3,1]",
                        p == expected && mu == Partition{3, 3, 1} && back == q, "forward and inverse"));
  }
  for (int n = 1; n <= std::min(n_max, 7); ++n) {
    bool ok = true;
    std::size_t pairs = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      for (const Partition& mu : horizontal_strip_subshapes(lambda))
        for (const StandardTableau& q : enumerate_syt(mu)) {
          if (!mu.empty() && !is_desarrangement(q)) continue;
          const auto [mu_back, q_back] = rsw_inverse(rsw_forward(q, lambda));
          ok = ok && mu_back == mu && q_back == q;
          ++pairs;
        }
      for (const StandardTableau& p : enumerate_syt(lambda)) {
        const auto [mu, q] = rsw_inverse(p);
        ok = ok && is_horizontal_strip(lambda, mu) && (mu.empty() || is_desarrangement(q)) && rsw_forward(q, lambda) == p;
      }
    }
    out.push_back(check("bijection", "RSW round trip n=" + std::to_string(n), ok, std::to_string(pairs) + " triples"));
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    bool ok = true;
    for (const Partition& lambda : enumerate_partitions(n)) {
      BigInt sum = 0;
      for (const Partition& mu : horizontal_strip_subshapes(lambda)) sum += desarrangement_count(mu);
      ok = ok && sum == syt_count(lambda);
      std::size_t enumerated = 0;
      for (const StandardTableau& t : enumerate_syt(lambda)) enumerated += is_desarrangement(t);
      ok = ok && BigInt(enumerated) == desarrangement_count(lambda);
    }
    out.push_back(check("bijection", "sum_mu d^mu = d_lambda n=" + std::to_string(n), ok, "and d^mu recursion = enumeration"));
  }
}

void identities_suite(int n_max, std::vector<CheckResult>& out) {
  for (int n = 1; n <= std::min(n_max, 12); ++n) {
    const BigInt total = full_spectrum(n).total_multiplicity();
    out.push_back(check("identities", "sum multiplicities = n! n=" + std::to_string(n), total == factorial(n), total.str()));
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(n_max, 10); ++n) {
      BigInt sum = 0;
      for (const Partition& lambda : enumerate_partitions(n)) sum += syt_count(lambda) * syt_count(lambda);
      ok = ok && sum == factorial(n);
    }
    out.push_back(check("identities", "sum d_lambda^2 = n!", ok, "n<=" + std::to_string(std::min(n_max, 10))));
  }
  {
    bool ok = true;
    BigInt d_prev2 = 1, d_prev = 0;  // D_0, D_1
    for (int n = 2; n <= std::min(n_max, 8); ++n) {
      const BigInt d_n = (n - 1) * (d_prev + d_prev2);
      BigInt sum = 0;
      for (const Partition& mu : enumerate_partitions(n)) sum += syt_count(mu) * desarrangement_count(mu);
      ok = ok && sum == d_n;
      d_prev2 = d_prev;
      d_prev = d_n;
    }
    out.push_back(check("identities", "sum d_mu d^mu = derangements", ok, "n<=" + std::to_string(std::min(n_max, 8))));
  }
  {
    bool ok = true;
    for (int n = 1; n <= std::min(n_max, 40); ++n)
      for_each_strip_pair(n, [&](const Partition&, const Partition&, const Eigenvalue& v) { ok = ok && v.num() >= 0; });
    out.push_back(check("identities", "eigenvalues nonnegative", ok, "n<=" + std::to_string(std::min(n_max, 40))));
  }
  {
    bool ok = true;
    for (int n = 1; n <= std::min(n_max, 12); ++n)
      for (const Partition& lambda : enumerate_partitions(n)) {
        const auto strips = horizontal_strip_subshapes(lambda);
        for (const Partition& mu : strips)
          for (const Partition& smaller : strips)
            if (mu.contains(smaller)) ok = ok && eigenvalue(lambda, mu) <= eigenvalue(lambda, smaller);
      }
    out.push_back(check("identities", "monotone under strip nesting", ok, "n<=" + std::to_string(std::min(n_max, 12))));
  }
  {
    bool ok = true;
    std::size_t equalities = 0;
    for (int n = 1; n <= std::min(n_max, 30); ++n) {
      const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
      for_each_strip_pair(n, [&](const Partition& lambda, const Partition& mu, const Eigenvalue&) {
        const std::int64_t l = n - lambda.first();
        const std::int64_t k = mu.size() - l;
        // n^2 eig <= n^2 - l n - (k^2 + k l)
        const std::int64_t bound = n2 - l * n - (k * k + k * l);
        ok = ok && k >= 0 && scaled_eigenvalue(lambda, mu) <= bound;
        const bool extremal = lambda == hook_shape(n - l, l) && (mu.empty() ? l == 0 : k >= 1 && mu == hook_shape(k, l));
        if (extremal) {
          ok = ok && scaled_eigenvalue(lambda, mu) == bound;
          ++equalities;
        }
      });
    }
    out.push_back(check("identities", "eig <= 1 - l/n - (k^2+kl)/n^2", ok,
                        "n<=" + std::to_string(std::min(n_max, 30)) + ", " + std::to_string(equalities) + " equality cases"));
  }
  for (int n = 2; n <= std::min(n_max, 6); ++n) {
    const Spectrum s = full_spectrum(n);
    const auto m = oracle::build_r2r_matrix(n);
    oracle::ScaledDistribution d = oracle::scaled_point_mass(m.states());
    bool ok = true;
    for (unsigned t = 0; t <= 60; ++t) {
      const Rational tv = oracle::tv_distance(d);
      const Rational chi2 = oracle::chi2_distance(d);
      const Rational l2 = spectral_trace_exact(s, 2 * t) - 1;
      ok = ok && 4 * tv * tv <= chi2 && chi2 == l2 && l2_bound_exact(s, t) <= analytic_upper_bound(n, t);
      d = oracle::step_scaled(m, d);
    }
    out.push_back(check("identities", "4TV^2 <= l2 = chi2 <= analytic n=" + std::to_string(n), ok,
                        "t<=60, exact rationals"));
  }
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, int n_max) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "spectra" && suite != "bijection" && suite != "identities")
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (all || suite == "spectra") spectra_suite(n_max, out);
  if (all || suite == "bijection") bijection_suite(n_max, out);
  if (all || suite == "identities") identities_suite(n_max, out);
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::size_t name_width = 5;
  for (const auto& r : results) name_width = std::max(name_width, r.name.size());
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::string line = r.suite;
    line.resize(12, ' ');
    std::string name = r.name;
    name.resize(name_width + 2, ' ');
    line += name + (r.passed ? "PASS  " : "FAIL  ") + r.detail + "\n";
    out += line;
    failed += !r.passed;
  }
  out += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " checks passed\n";
  return out;
}

}  // namespace r2r::verify
