#include "r2r/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "r2r/summation.hpp"
#include "r2r/tableau.hpp"

namespace r2r {

Eigenvalue::Eigenvalue(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("eigenvalue denominator must be positive");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t scaled_eigenvalue(const Partition& lambda, const Partition& mu) {
  const std::int64_t n = lambda.size();
  const std::int64_t m = mu.size();
  return n * (n + 1) / 2 - m * (m + 1) / 2 + diag_index(lambda) - diag_index(mu);
}

Eigenvalue eigenvalue(const Partition& lambda, const Partition& mu) {
  if (lambda.empty()) throw std::invalid_argument("eigenvalue: lambda must be nonempty");
  if (!is_horizontal_strip(lambda, mu))
    throw std::invalid_argument("eigenvalue: " + lambda.to_string() + "/" + mu.to_string() + " is not a horizontal strip");
  const std::int64_t n = lambda.size();
  return Eigenvalue(scaled_eigenvalue(lambda, mu), n * n);
}

std::vector<SpectrumEntry> Spectrum::nonzero_entries() const {
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries)
    if (e.multiplicity != 0) out.push_back(e);
  return out;
}

BigInt Spectrum::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

void for_each_strip_pair(int n, const std::function<void(const Partition&, const Partition&, const Eigenvalue&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_strip_pair: n must be positive");
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  for (const Partition& lambda : enumerate_partitions(n))
    for (const Partition& mu : horizontal_strip_subshapes(lambda))
      visit(lambda, mu, Eigenvalue(scaled_eigenvalue(lambda, mu), n2));
}

namespace {

void check_cap(int n, int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("deck size " + std::to_string(n) + " outside 1.." + std::to_string(cap));
}

void sort_entries(std::vector<SpectrumEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return a.mu > b.mu;
  });
}

template <typename Weight>
Spectrum build(int n, Partition evaluation, Weight&& lambda_weight) {
  Spectrum s;
  s.n = n;
  s.evaluation = std::move(evaluation);
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  for (const Partition& lambda : enumerate_partitions(n)) {
    const std::optional<BigInt> weight = lambda_weight(lambda);
    if (!weight) continue;
    for (Partition& mu : horizontal_strip_subshapes(lambda)) {
      BigInt mult = *weight * desarrangement_count(mu);
      Eigenvalue value(scaled_eigenvalue(lambda, mu), n2);
      s.entries.push_back({lambda, std::move(mu), value, std::move(mult)});
    }
  }
  sort_entries(s.entries);
  return s;
}

}  // namespace

Spectrum full_spectrum(int n, int cap) {
  check_cap(n, cap);
  return build(n, single_column(n), [](const Partition& lambda) { return std::optional<BigInt>(syt_count(lambda)); });
}

Spectrum spectrum_with_evaluation(const Partition& nu, bool allow_single_type, int cap) {
  const int n = nu.size();
  check_cap(n, cap);
  if (nu.length() == 1 && !allow_single_type)
    throw std::invalid_argument("spectrum_with_evaluation: single-type deck " + nu.to_string() + " is degenerate");
  return build(n, nu, [&nu](const Partition& lambda) -> std::optional<BigInt> {
    if (!dominates(lambda, nu)) return std::nullopt;
    return kostka_number(lambda, nu);
  });
}

Rational spectral_trace_exact(const Spectrum& s, unsigned t) {
  Rational total = 0;
  for (const auto& e : s.entries) {
    if (e.multiplicity == 0) continue;
    const BigInt num = boost::multiprecision::pow(BigInt(e.value.num()), t);
    const BigInt den = boost::multiprecision::pow(BigInt(e.value.den()), t);
    total += Rational(num * e.multiplicity, den);
  }
  return total;
}

long double spectral_trace(const Spectrum& s, unsigned t) {
  CompensatedSum<long double> sum;
  for (const auto& e : s.entries) {
    if (e.multiplicity == 0) continue;
    const long double mult = e.multiplicity.convert_to<long double>();
    sum += mult * std::pow(e.value.to_long_double(), static_cast<long double>(t));
  }
  return sum.value();
}

}  // namespace r2r
