#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "r2r/exact.hpp"
#include "r2r/partition.hpp"

namespace r2r {

/// Exact eigenvalue of the random-to-random walk, kept in lowest terms. The
/// denominator always divides n^2.
class Eigenvalue {
 public:
  Eigenvalue() = default;
  Eigenvalue(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  Rational rational() const { return Rational(num_, den_); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const { return static_cast<long double>(num_) / static_cast<long double>(den_); }

  bool operator==(const Eigenvalue&) const = default;
  std::strong_ordering operator<=>(const Eigenvalue& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// (n^2 eig) = C(n+1,2) - C(|mu|+1,2) + diag(lambda) - diag(mu), as an
/// integer. Requires lambda/mu to be a horizontal strip.
std::int64_t scaled_eigenvalue(const Partition& lambda, const Partition& mu);

/// Eigenvalue indexed by the horizontal strip lambda/mu. Throws
/// std::invalid_argument for a non-strip or an empty lambda.
Eigenvalue eigenvalue(const Partition& lambda, const Partition& mu);

struct SpectrumEntry {
  Partition lambda;
  Partition mu;
  Eigenvalue value;
  BigInt multiplicity;
};

struct Spectrum {
  int n = 0;
  Partition evaluation;
  /// Sorted by value descending, then lambda and mu in canonical
  /// (lexicographically descending) order. Includes zero-multiplicity pairs.
  std::vector<SpectrumEntry> entries;

  /// Entries with nonzero multiplicity.
  std::vector<SpectrumEntry> nonzero_entries() const;
  /// Sum of multiplicities, i.e. the number of deck arrangements.
  BigInt total_multiplicity() const;
};

/// Largest deck accepted by full_spectrum / spectrum_with_evaluation.
inline constexpr int kDefaultSpectrumCap = 40;

/// Calls `visit(lambda, mu, value)` for every horizontal strip pair with
/// |lambda| = n, without computing multiplicities.
void for_each_strip_pair(int n, const std::function<void(const Partition&, const Partition&, const Eigenvalue&)>& visit);

/// All strip pairs of weight n with multiplicity d_lambda * d^mu.
Spectrum full_spectrum(int n, int cap = kDefaultSpectrumCap);

/// Deck with nu_i cards of type i: pairs with lambda dominating nu and
/// multiplicity K_{lambda,nu} * d^mu. A single-type deck (nu = [n]) is
/// rejected unless `allow_single_type` is set.
Spectrum spectrum_with_evaluation(const Partition& nu, bool allow_single_type = false,
                                  int cap = kDefaultSpectrumCap);

/// sum multiplicity * value^t, exact.
Rational spectral_trace_exact(const Spectrum& s, unsigned t);
/// Same sum in extended precision with compensated accumulation.
long double spectral_trace(const Spectrum& s, unsigned t);

}  // namespace r2r
