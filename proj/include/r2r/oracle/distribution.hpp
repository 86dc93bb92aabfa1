#pragma once

#include <cstdint>
#include <limits>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "r2r/exact.hpp"
#include "r2r/oracle/transition_matrix.hpp"

namespace r2r::oracle {

template <typename Scalar>
using Distribution = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
Distribution<Scalar> point_mass(Eigen::Index states, Eigen::Index at = 0) {
  Distribution<Scalar> d = Distribution<Scalar>::Zero(states);
  d(at) = Scalar(1);
  return d;
}

template <typename Scalar>
Distribution<Scalar> uniform_distribution(Eigen::Index states) {
  return Distribution<Scalar>::Constant(states, Scalar(1) / Scalar(static_cast<long>(states)));
}

/// One step of d -> d M.
template <typename Scalar>
Distribution<Scalar> step_distribution(const TransitionMatrix& m, const Distribution<Scalar>& d) {
  if (d.size() != m.states()) throw std::invalid_argument("step_distribution: size mismatch");
  if constexpr (std::is_floating_point_v<Scalar>) {
    return (m.counts.cast<Scalar>().transpose() * d) / Scalar(m.denominator);
  } else {
    const Eigen::Index states = m.states();
    Distribution<Scalar> next = Distribution<Scalar>::Zero(states);
    for (Eigen::Index j = 0; j < states; ++j) {
      Scalar acc = 0;
      for (Eigen::Index i = 0; i < states; ++i) {
        const int c = m.counts(i, j);
        if (c != 0 && d(i) != 0) acc += d(i) * c;
      }
      next(j) = acc / m.denominator;
    }
    return next;
  }
}

/// start M^t.
template <typename Scalar>
Distribution<Scalar> evolve_distribution(const TransitionMatrix& m, Distribution<Scalar> d, unsigned t) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> forward = m.as<Scalar>().transpose();
    for (unsigned s = 0; s < t; ++s) d = forward * d;
    return d;
  } else {
    for (unsigned s = 0; s < t; ++s) d = step_distribution(m, d);
    return d;
  }
}

/// Exact distribution as integer weights over a shared denominator.
struct ScaledDistribution {
  std::vector<BigInt> weights;
  BigInt denominator = 1;

  Rational probability(std::size_t i) const { return Rational(weights[i], denominator); }
};

ScaledDistribution scaled_point_mass(Eigen::Index states, Eigen::Index at = 0);
ScaledDistribution step_scaled(const TransitionMatrix& m, const ScaledDistribution& d);
Rational tv_distance(const ScaledDistribution& d);
Rational chi2_distance(const ScaledDistribution& d);

/// Exact evolution is used when t times the number of nonzero matrix
/// entries stays within this many multiply-adds.
inline constexpr std::uint64_t kExactEvolutionBudget = 1'000'000;
bool prefers_exact_evolution(const TransitionMatrix& m, unsigned t);

/// (1/2) sum |d_i - 1/N| against the uniform target.
template <typename Derived>
typename Derived::Scalar tv_distance(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const Scalar u = Scalar(1) / Scalar(static_cast<long>(d.size()));
  Scalar total = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) total += abs(Scalar(d(i) - u));
  return total / 2;
}

/// sum (d_i - 1/N)^2 / (1/N) = ||d/pi - 1||_2^2 for the uniform pi.
template <typename Derived>
typename Derived::Scalar chi2_distance(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  const Scalar states = Scalar(static_cast<long>(d.size()));
  const Scalar u = Scalar(1) / states;
  Scalar total = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const Scalar diff = d(i) - u;
    total += diff * diff;
  }
  return total * states;
}

struct NumericSpectrum {
  /// Sorted descending, with multiplicity.
  std::vector<double> values;
  /// max ||M v - lambda v|| over eigenpairs; NaN unless residuals were requested.
  double max_residual = std::numeric_limits<double>::quiet_NaN();
  int sweeps = 0;
};

/// All eigenvalues of a symmetric transition matrix (Jacobi). Throws
/// std::invalid_argument for asymmetric input.
std::vector<double> numeric_eigenvalues(const TransitionMatrix& m);
NumericSpectrum numeric_eigen_decomposition(const TransitionMatrix& m, bool with_residuals);

}  // namespace r2r::oracle
