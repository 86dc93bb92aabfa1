#include "r2r/oracle/distribution.hpp"

#include <algorithm>

#include "r2r/oracle/jacobi.hpp"

namespace r2r::oracle {

bool prefers_exact_evolution(const TransitionMatrix& m, unsigned t) {
  const auto nonzeros = static_cast<std::uint64_t>((m.counts.array() != 0).count());
  return static_cast<std::uint64_t>(t) * nonzeros <= kExactEvolutionBudget;
}

ScaledDistribution scaled_point_mass(Eigen::Index states, Eigen::Index at) {
  if (at < 0 || at >= states) throw std::invalid_argument("scaled_point_mass: index out of range");
  ScaledDistribution d;
  d.weights.assign(static_cast<std::size_t>(states), BigInt(0));
  d.weights[static_cast<std::size_t>(at)] = 1;
  return d;
}

ScaledDistribution step_scaled(const TransitionMatrix& m, const ScaledDistribution& d) {
  const Eigen::Index states = m.states();
  if (static_cast<Eigen::Index>(d.weights.size()) != states) throw std::invalid_argument("step_scaled: size mismatch");
  ScaledDistribution next;
  next.weights.assign(d.weights.size(), BigInt(0));
  next.denominator = d.denominator * m.denominator;
  for (Eigen::Index i = 0; i < states; ++i) {
    const BigInt& w = d.weights[static_cast<std::size_t>(i)];
    if (w == 0) continue;
    for (Eigen::Index j = 0; j < states; ++j)
      if (const int c = m.counts(i, j)) next.weights[static_cast<std::size_t>(j)] += w * c;
  }
  return next;
}

// With N states and denominator D, d_i - 1/N = (N w_i - D) / (N D).
Rational tv_distance(const ScaledDistribution& d) {
  const BigInt states = d.weights.size();
  BigInt total = 0;
  for (const BigInt& w : d.weights) total += abs(states * w - d.denominator);
  return Rational(total, 2 * states * d.denominator);
}

Rational chi2_distance(const ScaledDistribution& d) {
  const BigInt states = d.weights.size();
  BigInt total = 0;
  for (const BigInt& w : d.weights) {
    const BigInt diff = states * w - d.denominator;
    total += diff * diff;
  }
  return Rational(total, states * d.denominator * d.denominator);
}

NumericSpectrum numeric_eigen_decomposition(const TransitionMatrix& m, bool with_residuals) {
  const Eigen::MatrixXd dense = m.as<double>();
  JacobiOptions opts;
  opts.compute_vectors = with_residuals;
  const JacobiResult<double> r = jacobi_eigen(dense, opts);

  NumericSpectrum out;
  out.values.assign(r.values.data(), r.values.data() + r.values.size());
  out.sweeps = r.sweeps;
  if (with_residuals) {
    double worst = 0;
    for (Eigen::Index k = 0; k < r.values.size(); ++k)
      worst = std::max(worst, (dense * r.vectors.col(k) - r.values(k) * r.vectors.col(k)).norm());
    out.max_residual = worst;
  }
  return out;
}

std::vector<double> numeric_eigenvalues(const TransitionMatrix& m) { return numeric_eigen_decomposition(m, false).values; }

}  // namespace r2r::oracle
