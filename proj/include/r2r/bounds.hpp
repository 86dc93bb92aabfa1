#pragma once

#include <vector>

#include "r2r/spectrum.hpp"

namespace r2r {

/// (3/4) n ln n - (1/4) n ln ln n + c n. Throws std::invalid_argument for n < 3.
double cutoff_time(int n, double c);

/// (3/2) n ln n + c n, the card-cyclic-to-random horizon. Its l2 distance at
/// time 2t is dominated by the random-to-random l2 distance at time t.
/// Throws std::invalid_argument for n < 3.
double cyclic_to_random_time(int n, double c);

/// Sum of multiplicity * value^(2t) over the nontrivial entries: the squared
/// l2 distance from any start, an upper bound on 4 TV^2.
double l2_bound_exact(const Spectrum& s, unsigned t);

/// Contribution of the lambda = [n-1,1], mu = [k,1] family:
/// sum_{k=1}^{n-1} (n-1) (1 - (n+k^2+k)/n^2)^(2t).
double largesteig_term(int n, double t);

struct AnalyticBoundReport {
  double value = 0;
  /// n! 2^(-2t), covering the l >= n/2 rows.
  double crude_term = 0;
  /// Closed-form estimate e^{2l} (n^2/2t)^{l/2} of each inner k-sum, for
  /// l = 2 .. floor(n/2); empty when t = 0.
  std::vector<double> closed_form_inner;
  /// Last k evaluated in each row l = 1..n-1; equals n-l unless truncated.
  std::vector<int> last_k;
  bool truncated = false;
};

/// sum_{l=1}^{n-1} n^l e^{-2tl/n} sum_{k=0}^{n-l} C(k+l, l-1) e^{-2t(k^2+kl)/n^2},
/// an upper bound on the squared l2 distance.
double analytic_upper_bound(int n, double t);
AnalyticBoundReport analytic_upper_bound_report(int n, double t);

/// sum_{k=1}^{n-1} (m-1) (1 - (n+k^2+k)/n^2)^(2t): the [n-1,1] block of a
/// deck with m card types, a lower bound on its squared l2 distance.
double word_lower_bound_witness(int n, int m, double t);

/// (sqrt(n) - 1)(m - 1)(1 - 2/n)^(2t), the simplified form that the witness
/// sum dominates.
double word_lower_bound_simplified(int n, int m, double t);

/// (n/4) ln m + (n/8) ln n - c n.
double word_lower_bound_time(int n, int m, double c);

}  // namespace r2r
