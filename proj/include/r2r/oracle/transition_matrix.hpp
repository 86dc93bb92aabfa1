#pragma once

#include <Eigen/Dense>

#include "r2r/partition.hpp"

namespace r2r::oracle {

enum class ShuffleKind { random_to_random, random_to_top };

/// Dense transition matrix over deck arrangements, rows indexed by the
/// current arrangement (rows sum to 1). Entries are exact: counts / denominator.
struct TransitionMatrix {
  ShuffleKind kind = ShuffleKind::random_to_random;
  Partition evaluation;
  Eigen::MatrixXi counts;
  int denominator = 1;

  int deck_size() const { return evaluation.size(); }
  Eigen::Index states() const { return counts.rows(); }

  /// counts / denominator in the requested scalar type.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> as() const {
    return counts.cast<Scalar>() / Scalar(denominator);
  }

  bool is_symmetric() const { return counts == counts.transpose(); }
  bool is_doubly_stochastic() const;
};

/// Largest distinct deck accepted by the dense builders (7! = 5040 states).
inline constexpr int kMaxOracleDeck = 7;
inline constexpr Eigen::Index kMaxOracleStates = 5040;

/// n^2 equally likely (remove position, insert position) moves.
TransitionMatrix build_r2r_matrix(int n);
/// n equally likely moves of a card to the top.
TransitionMatrix build_r2t_matrix(int n);
/// Random-to-random on a deck with nu[i] cards of type i.
TransitionMatrix build_r2r_multiset(const Partition& nu);

/// A A^T for a row-indexed A, i.e. A^* A for the operator that pushes
/// distributions forward (the transpose). For random-to-top this is the
/// random-to-random walk.
TransitionMatrix adjoint_product(const TransitionMatrix& a);

}  // namespace r2r::oracle
