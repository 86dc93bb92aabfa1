#include "r2r/oracle/transition_matrix.hpp"

#include <stdexcept>
#include <string>

#include "r2r/oracle/arrangement.hpp"

namespace r2r::oracle {

bool TransitionMatrix::is_doubly_stochastic() const {
  const Eigen::VectorXi row_sums = counts.rowwise().sum();
  const Eigen::RowVectorXi col_sums = counts.colwise().sum();
  return (counts.array() >= 0).all() && (row_sums.array() == denominator).all() &&
         (col_sums.array() == denominator).all();
}

namespace {

template <typename Moves>
TransitionMatrix build(const ArrangementIndex& index, ShuffleKind kind, int denominator, Moves&& moves) {
  if (index.size() > static_cast<std::uint64_t>(kMaxOracleStates))
    throw std::invalid_argument("deck has " + std::to_string(index.size()) + " arrangements, cap is " +
                                std::to_string(kMaxOracleStates));
  const auto states = static_cast<Eigen::Index>(index.size());
  TransitionMatrix m;
  m.kind = kind;
  m.evaluation = index.evaluation();
  m.denominator = denominator;
  m.counts = Eigen::MatrixXi::Zero(states, states);
  for (Eigen::Index x = 0; x < states; ++x) {
    const Deck deck = index.unrank(static_cast<std::uint64_t>(x));
    moves(deck, [&](const Deck& next) { ++m.counts(x, static_cast<Eigen::Index>(index.rank(next))); });
  }
  return m;
}

void check_deck(int n) {
  if (n < 1 || n > kMaxOracleDeck)
    throw std::invalid_argument("deck size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOracleDeck));
}

void r2r_moves(const Deck& deck, const auto& emit) {
  const int n = static_cast<int>(deck.size());
  Deck next;
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to) {
      next = deck;
      move_card(next, from, to);
      emit(next);
    }
}

}  // namespace

TransitionMatrix build_r2r_matrix(int n) {
  check_deck(n);
  return build(ArrangementIndex::distinct(n), ShuffleKind::random_to_random, n * n,
               [](const Deck& d, const auto& emit) { r2r_moves(d, emit); });
}

TransitionMatrix build_r2t_matrix(int n) {
  check_deck(n);
  return build(ArrangementIndex::distinct(n), ShuffleKind::random_to_top, n, [n](const Deck& deck, const auto& emit) {
    Deck next;
    for (int from = 0; from < n; ++from) {
      next = deck;
      move_card(next, from, 0);
      emit(next);
    }
  });
}

TransitionMatrix build_r2r_multiset(const Partition& nu) {
  if (nu.empty()) throw std::invalid_argument("build_r2r_multiset: empty evaluation");
  const int n = nu.size();
  return build(ArrangementIndex(nu), ShuffleKind::random_to_random, n * n,
               [](const Deck& d, const auto& emit) { r2r_moves(d, emit); });
}

TransitionMatrix adjoint_product(const TransitionMatrix& a) {
  TransitionMatrix p;
  p.kind = ShuffleKind::random_to_random;
  p.evaluation = a.evaluation;
  p.denominator = a.denominator * a.denominator;
  p.counts = a.counts * a.counts.transpose();
  return p;
}

}  // namespace r2r::oracle
