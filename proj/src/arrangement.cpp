#include "r2r/oracle/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace r2r::oracle {

ArrangementIndex::ArrangementIndex(Partition evaluation) : evaluation_(std::move(evaluation)) {
  n_ = evaluation_.size();
  if (n_ > 20) throw std::invalid_argument("ArrangementIndex: decks above 20 cards overflow 64-bit ranks");
  distinct_ = evaluation_.first() <= 1;
  factorials_.assign(static_cast<std::size_t>(n_) + 1, 1);
  for (int i = 1; i <= n_; ++i) factorials_[i] = factorials_[i - 1] * static_cast<std::uint64_t>(i);
  size_ = multiset_count(evaluation_.parts(), n_);
}

ArrangementIndex ArrangementIndex::distinct(int n) { return ArrangementIndex(single_column(n)); }

std::uint64_t ArrangementIndex::multiset_count(const std::vector<int>& remaining, int cards) const {
  std::uint64_t count = factorials_[cards];
  for (int c : remaining) count /= factorials_[c];
  return count;
}

Deck ArrangementIndex::identity() const {
  Deck deck;
  deck.reserve(static_cast<std::size_t>(n_));
  for (std::size_t type = 0; type < evaluation_.length(); ++type)
    deck.insert(deck.end(), static_cast<std::size_t>(evaluation_[type]), static_cast<int>(type));
  return deck;
}

std::uint64_t ArrangementIndex::rank(const Deck& deck) const {
  if (static_cast<int>(deck.size()) != n_) throw std::invalid_argument("rank: deck has the wrong size");
  std::uint64_t r = 0;
  if (distinct_) {
    for (int i = 0; i < n_; ++i) {
      std::uint64_t smaller_later = 0;
      for (int j = i + 1; j < n_; ++j) smaller_later += deck[j] < deck[i];
      r += smaller_later * factorials_[n_ - 1 - i];
    }
    return r;
  }
  std::vector<int> remaining = evaluation_.parts();
  for (int i = 0; i < n_; ++i) {
    const int card = deck[i];
    if (card < 0 || card >= static_cast<int>(remaining.size()) || remaining[card] == 0)
      throw std::invalid_argument("rank: deck does not match the evaluation");
    for (int type = 0; type < card; ++type) {
      if (remaining[type] == 0) continue;
      --remaining[type];
      r += multiset_count(remaining, n_ - 1 - i);
      ++remaining[type];
    }
    --remaining[card];
  }
  return r;
}

Deck ArrangementIndex::unrank(std::uint64_t r) const {
  if (r >= size_) throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of range");
  Deck deck;
  deck.reserve(static_cast<std::size_t>(n_));
  std::vector<int> remaining = evaluation_.parts();
  for (int i = 0; i < n_; ++i) {
    for (int type = 0; type < static_cast<int>(remaining.size()); ++type) {
      if (remaining[type] == 0) continue;
      --remaining[type];
      const std::uint64_t block = multiset_count(remaining, n_ - 1 - i);
      if (r < block) {
        deck.push_back(type);
        break;
      }
      r -= block;
      ++remaining[type];
    }
  }
  return deck;
}

void move_card(Deck& deck, int from, int to) {
  if (from < to)
    std::rotate(deck.begin() + from, deck.begin() + from + 1, deck.begin() + to + 1);
  else if (to < from)
    std::rotate(deck.begin() + to, deck.begin() + from, deck.begin() + from + 1);
}

}  // namespace r2r::oracle
