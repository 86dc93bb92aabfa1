#pragma once

#include <cstdint>
#include <vector>

#include "r2r/partition.hpp"

namespace r2r::oracle {

/// A deck arrangement, top card first. Card types are 0-based; a deck with
/// evaluation nu holds nu[i] cards of type i.
using Deck = std::vector<int>;

/// Bijection between arrangements of a deck with evaluation nu and
/// 0..size()-1. Distinct decks (nu = [1^n]) use the factorial number system
/// (Lehmer code); repeated-card decks use lexicographic rank among multiset
/// permutations. Both give the sorted deck rank 0 and agree on distinct decks.
class ArrangementIndex {
 public:
  explicit ArrangementIndex(Partition evaluation);
  static ArrangementIndex distinct(int n);

  int deck_size() const { return n_; }
  const Partition& evaluation() const { return evaluation_; }
  bool is_distinct() const { return distinct_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(const Deck& deck) const;
  Deck unrank(std::uint64_t rank) const;
  Deck identity() const;

 private:
  std::uint64_t multiset_count(const std::vector<int>& remaining, int cards) const;

  Partition evaluation_;
  int n_ = 0;
  bool distinct_ = false;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> factorials_;
};

/// Remove the card at position `from` and reinsert it so that it ends at
/// position `to` (both 0-based).
void move_card(Deck& deck, int from, int to);

}  // namespace r2r::oracle
