#include "r2r/oracle/monte_carlo.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "r2r/oracle/arrangement.hpp"

namespace r2r::oracle {

SplitMix64::result_type SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mixer(seed ^ (trial * 0xd1b54a32d192ed03ULL));
  return SplitMix64(mixer());
}

McSample mc_sample(int n, unsigned t, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > kMaxSimulatedDeck)
    throw std::invalid_argument("mc_sample: deck size " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxSimulatedDeck));
  if (trials == 0) throw std::invalid_argument("mc_sample: trials must be positive");

  McSample out;
  out.n = n;
  out.t = t;
  out.trials = trials;
  out.seed = seed;

  const bool tabulate = n <= kMaxTabulatedDeck;
  const ArrangementIndex index = ArrangementIndex::distinct(n);
  std::vector<std::uint64_t> tally(tabulate ? index.size() : 0, 0);
  std::vector<std::uint64_t> top_position(static_cast<std::size_t>(n), 0);
  std::uint64_t fixed_points = 0;

  Deck start(static_cast<std::size_t>(n));
  std::iota(start.begin(), start.end(), 0);
  Deck deck;
  const auto bound = static_cast<std::uint32_t>(n);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = SplitMix64::for_trial(seed, trial);
    deck = start;
    for (unsigned s = 0; s < t; ++s) {
      const int from = static_cast<int>(rng.below(bound));
      const int to = static_cast<int>(rng.below(bound));
      move_card(deck, from, to);
    }
    for (int i = 0; i < n; ++i) {
      fixed_points += deck[i] == i;
      if (deck[i] == 0) ++top_position[i];
    }
    if (tabulate) ++tally[index.rank(deck)];
  }

  const double total = static_cast<double>(trials);
  if (tabulate) {
    Eigen::VectorXd freq(static_cast<Eigen::Index>(tally.size()));
    for (std::size_t i = 0; i < tally.size(); ++i) freq(static_cast<Eigen::Index>(i)) = static_cast<double>(tally[i]) / total;
    out.frequencies = std::move(freq);
  }
  out.mean_fixed_points = static_cast<double>(fixed_points) / total;
  for (std::uint64_t c : top_position) out.top_card_position.push_back(static_cast<double>(c) / total);
  return out;
}

}  // namespace r2r::oracle
