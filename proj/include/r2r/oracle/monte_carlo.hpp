#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace r2r::oracle {

/// SplitMix64. One independent stream per (seed, trial) pair.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();
  /// Uniform integer in [0, bound) by multiply-shift.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

inline constexpr int kMaxSimulatedDeck = 12;
inline constexpr int kMaxTabulatedDeck = 7;

struct McSample {
  int n = 0;
  unsigned t = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Empirical law over arrangement ranks (n <= 7 only).
  std::optional<Eigen::VectorXd> frequencies;
  /// Mean number of cards still at their starting position.
  double mean_fixed_points = 0;
  /// Empirical law of the final position of the starting top card.
  std::vector<double> top_card_position;
};

/// `trials` independent runs of t random-to-random moves from the sorted
/// deck. Throws std::invalid_argument for n outside 1..12 or zero trials.
McSample mc_sample(int n, unsigned t, std::uint64_t trials, std::uint64_t seed);

}  // namespace r2r::oracle
