#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "r2r/bounds.hpp"
#include "r2r/oracle/arrangement.hpp"
#include "r2r/oracle/distribution.hpp"
#include "r2r/oracle/jacobi.hpp"
#include "r2r/oracle/monte_carlo.hpp"
#include "r2r/oracle/transition_matrix.hpp"
#include "r2r/spectrum.hpp"

using namespace r2r;
using namespace r2r::oracle;

namespace {

// Arrangements in std::next_permutation order, starting from the sorted deck.
std::vector<Deck> lex_arrangements(const Partition& nu) {
  Deck deck;
  for (std::size_t i = 0; i < nu.length(); ++i) deck.insert(deck.end(), static_cast<std::size_t>(nu[i]), static_cast<int>(i));
  std::vector<Deck> out;
  do out.push_back(deck);
  while (std::next_permutation(deck.begin(), deck.end()));
  return out;
}

// Moves counted with vector erase/insert on a map-indexed state space.
Eigen::MatrixXi brute_r2r_counts(const Partition& nu) {
  const auto states = lex_arrangements(nu);
  std::map<Deck, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
  const int n = nu.size();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(states.size()));
  for (std::size_t x = 0; x < states.size(); ++x)
    for (int from = 0; from < n; ++from)
      for (int to = 0; to < n; ++to) {
        Deck d = states[x];
        const int card = d[static_cast<std::size_t>(from)];
        d.erase(d.begin() + from);
        d.insert(d.begin() + to, card);
        ++counts(static_cast<Eigen::Index>(x), index.at(d));
      }
  return counts;
}

std::vector<double> formula_values(const Spectrum& s) {
  std::vector<double> v;
  for (const auto& e : s.entries)
    for (long k = 0; k < e.multiplicity.convert_to<long>(); ++k) v.push_back(e.value.to_double());
  std::sort(v.rbegin(), v.rend());
  return v;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("arrangement ranking") {
  for (int n = 1; n <= 6; ++n) {
    const auto index = ArrangementIndex::distinct(n);
    const auto order = lex_arrangements(single_column(n));
    REQUIRE(index.size() == order.size());
    CHECK(index.rank(index.identity()) == 0);
    for (std::size_t r = 0; r < order.size(); ++r) {
      CHECK(index.rank(order[r]) == r);
      CHECK(index.unrank(r) == order[r]);
    }
  }
  for (const Partition& nu : {Partition{2, 1}, Partition{2, 2}, Partition{3, 2, 1}, Partition{2, 2, 1, 1}}) {
    const ArrangementIndex index(nu);
    const auto order = lex_arrangements(nu);
    REQUIRE(index.size() == order.size());
    CHECK(index.rank(index.identity()) == 0);
    for (std::size_t r = 0; r < order.size(); ++r) {
      CHECK(index.rank(order[r]) == r);
      CHECK(index.unrank(r) == order[r]);
    }
  }
  CHECK_THROWS_AS(ArrangementIndex::distinct(3).rank(Deck{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ArrangementIndex::distinct(3).unrank(6), std::out_of_range);

  Deck d{0, 1, 2, 3};
  move_card(d, 0, 2);
  CHECK(d == Deck{1, 2, 0, 3});
  move_card(d, 3, 0);
  CHECK(d == Deck{3, 1, 2, 0});
}

TEST_CASE("transition matrices") {
  const auto two = build_r2r_matrix(2);
  CHECK(two.denominator == 4);
  CHECK(two.as<double>().isApprox(Eigen::MatrixXd::Constant(2, 2, 0.5)));
  CHECK(build_r2t_matrix(2).as<double>().isApprox(Eigen::MatrixXd::Constant(2, 2, 0.5)));

  for (int n = 1; n <= 6; ++n) {
    const auto m = build_r2r_matrix(n);
    CHECK(m.counts == brute_r2r_counts(single_column(n)));
    CHECK(m.is_symmetric());
    CHECK(m.is_doubly_stochastic());
    CHECK(m.counts.diagonal().minCoeff() >= n);
    CHECK(m.kind == ShuffleKind::random_to_random);
    const auto a = build_r2t_matrix(n);
    CHECK((a.counts.rowwise().sum().array() == a.denominator).all());
    CHECK(a.counts.diagonal().minCoeff() >= 1);
  }
  CHECK_THROWS_AS(build_r2r_matrix(8), std::invalid_argument);
  CHECK_THROWS_AS(build_r2t_matrix(0), std::invalid_argument);

  CHECK(build_r2r_multiset(Partition{4}).counts == Eigen::MatrixXi::Constant(1, 1, 16));
  for (const Partition& nu : {Partition{2, 1}, Partition{2, 2}, Partition{2, 1, 1}, Partition{3, 1}, Partition{2, 2, 1},
                              Partition{3, 2, 1}}) {
    const auto m = build_r2r_multiset(nu);
    CHECK(m.counts == brute_r2r_counts(nu));
    CHECK(m.is_symmetric());
    CHECK(m.is_doubly_stochastic());
  }
  for (int n = 1; n <= 5; ++n) CHECK(build_r2r_multiset(single_column(n)).counts == build_r2r_matrix(n).counts);
  CHECK_THROWS_AS(build_r2r_multiset(Partition{2, 2, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("random-to-random is the symmetrized random-to-top") {
  for (int n = 1; n <= 5; ++n) {
    const auto a = build_r2t_matrix(n);
    const auto p = build_r2r_matrix(n);
    const auto aa = adjoint_product(a);
    CHECK(aa.denominator == p.denominator);
    CHECK(aa.counts == p.counts);
    // The other product order is a different matrix with the same spectrum.
    const Eigen::MatrixXi other = a.counts.transpose() * a.counts;
    if (n >= 3) CHECK(other != p.counts);
    const Eigen::MatrixXd other_d = other.cast<double>() / double(a.denominator * a.denominator);
    CHECK(max_gap(reference_eigenvalues(other_d), numeric_eigenvalues(p)) < 1e-10);
  }
}

TEST_CASE("jacobi solver") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int dim : {1, 2, 5, 17, 40}) {
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(gen);
    JacobiOptions opts;
    opts.compute_vectors = true;
    const auto r = jacobi_eigen(m, opts);
    std::vector<double> got(r.values.data(), r.values.data() + dim);
    CHECK(max_gap(got, reference_eigenvalues(m)) < 1e-12);
    CHECK((m * r.vectors - r.vectors * r.values.asDiagonal()).norm() < 1e-10);
    CHECK((r.vectors.transpose() * r.vectors - Eigen::MatrixXd::Identity(dim, dim)).norm() < 1e-10);
  }
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> ld(2, 2);
  ld << 2, 1, 1, 2;
  const auto r = jacobi_eigen(ld);
  CHECK(static_cast<double>(r.values(0)) == doctest::Approx(3));
  CHECK(static_cast<double>(r.values(1)) == doctest::Approx(1));

  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  CHECK_THROWS_AS(jacobi_eigen(asym), std::invalid_argument);
  CHECK_THROWS_AS(numeric_eigenvalues(build_r2t_matrix(3)), std::invalid_argument);
}

TEST_CASE("numeric spectrum matches the formula") {
  const auto two = numeric_eigenvalues(build_r2r_matrix(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(1));
  CHECK(std::abs(two[1]) < 1e-14);

  for (int n = 2; n <= 5; ++n) {
    const auto m = build_r2r_matrix(n);
    const auto numeric = numeric_eigenvalues(m);
    CHECK(numeric.size() == factorial(n));
    CHECK(max_gap(numeric, formula_values(full_spectrum(n))) < 1e-8);
    CHECK(max_gap(numeric, reference_eigenvalues(m.as<double>())) < 1e-10);
  }
  for (const Partition& nu : {Partition{2, 1}, Partition{2, 2}, Partition{2, 1, 1}, Partition{3, 1}, Partition{2, 2, 1}})
    CHECK(max_gap(numeric_eigenvalues(build_r2r_multiset(nu)), formula_values(spectrum_with_evaluation(nu))) < 1e-8);

  const auto nu21 = numeric_eigenvalues(build_r2r_multiset(Partition{2, 1}));
  CHECK(nu21[0] == doctest::Approx(1));
  CHECK(nu21[1] == doctest::Approx(4.0 / 9));
  CHECK(std::abs(nu21[2]) < 1e-14);

  const auto full = numeric_eigen_decomposition(build_r2r_matrix(4), true);
  CHECK(full.max_residual <= 1e-9);
  CHECK(std::isnan(numeric_eigen_decomposition(build_r2r_matrix(3), false).max_residual));
}

TEST_CASE("distributions") {
  const auto two = build_r2r_matrix(2);
  const auto start = point_mass<double>(2);
  CHECK(evolve_distribution(two, start, 0) == start);
  CHECK(evolve_distribution(two, start, 1).isApprox(uniform_distribution<double>(2)));

  for (int n = 1; n <= 5; ++n) {
    const auto m = build_r2r_matrix(n);
    const double states = static_cast<double>(m.states());
    const auto delta = point_mass<double>(m.states());
    CHECK(tv_distance(delta) == doctest::Approx(1 - 1 / states));
    CHECK(chi2_distance(delta) == doctest::Approx(states - 1));
    CHECK(tv_distance(uniform_distribution<double>(m.states())) == doctest::Approx(0).epsilon(1e-15));
    CHECK(chi2_distance(uniform_distribution<double>(m.states())) < 1e-24);

    const auto exact = evolve_distribution(m, point_mass<Rational>(m.states()), 6);
    CHECK(exact.sum() == 1);
    CHECK(exact.minCoeff() >= 0);
    const auto fl = evolve_distribution(m, delta, 6);
    CHECK(std::abs(fl.sum() - 1) < 1e-12);
    for (Eigen::Index i = 0; i < fl.size(); ++i) CHECK(fl(i) == doctest::Approx(exact(i).convert_to<double>()).epsilon(1e-12));
    CHECK(tv_distance(exact).convert_to<double>() == doctest::Approx(tv_distance(fl)));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto m = build_r2r_matrix(n);
    auto scaled = scaled_point_mass(m.states());
    auto rational = point_mass<Rational>(m.states());
    for (unsigned t = 0; t <= 8; ++t) {
      CHECK(scaled.denominator == boost::multiprecision::pow(BigInt(n * n), t));
      for (std::size_t i = 0; i < scaled.weights.size(); ++i) CHECK(scaled.probability(i) == rational(static_cast<Eigen::Index>(i)));
      CHECK(tv_distance(scaled) == tv_distance(rational));
      CHECK(chi2_distance(scaled) == chi2_distance(rational));
      scaled = step_scaled(m, scaled);
      rational = step_distribution(m, rational);
    }
  }
  CHECK(tv_distance(scaled_point_mass(6)) == Rational(5, 6));
  CHECK(chi2_distance(scaled_point_mass(6)) == 5);
  CHECK_THROWS_AS(scaled_point_mass(3, 3), std::invalid_argument);
  CHECK(prefers_exact_evolution(build_r2r_matrix(3), 10));
  CHECK_FALSE(prefers_exact_evolution(build_r2r_matrix(6), 100));
  CHECK_THROWS_AS(step_distribution(two, point_mass<double>(3)), std::invalid_argument);
}

TEST_CASE("oracle distances against the spectrum") {
  for (int n = 2; n <= 6; ++n) {
    const auto m = build_r2r_matrix(n);
    const Spectrum s = full_spectrum(n);
    const Eigen::MatrixXd forward = m.as<double>().transpose();
    auto d = point_mass<double>(m.states());
    double previous_tv = 2;
    for (unsigned t = 0; t <= 60; ++t) {
      const double tv = tv_distance(d);
      const double chi2 = chi2_distance(d);
      const double l2 = l2_bound_exact(s, t);
      CHECK(tv <= previous_tv + 1e-15);
      CHECK(4 * tv * tv <= chi2 * (1 + 1e-12) + 1e-300);
      if (t <= 40) CHECK(std::abs(chi2 - l2) <= 1e-8 * std::max(1.0, l2));
      CHECK(l2 <= analytic_upper_bound(n, t));
      previous_tv = tv;
      d = forward * d;
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const Eigen::MatrixXd p = build_r2r_matrix(n).as<double>();
    const Spectrum s = full_spectrum(n);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(p.rows(), p.cols());
    for (unsigned t = 0; t <= 10; ++t) {
      CHECK(std::abs(power.trace() - static_cast<double>(spectral_trace(s, t))) <= 1e-9);
      power = power * p;
    }
  }
}

TEST_CASE("monte carlo") {
  const auto zero = mc_sample(4, 0, 1000, 3);
  REQUIRE(zero.frequencies);
  CHECK((*zero.frequencies)(0) == 1);
  CHECK(zero.mean_fixed_points == 4);

  const auto a = mc_sample(4, 5, 200000, 11);
  const auto b = mc_sample(4, 5, 200000, 11);
  CHECK(*a.frequencies == *b.frequencies);
  CHECK(a.mean_fixed_points == b.mean_fixed_points);
  const auto c = mc_sample(4, 5, 200000, 12);
  CHECK(*a.frequencies != *c.frequencies);
  CHECK(std::abs(a.frequencies->sum() - 1) < 1e-12);

  const auto m = build_r2r_matrix(4);
  const auto exact = evolve_distribution(m, point_mass<double>(m.states()), 5);
  CHECK(std::abs(tv_distance(*a.frequencies) - tv_distance(exact)) < 0.01);
  CHECK((*a.frequencies - exact).cwiseAbs().maxCoeff() < 0.01);

  const auto big = mc_sample(10, 0, 10, 1);
  CHECK_FALSE(big.frequencies);
  CHECK(big.mean_fixed_points == 10);
  CHECK(big.top_card_position[0] == 1);
  const auto mixed = mc_sample(9, 200, 20000, 5);
  CHECK(mixed.mean_fixed_points == doctest::Approx(1).epsilon(0.05));
  for (double p : mixed.top_card_position) CHECK(p == doctest::Approx(1.0 / 9).epsilon(0.15));

  CHECK_THROWS_AS(mc_sample(13, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_sample(5, 1, 0, 1), std::invalid_argument);

  auto r1 = SplitMix64::for_trial(1, 0), r2 = SplitMix64::for_trial(1, 1);
  CHECK(r1() != r2());
  std::vector<int> hist(5, 0);
  auto rng = SplitMix64::for_trial(9, 9);
  for (int i = 0; i < 50000; ++i) ++hist[rng.below(5)];
  for (int h : hist) CHECK(h == doctest::Approx(10000).epsilon(0.05));
}
