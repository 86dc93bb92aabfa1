#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "r2r/bounds.hpp"
#include "r2r/io.hpp"
#include "r2r/oracle/distribution.hpp"
#include "r2r/oracle/monte_carlo.hpp"
#include "r2r/oracle/transition_matrix.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/verify.hpp"

namespace fs = std::filesystem;
using namespace r2r;

namespace {

struct Options {
  int n = 0;
  std::string evaluation;
  std::string format = "json";
  std::string output;
  bool include_zero = false;
  double c = 2.0;
  std::optional<unsigned> t_max;
  unsigned t_step = 0;
  unsigned t = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string suite = "all";
  int n_max = 6;
};

void emit(const std::string& text, const Options& opt, const std::string& default_name) {
  fs::path target;
  const char* dir = std::getenv("R2R_OUTPUT_DIR");
  if (!opt.output.empty()) {
    target = opt.output;
    if (target.is_relative() && dir && *dir) target = fs::path(dir) / target;
  } else if (dir && *dir) {
    target = fs::path(dir) / default_name;
  } else {
    std::cout << text;
    return;
  }
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + target.string());
  out << text;
}

std::string render(const io::Table& table, const io::RunMetadata& meta, const Options& opt, const io::Json& header) {
  if (opt.format == "csv") return io::table_csv(table, meta, header);
  return io::table_json(table, meta, header);
}

oracle::TransitionMatrix oracle_matrix(const Options& opt) {
  if (opt.evaluation.empty()) return oracle::build_r2r_matrix(opt.n);
  const Partition nu = io::parse_partition(opt.evaluation);
  if (opt.n != 0 && nu.size() != opt.n) throw std::invalid_argument("--evaluation must have weight n");
  return oracle::build_r2r_multiset(nu);
}

int run_spectrum(const Options& opt) {
  io::RunMetadata meta{"spectrum", {{"n", std::to_string(opt.n)}, {"format", opt.format}}};
  Spectrum s;
  if (opt.evaluation.empty()) {
    s = full_spectrum(opt.n);
  } else {
    const Partition nu = io::parse_partition(opt.evaluation);
    if (opt.n != 0 && nu.size() != opt.n) throw std::invalid_argument("--evaluation must have weight n");
    meta.parameters.emplace_back("evaluation", nu.to_string());
    s = spectrum_with_evaluation(nu);
  }
  if (opt.include_zero) meta.parameters.emplace_back("include_zero", "true");
  const std::string text = opt.format == "csv" ? io::spectrum_csv(s, meta, opt.include_zero)
                                               : io::spectrum_json(s, meta, opt.include_zero);
  emit(text, opt, "spectrum_n" + std::to_string(s.n) + "." + opt.format);
  return 0;
}

int run_bounds(const Options& opt) {
  const double t_star = cutoff_time(opt.n, opt.c);
  const unsigned t_max = opt.t_max.value_or(static_cast<unsigned>(std::ceil(t_star + 2.0 * opt.n)));
  const unsigned step = opt.t_step ? opt.t_step : std::max(1u, t_max / 100);
  io::RunMetadata meta{"bounds",
                       {{"n", std::to_string(opt.n)},
                        {"c", io::format_double(opt.c)},
                        {"t_max", std::to_string(t_max)},
                        {"t_step", std::to_string(step)},
                        {"format", opt.format}}};

  const bool with_l2 = opt.n <= 12;
  const bool with_tv = opt.n <= 6;
  std::optional<Spectrum> spectrum;
  if (with_l2) spectrum = full_spectrum(opt.n);
  io::Table table;
  table.columns = {"t"};
  if (with_l2) table.columns.push_back("l2_exact");
  table.columns.insert(table.columns.end(), {"analytic", "largesteig_term"});
  if (with_tv) table.columns.push_back("tv_exact");

  std::optional<oracle::TransitionMatrix> m;
  bool exact = false;
  Eigen::MatrixXd forward;
  oracle::Distribution<double> d;
  oracle::ScaledDistribution scaled;
  unsigned evolved = 0;
  if (with_tv) {
    m = oracle::build_r2r_matrix(opt.n);
    exact = oracle::prefers_exact_evolution(*m, t_max);
    if (exact) {
      scaled = oracle::scaled_point_mass(m->states());
    } else {
      forward = m->as<double>().transpose();
      d = oracle::point_mass<double>(m->states());
    }
  }
  for (unsigned t = 0; t <= t_max; t += step) {
    std::vector<io::Table::Value> row{static_cast<std::int64_t>(t)};
    if (with_l2) row.emplace_back(l2_bound_exact(*spectrum, t));
    row.emplace_back(analytic_upper_bound(opt.n, t));
    row.emplace_back(largesteig_term(opt.n, t));
    if (with_tv && exact) {
      for (; evolved < t; ++evolved) scaled = oracle::step_scaled(*m, scaled);
      row.emplace_back(oracle::tv_distance(scaled).convert_to<double>());
    } else if (with_tv) {
      for (; evolved < t; ++evolved) d = forward * d;
      row.emplace_back(oracle::tv_distance(d));
    }
    table.rows.push_back(std::move(row));
  }
  io::Json header{{"t_star", t_star}};
  if (with_tv) header["tv_arithmetic"] = exact ? "exact" : "float";
  emit(render(table, meta, opt, header), opt, "bounds_n" + std::to_string(opt.n) + "." + opt.format);
  return 0;
}

int run_profile(const Options& opt) {
  const oracle::TransitionMatrix m = oracle_matrix(opt);
  const unsigned t_max = opt.t_max.value_or(0);
  io::RunMetadata meta{"profile",
                       {{"n", std::to_string(m.deck_size())},
                        {"evaluation", m.evaluation.to_string()},
                        {"t_max", std::to_string(t_max)},
                        {"format", opt.format}}};
  const bool exact = oracle::prefers_exact_evolution(m, t_max);
  io::Table table;
  table.columns = {"t", "tv", "chi2"};
  if (exact) {
    auto d = oracle::scaled_point_mass(m.states());
    for (unsigned t = 0; t <= t_max; ++t) {
      if (t) d = oracle::step_scaled(m, d);
      table.rows.push_back({static_cast<std::int64_t>(t), oracle::tv_distance(d).convert_to<double>(),
                            oracle::chi2_distance(d).convert_to<double>()});
    }
  } else {
    const Eigen::MatrixXd forward = m.as<double>().transpose();
    auto d = oracle::point_mass<double>(m.states());
    for (unsigned t = 0; t <= t_max; ++t) {
      if (t) d = forward * d;
      table.rows.push_back({static_cast<std::int64_t>(t), oracle::tv_distance(d), oracle::chi2_distance(d)});
    }
  }
  io::Json header{{"states", m.states()}, {"arithmetic", exact ? "exact" : "float"}};
  emit(render(table, meta, opt, header), opt, "profile_n" + std::to_string(m.deck_size()) + "." + opt.format);
  return 0;
}

int run_verify(const Options& opt) {
  const auto results = verify::run_suite(opt.suite, opt.n_max);
  const io::RunMetadata meta{"verify", {{"suite", opt.suite}, {"n_max", std::to_string(opt.n_max)}}};
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  std::string text;
  if (opt.format == "json") {
    io::Json checks = io::Json::array();
    for (const auto& r : results)
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text = io::Json{{"metadata", io::to_json(meta)}, {"passed", ok}, {"checks", std::move(checks)}}.dump(2) + "\n";
  } else {
    text = io::csv_preamble(meta) + verify::format_report(results);
  }
  emit(text, opt, "verify_" + opt.suite + "." + (opt.format == "json" ? "json" : "txt"));
  return ok ? 0 : 1;
}

int run_simulate(const Options& opt) {
  const oracle::McSample sample = oracle::mc_sample(opt.n, opt.t, opt.trials, opt.seed);
  const io::RunMetadata meta{"simulate",
                             {{"n", std::to_string(opt.n)},
                              {"t", std::to_string(opt.t)},
                              {"trials", std::to_string(opt.trials)},
                              {"seed", std::to_string(opt.seed)},
                              {"format", opt.format}}};
  io::Json summary{{"mean_fixed_points", sample.mean_fixed_points}};
  io::Table table;
  if (sample.frequencies) {
    const auto& f = *sample.frequencies;
    const auto exact = oracle::evolve_distribution(oracle::build_r2r_matrix(opt.n),
                                                   oracle::point_mass<double>(f.size()), opt.t);
    summary["tv_empirical"] = oracle::tv_distance(f);
    summary["tv_exact"] = oracle::tv_distance(exact);
    summary["tv_empirical_vs_exact"] = (f - exact).cwiseAbs().sum() / 2;
    table.columns = {"rank", "probability"};
    for (Eigen::Index i = 0; i < f.size(); ++i) table.rows.push_back({static_cast<std::int64_t>(i), f(i)});
  } else {
    table.columns = {"position", "probability"};
    for (std::size_t i = 0; i < sample.top_card_position.size(); ++i)
      table.rows.push_back({static_cast<std::int64_t>(i), sample.top_card_position[i]});
  }
  emit(render(table, meta, opt, summary), opt, "simulate_n" + std::to_string(opt.n) + "." + opt.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum, mixing bounds and oracle checks for the random-to-random shuffle", "r2r"};
  app.set_version_flag("--version", std::string(R2R_VERSION));
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", opt.output, "output file (relative to $R2R_OUTPUT_DIR when set)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum");
  spectrum->add_option("--n", opt.n, "deck size")->check(CLI::Range(1, kDefaultSpectrumCap));
  spectrum->add_option("--evaluation", opt.evaluation, "repeated-card content, e.g. 2,1,1");
  spectrum->add_flag("--include-zero", opt.include_zero, "keep zero-multiplicity pairs");
  add_format(spectrum);

  auto* bounds = app.add_subcommand("bounds", "mixing-time bound curves");
  bounds->add_option("--n", opt.n, "deck size")->required()->check(CLI::Range(3, 1000000));
  bounds->add_option("--c", opt.c, "cutoff window offset")->required();
  bounds->add_option("--t-max", opt.t_max, "last time step");
  bounds->add_option("--t-step", opt.t_step, "time step stride")->check(CLI::PositiveNumber);
  add_format(bounds);

  auto* profile = app.add_subcommand("profile", "exact TV and chi-square from the oracle");
  profile->add_option("--n", opt.n, "deck size")->check(CLI::Range(1, oracle::kMaxOracleDeck));
  profile->add_option("--t-max", opt.t_max, "last time step")->required();
  profile->add_option("--evaluation", opt.evaluation, "repeated-card content");
  add_format(profile);

  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("--suite", opt.suite)->check(CLI::IsMember({"spectra", "bijection", "identities", "all"}));
  verify->add_option("--n-max", opt.n_max, "largest deck size")->check(CLI::Range(1, 40));
  verify->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("-o,--output", opt.output, "output file");

  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo");
  simulate->add_option("--n", opt.n, "deck size")->required()->check(CLI::Range(1, oracle::kMaxSimulatedDeck));
  simulate->add_option("--t", opt.t, "steps")->required();
  simulate->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", opt.seed);
  add_format(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (app.got_subcommand(verify) && !verify->count("--format")) opt.format = "text";
  if ((app.got_subcommand(spectrum) || app.got_subcommand(profile)) && opt.n == 0 && opt.evaluation.empty()) {
    std::cerr << "error: --n or --evaluation is required\n";
    return 2;
  }

  try {
    if (app.got_subcommand(spectrum)) return run_spectrum(opt);
    if (app.got_subcommand(bounds)) return run_bounds(opt);
    if (app.got_subcommand(profile)) return run_profile(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(simulate)) return run_simulate(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
