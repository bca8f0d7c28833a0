#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cachesim/cachesim.h"
#include "output.hpp"

namespace {

using cachetool::Document;
using cachetool::format_number;

void check(cachesim_status status) {
  if (status != CACHESIM_OK) {
    throw std::runtime_error(cachesim_last_error_message());
  }
}

class Experiment {
 public:
  Experiment() { check(cachesim_experiment_create(&handle_)); }
  ~Experiment() { cachesim_experiment_destroy(handle_); }
  Experiment(const Experiment&) = delete;
  Experiment& operator=(const Experiment&) = delete;

  cachesim_experiment* get() const { return handle_; }

 private:
  cachesim_experiment* handle_ = nullptr;
};

struct Common {
  double beta = 1.0;
  double noise = 1.0;
  int trials = 500;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output;
  int threads = 1;
  bool verbose = false;
};

void add_common_options(CLI::App* sub, Common& c) {
  sub->add_option("--beta", c.beta, "SINR success threshold, linear scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--noise", c.noise, "noise power, linear scale")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--trials", c.trials, "independent realizations per point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "write the data document here");
  sub->add_option("--threads", c.threads, "worker threads across trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("-v,--verbose", c.verbose, "progress notes on stderr");
}

const CLI::Validator AlphaValidator(
    [](std::string& s) {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (...) {
        return std::string("value is not a number");
      }
      return v > 1.0 ? std::string() : std::string("alpha must exceed 1");
    },
    "FLOAT>1");

std::vector<int> parse_n_range(const std::string& text) {
  std::vector<long long> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    std::string piece = text.substr(
        start, colon == std::string::npos ? std::string::npos : colon - start);
    std::size_t used = 0;
    long long value = std::stoll(piece, &used);
    if (used != piece.size()) {
      throw std::invalid_argument("range piece is not an integer: " + piece);
    }
    parts.push_back(value);
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("expected FIRST:LAST or FIRST:LAST:STEP");
  }
  long long first = parts[0];
  long long last = parts[1];
  long long step = parts.size() == 3 ? parts[2] : 1;
  if (first < 1 || last < first || step < 1) {
    throw std::invalid_argument(
        "need 1 <= FIRST <= LAST and STEP >= 1 in the size range");
  }
  std::vector<int> values;
  for (long long v = first; v <= last; v += step) {
    values.push_back(static_cast<int>(v));
  }
  return values;
}

const CLI::Validator NRangeValidator(
    [](std::string& s) {
      try {
        parse_n_range(s);
        return std::string();
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    },
    "FIRST:LAST[:STEP]");

void configure(const Experiment& ex, const Common& c, double alpha) {
  check(cachesim_experiment_set_shape(ex.get(), alpha));
  check(cachesim_experiment_set_budget(ex.get(), c.beta, c.noise));
  check(cachesim_experiment_set_trials(ex.get(), c.trials));
  check(cachesim_experiment_set_seed(ex.get(), c.seed));
  check(cachesim_experiment_set_threads(ex.get(), c.threads));
}

// Data goes to --output (atomic) with notes on stdout, or to stdout with
// notes diverted to stderr so piped data stays clean.
void emit(const Document& doc, const Common& c,
          const std::vector<std::string>& notes) {
  if (c.output.empty()) {
    std::cout << doc.render(c.format);
    for (const auto& line : notes) std::cerr << line << "\n";
  } else {
    cachetool::write_file_atomic(c.output, doc.render(c.format));
    for (const auto& line : notes) std::cout << line << "\n";
    std::cout << "wrote " << c.output << "\n";
  }
}

double shown_k(bool use_exponent, double k, int m, int n) {
  if (use_exponent) return k;
  if (n < 2) return 0.0;
  return std::log(static_cast<double>(m)) / std::log(static_cast<double>(n));
}

Document sweep_document(const std::vector<cachesim_point>& points,
                        const Common& c, bool use_exponent, double k,
                        int explicit_m, double alpha) {
  Document doc({"n", "m", "k", "alpha", "beta", "noise", "trials", "seed",
                "mean_T", "std_T", "ci95", "mean_t_star"});
  for (const auto& p : points) {
    doc.new_row()
        .add_int(p.n)
        .add_int(p.m)
        .add_real(shown_k(use_exponent, k, explicit_m, p.n))
        .add_real(alpha)
        .add_real(c.beta)
        .add_real(c.noise)
        .add_int(p.trials)
        .add_u64(c.seed)
        .add_real(p.mean_throughput)
        .add_real(p.std_throughput)
        .add_real(p.ci95_half_width)
        .add_real(p.mean_activation);
  }
  return doc;
}

std::string point_note(const cachesim_point& p) {
  return "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
         " mean_T=" + format_number(p.mean_throughput) +
         " ci95=" + format_number(p.ci95_half_width) +
         " mean_t_star=" + format_number(p.mean_activation) + " (" +
         std::to_string(p.trials) + " trials)";
}

int run_app(int argc, char** argv) {
  CLI::App app{
      "Monte Carlo study of opportunistic scheduling in cache-aided "
      "wireless networks with heavy-tailed fading"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cachesim_version()));

  // simulate: one aggregated point at a single network size
  auto* simulate = app.add_subcommand(
      "simulate", "average throughput at one network size");
  Common sim_c;
  int sim_n = 0;
  double sim_k = 0.0;
  int sim_m = 0;
  double sim_alpha = 0.0;
  simulate->add_option("--n", sim_n, "network size")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* sim_cache = simulate->add_option_group("cache rule");
  auto* sim_k_opt = sim_cache->add_option("--k", sim_k, "memory exponent")
                        ->check(CLI::Range(0.0, 1.0));
  sim_cache->add_option("--m", sim_m, "explicit cache size")
      ->check(CLI::PositiveNumber)
      ->excludes(sim_k_opt);
  sim_cache->require_option(1);
  simulate->add_option("--alpha", sim_alpha, "fading tail shape")
      ->required()
      ->check(AlphaValidator);
  add_common_options(simulate, sim_c);
  simulate->callback([&] {
    bool use_k = sim_k_opt->count() > 0;
    if (!use_k && sim_m > sim_n) {
      throw CLI::ValidationError("--m", "cache size exceeds network size");
    }
    Experiment ex;
    configure(ex, sim_c, sim_alpha);
    check(use_k ? cachesim_experiment_set_memory_exponent(ex.get(), sim_k)
                : cachesim_experiment_set_cache_size(ex.get(), sim_m));
    cachesim_point point;
    check(cachesim_run_point(ex.get(), sim_n, &point));
    auto doc = sweep_document({point}, sim_c, use_k, sim_k, sim_m, sim_alpha);
    emit(doc, sim_c, {point_note(point)});
  });

  // sweep: one point per size in a range
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "average throughput across a range of network sizes");
  Common sweep_c;
  std::string sweep_range;
  double sweep_k = 0.0;
  int sweep_m = 0;
  double sweep_alpha = 0.0;
  sweep_cmd->add_option("--n-range", sweep_range, "sizes FIRST:LAST[:STEP]")
      ->required()
      ->check(NRangeValidator);
  auto* sweep_cache = sweep_cmd->add_option_group("cache rule");
  auto* sweep_k_opt = sweep_cache->add_option("--k", sweep_k, "memory exponent")
                          ->check(CLI::Range(0.0, 1.0));
  sweep_cache->add_option("--m", sweep_m, "explicit cache size")
      ->check(CLI::PositiveNumber)
      ->excludes(sweep_k_opt);
  sweep_cache->require_option(1);
  sweep_cmd->add_option("--alpha", sweep_alpha, "fading tail shape")
      ->required()
      ->check(AlphaValidator);
  add_common_options(sweep_cmd, sweep_c);
  sweep_cmd->callback([&] {
    auto n_values = parse_n_range(sweep_range);
    bool use_k = sweep_k_opt->count() > 0;
    if (!use_k && sweep_m > n_values.front()) {
      throw CLI::ValidationError("--m",
                                 "cache size exceeds the smallest size");
    }
    Experiment ex;
    configure(ex, sweep_c, sweep_alpha);
    check(use_k ? cachesim_experiment_set_memory_exponent(ex.get(), sweep_k)
                : cachesim_experiment_set_cache_size(ex.get(), sweep_m));
    std::vector<cachesim_point> points(n_values.size());
    if (sweep_c.verbose) {
      // point-by-point calls match one sweep call exactly; this path just
      // adds progress lines
      for (std::size_t i = 0; i < n_values.size(); ++i) {
        check(cachesim_run_point(ex.get(), n_values[i], &points[i]));
        std::cerr << point_note(points[i]) << "\n";
      }
    } else {
      check(cachesim_run_sweep(ex.get(), n_values.data(), n_values.size(),
                               points.data()));
    }
    auto doc =
        sweep_document(points, sweep_c, use_k, sweep_k, sweep_m, sweep_alpha);
    emit(doc, sweep_c,
         {"swept " + std::to_string(points.size()) + " sizes"});
  });

  // exponent: log-log slope per (k, alpha) cell
  auto* exponent = app.add_subcommand(
      "exponent", "fit throughput scaling exponents over a (k, alpha) grid");
  Common exp_c;
  std::string exp_range;
  std::vector<double> exp_ks;
  std::vector<double> exp_alphas;
  exponent->add_option("--n-range", exp_range, "sizes FIRST:LAST[:STEP]")
      ->required()
      ->check(NRangeValidator);
  exponent->add_option("--k-grid", exp_ks, "memory exponents")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  exponent->add_option("--alpha-grid", exp_alphas, "fading tail shapes")
      ->required()
      ->delimiter(',')
      ->check(AlphaValidator);
  add_common_options(exponent, exp_c);
  exponent->callback([&] {
    auto n_values = parse_n_range(exp_range);
    Document doc({"k", "alpha", "slope_fitted", "slope_predicted", "intercept",
                  "r_squared", "n_min", "n_max", "trials"});
    std::vector<std::string> notes;
    for (double k : exp_ks) {
      for (double alpha : exp_alphas) {
        Experiment ex;
        configure(ex, exp_c, alpha);
        check(cachesim_experiment_set_memory_exponent(ex.get(), k));
        std::vector<cachesim_point> points(n_values.size());
        check(cachesim_run_sweep(ex.get(), n_values.data(), n_values.size(),
                                 points.data()));
        cachesim_fit fit;
        check(cachesim_fit_points(points.data(), points.size(), k, alpha,
                                  &fit));
        if (static_cast<std::size_t>(fit.points_used) < points.size()) {
          std::cerr << "warning: dropped "
                    << points.size() - static_cast<std::size_t>(fit.points_used)
                    << " zero-throughput points at k=" << format_number(k)
                    << " alpha=" << format_number(alpha) << "\n";
        }
        doc.new_row()
            .add_real(k)
            .add_real(alpha)
            .add_real(fit.slope)
            .add_real(fit.predicted_slope)
            .add_real(fit.intercept)
            .add_real(fit.r_squared)
            .add_int(fit.n_min)
            .add_int(fit.n_max)
            .add_int(exp_c.trials);
        std::string note = "k=" + format_number(k) +
                           " alpha=" + format_number(alpha) +
                           " slope=" + format_number(fit.slope) +
                           " predicted=" + format_number(fit.predicted_slope) +
                           " r2=" + format_number(fit.r_squared);
        notes.push_back(note);
        if (exp_c.verbose) std::cerr << note << "\n";
      }
    }
    emit(doc, exp_c, notes);
  });

  // oracle-compare: scheduler vs exhaustive optimum on shared instances
  auto* oracle = app.add_subcommand(
      "oracle-compare",
      "compare the scheduler against exhaustive search at small sizes");
  Common orc_c;
  int orc_n = 0;
  int orc_m = 0;
  double orc_alpha = 0.0;
  oracle->add_option("--n", orc_n, "network size (<= 10)")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--m", orc_m, "cache size")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--alpha", orc_alpha, "fading tail shape")
      ->required()
      ->check(AlphaValidator);
  add_common_options(oracle, orc_c);
  oracle->callback([&] {
    if (orc_m > orc_n) {
      throw CLI::ValidationError("--m", "cache size exceeds network size");
    }
    Experiment ex;
    configure(ex, orc_c, orc_alpha);
    std::vector<cachesim_gap_row> rows(
        static_cast<std::size_t>(orc_c.trials));
    cachesim_gap_summary summary;
    check(cachesim_oracle_compare(ex.get(), orc_n, orc_m, rows.data(),
                                  &summary));
    Document doc({"trial", "n", "m", "T_alg", "T_oracle", "ratio"});
    for (const auto& row : rows) {
      doc.new_row()
          .add_int(row.trial)
          .add_int(orc_n)
          .add_int(orc_m)
          .add_int(row.alg_throughput)
          .add_int(row.oracle_throughput)
          .add_real(row.ratio);
    }
    emit(doc, orc_c,
         {"mean_T_alg=" + format_number(summary.mean_alg) +
          " mean_T_oracle=" + format_number(summary.mean_oracle) +
          " mean_ratio=" + format_number(summary.mean_ratio)});
  });

  // theory: closed-form quantities
  auto* theory = app.add_subcommand(
      "theory", "closed-form scaling quantities for given parameters");
  Common thr_c;
  double thr_n = 0.0;
  double thr_k = 0.0;
  double thr_alpha = 0.0;
  double thr_epsilon = 0.05;
  theory->add_option("--n", thr_n, "network size (real-valued)")
      ->required()
      ->check(CLI::Range(1.0, 1e300));
  theory->add_option("--k", thr_k, "memory exponent")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  theory->add_option("--alpha", thr_alpha, "fading tail shape")
      ->required()
      ->check(AlphaValidator);
  theory->add_option("--epsilon", thr_epsilon, "slack in the activation scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_options(theory, thr_c);
  theory->callback([&] {
    cachesim_theory values;
    check(cachesim_theory_eval(thr_n, thr_k, thr_alpha, thr_epsilon, &values));
    std::cout << "t=" << format_number(values.activation_scale) << "\n"
              << "predicted_exponent="
              << format_number(values.predicted_exponent) << "\n"
              << "lower_bound=" << format_number(values.lower_bound) << "\n"
              << "cache_scale=" << format_number(values.cache_scale) << "\n"
              << "a_n_asymptotic=" << format_number(values.a_n_asymptotic)
              << "\n"
              << "falk_a=" << format_number(values.falk_a) << "\n"
              << "falk_b=" << format_number(values.falk_b) << "\n";
    if (!thr_c.output.empty()) {
      Document doc({"n", "k", "alpha", "epsilon", "t", "predicted_exponent",
                    "lower_bound", "cache_scale", "a_n_asymptotic", "falk_a",
                    "falk_b"});
      doc.new_row()
          .add_real(thr_n)
          .add_real(thr_k)
          .add_real(thr_alpha)
          .add_real(thr_epsilon)
          .add_real(values.activation_scale)
          .add_real(values.predicted_exponent)
          .add_real(values.lower_bound)
          .add_real(values.cache_scale)
          .add_real(values.a_n_asymptotic)
          .add_real(values.falk_a)
          .add_real(values.falk_b);
      cachetool::write_file_atomic(thr_c.output, doc.render(thr_c.format));
      std::cout << "wrote " << thr_c.output << "\n";
    }
  });

  // validate-theory: measured means next to the t/4 reference
  auto* validate = app.add_subcommand(
      "validate-theory",
      "report measured mean throughput against the t/4 reference");
  Common val_c;
  std::string val_range;
  double val_k = 0.0;
  double val_alpha = 0.0;
  double val_epsilon = 0.05;
  validate->add_option("--n-range", val_range, "sizes FIRST:LAST[:STEP]")
      ->required()
      ->check(NRangeValidator);
  validate->add_option("--k", val_k, "memory exponent")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  validate->add_option("--alpha", val_alpha, "fading tail shape")
      ->required()
      ->check(AlphaValidator);
  validate
      ->add_option("--epsilon", val_epsilon, "slack in the activation scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_options(validate, val_c);
  validate->callback([&] {
    auto n_values = parse_n_range(val_range);
    Experiment ex;
    configure(ex, val_c, val_alpha);
    check(cachesim_experiment_set_memory_exponent(ex.get(), val_k));
    Document doc({"n", "m", "mean_T", "lower_bound", "met"});
    int met_count = 0;
    for (int n : n_values) {
      cachesim_point point;
      check(cachesim_run_point(ex.get(), n, &point));
      cachesim_theory values;
      check(cachesim_theory_eval(static_cast<double>(n), val_k, val_alpha,
                                 val_epsilon, &values));
      bool met = point.mean_throughput >= values.lower_bound;
      met_count += met ? 1 : 0;
      if (!met) {
        std::cerr << "note: n=" << n << " mean_T="
                  << format_number(point.mean_throughput) << " below t/4="
                  << format_number(values.lower_bound)
                  << " (asymptotic reference)\n";
      }
      if (val_c.verbose) std::cerr << point_note(point) << "\n";
      doc.new_row()
          .add_int(point.n)
          .add_int(point.m)
          .add_real(point.mean_throughput)
          .add_real(values.lower_bound)
          .add_int(met ? 1 : 0);
    }
    emit(doc, val_c,
         {std::to_string(met_count) + "/" + std::to_string(n_values.size()) +
          " sizes meet the t/4 reference"});
  });

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
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
