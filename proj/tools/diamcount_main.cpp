// Command-line front end: every library experiment as a reproducible
// subcommand.  Each run writes one CSV table plus a JSON metadata sidecar
// (<out>.meta.json) and prints a short human summary to stdout.
//
// Exit codes: 0 success, 1 bad usage or invalid parameters, 2 internal
// invariant violation.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diamcount/bounds.hpp"
#include "diamcount/census.hpp"
#include "diamcount/family.hpp"
#include "diamcount/hyperbolic.hpp"
#include "diamcount/io.hpp"
#include "diamcount/nerve.hpp"
#include "diamcount/schreier.hpp"

namespace {

using namespace diamcount;

class Timer {
 public:
  double ms() const {
    const auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string fmt_bool(bool b) { return b ? "1" : "0"; }

ConstraintMode parse_mode(const std::string& mode) {
  return mode == "even-only" ? ConstraintMode::kEvenOnly
                             : ConstraintMode::kAllBelowHalf;
}

// ---------------------------------------------------------------- census --

struct CensusArgs {
  int max_index = 5;
  std::string out = "census.csv";
};

int run_census(const CensusArgs& args) {
  Timer timer;
  const std::vector<BigInt> oracle = hall_subgroup_counts(args.max_index);

  CsvWriter csv(
      {"r", "transitive_pairs", "equivalence_classes", "hall_count", "match"});
  bool all_match = true;
  for (int r = 1; r <= args.max_index; ++r) {
    const CensusResult counts = enumerate_transitive_pairs(r);
    const bool match = BigInt(counts.equivalence_classes) == oracle[r - 1];
    all_match = all_match && match;
    csv.row({std::to_string(r), std::to_string(counts.transitive_pairs),
             std::to_string(counts.equivalence_classes), oracle[r - 1].str(),
             fmt_bool(match)});
  }
  write_text_file(args.out, csv.str());
  write_sidecar(args.out, "census", {{"max_index", args.max_index}},
                std::nullopt, timer.ms());

  std::cout << "census r=1.." << args.max_index << ": "
            << (all_match ? "all class counts match the recurrence"
                          : "MISMATCH against the recurrence")
            << " (" << args.out << ")\n";
  if (!all_match)
    throw std::logic_error(
        "census: brute-force class counts disagree with the recurrence");
  return 0;
}

// ---------------------------------------------------------------- family --

struct FamilyArgs {
  int r = 8;
  std::string mode = "all-below-half";
  bool verify_reps = false;
  std::uint64_t budget = 100;
  std::uint64_t seed = 0;
  std::string out = "family.csv";
};

int run_family(const FamilyArgs& args) {
  Timer timer;
  const FamilySpec spec{args.r, parse_mode(args.mode)};
  const BigInt size = family_size(spec);
  const double size_log = log_big(size);
  const std::size_t constrained = constrained_inputs(spec).size();

  RepVerification rv;
  double length_bound = 0.0;
  if (args.verify_reps) {
    rv = verify_representatives(spec, args.budget, args.seed);
    const int i_max = (args.r - 1) / 2;
    length_bound =
        i_max >= 1 ? 3.0 * (1.0 + std::log2(static_cast<double>(i_max))) : 0.0;
  }

  CsvWriter csv({"r", "mode", "constrained_count", "family_size",
                 "family_size_log", "verified", "words_checked", "violations",
                 "max_word_length", "length_bound"});
  csv.row({std::to_string(args.r), args.mode, std::to_string(constrained),
           decimal_digits(size) <= 1000000 ? size.str() : std::string(),
           format_real(size_log), fmt_bool(args.verify_reps),
           args.verify_reps ? std::to_string(rv.words_checked) : std::string(),
           args.verify_reps ? std::to_string(rv.violations) : std::string(),
           args.verify_reps ? std::to_string(rv.max_word_length)
                            : std::string(),
           args.verify_reps ? format_real(length_bound) : std::string()});
  write_text_file(args.out, csv.str());
  write_sidecar(args.out, "family",
                {{"r", args.r},
                 {"mode", args.mode},
                 {"verify_reps", args.verify_reps},
                 {"budget", args.budget}},
                args.seed, timer.ms());

  std::cout << "family r=" << args.r << " mode=" << args.mode << ": |S| = "
            << (decimal_digits(size) <= 40 ? size.str()
                                           : "e^" + format_real(size_log))
            << "\n";
  if (args.verify_reps) {
    if (rv.violations == 0) {
      std::cout << "all representatives valid, max length "
                << rv.max_word_length << " <= " << format_real(length_bound)
                << " (" << rv.words_checked << " evaluations)\n";
    } else {
      std::cout << rv.violations << " of " << rv.words_checked
                << " representative evaluations violated their contract\n";
      throw std::logic_error(
          "family: representative words failed verification");
    }
  }
  return 0;
}

// ---------------------------------------------------------- diameter-scan --

struct ScanArgs {
  std::vector<int> r_grid;
  int samples = 10;
  std::uint64_t seed = 0;
  std::string out = "diameter-scan.csv";
};

int run_scan(const ScanArgs& args) {
  Timer timer;
  const DiameterScan scan =
      diameter_growth_scan(args.r_grid, args.samples, args.seed);

  CsvWriter csv({"r", "sample", "diameter", "exact", "max_rep_length", "ratio"});
  for (const DiameterScanRow& row : scan.rows)
    csv.row({std::to_string(row.r), std::to_string(row.sample),
             std::to_string(row.diameter), fmt_bool(row.exact),
             std::to_string(row.max_rep_length), format_real(row.ratio)});
  write_text_file(args.out, csv.str());
  write_sidecar(args.out, "diameter-scan",
                {{"r_grid", args.r_grid}, {"samples", args.samples}}, args.seed,
                timer.ms());

  std::cout << "diameter scan over " << args.r_grid.size() << " degrees, "
            << scan.rows.size() << " graphs: empirical D = max diameter/log2 r = "
            << format_real(scan.empirical_d) << "\n";
  return 0;
}

// ----------------------------------------------------------- random-graph --

struct RandomGraphArgs {
  std::vector<int> n_grid;
  int k = 5;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string out = "random-graph.csv";
};

int run_random_graph(const RandomGraphArgs& args) {
  Timer timer;
  const ExpanderExperiment exp =
      expander_diameter_experiment(args.n_grid, args.k, args.trials, args.seed);

  CsvWriter csv(
      {"n", "trial", "connected", "diameter", "exact", "moore_lower", "ratio"});
  for (const ExpanderTrialRow& row : exp.trials)
    csv.row({std::to_string(row.n), std::to_string(row.trial),
             fmt_bool(row.connected),
             row.diameter ? std::to_string(*row.diameter) : std::string(),
             row.diameter ? fmt_bool(row.exact) : std::string(),
             std::to_string(row.moore_lower),
             row.ratio ? format_real(*row.ratio) : std::string()});
  write_text_file(args.out, csv.str());
  write_sidecar(
      args.out, "random-graph",
      {{"n_grid", args.n_grid}, {"k", args.k}, {"trials", args.trials}},
      args.seed, timer.ms());

  for (const ExpanderSummary& s : exp.summaries)
    std::cout << "n=" << s.n << ": connected "
              << format_real(100.0 * s.connected_fraction)
              << "%, diameter min/median/max = " << format_real(s.diameter_min)
              << "/" << format_real(s.diameter_median) << "/"
              << format_real(s.diameter_max)
              << ", median diameter/log2 n = " << format_real(s.median_ratio)
              << "\n";
  return 0;
}

// ---------------------------------------------------------------- bounds --

struct BoundsArgs {
  BoundConstants consts;
  std::string out = "bounds.csv";
};

int run_bounds(const BoundsArgs& args) {
  Timer timer;
  const BoundConstants& c = args.consts;
  if (!(c.k >= 1))
    throw std::invalid_argument("bounds: k must be >= 1");

  const double floor = injectivity_floor(c.d, c.c);
  const LogValue net = net_size_bound(c.d, c.c);
  const double degree_const = degree_bound_constant(floor);
  // The graph/skeleton counts need a net size >= 1; tiny d makes the volume
  // ratio dip below 1, so clamp (a cover needs at least one ball).
  const double s_used = std::max(1.0, net.value);
  const CountingBounds counts = counting_bounds(s_used, c.k);
  const TauBounds tau = tau_bounds(c);

  CsvWriter csv({"n", "d", "a", "b", "c", "k", "injectivity_floor", "net_size",
                 "net_size_log", "degree_constant", "s_used",
                 "log_graph_count", "log_skeleton_count", "lnln_lower",
                 "ln_upper"});
  csv.row({std::to_string(c.n), format_real(c.d), format_real(c.a),
           format_real(c.b), format_real(c.c), format_real(c.k),
           format_real(floor), format_real(net.value),
           format_real(net.log_value), format_real(degree_const),
           format_real(s_used), format_real(counts.log_graphs),
           format_real(counts.log_skeleta), format_real(tau.lnln_lower),
           format_real(tau.ln_upper)});
  write_text_file(args.out, csv.str());
  write_sidecar(args.out, "bounds",
                {{"n", c.n},
                 {"d", c.d},
                 {"a", c.a},
                 {"b", c.b},
                 {"c", c.c},
                 {"k", c.k}},
                std::nullopt, timer.ms());

  std::cout << "n=" << c.n << " d=" << format_real(c.d)
            << ": lnln_lower = " << format_real(tau.lnln_lower)
            << ", ln_upper = " << format_real(tau.ln_upper)
            << ", net size <= e^" << format_real(net.log_value)
            << ", degree constant = " << format_real(degree_const) << "\n";
  return 0;
}

// ----------------------------------------------------------------- nerve --

struct NerveArgs {
  int points = 1000;
  double radius = 0.2;
  std::uint64_t seed = 0;
  bool euclidean = false;
  double ball_radius = 2.0;
  std::string out = "nerve.csv";
};

int run_nerve(const NerveArgs& args) {
  Timer timer;
  if (args.points < 0)
    throw std::invalid_argument("nerve: --points must be >= 0");
  if (!(args.radius > 0))
    throw std::invalid_argument("nerve: --radius must be > 0");

  const Metric metric =
      args.euclidean ? Metric::kEuclidean : Metric::kHyperboloid;
  const Eigen::MatrixXd cloud =
      args.euclidean
          ? sample_euclidean_ball(args.points, args.ball_radius, args.seed)
          : sample_hyperbolic_ball(args.points, args.ball_radius, args.seed);

  const double sep = args.radius / 4.0;
  const std::vector<int> net = greedy_net(cloud, sep, metric);
  Eigen::MatrixXd net_points(cloud.rows(),
                             static_cast<Eigen::Index>(net.size()));
  for (std::size_t t = 0; t < net.size(); ++t)
    net_points.col(static_cast<Eigen::Index>(t)) = cloud.col(net[t]);

  const NerveComplex nerve = build_nerve(net_points, args.radius, metric);
  const NetCheck check = verify_net(cloud, net, sep, metric);

  // Packing bound on nerve degrees; in the Euclidean metric the volume
  // ratio is the exact cube of the radius ratio, 9^3.
  const double degree_bound =
      args.euclidean ? 729.0 : degree_bound_constant(args.radius);
  const long long triangle_bound = static_cast<long long>(net.size()) *
                                   nerve.max_degree *
                                   static_cast<long long>(nerve.max_degree);

  CsvWriter csv({"points", "metric", "ball_radius", "radius", "separation",
                 "net_size", "edges", "triangles", "max_degree",
                 "degree_bound", "triangle_bound", "separated", "maximal"});
  csv.row({std::to_string(args.points),
           args.euclidean ? "euclidean" : "hyperboloid",
           format_real(args.ball_radius), format_real(args.radius),
           format_real(sep), std::to_string(net.size()),
           std::to_string(nerve.edges.size()),
           std::to_string(nerve.triangles.size()),
           std::to_string(nerve.max_degree), format_real(degree_bound),
           std::to_string(triangle_bound), fmt_bool(check.separated),
           fmt_bool(check.maximal)});
  write_text_file(args.out, csv.str());
  write_sidecar(args.out, "nerve",
                {{"points", args.points},
                 {"radius", args.radius},
                 {"euclidean", args.euclidean},
                 {"ball_radius", args.ball_radius}},
                args.seed, timer.ms());

  std::cout << "net " << net.size() << " of " << args.points << " points, "
            << nerve.edges.size() << " edges, " << nerve.triangles.size()
            << " triangles, max degree " << nerve.max_degree << " (bound "
            << format_real(degree_bound) << ")\n";
  if (!check.separated || !check.maximal)
    throw std::logic_error("nerve: greedy net failed its own invariants");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Subgroup censuses, coset-graph diameters, and hyperbolic counting "
      "bounds"};
  app.require_subcommand(1);

  CensusArgs census_args;
  auto* census = app.add_subcommand(
      "census", "Brute-force transitive-pair classes vs the recurrence oracle");
  census->add_option("--max-index", census_args.max_index,
                     "largest degree r to enumerate (1..7)")
      ->required();
  census->add_option("--out", census_args.out, "CSV output path")
      ->capture_default_str();

  FamilyArgs family_args;
  auto* family = app.add_subcommand(
      "family", "The constrained permutation family and its coset words");
  family->add_option("--r", family_args.r, "degree r (>= 5)")->required();
  family
      ->add_option("--mode", family_args.mode,
                   "which inputs are pinned to i -> 2i")
      ->check(CLI::IsMember({"even-only", "all-below-half"}))
      ->capture_default_str();
  family->add_flag("--verify-reps", family_args.verify_reps,
                   "evaluate every representative word against sampled members");
  family
      ->add_option("--budget", family_args.budget,
                   "max members to enumerate or sample")
      ->capture_default_str();
  family->add_option("--seed", family_args.seed, "sampling seed")
      ->capture_default_str();
  family->add_option("--out", family_args.out, "CSV output path")
      ->capture_default_str();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand(
      "diameter-scan", "Coset-graph diameters of sampled family members");
  scan->add_option("--r-grid", scan_args.r_grid,
                   "comma-separated degrees (each >= 5)")
      ->required()
      ->delimiter(',');
  scan->add_option("--samples", scan_args.samples, "family members per degree")
      ->capture_default_str();
  scan->add_option("--seed", scan_args.seed, "sampling seed")
      ->capture_default_str();
  scan->add_option("--out", scan_args.out, "CSV output path")
      ->capture_default_str();

  RandomGraphArgs rg_args;
  auto* rg = app.add_subcommand(
      "random-graph", "Diameters of random 2k-regular multigraphs");
  rg->add_option("--n-grid", rg_args.n_grid, "comma-separated vertex counts")
      ->required()
      ->delimiter(',');
  rg->add_option("--k", rg_args.k, "permutations per graph (degree 2k, k >= 5)")
      ->capture_default_str();
  rg->add_option("--trials", rg_args.trials, "graphs per size")
      ->capture_default_str();
  rg->add_option("--seed", rg_args.seed, "sampling seed")
      ->capture_default_str();
  rg->add_option("--out", rg_args.out, "CSV output path")
      ->capture_default_str();

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand(
      "bounds", "Injectivity floor, net/degree/count bounds, two-sided bound");
  bounds->add_option("--n", bounds_args.consts.n, "dimension (>= 3)")
      ->required();
  bounds->add_option("--d", bounds_args.consts.d, "diameter bound (> 0)")
      ->required();
  bounds->add_option("--a", bounds_args.consts.a, "lower-bound constant")
      ->capture_default_str();
  bounds->add_option("--b", bounds_args.consts.b, "upper-bound constant")
      ->capture_default_str();
  bounds->add_option("--c", bounds_args.consts.c, "injectivity-floor constant")
      ->capture_default_str();
  bounds->add_option("--k", bounds_args.consts.k, "nerve degree bound")
      ->capture_default_str();
  bounds->add_option("--out", bounds_args.out, "CSV output path")
      ->capture_default_str();

  NerveArgs nerve_args;
  auto* nerve = app.add_subcommand(
      "nerve", "Greedy net and nerve skeleton of a sampled ball");
  nerve->add_option("--points", nerve_args.points, "cloud size")->required();
  nerve
      ->add_option("--radius", nerve_args.radius,
                   "nerve edge radius r (net separation r/4)")
      ->required();
  nerve->add_option("--seed", nerve_args.seed, "sampling seed")
      ->capture_default_str();
  nerve->add_flag("--euclidean", nerve_args.euclidean,
                  "sample a Euclidean ball instead of a hyperbolic one");
  nerve
      ->add_option("--ball-radius", nerve_args.ball_radius,
                   "radius of the sampled cloud")
      ->capture_default_str();
  nerve->add_option("--out", nerve_args.out, "CSV output path")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*census) return run_census(census_args);
    if (*family) return run_family(family_args);
    if (*scan) return run_scan(scan_args);
    if (*rg) return run_random_graph(rg_args);
    if (*bounds) return run_bounds(bounds_args);
    if (*nerve) return run_nerve(nerve_args);
    return 1;  // unreachable: a subcommand is required
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
