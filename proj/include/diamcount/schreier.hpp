#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diamcount/permutation.hpp"

namespace diamcount {

/// Coset graph on {0..n-1} with one successor permutation per edge label.
/// The undirected view (labels traversable both ways) is what diameters and
/// connectivity refer to; a self-loop contributes 2 to the vertex degree.
class SchreierGraph {
 public:
  explicit SchreierGraph(std::vector<Permutation> labels);

  int degree() const { return n_; }
  int label_count() const { return static_cast<int>(succ_.size()); }
  const Permutation& successor(int label) const { return succ_[label]; }

  /// Flat adjacency: the 2*label_count() neighbors of u start at
  /// neighbors()[u * 2 * label_count()] (successor then predecessor per label).
  const std::vector<int>& neighbors() const { return neighbors_; }

  bool is_connected() const;

 private:
  int n_;
  std::vector<Permutation> succ_;
  std::vector<int> neighbors_;
};

/// The two-label coset graph of a transitive pair (label 0 = a, label 1 = b).
/// Throws invalid_argument if the pair is not transitive.
SchreierGraph build_schreier(const PermutationPair& pair);

/// Max BFS distance from `source`; -1 entries unreachable are an error
/// (throws invalid_argument on a disconnected graph).
int eccentricity(const SchreierGraph& g, int source);

/// Exact diameter by BFS from every vertex.  Connected graphs only.
int exact_diameter(const SchreierGraph& g);

// Vertex-count threshold up to which graph_diameter runs the exact
// all-source BFS; above it, a double-sweep lower bound is reported instead.
inline constexpr int kExactDiameterLimit = 1 << 13;

struct DiameterResult {
  int value = 0;
  bool exact = true;  // false: `value` is the double-sweep lower bound
};

/// Diameter with the size policy above.  The inexact branch alternates a few
/// farthest-point sweeps and returns the best eccentricity seen.
DiameterResult graph_diameter(const SchreierGraph& g);

struct LemmaConstants {
  double c1 = 0.0;  // 2 * diameter of the base
  double c2 = 1.0;  // 2 * max generator loop length
};

/// c1 + c2 * max_word_length: diameter bound for a cover whose coset
/// representatives all have length at most max_word_length.
double lemma_diameter_bound(const LemmaConstants& consts,
                            double max_word_length);

/// Random 2k-regular multigraph on n vertices: k independent uniform
/// permutations, one per label (permutation model).
SchreierGraph random_regular_graph(int n, int k, std::uint64_t seed);

/// Least D such that a ball of radius D in any 2k-regular graph can hold n
/// vertices: smallest D with 1 + sum_{j=1..D} 2k(2k-1)^(j-1) >= n.
int moore_diameter_lower_bound(int n, int k);

struct DiameterScanRow {
  int r = 0;
  int sample = 0;
  int diameter = 0;
  bool exact = true;
  int max_rep_length = 0;  // longest coset representative word at this r
  double ratio = 0.0;      // diameter / log2(r)
};

struct DiameterScan {
  std::vector<DiameterScanRow> rows;
  double empirical_d = 0.0;  // max ratio over all rows
};

/// For each r: sample family members (default constraint mode), build their
/// coset graphs, record exact diameters and ratios to log2(r).
DiameterScan diameter_growth_scan(const std::vector<int>& r_grid,
                                  int samples_per_r, std::uint64_t seed);

struct ExpanderTrialRow {
  int n = 0;
  int trial = 0;
  bool connected = false;
  std::optional<int> diameter;  // absent for disconnected samples
  bool exact = true;
  int moore_lower = 0;
  std::optional<double> ratio;  // diameter / log2(n)
};

struct ExpanderSummary {
  int n = 0;
  double connected_fraction = 0.0;
  // Quantiles over connected trials only.
  double diameter_min = 0.0;
  double diameter_median = 0.0;
  double diameter_max = 0.0;
  double median_ratio = 0.0;
};

struct ExpanderExperiment {
  std::vector<ExpanderTrialRow> trials;
  std::vector<ExpanderSummary> summaries;
};

/// Seeded diameter measurements of random 2k-regular multigraphs over a grid
/// of sizes.  Disconnected samples are kept in the trial table (diameter
/// empty) and excluded from the summary quantiles.  Requires k >= 5.
ExpanderExperiment expander_diameter_experiment(const std::vector<int>& n_grid,
                                                int k, int trials,
                                                std::uint64_t seed);

}  // namespace diamcount
