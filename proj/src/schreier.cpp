#include "diamcount/schreier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "diamcount/family.hpp"
#include "diamcount/rng.hpp"

namespace diamcount {

namespace {

struct BfsScratch {
  std::vector<int> dist;
  std::vector<int> queue;
};

// One BFS in the undirected multigraph; returns {eccentricity, vertices
// reached}.  Scratch buffers are reused across calls to keep all-source
// sweeps allocation-free.
std::pair<int, int> bfs(const SchreierGraph& g, int source, BfsScratch& s) {
  const int n = g.degree();
  const int deg = 2 * g.label_count();
  const int* nb = g.neighbors().data();
  s.dist.assign(n, -1);
  s.queue.resize(n);
  int head = 0, tail = 0;
  s.dist[source] = 0;
  s.queue[tail++] = source;
  int ecc = 0;
  while (head < tail) {
    const int u = s.queue[head++];
    const int du = s.dist[u];
    const int* row = nb + static_cast<std::ptrdiff_t>(u) * deg;
    for (int j = 0; j < deg; ++j) {
      const int v = row[j];
      if (s.dist[v] < 0) {
        s.dist[v] = du + 1;
        ecc = du + 1;
        s.queue[tail++] = v;
      }
    }
  }
  return {ecc, tail};
}

int farthest_vertex(const BfsScratch& s) {
  return static_cast<int>(std::max_element(s.dist.begin(), s.dist.end()) -
                          s.dist.begin());
}

double median_of_sorted(const std::vector<int>& v) {
  const std::size_t n = v.size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

SchreierGraph::SchreierGraph(std::vector<Permutation> labels)
    : succ_(std::move(labels)) {
  if (succ_.empty())
    throw std::invalid_argument("SchreierGraph: need at least one label");
  n_ = succ_[0].degree();
  for (const Permutation& p : succ_)
    if (p.degree() != n_)
      throw std::invalid_argument("SchreierGraph: label degrees disagree");

  const int k = static_cast<int>(succ_.size());
  neighbors_.resize(static_cast<std::size_t>(n_) * 2 * k);
  for (int l = 0; l < k; ++l) {
    const Permutation inv = succ_[l].inverse();
    for (int u = 0; u < n_; ++u) {
      neighbors_[static_cast<std::size_t>(u) * 2 * k + 2 * l] = succ_[l](u);
      neighbors_[static_cast<std::size_t>(u) * 2 * k + 2 * l + 1] = inv(u);
    }
  }
}

bool SchreierGraph::is_connected() const {
  BfsScratch s;
  return bfs(*this, 0, s).second == n_;
}

SchreierGraph build_schreier(const PermutationPair& pair) {
  if (!pair.transitive())
    throw std::invalid_argument(
        "build_schreier: pair is not transitive; its coset graph would be "
        "disconnected");
  return SchreierGraph({pair.sigma1(), pair.sigma2()});
}

int eccentricity(const SchreierGraph& g, int source) {
  if (source < 0 || source >= g.degree())
    throw std::out_of_range("eccentricity: source out of range");
  BfsScratch s;
  const auto [ecc, reached] = bfs(g, source, s);
  if (reached != g.degree())
    throw std::invalid_argument("eccentricity: graph is disconnected");
  return ecc;
}

int exact_diameter(const SchreierGraph& g) {
  BfsScratch s;
  int diam = 0;
  for (int src = 0; src < g.degree(); ++src) {
    const auto [ecc, reached] = bfs(g, src, s);
    if (reached != g.degree())
      throw std::invalid_argument("exact_diameter: graph is disconnected");
    diam = std::max(diam, ecc);
  }
  return diam;
}

DiameterResult graph_diameter(const SchreierGraph& g) {
  if (g.degree() <= kExactDiameterLimit)
    return {exact_diameter(g), true};

  // Double-sweep lower bound: chase farthest vertices for a few rounds and
  // keep the best eccentricity seen.  Never exceeds the true diameter.
  BfsScratch s;
  int best = 0;
  int src = 0;
  for (int sweep = 0; sweep < 4; ++sweep) {
    const auto [ecc, reached] = bfs(g, src, s);
    if (reached != g.degree())
      throw std::invalid_argument("graph_diameter: graph is disconnected");
    best = std::max(best, ecc);
    src = farthest_vertex(s);
  }
  return {best, false};
}

double lemma_diameter_bound(const LemmaConstants& consts,
                            double max_word_length) {
  if (!(consts.c1 >= 0))
    throw std::invalid_argument("lemma_diameter_bound: c1 must be >= 0");
  if (!(consts.c2 > 0))
    throw std::invalid_argument("lemma_diameter_bound: c2 must be > 0");
  if (!(max_word_length >= 0))
    throw std::invalid_argument(
        "lemma_diameter_bound: word length must be >= 0");
  return consts.c1 + consts.c2 * max_word_length;
}

SchreierGraph random_regular_graph(int n, int k, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_regular_graph: n must be >= 1");
  if (k < 1) throw std::invalid_argument("random_regular_graph: k must be >= 1");
  Rng rng(seed);
  std::vector<Permutation> labels;
  labels.reserve(k);
  std::vector<int> images(n);
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < n; ++i) images[i] = i;
    rng.shuffle(images);
    Eigen::VectorXi v(n);
    for (int i = 0; i < n; ++i) v[i] = images[i];
    labels.emplace_back(std::move(v));
  }
  return SchreierGraph(std::move(labels));
}

int moore_diameter_lower_bound(int n, int k) {
  if (n < 1)
    throw std::invalid_argument("moore_diameter_lower_bound: n must be >= 1");
  if (k < 1)
    throw std::invalid_argument("moore_diameter_lower_bound: k must be >= 1");
  // Ball of radius D around any vertex of a 2k-regular graph holds at most
  // 1 + sum_{j=1..D} 2k (2k-1)^(j-1) vertices; find the least D covering n.
  const std::uint64_t target = static_cast<std::uint64_t>(n);
  std::uint64_t reached = 1;
  std::uint64_t frontier = static_cast<std::uint64_t>(2 * k);
  int d = 0;
  while (reached < target) {
    reached += frontier;
    ++d;
    if (frontier > target) continue;  // avoid overflow; already past any n
    frontier *= static_cast<std::uint64_t>(2 * k - 1);
  }
  return d;
}

DiameterScan diameter_growth_scan(const std::vector<int>& r_grid,
                                  int samples_per_r, std::uint64_t seed) {
  if (samples_per_r < 0)
    throw std::invalid_argument("diameter_growth_scan: samples must be >= 0");
  DiameterScan scan;
  for (const int r : r_grid) {
    int max_rep_length = 0;
    for (int i = 0; 2 * i < r; ++i) {
      const CosetRepPair reps = coset_rep_word(i, r);
      max_rep_length =
          std::max(max_rep_length, static_cast<int>(reps.even.word.length()));
      if (reps.odd)
        max_rep_length =
            std::max(max_rep_length, static_cast<int>(reps.odd->word.length()));
    }

    const FamilySpec spec{r, ConstraintMode::kAllBelowHalf};
    const std::vector<Permutation> members = family_members(
        spec, static_cast<std::uint64_t>(samples_per_r), derive_seed(seed, r));
    const Permutation s1 = sigma1(r);
    for (std::size_t m = 0; m < members.size(); ++m) {
      const SchreierGraph g = build_schreier(PermutationPair(s1, members[m]));
      const DiameterResult d = graph_diameter(g);
      DiameterScanRow row;
      row.r = r;
      row.sample = static_cast<int>(m);
      row.diameter = d.value;
      row.exact = d.exact;
      row.max_rep_length = max_rep_length;
      row.ratio = d.value / std::log2(static_cast<double>(r));
      scan.empirical_d = std::max(scan.empirical_d, row.ratio);
      scan.rows.push_back(row);
    }
  }
  return scan;
}

ExpanderExperiment expander_diameter_experiment(const std::vector<int>& n_grid,
                                                int k, int trials,
                                                std::uint64_t seed) {
  if (k < 5)
    throw std::invalid_argument(
        "expander_diameter_experiment: k must be >= 5");
  if (trials < 0)
    throw std::invalid_argument(
        "expander_diameter_experiment: trials must be >= 0");

  ExpanderExperiment out;
  if (trials == 0) return out;

  for (const int n : n_grid) {
    if (n < 1)
      throw std::invalid_argument(
          "expander_diameter_experiment: sizes must be >= 1");
    const int moore = moore_diameter_lower_bound(n, k);
    const double log2n = std::log2(static_cast<double>(n));
    std::vector<int> connected_diameters;
    for (int t = 0; t < trials; ++t) {
      const SchreierGraph g = random_regular_graph(n, k, derive_seed(seed, n, t));
      ExpanderTrialRow row;
      row.n = n;
      row.trial = t;
      row.moore_lower = moore;
      row.connected = g.is_connected();
      if (row.connected) {
        const DiameterResult d = graph_diameter(g);
        row.diameter = d.value;
        row.exact = d.exact;
        row.ratio = n > 1 ? d.value / log2n : 0.0;
        connected_diameters.push_back(d.value);
      }
      out.trials.push_back(row);
    }

    std::sort(connected_diameters.begin(), connected_diameters.end());
    ExpanderSummary summary;
    summary.n = n;
    summary.connected_fraction =
        static_cast<double>(connected_diameters.size()) / trials;
    if (connected_diameters.empty()) {
      summary.diameter_min = summary.diameter_median = summary.diameter_max =
          summary.median_ratio = std::numeric_limits<double>::quiet_NaN();
    } else {
      summary.diameter_min = connected_diameters.front();
      summary.diameter_max = connected_diameters.back();
      summary.diameter_median = median_of_sorted(connected_diameters);
      summary.median_ratio =
          n > 1 ? summary.diameter_median / log2n : 0.0;
    }
    out.summaries.push_back(summary);
  }
  return out;
}

}  // namespace diamcount
