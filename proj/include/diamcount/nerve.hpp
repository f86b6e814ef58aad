#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace diamcount {

// Which distance the net/nerve routines use on point columns: hyperboloid
// coordinates (n+1 rows per point) or plain Euclidean coordinates.
enum class Metric { kHyperboloid, kEuclidean };

/// Greedy separated net: scan columns in input order, keep a point iff its
/// distance to every kept point is >= sep.  The result (indices into the
/// input, increasing) is pairwise >= sep separated and maximal: every
/// input point lies within < sep of some kept point.
std::vector<int> greedy_net(const Eigen::MatrixXd& points, double sep,
                            Metric metric);

struct NetCheck {
  bool separated = false;  // all kept pairs at distance >= sep
  bool maximal = false;    // every input point within < sep of the net
};

/// Direct re-verification of the two net properties (quadratic scan).
NetCheck verify_net(const Eigen::MatrixXd& points, const std::vector<int>& net,
                    double sep, Metric metric);

/// Nerve skeleton of the balls of radius r/2 around net points: an edge per
/// pair at distance strictly below r, a triangle per 3-clique of the edges.
struct NerveComplex {
  Eigen::MatrixXd points;  // the net, one column per vertex
  Metric metric = Metric::kHyperboloid;
  double radius = 0.0;     // the edge threshold r
  std::vector<std::pair<int, int>> edges;         // i < j
  std::vector<std::array<int, 3>> triangles;      // i < j < l
  std::vector<int> degrees;                       // edge-graph degrees
  int max_degree = 0;
};

/// Builds the complex above.  Callers pass an already-separated net; the
/// separation is not re-checked here.
NerveComplex build_nerve(const Eigen::MatrixXd& net_points, double r,
                         Metric metric);

}  // namespace diamcount
