#include "diamcount/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diamcount {

namespace {

void check_points(const Eigen::MatrixXd& points, Metric metric) {
  const Eigen::Index min_rows = metric == Metric::kHyperboloid ? 2 : 1;
  if (points.rows() < min_rows)
    throw std::invalid_argument("net/nerve: too few coordinate rows");
}

// Monotone stand-in for distance: Minkowski pairing (= cosh of distance) on
// the hyperboloid, squared Euclidean distance otherwise.  Comparisons use
// the matching transform of the threshold, never arccosh/sqrt.
double score_threshold(double dist, Metric metric) {
  return metric == Metric::kHyperboloid ? std::cosh(dist) : dist * dist;
}

// points with the spatial rows negated, so pairings against it are plain
// dot products.
Eigen::MatrixXd lower_index(const Eigen::MatrixXd& points) {
  Eigen::MatrixXd lowered = points;
  lowered.bottomRows(lowered.rows() - 1) *= -1.0;
  return lowered;
}

}  // namespace

std::vector<int> greedy_net(const Eigen::MatrixXd& points, double sep,
                            Metric metric) {
  check_points(points, metric);
  if (!(sep > 0)) throw std::invalid_argument("greedy_net: sep must be > 0");

  const Eigen::Index count = points.cols();
  const double thr = score_threshold(sep, metric);
  const bool hyper = metric == Metric::kHyperboloid;
  const Eigen::MatrixXd lowered = hyper ? lower_index(points) : Eigen::MatrixXd();

  Eigen::MatrixXd kept(points.rows(), count);
  std::vector<int> net;
  Eigen::Index s = 0;
  for (Eigen::Index j = 0; j < count; ++j) {
    bool keep = true;
    if (s > 0) {
      if (hyper) {
        // pairing < cosh(sep)  <=>  distance < sep: reject.
        const double closest =
            (kept.leftCols(s).transpose() * lowered.col(j)).minCoeff();
        keep = closest >= thr;
      } else {
        const double closest = (kept.leftCols(s).colwise() - points.col(j))
                                   .colwise()
                                   .squaredNorm()
                                   .minCoeff();
        keep = closest >= thr;
      }
    }
    if (keep) {
      kept.col(s++) = points.col(j);
      net.push_back(static_cast<int>(j));
    }
  }
  return net;
}

NetCheck verify_net(const Eigen::MatrixXd& points, const std::vector<int>& net,
                    double sep, Metric metric) {
  check_points(points, metric);
  if (!(sep > 0)) throw std::invalid_argument("verify_net: sep must be > 0");

  const double thr = score_threshold(sep, metric);
  const bool hyper = metric == Metric::kHyperboloid;
  Eigen::MatrixXd kept(points.rows(), static_cast<Eigen::Index>(net.size()));
  for (std::size_t t = 0; t < net.size(); ++t) kept.col(t) = points.col(net[t]);
  const Eigen::MatrixXd kept_lowered =
      hyper ? lower_index(kept) : Eigen::MatrixXd();

  NetCheck check;
  check.separated = true;
  for (std::size_t t = 0; t + 1 < net.size(); ++t) {
    const Eigen::Index rest = static_cast<Eigen::Index>(net.size() - t - 1);
    const double closest =
        hyper ? (kept.rightCols(rest).transpose() * kept_lowered.col(t))
                    .minCoeff()
              : (kept.rightCols(rest).colwise() - kept.col(t))
                    .colwise()
                    .squaredNorm()
                    .minCoeff();
    if (closest < thr) {
      check.separated = false;
      break;
    }
  }

  const Eigen::MatrixXd all_lowered =
      hyper ? lower_index(points) : Eigen::MatrixXd();
  check.maximal = net.empty() ? points.cols() == 0 : true;
  for (Eigen::Index j = 0; j < points.cols() && check.maximal && !net.empty();
       ++j) {
    const double closest =
        hyper ? (kept.transpose() * all_lowered.col(j)).minCoeff()
              : (kept.colwise() - points.col(j))
                    .colwise()
                    .squaredNorm()
                    .minCoeff();
    if (!(closest < thr)) check.maximal = false;
  }
  return check;
}

NerveComplex build_nerve(const Eigen::MatrixXd& net_points, double r,
                         Metric metric) {
  check_points(net_points, metric);
  if (!(r > 0)) throw std::invalid_argument("build_nerve: radius must be > 0");

  NerveComplex nerve;
  nerve.points = net_points;
  nerve.metric = metric;
  nerve.radius = r;

  const Eigen::Index s = net_points.cols();
  const double thr = score_threshold(r, metric);
  const bool hyper = metric == Metric::kHyperboloid;
  const Eigen::MatrixXd lowered =
      hyper ? lower_index(net_points) : Eigen::MatrixXd();

  // Pairwise scores one source row at a time (never the full s x s matrix);
  // strict inequality: a pair at distance exactly r is NOT an edge.
  std::vector<std::vector<int>> adj(s);
  for (Eigen::Index i = 0; i + 1 < s; ++i) {
    const Eigen::Index rest = s - i - 1;
    Eigen::VectorXd scores;
    if (hyper) {
      scores = net_points.rightCols(rest).transpose() * lowered.col(i);
    } else {
      scores = (net_points.rightCols(rest).colwise() - net_points.col(i))
                   .colwise()
                   .squaredNorm()
                   .transpose();
    }
    for (Eigen::Index t = 0; t < rest; ++t) {
      if (scores[t] < thr) {
        const int a = static_cast<int>(i);
        const int b = static_cast<int>(i + 1 + t);
        nerve.edges.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }

  // adj lists are sorted by construction; intersect to list the 3-cliques.
  for (const auto& [a, b] : nerve.edges) {
    const std::vector<int>& na = adj[a];
    const std::vector<int>& nb = adj[b];
    auto ia = std::upper_bound(na.begin(), na.end(), b);
    auto ib = std::upper_bound(nb.begin(), nb.end(), b);
    while (ia != na.end() && ib != nb.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        nerve.triangles.push_back({a, b, *ia});
        ++ia;
        ++ib;
      }
    }
  }

  nerve.degrees.resize(s);
  for (Eigen::Index i = 0; i < s; ++i)
    nerve.degrees[i] = static_cast<int>(adj[i].size());
  nerve.max_degree =
      s == 0 ? 0 : *std::max_element(nerve.degrees.begin(), nerve.degrees.end());
  return nerve;
}

}  // namespace diamcount
