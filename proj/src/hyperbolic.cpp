#include "diamcount/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "diamcount/rng.hpp"

namespace diamcount {

namespace {

constexpr double kSheetTolerance = 1e-9;
constexpr double kPairingSlack = 1e-6;
constexpr double kQuadratureTol = 1e-12;

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double err = refined - whole;
  // Absolute target, floored at a few ulps of the estimate so that very
  // large integrands (sinh^2 near t = 350 reaches ~1e300) still terminate.
  const double floor_tol =
      8.0 * std::numeric_limits<double>::epsilon() * std::abs(refined);
  if (depth <= 0 || std::abs(err) <= 15.0 * std::max(tol, floor_tol))
    return refined + err / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double minkowski_pairing(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size() || p.size() < 2)
    throw std::invalid_argument("minkowski_pairing: dimension mismatch");
  const Eigen::Index n = p.size() - 1;
  return p[0] * q[0] - p.tail(n).dot(q.tail(n));
}

HyperbolicPoint::HyperbolicPoint(Eigen::VectorXd coords)
    : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw std::invalid_argument("HyperbolicPoint: need at least 2 coordinates");
  if (!(coords_[0] > 0))
    throw std::invalid_argument("HyperbolicPoint: x0 must be positive");
  const double norm = minkowski_pairing(coords_, coords_);
  if (std::abs(norm - 1.0) > kSheetTolerance)
    throw std::invalid_argument(
        "HyperbolicPoint: coordinates are off the unit hyperboloid (<x,x> = " +
        std::to_string(norm) + ")");
}

double hyperbolic_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  const double b = minkowski_pairing(p, q);
  if (b < 1.0) {
    if (1.0 - b > kPairingSlack)
      throw std::domain_error(
          "hyperbolic_distance: pairing " + std::to_string(b) +
          " is below 1 by more than the noise tolerance; points off sheet");
    return 0.0;
  }
  return std::acosh(b);
}

double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q) {
  return hyperbolic_distance(p.coords(), q.coords());
}

double unit_sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("unit_sphere_area: n must be >= 1");
  const double half_n = 0.5 * n;
  return 2.0 * std::exp(half_n * std::log(M_PI) - std::lgamma(half_n));
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("adaptive_simpson: tol must be > 0");
  if (a == b) return 0.0;
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 60);
}

double ball_volume(int n, double R) {
  if (n < 2) throw std::invalid_argument("ball_volume: dimension must be >= 2");
  if (!(R >= 0)) throw std::invalid_argument("ball_volume: radius must be >= 0");
  if (R == 0.0) return 0.0;
  const int power = n - 1;
  const double integral = adaptive_simpson(
      [power](double t) { return std::pow(std::sinh(t), power); }, 0.0, R,
      kQuadratureTol);
  return unit_sphere_area(n) * integral;
}

double log_ball_volume3(double R) {
  if (!(R > 0)) throw std::invalid_argument("log_ball_volume3: radius must be > 0");
  if (R <= 1e-2) {
    // vol = (4 pi / 3) R^3 (1 + R^2/5 + 2 R^4/105 + R^6/945 + O(R^8)); the
    // dropped term is below 1e-16 relative at R = 1e-2.
    const double r2 = R * R;
    const double correction = r2 / 5.0 + 2.0 * r2 * r2 / 105.0 +
                              r2 * r2 * r2 / 945.0;
    return std::log(4.0 * M_PI / 3.0) + 3.0 * std::log(R) +
           std::log1p(correction);
  }
  if (R >= 350.0) {
    // vol = pi (sinh 2R - 2R); the relative error of pi e^{2R} / 2 here is
    // ~4R e^{-2R} < 1e-300, invisible at double precision.
    return std::log(M_PI / 2.0) + 2.0 * R;
  }
  return std::log(ball_volume(3, R));
}

Eigen::MatrixXd sample_hyperbolic_ball(int count, double R,
                                       std::uint64_t seed) {
  if (count < 0)
    throw std::invalid_argument("sample_hyperbolic_ball: count must be >= 0");
  if (!(R > 0))
    throw std::invalid_argument("sample_hyperbolic_ball: radius must be > 0");

  Rng rng(seed);
  Eigen::MatrixXd points(4, count);
  const double total_mass = std::sinh(2.0 * R) - 2.0 * R;  // un-normalized CDF at R
  for (int j = 0; j < count; ++j) {
    // Radial coordinate: CDF(t) proportional to sinh(2t) - 2t, inverted by
    // bisection (the density is sinh^2, the volume element of H^3).
    const double u = rng.real01();
    double lo = 0.0, hi = R;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double cdf = (std::sinh(2.0 * mid) - 2.0 * mid) / total_mass;
      (cdf < u ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);

    const double z = 2.0 * rng.real01() - 1.0;
    const double phi = 2.0 * M_PI * rng.real01();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    points.col(j) << std::cosh(t), std::sinh(t) * s * std::cos(phi),
        std::sinh(t) * s * std::sin(phi), std::sinh(t) * z;
  }
  return points;
}

Eigen::MatrixXd sample_euclidean_ball(int count, double R, std::uint64_t seed) {
  if (count < 0)
    throw std::invalid_argument("sample_euclidean_ball: count must be >= 0");
  if (!(R > 0))
    throw std::invalid_argument("sample_euclidean_ball: radius must be > 0");

  Rng rng(seed);
  Eigen::MatrixXd points(3, count);
  for (int j = 0; j < count; ++j) {
    const double t = R * std::cbrt(rng.real01());
    const double z = 2.0 * rng.real01() - 1.0;
    const double phi = 2.0 * M_PI * rng.real01();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    points.col(j) << t * s * std::cos(phi), t * s * std::sin(phi), t * z;
  }
  return points;
}

}  // namespace diamcount
