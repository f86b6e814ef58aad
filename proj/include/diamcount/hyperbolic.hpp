#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace diamcount {

/// Minkowski pairing p0*q0 - p1*q1 - ... - pn*qn.  Equals cosh of the
/// hyperbolic distance for points on the upper unit hyperboloid.
double minkowski_pairing(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

/// A point on the upper sheet {x : <x,x> = 1, x0 > 0} of the hyperboloid
/// model of H^n, stored as its n+1 ambient coordinates.
class HyperbolicPoint {
 public:
  /// Validates the sheet equation to 1e-9 and x0 > 0; throws
  /// invalid_argument otherwise (or if fewer than 2 coordinates).
  explicit HyperbolicPoint(Eigen::VectorXd coords);

  const Eigen::VectorXd& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }

 private:
  Eigen::VectorXd coords_;
};

/// arccosh of the pairing.  Pairings slightly below 1 (numerical noise on
/// coincident points) clamp to distance 0; a deviation beyond 1e-6 means the
/// inputs left the sheet and throws domain_error.
double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q);

/// Same, on raw coordinate vectors (no sheet re-validation).
double hyperbolic_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

/// Surface area of the Euclidean unit (n-1)-sphere: 2 pi^(n/2) / Gamma(n/2).
double unit_sphere_area(int n);

/// Adaptive-Simpson integral of f over [a, b] to absolute tolerance tol
/// (floored at a few ulps of the running estimate so huge integrands
/// terminate).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

/// Volume of a radius-R ball in H^n: area(S^{n-1}) * int_0^R sinh^{n-1} t dt,
/// by adaptive quadrature (absolute tolerance 1e-12).
double ball_volume(int n, double R);

/// ln of the H^3 ball volume, stable over the whole double range: a series
/// below R = 1e-2, log of the quadrature in the middle, and the asymptotic
/// ln(pi/2) + 2R beyond R = 350, where the volume itself overflows.
double log_ball_volume3(double R);

/// `count` volume-uniform samples from the radius-R ball of H^3 about the
/// basepoint (1,0,0,0), one point per column (4 x count).  Radial CDF
/// proportional to int sinh^2 is inverted by bisection; direction uniform on
/// the sphere.  Deterministic in seed.
Eigen::MatrixXd sample_hyperbolic_ball(int count, double R,
                                       std::uint64_t seed);

/// `count` volume-uniform samples from the radius-R Euclidean 3-ball about
/// the origin (3 x count).  Deterministic in seed.
Eigen::MatrixXd sample_euclidean_ball(int count, double R, std::uint64_t seed);

}  // namespace diamcount
