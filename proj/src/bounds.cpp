#include "diamcount/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "diamcount/hyperbolic.hpp"

namespace diamcount {

double injectivity_floor(double d, double c) {
  if (!(d >= 0)) throw std::invalid_argument("injectivity_floor: d must be >= 0");
  if (!(c > 0)) throw std::invalid_argument("injectivity_floor: c must be > 0");
  return std::exp(-d / c);
}

LogValue net_size_bound(double d, double c) {
  if (!(d > 0)) throw std::invalid_argument("net_size_bound: d must be > 0");
  const double r = injectivity_floor(d, c);
  LogValue out;
  out.log_value = log_ball_volume3(d) - log_ball_volume3(r / 4.0);
  out.value = std::exp(out.log_value);
  return out;
}

double degree_bound_constant(double r) {
  if (!(r > 0))
    throw std::invalid_argument("degree_bound_constant: r must be > 0");
  return std::exp(log_ball_volume3(r + r / 8.0) - log_ball_volume3(r / 8.0));
}

CountingBounds counting_bounds(double s, double k) {
  if (!(s >= 1)) throw std::invalid_argument("counting_bounds: s must be >= 1");
  if (!(k >= 1)) throw std::invalid_argument("counting_bounds: k must be >= 1");
  CountingBounds out;
  out.log_graphs = k * s * std::log(s);
  out.log_skeleta = out.log_graphs + s * k * k * std::log(2.0);
  return out;
}

TauBounds tau_bounds(const BoundConstants& consts) {
  if (consts.n < 3)
    throw std::domain_error("tau_bounds: the statement needs dimension >= 3");
  if (!(consts.d > 0)) throw std::invalid_argument("tau_bounds: d must be > 0");
  if (!(consts.a > 0) || !(consts.b > 0))
    throw std::invalid_argument("tau_bounds: a and b must be > 0");
  TauBounds out;
  out.lnln_lower = consts.a * consts.d;
  const double rate = consts.n == 3 ? 5.0 : static_cast<double>(consts.n - 1);
  out.ln_upper = consts.b * consts.d * std::exp(rate * consts.d);
  return out;
}

}  // namespace diamcount
