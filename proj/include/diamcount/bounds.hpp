#pragma once

namespace diamcount {

// Free constants of the counting chain.  None of them are pinned by theory;
// the defaults below are the documented conventions (a = b = 1, c = 3,
// k = 729 — the small-radius limit of degree_bound_constant).
struct BoundConstants {
  int n = 3;        // dimension, >= 3 for tau_bounds
  double d = 1.0;   // diameter bound
  double a = 1.0;   // double-exponential lower-bound constant
  double b = 1.0;   // upper-bound constant
  double c = 3.0;   // injectivity-floor constant
  double c1 = 1.0;  // chained volume-estimate constants (reported only)
  double c2 = 1.0;
  double c3 = 1.0;
  double c4 = 1.0;
  double k = 729.0;  // nerve degree bound
};

/// e^{-d/c}: the injectivity-radius floor for a diameter-d manifold.
double injectivity_floor(double d, double c);

struct LogValue {
  double value = 0.0;      // may overflow to inf; log_value never does
  double log_value = 0.0;
};

/// Net-size bound: volume of the radius-d ball over the volume of the
/// radius-(r/4) ball in H^3, with r = injectivity_floor(d, c).  Computed in
/// log space (small r underflows any direct volume).
LogValue net_size_bound(double d, double c);

/// vol(B_{r + r/8}) / vol(B_{r/8}) in H^3: the packing bound on nerve
/// degrees.  Tends to 9^3 = 729 as r -> 0 (Euclidean scaling limit).
double degree_bound_constant(double r);

struct CountingBounds {
  double log_graphs = 0.0;   // ln of s^{k s}
  double log_skeleta = 0.0;  // ln of s^{k s} 2^{s k^2}
};

/// Natural logs of the graph and 2-skeleton counts for a net of size s with
/// degree bound k: (k s ln s, k s ln s + s k^2 ln 2).  Requires s, k >= 1.
CountingBounds counting_bounds(double s, double k);

struct TauBounds {
  double lnln_lower = 0.0;  // ln ln of the lower bound: a * d
  double ln_upper = 0.0;    // ln of the upper bound: b d e^{5d} (n = 3),
                            // b d e^{(n-1)d} (n >= 4)
};

/// The headline two-sided bound, in (ln ln, ln) space.  n < 3 is outside the
/// statement and throws domain_error; needs d > 0, a > 0, b > 0.
TauBounds tau_bounds(const BoundConstants& consts);

}  // namespace diamcount
