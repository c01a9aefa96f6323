#pragma once

// Brill-Noether numbers and the existence bound for a g^r_d on the
// normalization of a curve in |H| with delta nodes.

#include "k3gonal/exactmath.hpp"

namespace k3g::bn {

/// A g^r_d on a curve of genus g. Requires d > r >= 1, g >= 0.
struct LinearSeriesParams {
  ExactInt g;
  ExactInt r;
  ExactInt d;
};

struct NecessityReport {
  ExactInt alpha;
  ExactInt rho_at_alpha;
  ExactInt threshold_delta;
  bool satisfied = false;
};

/// rho(g, r, d) = g - (r+1)(r+g-d).
ExactInt rho(const ExactInt& g, const ExactInt& r, const ExactInt& d);

/// floor((g r + (d-r)(r-1)) / (2 r (d-r))), the integer closest to the
/// minimizer of l -> rho(p, l r, l d + delta).
ExactInt alpha_general(const ExactInt& g, const ExactInt& r, const ExactInt& d);
ExactInt alpha_general(const LinearSeriesParams& s);

/// l^2 r (d-r) - l (g r + r - d) + delta with g = p - delta. Cross-checked
/// against rho(p, l r, l d + delta).
ExactInt rho_quadratic(const ExactInt& p, const ExactInt& delta, const ExactInt& r,
                       const ExactInt& d, const ExactInt& l);

/// Evaluates the bound both as rho(p, alpha r, alpha d + delta) >= 0 and as
/// delta >= alpha (r g - (d-r)(alpha r + 1)); throws InvariantViolation if the
/// two verdicts differ.
NecessityReport necessary_condition(const ExactInt& p, const ExactInt& delta, const ExactInt& r,
                                    const ExactInt& d);

}  // namespace k3g::bn
