#include "k3gonal/brillnoether.hpp"

#include "k3gonal/errors.hpp"

namespace k3g::bn {
namespace {

void check_series(const ExactInt& r, const ExactInt& d) {
  require(r >= 1, "series dimension r must be >= 1");
  require(d > r, "degree d must exceed r");
}

void check_nodes(const ExactInt& p, const ExactInt& delta) {
  require(p >= 0, "arithmetic genus p must be nonnegative");
  require(delta >= 0 && delta <= p, "delta must lie in [0, p]");
}

}  // namespace

ExactInt rho(const ExactInt& g, const ExactInt& r, const ExactInt& d) {
  return g - (r + 1) * (r + g - d);
}

ExactInt alpha_general(const ExactInt& g, const ExactInt& r, const ExactInt& d) {
  check_series(r, d);
  require(g >= 0, "genus g must be nonnegative");
  return floor_div(g * r + (d - r) * (r - 1), 2 * r * (d - r));
}

ExactInt alpha_general(const LinearSeriesParams& s) { return alpha_general(s.g, s.r, s.d); }

ExactInt rho_quadratic(const ExactInt& p, const ExactInt& delta, const ExactInt& r,
                       const ExactInt& d, const ExactInt& l) {
  check_series(r, d);
  check_nodes(p, delta);
  require(l >= 1, "l must be a positive integer");
  const ExactInt g = p - delta;
  ExactInt value = l * l * r * (d - r) - l * (g * r + r - d) + delta;
  ensure(value == rho(p, l * r, l * d + delta), "rho_quadratic disagrees with rho(p, lr, ld+delta)");
  return value;
}

NecessityReport necessary_condition(const ExactInt& p, const ExactInt& delta, const ExactInt& r,
                                    const ExactInt& d) {
  require(p >= 2, "p must be >= 2");
  check_series(r, d);
  check_nodes(p, delta);
  const ExactInt g = p - delta;
  NecessityReport out;
  out.alpha = alpha_general(g, r, d);
  out.rho_at_alpha = rho(p, out.alpha * r, out.alpha * d + delta);
  out.threshold_delta = out.alpha * (r * g - (d - r) * (out.alpha * r + 1));
  out.satisfied = out.rho_at_alpha >= 0;
  ensure(out.satisfied == (delta >= out.threshold_delta),
         "rho form and threshold form of the existence bound disagree");
  return out;
}

}  // namespace k3g::bn
