#include "k3gonal/gonality.hpp"

#include <algorithm>

#include "k3gonal/brillnoether.hpp"
#include "k3gonal/errors.hpp"

namespace k3g::gonality {

void check_pk(const ExactInt& p, const ExactInt& k) {
  require(p >= 2, "p must be >= 2");
  require(k >= 2, "k must be >= 2");
}

GonalityCase::GonalityCase(const ExactInt& p, const ExactInt& k, const ExactInt& delta)
    : p_(p), k_(k), delta_(delta) {
  check_pk(p, k);
  require(delta >= 0 && delta <= p, "delta must lie in [0, p]");
  const ExactInt km1 = k - 1;
  g_ = p - delta;
  alpha_ = floor_div(g_, 2 * km1);
  beta_ = km1 * (2 * alpha_ + 1) - g_;
  rho_ = bn::rho(p, alpha_, k * alpha_ + delta);
  admissible_ = rho_ >= 0;

  ensure(beta_ > -km1 && beta_ <= km1, "beta outside (-(k-1), k-1]");
  const ExactInt threshold = alpha_ * (g_ - km1 * (alpha_ + 1));
  ensure(admissible_ == (delta >= threshold), "rho form and threshold form disagree");
  // delta >= ((g-k+1)^2 - beta^2) / (4(k-1)), compared without division
  const ExactInt gk = g_ - k + 1;
  ensure(admissible_ == (4 * km1 * delta >= gk * gk - beta_ * beta_),
         "rho form and beta form disagree");
  ensure(admissible_ == bn::necessary_condition(p, delta, 1, k).satisfied,
         "pencil bound disagrees with the general g^r_d bound");
}

bool admissible(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  return GonalityCase(p, k, delta).admissible();
}

Decomposition decompose(const ExactInt& p, const ExactInt& k) {
  check_pk(p, k);
  const ExactInt km1 = k - 1;
  require(2 * km1 <= p, "decompose needs p >= 2(k-1); below that delta0 = 0");
  // largest m with (k-1) m (m+1) <= p: start from the real root and adjust
  ExactInt m = (isqrt(4 * p / km1 + 1) - 1) / 2;
  while (km1 * (m + 1) * (m + 2) <= p) ++m;
  while (km1 * m * (m + 1) > p) --m;
  Decomposition d;
  d.m = m;
  d.t = floor_div(p, m + 1) - m * km1;
  d.lambda = p - km1 * m * (m + 1) - d.t * (m + 1);
  ensure(d.m >= 1, "decompose: m must be positive");
  ensure(d.t >= 0 && d.t < 2 * km1, "decompose: t outside [0, 2(k-1))");
  ensure(d.lambda >= 0 && d.lambda <= d.m, "decompose: lambda outside [0, m]");
  return d;
}

ExactInt delta0(const ExactInt& p, const ExactInt& k) {
  check_pk(p, k);
  const ExactInt km1 = k - 1;
  if (p <= 2 * km1) return 0;
  const Decomposition d = decompose(p, k);
  ExactInt closed = km1 * d.m * (d.m - 1) + d.t * d.m + d.lambda;
  ExactInt ceiling_form = ceil_div(d.m * p, d.m + 1) - d.m * km1;
  ensure(closed == ceiling_form, "the two closed forms of delta0 disagree");
  return closed;
}

ExactInt delta0_bruteforce(const ExactInt& p, const ExactInt& k) {
  check_pk(p, k);
  ExactInt delta = 0;
  while (!admissible(p, k, delta)) ++delta;
  return delta;
}

ExpectedDims expected_dims(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  const GonalityCase c(p, k, delta);
  require(c.admissible(), "inadmissible (p, k, delta): the k-gonal locus is empty");
  const ExactInt bound = 2 * (k - 1);
  ExpectedDims out;
  out.dim_vk = c.g() < bound ? c.g() : bound;
  out.dim_w1k = c.g() < bound ? ExactInt(bound - c.g()) : ExactInt(0);
  return out;
}

bool is_optimal(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  const GonalityCase c(p, k, delta);
  const bool optimal = c.admissible() && c.rho() <= c.alpha();
  ensure(optimal == (delta == delta0(p, k)), "rho <= alpha test disagrees with delta == delta0");
  return optimal;
}

}  // namespace k3g::gonality
