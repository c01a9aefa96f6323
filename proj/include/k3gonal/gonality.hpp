#pragma once

// The pencil case r = 1, d = k of the existence bound: admissible triples
// (p, k, delta), the minimal node count delta0 and the expected dimensions of
// k-gonal loci.

#include "k3gonal/exactmath.hpp"

namespace k3g::gonality {

/// A triple (p, k, delta) with all derived invariants filled in at
/// construction:
///   g     = p - delta
///   alpha = floor(g / (2(k-1)))
///   beta  = (k-1)(2 alpha + 1) - g,   -(k-1) < beta <= k-1
///   rho   = rho(p, alpha, k alpha + delta)
/// `admissible` is rho >= 0; the constructor checks that the three equivalent
/// forms of the bound agree.
class GonalityCase {
 public:
  GonalityCase(const ExactInt& p, const ExactInt& k, const ExactInt& delta);

  const ExactInt& p() const { return p_; }
  const ExactInt& k() const { return k_; }
  const ExactInt& delta() const { return delta_; }
  const ExactInt& g() const { return g_; }
  const ExactInt& alpha() const { return alpha_; }
  const ExactInt& beta() const { return beta_; }
  const ExactInt& rho() const { return rho_; }
  bool admissible() const { return admissible_; }

 private:
  ExactInt p_, k_, delta_, g_, alpha_, beta_, rho_;
  bool admissible_ = false;
};

/// p = (k-1) m (m+1) + t (m+1) + lambda, 0 <= t < 2(k-1), 0 <= lambda <= m.
struct Decomposition {
  ExactInt m;
  ExactInt t;
  ExactInt lambda;
};

struct ExpectedDims {
  ExactInt dim_vk;   ///< min{2(k-1), g}
  ExactInt dim_w1k;  ///< max{0, 2(k-1) - g}
};

void check_pk(const ExactInt& p, const ExactInt& k);

bool admissible(const ExactInt& p, const ExactInt& k, const ExactInt& delta);

/// Requires p >= 2(k-1) so that m >= 1.
Decomposition decompose(const ExactInt& p, const ExactInt& k);

/// Minimal admissible delta in closed form. Zero when p <= 2(k-1).
ExactInt delta0(const ExactInt& p, const ExactInt& k);

/// Linear scan for the first admissible delta.
ExactInt delta0_bruteforce(const ExactInt& p, const ExactInt& k);

ExpectedDims expected_dims(const ExactInt& p, const ExactInt& k, const ExactInt& delta);

/// admissible and rho <= alpha; checked against delta == delta0(p, k).
bool is_optimal(const ExactInt& p, const ExactInt& k, const ExactInt& delta);

}  // namespace k3g::gonality
