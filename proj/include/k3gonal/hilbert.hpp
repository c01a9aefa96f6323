#pragma once
// Lattice arithmetic on Hilb^k of a K3 surface of genus p with Pic = Z H.
//
// H^2 = H_2(S) + Z e_k on the divisor side and H_2(S) + Z r_k on the curve
// side, with q(e_k) = -2(k-1), q(r_k) = -1/(2(k-1)) and e_k . r_k = -1.
// Curve classes are written a H - y r_k, divisor classes a H - c e_k.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3gonal/exactmath.hpp"

namespace k3g::hilbert {

struct CurveClass {
  ExactInt p;
  ExactInt k;
  ExactInt a;
  ExactInt y;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct DivisorClass {
  ExactInt p;
  ExactInt k;
  ExactInt a;
  ExactRational c;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

ExactRational q_curve(const CurveClass& cls);
ExactRational q_divisor(const DivisorClass& cls);
ExactRational pairing(const DivisorClass& d, const CurveClass& r);

/// r_k itself, i.e. a = 0, y = -1 in the a H - y r_k convention.
CurveClass fiber_class(const ExactInt& p, const ExactInt& k);
/// H - (p - delta + k - 1) r_k for an admissible triple.
CurveClass gonality_class(const ExactInt& p, const ExactInt& k, const ExactInt& delta);
CurveClass optimal_class(const ExactInt& p, const ExactInt& k);

/// "H - 5*r_k", "3*H - 16*r_k", "r_k".
std::string format_class(const CurveClass& cls);

/// q of the gonality class, computed from both the genus form and the
/// (rho, beta) form.
ExactRational q_case(const ExactInt& p, const ExactInt& k, const ExactInt& delta);
/// 2(lambda - 1) - (k-1-t)^2 / (2(k-1)) from the decomposition of p.
/// Requires p >= 2(k-1).
ExactRational q_optimal_form(const ExactInt& p, const ExactInt& k);

/// 2(p-1) / y_opt: the slope where H - t e_k stops being nef.
ExactRational tau(const ExactInt& p, const ExactInt& k);

enum class ConeVerdict { Ample, NefBoundary, NotNef };
/// Verdict for H - t e_k measured against the optimal class.
ConeVerdict cone_verdict(const ExactInt& p, const ExactInt& k, const ExactRational& t);
std::string to_string(ConeVerdict v);

struct SpecialClass {
  ExactInt s;
  ExactInt delta;
  CurveClass cls;
  ExactRational q;
};

/// p = s(s+1)(k-1): the class reaching the lower bound -(k+3)/2.
std::optional<SpecialClass> minimal_q_family(const ExactInt& p, const ExactInt& k);
/// (k-1)(p-1) = s^2 with delta = p - 2s + k - 1 admissible: a q = 0 class.
std::optional<SpecialClass> isotropic_case(const ExactInt& p, const ExactInt& k);

/// n >= 1 with p = n^2 (k-1) + 1.
std::optional<ExactInt> primitive_index(const ExactInt& p, const ExactInt& k);

struct LagrangianReport {
  ExactInt p;
  ExactInt k;
  bool has_isotropic = false;
  ExactInt s;
  ExactInt alpha;
  ExactInt value;  ///< (k-1)(alpha+1)^2 - (2s+1)(alpha+1) + p
  bool not_nef = false;
  bool necessary_condition_holds = false;
  bool primitive = false;
  std::optional<ExactInt> n;
  std::optional<SpecialClass> isotropic;  ///< when delta lands in [0, p]
};

LagrangianReport lagrangian_report(const ExactInt& p, const ExactInt& k);

enum class RayStatus { ProvenBM, ProvenMinQ, ProvenIsoPrim, Open };
std::string to_string(RayStatus s);

struct RayReport {
  ExactInt p;
  ExactInt k;
  RayStatus status = RayStatus::Open;
  bool open = true;
  std::vector<CurveClass> rays;  ///< r_k, then the (possibly conjectural) second ray
  ExactRational q;               ///< q of the second ray
  std::vector<std::string> notes;
};

RayReport extremal_ray_status(const ExactInt& p, const ExactInt& k);

/// p = (k-1) m (m+1) + (k-1-beta)(m+1) + rho.
ExactInt genus_for_invariants(const ExactInt& k, const ExactInt& rho, const ExactInt& beta,
                              const ExactInt& m);

/// Sorted distinct negative values of q at delta0 for 2 <= p <= p_max.
std::vector<ExactRational> attained_q_values(const ExactInt& k, const ExactInt& p_max);

struct HtReport {
  ExactInt p;
  ExactInt k;
  bool applicable = false;
  ExactInt n;
  CurveClass reduced;  ///< optimal class minus r_k
  ExactRational q_reduced;
  ExactRational bound;  ///< -(k+3)/2
  bool over_prediction = false;
};

HtReport ht_violation_check(const ExactInt& p, const ExactInt& k);

/// One row of the (p, k) grid.
struct ScanRow {
  ExactInt p;
  ExactInt k;
  ExactInt delta0;
  ExactInt g;
  CurveClass optimal;
  ExactRational q;
  ExactRational tau;
  RayStatus status = RayStatus::Open;
  bool isotropic = false;
  bool lagrangian_not_nef = false;
};

ScanRow scan_row(const ExactInt& p, const ExactInt& k);
/// Rows for 2 <= p <= p_max, 2 <= k <= k_max, ordered by k then p.
/// Work is spread over `threads` workers (0 picks hardware concurrency).
std::vector<ScanRow> scan(std::int64_t p_max, std::int64_t k_max, unsigned threads = 0);

}  // namespace k3g::hilbert
