#pragma once

// Pencils of binary forms of degree k and their curves in Sym^2(P^1) = P^2.
//
// Coordinates: the unordered pair {x, y} of points of P^1 is the point
// (e0 : e1 : e2) whose quadratic e0 z^2 - e1 z + e2 vanishes at x and y, so in
// the affine chart e0 = 1 we have e1 = x + y, e2 = x y. The diagonal is the
// conic e1^2 = 4 e0 e2, parametrized by (x0^2 : 2 x0 x1 : x1^2).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3gonal/exactmath.hpp"
#include "k3gonal/polynomial.hpp"

namespace k3g::pencil {

/// A point (x0 : x1) of P^1; the affine coordinate is x = x1 / x0.
struct ProjectivePoint {
  ExactRational x0;
  ExactRational x1;

  static ProjectivePoint affine(const ExactRational& x) { return {1, x}; }
  static ProjectivePoint infinity() { return {0, 1}; }
  bool is_infinity() const { return x0 == 0; }
};

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b);

/// A binary form of declared degree bound n: coeffs[i] multiplies
/// x0^(n-i) x1^i. Leading coefficients may vanish (roots at infinity).
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(long degree_bound, std::vector<ExactRational> coeffs);

  static BinaryForm from_affine(const poly::Polynomial& p, long degree_bound);

  long degree_bound() const { return bound_; }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Dehomogenization at x0 = 1.
  poly::Polynomial affine() const;
  ExactRational operator()(const ProjectivePoint& pt) const;
  /// Multiplicity of the root (0 : 1).
  long multiplicity_at_infinity() const;
  /// Distinct roots on P^1, counting infinity. Nonzero forms only.
  long distinct_roots() const;
  bool squarefree() const;

  /// The form F(a x0 + b x1, c x0 + d x1).
  BinaryForm substitute(const std::array<ExactRational, 4>& abcd) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  long bound_ = 0;
  std::vector<ExactRational> coeffs_;
};

/// Same bound and coefficient vectors proportional by a nonzero scalar.
bool proportional(const BinaryForm& a, const BinaryForm& b);

/// Two non-proportional forms of the same degree bound k.
class Pencil {
 public:
  Pencil(BinaryForm f, BinaryForm g);

  const BinaryForm& f() const { return f_; }
  const BinaryForm& g() const { return g_; }
  long k() const { return f_.degree_bound(); }

 private:
  BinaryForm f_;
  BinaryForm g_;
};

/// A ternary form of degree d; coefficient (i, j) multiplies
/// e0^(d-i-j) e1^i e2^j.
class SymPlaneCurve {
 public:
  SymPlaneCurve() = default;
  explicit SymPlaneCurve(long degree);

  long degree() const { return degree_; }
  ExactRational coeff(long i, long j) const;
  void set(long i, long j, const ExactRational& c);
  bool is_zero() const;
  /// Degree of the affine equation in (e1, e2), -1 for the zero form.
  long affine_degree() const;

  ExactRational operator()(const ExactRational& e0, const ExactRational& e1,
                           const ExactRational& e2) const;

  friend bool operator==(const SymPlaneCurve&, const SymPlaneCurve&) = default;

 private:
  long degree_ = 0;
  std::vector<std::vector<ExactRational>> c_;  // c_[i][j], i + j <= degree
};

/// The diagonal conic e1^2 - 4 e0 e2.
SymPlaneCurve diagonal_conic();

/// (e0 : e1 : e2) of the divisor x + y.
std::array<ExactRational, 3> divisor_point(const ProjectivePoint& x, const ProjectivePoint& y);

/// (f(x) g(y) - f(y) g(x)) / (x - y) rewritten in e1, e2 and homogenized to
/// degree k-1.
SymPlaneCurve wedge_curve(const Pencil& pencil);

/// f g' - f' g at degree bound 2k-2.
BinaryForm wronskian(const Pencil& pencil);

/// Restriction of a degree k-1 curve to the diagonal, bound 2(k-1).
BinaryForm diagonal_restriction(const SymPlaneCurve& curve, long k);

bool simple_ramification(const Pencil& pencil);

/// Whether x + y is a divisor of the pencil: the 2x2 determinant of values,
/// or the Wronskian when x = y.
bool contains_divisor(const Pencil& pencil, const ProjectivePoint& x, const ProjectivePoint& y);

/// Three binary quadratics (e0(u), e1(u), e2(u)) mapping P^1 onto a conic.
using QuadraticMap = std::array<BinaryForm, 3>;

QuadraticMap diagonal_parametrization();

/// Degree-2 parametrization of a smooth conic by lines through a rational
/// point on it.
QuadraticMap parametrize_conic(const SymPlaneCurve& conic, const std::array<ExactRational, 3>& point);

/// The binary form curve(map(u)) at bound 2 * degree.
BinaryForm pullback(const SymPlaneCurve& curve, const QuadraticMap& map);

/// det of the conic's symmetric 3x3 matrix.
ExactRational conic_discriminant(const SymPlaneCurve& conic);

struct Intersection {
  long total = 0;     ///< with multiplicity
  long distinct = 0;
  BinaryForm pulled_back;
};

Intersection conic_intersection(const SymPlaneCurve& curve, const QuadraticMap& map);
Intersection conic_intersection(const SymPlaneCurve& curve, const SymPlaneCurve& conic,
                                const std::array<ExactRational, 3>& point);

/// Seeded randomized check of the pencil identities for one k.
struct SuiteReport {
  long k = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  long degree_ok = 0;
  long diagonal_ok = 0;
  long membership_checks = 0;
  long membership_agree = 0;
  long membership_positive = 0;
  long bezout_ok = 0;
  long transversal = 0;
  long non_transversal_confirmed = 0;  ///< failures with a vanishing discriminant
  long ramification_match = 0;         ///< diagonal intersections equal to Wronskian root counts
  long covariance_ok = 0;
  bool no_common_point = false;        ///< pullbacks to a fixed conic share no root

  bool exact_checks_passed() const;
  double transversality_rate() const;
};

SuiteReport verify_suite(long k, long samples, std::uint64_t seed, long points_per_pencil = 100);

}  // namespace k3g::pencil
