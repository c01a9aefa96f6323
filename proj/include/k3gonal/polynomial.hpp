#pragma once

// Dense univariate polynomials over the rationals, plus the few exact
// algorithms the pencil code needs: Euclidean division, gcd, squarefree
// degree and Sylvester resultants.

#include <vector>

#include "k3gonal/exactmath.hpp"

namespace k3g::poly {

class Polynomial {
 public:
  Polynomial() = default;
  /// coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
  explicit Polynomial(std::vector<ExactRational> coeffs);

  static Polynomial constant(const ExactRational& c);
  static Polynomial monomial(const ExactRational& c, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  ExactRational coeff(std::size_t i) const;
  ExactRational leading() const;

  ExactRational operator()(const ExactRational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ExactRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ExactRational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Number of distinct complex roots of a nonzero polynomial.
long distinct_root_count(const Polynomial& a);

Polynomial pow(const Polynomial& a, unsigned n);

/// Resultant of a and b taken at formal degrees (da, db), via the Sylvester
/// determinant. Formal degrees may exceed the actual ones, which accounts for
/// common roots at infinity.
ExactRational resultant(const Polynomial& a, long da, const Polynomial& b, long db);

/// Determinant by fraction-exact Gaussian elimination.
ExactRational determinant(std::vector<std::vector<ExactRational>> m);

/// Whether a == c * b for some nonzero rational c.
bool proportional(const Polynomial& a, const Polynomial& b);

}  // namespace k3g::poly
