#include "k3gonal/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "k3gonal/errors.hpp"

namespace k3g::poly {

Polynomial::Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const ExactRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const ExactRational& c, std::size_t power) {
  std::vector<ExactRational> v(power + 1, 0);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

ExactRational Polynomial::leading() const {
  return coeffs_.empty() ? ExactRational(0) : coeffs_.back();
}

ExactRational Polynomial::operator()(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const ExactRational inv = 1 / leading();
  return *this * inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<ExactRational> rem = a.coeffs();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<ExactRational> quo(da - db + 1, 0);
  const ExactRational lead_inv = 1 / b.leading();
  for (long i = da; i >= db; --i) {
    const ExactRational c = rem[i] * lead_inv;
    if (c == 0) continue;
    quo[i - db] = c;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

long distinct_root_count(const Polynomial& a) {
  require(!a.is_zero(), "distinct_root_count of the zero polynomial");
  return a.degree() - gcd(a, a.derivative()).degree();
}

Polynomial pow(const Polynomial& a, unsigned n) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) out = out * a;
  return out;
}

ExactRational determinant(std::vector<std::vector<ExactRational>> m) {
  const std::size_t n = m.size();
  ExactRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const ExactRational inv = 1 / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const ExactRational f = m[row][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return det;
}

ExactRational resultant(const Polynomial& a, long da, const Polynomial& b, long db) {
  require(da >= a.degree() && db >= b.degree(), "formal degree below actual degree");
  require(da >= 0 && db >= 0, "formal degrees must be nonnegative");
  const long n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<ExactRational>> s(n, std::vector<ExactRational>(n, 0));
  // rows hold coefficients from the top formal degree down
  for (long r = 0; r < db; ++r) {
    for (long i = 0; i <= da; ++i) s[r][r + i] = a.coeff(da - i);
  }
  for (long r = 0; r < da; ++r) {
    for (long i = 0; i <= db; ++i) s[db + r][r + i] = b.coeff(db - i);
  }
  return determinant(std::move(s));
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  const ExactRational c = a.leading() / b.leading();
  return a == b * c;
}

}  // namespace k3g::poly
