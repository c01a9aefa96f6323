#include "k3gonal/pencil.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "k3gonal/errors.hpp"

namespace k3g::pencil {

using poly::Polynomial;

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b) {
  require(a.x0 != 0 || a.x1 != 0, "(0 : 0) is not a point of P^1");
  require(b.x0 != 0 || b.x1 != 0, "(0 : 0) is not a point of P^1");
  return a.x0 * b.x1 == a.x1 * b.x0;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(long degree_bound, std::vector<ExactRational> coeffs)
    : bound_(degree_bound), coeffs_(std::move(coeffs)) {
  require(bound_ >= 0, "degree bound must be nonnegative");
  require(static_cast<long>(coeffs_.size()) == bound_ + 1,
          "a binary form of bound n needs n+1 coefficients");
}

BinaryForm BinaryForm::from_affine(const Polynomial& p, long degree_bound) {
  require(p.degree() <= degree_bound, "polynomial degree exceeds the declared bound");
  std::vector<ExactRational> c(degree_bound + 1, 0);
  for (long i = 0; i <= p.degree(); ++i) c[i] = p.coeffs()[i];
  return BinaryForm(degree_bound, std::move(c));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactRational& c) { return c == 0; });
}

Polynomial BinaryForm::affine() const { return Polynomial(coeffs_); }

ExactRational BinaryForm::operator()(const ProjectivePoint& pt) const {
  ExactRational acc = 0;
  ExactRational x1_pow = 1;
  for (long i = 0; i <= bound_; ++i) {
    ExactRational x0_pow = 1;
    for (long e = 0; e < bound_ - i; ++e) x0_pow *= pt.x0;
    acc += coeffs_[i] * x0_pow * x1_pow;
    x1_pow *= pt.x1;
  }
  return acc;
}

long BinaryForm::multiplicity_at_infinity() const {
  require(!is_zero(), "multiplicity of a root of the zero form");
  return bound_ - affine().degree();
}

long BinaryForm::distinct_roots() const {
  const Polynomial a = affine();
  require(!a.is_zero(), "distinct roots of the zero form");
  return poly::distinct_root_count(a) + (bound_ > a.degree() ? 1 : 0);
}

bool BinaryForm::squarefree() const {
  const Polynomial a = affine();
  require(!a.is_zero(), "squarefree test of the zero form");
  return multiplicity_at_infinity() <= 1 && poly::distinct_root_count(a) == a.degree();
}

BinaryForm BinaryForm::substitute(const std::array<ExactRational, 4>& abcd) const {
  // x0 -> a + b x, x1 -> c + d x in the chart x0 = 1
  const Polynomial new_x0({abcd[0], abcd[1]});
  const Polynomial new_x1({abcd[2], abcd[3]});
  Polynomial acc;
  for (long i = 0; i <= bound_; ++i) {
    if (coeffs_[i] == 0) continue;
    acc += poly::pow(new_x0, bound_ - i) * poly::pow(new_x1, i) * coeffs_[i];
  }
  return from_affine(acc, bound_);
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  return a.degree_bound() == b.degree_bound() && poly::proportional(a.affine(), b.affine());
}

// ---------------------------------------------------------------------------
// Pencil

Pencil::Pencil(BinaryForm f, BinaryForm g) : f_(std::move(f)), g_(std::move(g)) {
  require(f_.degree_bound() == g_.degree_bound(), "pencil members need the same degree bound");
  require(f_.degree_bound() >= 1, "pencil degree must be >= 1");
  require(!f_.is_zero() && !g_.is_zero() && !proportional(f_, g_), "degenerate pencil");
}

// ---------------------------------------------------------------------------
// SymPlaneCurve

SymPlaneCurve::SymPlaneCurve(long degree) : degree_(degree) {
  require(degree >= 0, "curve degree must be nonnegative");
  c_.resize(degree + 1);
  for (long i = 0; i <= degree; ++i) c_[i].assign(degree - i + 1, 0);
}

ExactRational SymPlaneCurve::coeff(long i, long j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0;
  return c_[i][j];
}

void SymPlaneCurve::set(long i, long j, const ExactRational& c) {
  require(i >= 0 && j >= 0 && i + j <= degree_, "monomial outside the curve's degree");
  c_[i][j] = c;
}

bool SymPlaneCurve::is_zero() const { return affine_degree() < 0; }

long SymPlaneCurve::affine_degree() const {
  long best = -1;
  for (long i = 0; i <= degree_; ++i) {
    for (long j = 0; i + j <= degree_; ++j) {
      if (c_[i][j] != 0) best = std::max(best, i + j);
    }
  }
  return best;
}

ExactRational SymPlaneCurve::operator()(const ExactRational& e0, const ExactRational& e1,
                                        const ExactRational& e2) const {
  ExactRational acc = 0;
  for (long i = 0; i <= degree_; ++i) {
    for (long j = 0; i + j <= degree_; ++j) {
      if (c_[i][j] == 0) continue;
      ExactRational term = c_[i][j];
      for (long e = 0; e < degree_ - i - j; ++e) term *= e0;
      for (long e = 0; e < i; ++e) term *= e1;
      for (long e = 0; e < j; ++e) term *= e2;
      acc += term;
    }
  }
  return acc;
}

SymPlaneCurve diagonal_conic() {
  SymPlaneCurve c(2);
  c.set(2, 0, 1);
  c.set(0, 1, -4);
  return c;
}

std::array<ExactRational, 3> divisor_point(const ProjectivePoint& x, const ProjectivePoint& y) {
  return {x.x0 * y.x0, x.x0 * y.x1 + x.x1 * y.x0, x.x1 * y.x1};
}

// ---------------------------------------------------------------------------
// Wedge curve, Wronskian, diagonal

namespace {

ExactInt binomial(unsigned long n, unsigned long r) {
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

using Bivariate = std::vector<std::vector<ExactRational>>;  // [x power][y power]

}  // namespace

SymPlaneCurve wedge_curve(const Pencil& pencil) {
  const long k = pencil.k();
  const auto& f = pencil.f().coeffs();
  const auto& g = pencil.g().coeffs();

  // f(x) g(y) - f(y) g(x) as a polynomial in x with coefficients in y
  const long width = 2 * k + 1;
  std::vector<std::vector<ExactRational>> c(k + 1, std::vector<ExactRational>(width, 0));
  for (long i = 0; i <= k; ++i) {
    for (long j = 0; j <= k; ++j) c[i][j] = f[i] * g[j] - f[j] * g[i];
  }

  // synthetic division by (x - y)
  auto times_y_plus = [width](const std::vector<ExactRational>& q, const std::vector<ExactRational>& add) {
    std::vector<ExactRational> out = add;
    for (long e = 0; e + 1 < width; ++e) out[e + 1] += q[e];
    ensure(q[width - 1] == 0, "wedge_curve: quotient degree overflow");
    return out;
  };
  std::vector<std::vector<ExactRational>> quot(k);
  quot[k - 1] = c[k];
  for (long i = k - 1; i >= 1; --i) quot[i - 1] = times_y_plus(quot[i], c[i]);
  const auto remainder = times_y_plus(quot[0], c[0]);
  ensure(std::all_of(remainder.begin(), remainder.end(), [](const ExactRational& v) { return v == 0; }),
         "wedge_curve: x - y does not divide f(x)g(y) - f(y)g(x)");

  const long n = k - 1;
  Bivariate b(n + 1, std::vector<ExactRational>(n + 1, 0));
  for (long a = 0; a <= n; ++a) {
    for (long e = 0; e < width; ++e) {
      if (e <= n) {
        b[a][e] = quot[a][e];
      } else {
        ensure(quot[a][e] == 0, "wedge_curve: quotient exceeds bidegree (k-1, k-1)");
      }
    }
  }
  for (long a = 0; a <= n; ++a) {
    for (long e = 0; e < a; ++e) ensure(b[a][e] == b[e][a], "wedge_curve: quotient is not symmetric");
  }

  // Peel off leading monomials x^a y^b (a >= b) as e1^(a-b) e2^b.
  SymPlaneCurve curve(n);
  for (long a = n; a >= 0; --a) {
    for (long lo = a; lo >= 0; --lo) {
      const ExactRational lead = b[a][lo];
      if (lead == 0) continue;
      const long i = a - lo;
      curve.set(i, lo, lead);
      // e1^i e2^lo = sum_s C(i, s) x^(lo+s) y^(lo+i-s)
      for (long s = 0; s <= i; ++s) {
        b[lo + s][lo + i - s] -= lead * ExactRational(binomial(i, s));
      }
    }
  }
  for (const auto& row : b) {
    for (const auto& v : row) ensure(v == 0, "wedge_curve: quotient is not a symmetric polynomial");
  }
  return curve;
}

BinaryForm wronskian(const Pencil& pencil) {
  const Polynomial f = pencil.f().affine();
  const Polynomial g = pencil.g().affine();
  const Polynomial w = f * g.derivative() - f.derivative() * g;
  return BinaryForm::from_affine(w, 2 * pencil.k() - 2);
}

BinaryForm diagonal_restriction(const SymPlaneCurve& curve, long k) {
  const long n = curve.degree();
  require(n == k - 1, "diagonal_restriction expects a curve of degree k-1");
  std::vector<ExactRational> out(2 * n + 1, 0);
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; i + j <= n; ++j) {
      const ExactRational c = curve.coeff(i, j);
      if (c == 0) continue;
      out[i + 2 * j] += c * ExactRational(ExactInt(1) << i);
    }
  }
  return BinaryForm(2 * n, std::move(out));
}

bool simple_ramification(const Pencil& pencil) { return wronskian(pencil).squarefree(); }

bool contains_divisor(const Pencil& pencil, const ProjectivePoint& x, const ProjectivePoint& y) {
  if (same_point(x, y)) return wronskian(pencil)(x) == 0;
  const auto& f = pencil.f();
  const auto& g = pencil.g();
  return f(x) * g(y) - f(y) * g(x) == 0;
}

// ---------------------------------------------------------------------------
// Conics

QuadraticMap diagonal_parametrization() {
  return {BinaryForm(2, {1, 0, 0}), BinaryForm(2, {0, 2, 0}), BinaryForm(2, {0, 0, 1})};
}

namespace {

using Matrix3 = std::array<std::array<ExactRational, 3>, 3>;

Matrix3 conic_matrix(const SymPlaneCurve& conic) {
  require(conic.degree() == 2, "expected a conic");
  Matrix3 m;
  m[0][0] = conic.coeff(0, 0);
  m[1][1] = conic.coeff(2, 0);
  m[2][2] = conic.coeff(0, 2);
  m[0][1] = m[1][0] = conic.coeff(1, 0) / 2;
  m[0][2] = m[2][0] = conic.coeff(0, 1) / 2;
  m[1][2] = m[2][1] = conic.coeff(1, 1) / 2;
  return m;
}

ExactRational det3(const std::array<ExactRational, 3>& a, const std::array<ExactRational, 3>& b,
                   const std::array<ExactRational, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

ExactRational conic_discriminant(const SymPlaneCurve& conic) {
  const Matrix3 m = conic_matrix(conic);
  return det3(m[0], m[1], m[2]);
}

QuadraticMap parametrize_conic(const SymPlaneCurve& conic, const std::array<ExactRational, 3>& point) {
  const Matrix3 m = conic_matrix(conic);
  require(det3(m[0], m[1], m[2]) != 0, "conic is singular");
  require(point[0] != 0 || point[1] != 0 || point[2] != 0, "(0 : 0 : 0) is not a point");
  require(conic(point[0], point[1], point[2]) == 0, "base point does not lie on the conic");

  // Two basis vectors completing the base point to a basis.
  const std::array<std::array<ExactRational, 3>, 3> basis{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::array<ExactRational, 3> a, b;
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i) {
    for (int j = i + 1; j < 3 && !found; ++j) {
      if (det3(point, basis[i], basis[j]) != 0) {
        a = basis[i];
        b = basis[j];
        found = true;
      }
    }
  }
  ensure(found, "parametrize_conic: no complementary basis");

  // Line direction D(u) = a + u b; the second intersection of the line
  // through the base point P is 2 (P.M.D) D - Q(D) P.
  std::array<Polynomial, 3> d;
  for (int c = 0; c < 3; ++c) d[c] = Polynomial({a[c], b[c]});
  Polynomial pmd;
  for (int c = 0; c < 3; ++c) {
    ExactRational mp = 0;
    for (int r = 0; r < 3; ++r) mp += point[r] * m[r][c];
    pmd += d[c] * mp;
  }
  Polynomial qd;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) qd += d[r] * d[c] * m[r][c];
  }
  QuadraticMap out;
  for (int c = 0; c < 3; ++c) {
    out[c] = BinaryForm::from_affine(pmd * d[c] * ExactRational(2) - qd * point[c], 2);
  }
  return out;
}

BinaryForm pullback(const SymPlaneCurve& curve, const QuadraticMap& map) {
  const long n = curve.degree();
  std::array<std::vector<Polynomial>, 3> powers;
  for (int c = 0; c < 3; ++c) {
    require(map[c].degree_bound() == 2, "parametrization must be by quadratic forms");
    powers[c].push_back(Polynomial::constant(1));
    for (long e = 1; e <= n; ++e) powers[c].push_back(powers[c].back() * map[c].affine());
  }
  Polynomial acc;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; i + j <= n; ++j) {
      const ExactRational c = curve.coeff(i, j);
      if (c == 0) continue;
      acc += powers[0][n - i - j] * powers[1][i] * powers[2][j] * c;
    }
  }
  return BinaryForm::from_affine(acc, 2 * n);
}

Intersection conic_intersection(const SymPlaneCurve& curve, const QuadraticMap& map) {
  Intersection out;
  out.pulled_back = pullback(curve, map);
  require(!out.pulled_back.is_zero(), "the curve contains the conic");
  out.total = out.pulled_back.degree_bound();
  out.distinct = out.pulled_back.distinct_roots();
  return out;
}

Intersection conic_intersection(const SymPlaneCurve& curve, const SymPlaneCurve& conic,
                                const std::array<ExactRational, 3>& point) {
  return conic_intersection(curve, parametrize_conic(conic, point));
}

// ---------------------------------------------------------------------------
// Randomized suite

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  ExactRational rational() { return make_rational(integer(-9, 9), integer(1, 4)); }
  bool chance(long one_in) { return integer(0, one_in - 1) == 0; }

 private:
  std::mt19937_64 rng_;
};

struct SampledPencil {
  Pencil pencil;
  std::vector<ProjectivePoint> f_roots;
};

bool coprime(const BinaryForm& f, const BinaryForm& g) {
  const Polynomial fa = f.affine();
  const Polynomial ga = g.affine();
  if (fa.degree() < f.degree_bound() && ga.degree() < g.degree_bound()) return false;
  return poly::gcd(fa, ga).degree() == 0;
}

SampledPencil sample_pencil(Sampler& s, long k) {
  while (true) {
    std::vector<ProjectivePoint> roots;
    Polynomial f = Polynomial::constant(make_rational(s.integer(1, 5), s.integer(1, 3)));
    const bool root_at_infinity = s.chance(4);
    for (long i = 0; i < k; ++i) {
      if (root_at_infinity && i == 0) {
        roots.push_back(ProjectivePoint::infinity());
        continue;
      }
      const ExactRational r = s.rational();
      roots.push_back(ProjectivePoint::affine(r));
      f = f * Polynomial({-r, 1});
    }
    std::vector<ExactRational> gc(k + 1);
    for (auto& c : gc) c = s.rational();
    const BinaryForm ff = BinaryForm::from_affine(f, k);
    const BinaryForm gg(k, std::move(gc));
    if (gg.is_zero() || !coprime(ff, gg)) continue;
    return {Pencil(ff, gg), std::move(roots)};
  }
}

ProjectivePoint sample_point(Sampler& s) {
  if (s.chance(10)) return ProjectivePoint::infinity();
  return ProjectivePoint::affine(s.rational());
}

struct SampledConic {
  SymPlaneCurve conic;
  std::array<ExactRational, 3> point;
};

SampledConic sample_conic(Sampler& s) {
  while (true) {
    Matrix3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = r; c < 3; ++c) m[r][c] = m[c][r] = s.integer(-5, 5);
    }
    std::array<ExactRational, 3> pt{s.integer(-3, 3), s.integer(-3, 3), s.integer(-3, 3)};
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
      if (pt[i] != 0) pivot = i;
    }
    if (pivot < 0) continue;
    ExactRational q = 0;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) q += pt[r] * m[r][c] * pt[c];
    }
    m[pivot][pivot] -= q / (pt[pivot] * pt[pivot]);
    SymPlaneCurve conic(2);
    conic.set(0, 0, m[0][0]);
    conic.set(2, 0, m[1][1]);
    conic.set(0, 2, m[2][2]);
    conic.set(1, 0, 2 * m[0][1]);
    conic.set(0, 1, 2 * m[0][2]);
    conic.set(1, 1, 2 * m[1][2]);
    if (conic_discriminant(conic) == 0) continue;
    return {conic, pt};
  }
}

// Discriminant test through the Sylvester resultant, independent of the gcd
// route used by BinaryForm::squarefree.
bool has_repeated_root(const BinaryForm& form) {
  const Polynomial a = form.affine();
  if (a.is_zero()) return true;
  if (form.degree_bound() - a.degree() >= 2) return true;
  if (a.degree() <= 1) return false;
  const Polynomial da = a.derivative();
  return poly::resultant(a, a.degree(), da, da.degree()) == 0;
}

}  // namespace

bool SuiteReport::exact_checks_passed() const {
  return degree_ok == samples && diagonal_ok == samples && membership_agree == membership_checks &&
         bezout_ok == samples && transversal + non_transversal_confirmed == samples &&
         ramification_match == samples && covariance_ok == samples && (samples < 3 || no_common_point);
}

double SuiteReport::transversality_rate() const {
  return samples == 0 ? 0.0 : static_cast<double>(transversal) / static_cast<double>(samples);
}

SuiteReport verify_suite(long k, long samples, std::uint64_t seed, long points_per_pencil) {
  require(k >= 2, "k must be >= 2");
  require(samples >= 1, "need at least one sample");
  SuiteReport rep;
  rep.k = k;
  rep.samples = samples;
  rep.seed = seed;
  Sampler s(seed);

  const SampledConic family_conic = sample_conic(s);
  const QuadraticMap family_map = parametrize_conic(family_conic.conic, family_conic.point);
  Polynomial common;
  bool common_has_infinity = true;
  long family = 0;

  for (long n = 0; n < samples; ++n) {
    const SampledPencil sp = sample_pencil(s, k);
    const Pencil& pen = sp.pencil;
    const SymPlaneCurve curve = wedge_curve(pen);
    const BinaryForm w = wronskian(pen);

    if (curve.degree() == k - 1 && !curve.is_zero() && curve.affine_degree() == k - 1) ++rep.degree_ok;
    if (proportional(diagonal_restriction(curve, k), w)) ++rep.diagonal_ok;

    for (long t = 0; t < points_per_pencil; ++t) {
      ProjectivePoint x, y;
      const long kind = t % 10;
      if (kind < 3) {
        const long i = s.integer(0, k - 1);
        const long j = (i + s.integer(1, k - 1)) % k;
        x = sp.f_roots[i];
        y = sp.f_roots[j];
      } else if (kind == 3) {
        x = y = sample_point(s);
      } else {
        x = sample_point(s);
        y = sample_point(s);
      }
      const auto e = divisor_point(x, y);
      const bool on_curve = curve(e[0], e[1], e[2]) == 0;
      const bool in_pencil = contains_divisor(pen, x, y);
      ++rep.membership_checks;
      if (on_curve == in_pencil) ++rep.membership_agree;
      if (in_pencil) ++rep.membership_positive;
    }

    const SampledConic sc = sample_conic(s);
    try {
      const Intersection inter = conic_intersection(curve, sc.conic, sc.point);
      if (inter.total == 2 * (k - 1)) ++rep.bezout_ok;
      if (inter.distinct == 2 * (k - 1)) {
        ++rep.transversal;
      } else if (has_repeated_root(inter.pulled_back)) {
        ++rep.non_transversal_confirmed;
      }
    } catch (const DomainError&) {
      // conic inside the curve: neither transversal nor a confirmed tangency
    }

    const Intersection diag = conic_intersection(curve, diagonal_parametrization());
    if (diag.total == 2 * (k - 1) && diag.distinct == w.distinct_roots()) ++rep.ramification_match;

    std::array<ExactRational, 4> abcd;
    do {
      for (auto& v : abcd) v = s.integer(-4, 4);
    } while (abcd[0] * abcd[3] - abcd[1] * abcd[2] == 0);
    const Pencil moved(pen.f().substitute(abcd), pen.g().substitute(abcd));
    if (proportional(wronskian(moved), w.substitute(abcd))) ++rep.covariance_ok;

    if (family < 5) {
      const BinaryForm pb = pullback(curve, family_map);
      if (!pb.is_zero()) {
        common = family == 0 ? pb.affine() : poly::gcd(common, pb.affine());
        common_has_infinity = common_has_infinity && pb.multiplicity_at_infinity() > 0;
        ++family;
      }
    }
  }
  rep.no_common_point = family >= 3 && common.degree() == 0 && !common_has_infinity;
  return rep;
}

}  // namespace k3g::pencil
