#include <doctest.h>

#include "k3gonal/errors.hpp"
#include "k3gonal/pencil.hpp"

using namespace k3g;
using namespace k3g::pencil;

namespace {

BinaryForm form(std::vector<ExactRational> c) {
  const long n = static_cast<long>(c.size()) - 1;
  return BinaryForm(n, std::move(c));
}

ProjectivePoint pt(const ExactRational& x) { return ProjectivePoint::affine(x); }

// (f(x)g(y) - f(y)g(x)) / (x - y) evaluated directly at rational x != y.
ExactRational bezoutian_direct(const Pencil& pen, const ExactRational& x, const ExactRational& y) {
  const auto f = pen.f().affine();
  const auto g = pen.g().affine();
  return (f(x) * g(y) - f(y) * g(x)) / (x - y);
}

}  // namespace

TEST_CASE("binary forms") {
  const BinaryForm f = form({0, 1, 0});  // x0 x1
  CHECK(f.multiplicity_at_infinity() == 1);
  CHECK(f.distinct_roots() == 2);
  CHECK(f.squarefree());
  const BinaryForm sq = form({1, 2, 1});  // (x0 + x1)^2
  CHECK(sq.distinct_roots() == 1);
  CHECK_FALSE(sq.squarefree());
  CHECK_FALSE(form({1, 0, 0}).squarefree());  // x0^2: double root at infinity
  CHECK(f(ProjectivePoint{2, 3}) == 6);
  // x0 x1 under x0 -> x0 + x1, x1 -> x1 becomes x0 x1 + x1^2
  CHECK(f.substitute({1, 1, 0, 1}) == form({0, 1, 1}));
  CHECK_THROWS_AS(BinaryForm(2, {1, 2}), DomainError);
  CHECK(same_point({1, 2}, {3, 6}));
  CHECK_FALSE(same_point({1, 2}, {0, 1}));
}

TEST_CASE("degenerate pencils are rejected") {
  CHECK_THROWS_AS(Pencil(form({1, 2}), form({2, 4})), DomainError);
  CHECK_THROWS_AS(Pencil(form({1, 2}), form({1, 2, 3})), DomainError);
  CHECK_THROWS_AS(Pencil(form({0, 0}), form({1, 2})), DomainError);
}

TEST_CASE("k = 2 pencil <x^2, 1>") {
  // f = x1^2, g = x0^2: f(x)g(y) - f(y)g(x) = x^2 - y^2, quotient x + y = e1
  const Pencil pen(form({0, 0, 1}), form({1, 0, 0}));
  const SymPlaneCurve c = wedge_curve(pen);
  CHECK(c.degree() == 1);
  CHECK(c.coeff(1, 0) == 1);
  CHECK(c.coeff(0, 0) == 0);
  CHECK(c.coeff(0, 1) == 0);
  const BinaryForm w = wronskian(pen);
  CHECK(w == form({0, -2, 0}));
  CHECK(proportional(diagonal_restriction(c, 2), w));
  CHECK(contains_divisor(pen, pt(1), pt(-1)));
  CHECK_FALSE(contains_divisor(pen, pt(1), pt(2)));
  CHECK(contains_divisor(pen, pt(0), pt(0)));
  CHECK(contains_divisor(pen, ProjectivePoint::infinity(), ProjectivePoint::infinity()));
}

TEST_CASE("cubic pencil against direct evaluation") {
  // f = x^3 - x, g = x^2 + 2 in the chart x0 = 1
  const Pencil pen(form({0, -1, 0, 1}), form({2, 0, 1, 0}));
  const SymPlaneCurve c = wedge_curve(pen);
  CHECK(c.degree() == 2);
  CHECK(c.affine_degree() == 2);
  for (long xi = -4; xi <= 4; ++xi) {
    for (long yi = -3; yi <= 3; ++yi) {
      const ExactRational x = make_rational(xi, 2);
      const ExactRational y = make_rational(yi, 3);
      if (x == y) continue;
      CHECK(c(1, x + y, x * y) == bezoutian_direct(pen, x, y));
    }
  }
  // B(x, x) = -W(x)
  const BinaryForm w = wronskian(pen);
  for (long xi = -5; xi <= 5; ++xi) CHECK(c(1, 2 * xi, xi * xi) == -w(pt(xi)));
  CHECK(diagonal_restriction(c, 3) == BinaryForm(4, [&] {
          std::vector<ExactRational> v;
          for (const auto& coef : w.coeffs()) v.push_back(-coef);
          return v;
        }()));
}

TEST_CASE("diagonal conic and divisor points") {
  const SymPlaneCurve d = diagonal_conic();
  for (long x = -3; x <= 3; ++x) {
    const auto e = divisor_point(pt(x), pt(x));
    CHECK(d(e[0], e[1], e[2]) == 0);
    const auto off = divisor_point(pt(x), pt(x + 1));
    CHECK(d(off[0], off[1], off[2]) != 0);
  }
  const auto e = divisor_point(ProjectivePoint::infinity(), pt(2));
  CHECK(e == std::array<ExactRational, 3>{0, 1, 2});
}

TEST_CASE("conic parametrization lies on the conic") {
  SymPlaneCurve conic(2);  // e0 e2 - e1^2 + e1 e2, contains (1 : 0 : 0)
  conic.set(0, 1, 1);
  conic.set(2, 0, -1);
  conic.set(1, 1, 1);
  CHECK(conic_discriminant(conic) != 0);
  const QuadraticMap map = parametrize_conic(conic, {1, 0, 0});
  const BinaryForm back = pullback(conic, map);
  CHECK(back.is_zero());
  CHECK_THROWS_AS(parametrize_conic(conic, {1, 1, 1}), DomainError);
  SymPlaneCurve singular(2);
  singular.set(2, 0, 1);
  CHECK_THROWS_AS(parametrize_conic(singular, {1, 0, 0}), DomainError);
}

TEST_CASE("Bezout against a conic") {
  const Pencil pen(form({0, -1, 0, 1}), form({2, 0, 1, 0}));
  const SymPlaneCurve c = wedge_curve(pen);
  const Intersection diag = conic_intersection(c, diagonal_parametrization());
  CHECK(diag.total == 4);
  CHECK(diag.distinct == wronskian(pen).distinct_roots());
  CHECK_THROWS_AS(conic_intersection(diagonal_conic(), diagonal_parametrization()), DomainError);
}

TEST_CASE("ramification") {
  CHECK(simple_ramification(Pencil(form({0, -1, 0, 1}), form({2, 0, 1, 0}))));
  // <x^3, 1> has W = 3x^2: a triple point of ramification at 0 and oo
  CHECK_FALSE(simple_ramification(Pencil(form({0, 0, 0, 1}), form({1, 0, 0, 0}))));
}

TEST_CASE("randomized suite is exact and deterministic") {
  for (long k = 2; k <= 5; ++k) {
    const SuiteReport r = verify_suite(k, 25, 7, 40);
    CHECK(r.exact_checks_passed());
    CHECK(r.membership_positive > 0);
    CHECK(r.membership_checks == 25 * 40);
    const SuiteReport again = verify_suite(k, 25, 7, 40);
    CHECK(again.transversal == r.transversal);
    CHECK(again.membership_positive == r.membership_positive);
  }
  CHECK_THROWS_AS(verify_suite(1, 5, 1), DomainError);
}
