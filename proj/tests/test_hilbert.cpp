#include <doctest.h>

#include <random>

#include "k3gonal/errors.hpp"
#include "k3gonal/gonality.hpp"
#include "k3gonal/hilbert.hpp"

using namespace k3g;
using namespace k3g::hilbert;

namespace {

ExactRational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("q of curve classes") {
  CHECK(q_curve(fiber_class(5, 2)) == Q(-1, 2));
  for (long k = 2; k <= 7; ++k) CHECK(q_curve({5, k, 0, 1}) == Q(-1, 2 * (k - 1)));
  CHECK(q_curve({9, 4, 1, 10}) == Q(-2, 3));
  for (long p = 2; p <= 9; ++p) CHECK(q_curve({p, 3, 1, 0}) == 2 * p - 2);
  CHECK_THROWS_AS(q_curve({5, 1, 1, 1}), DomainError);
}

TEST_CASE("q of divisor classes") {
  CHECK(q_divisor({5, 3, 0, -1}) == -4);
  CHECK(q_divisor({5, 3, 1, 0}) == 8);
  CHECK(q_divisor({5, 3, 1, Q(1, 2)}) == 8 - 1);
}

TEST_CASE("pairing") {
  for (long t = -3; t <= 5; ++t) CHECK(pairing({8, 2, 1, t}, fiber_class(8, 2)) == t);
  CHECK(pairing({8, 2, 1, 0}, {8, 2, 1, 5}) == 14);
  CHECK(pairing({8, 2, 1, tau(8, 2)}, optimal_class(8, 2)) == 0);
  CHECK_THROWS_AS(pairing({8, 2, 1, 1}, {9, 2, 1, 1}), DomainError);
}

TEST_CASE("gonality and optimal classes") {
  CHECK(gonality_class(9, 4, 2) == CurveClass{9, 4, 1, 10});
  CHECK(gonality_class(8, 2, 4) == CurveClass{8, 2, 1, 5});
  for (long k = 2; k <= 6; ++k) CHECK(gonality_class(11, k, 11).y == k - 1);
  CHECK_THROWS_AS(gonality_class(8, 2, 3), DomainError);
  CHECK(optimal_class(8, 2).y == 5);
  CHECK(optimal_class(12, 3).y == 10);
  CHECK(optimal_class(10, 2).y == 6);
  CHECK(optimal_class(3, 4).y == 6);
}

TEST_CASE("formatting classes") {
  CHECK(format_class({8, 2, 1, 5}) == "H - 5*r_k");
  CHECK(format_class({8, 2, 3, 16}) == "3*H - 16*r_k");
  CHECK(format_class(fiber_class(8, 2)) == "r_k");
  CHECK(format_class({8, 2, 1, 0}) == "H");
  CHECK(format_class({8, 2, 1, -2}) == "H + 2*r_k");
  CHECK(format_class({8, 2, 0, 1}) == "-r_k");
}

TEST_CASE("q_case examples") {
  CHECK(q_case(9, 4, 2) == Q(-2, 3));
  CHECK(q_case(6, 2, 2) == Q(-5, 2));
  CHECK(q_case(5, 2, 2) == 0);
  CHECK_THROWS_AS(q_case(8, 2, 3), DomainError);
}

TEST_CASE("q_optimal_form examples") {
  CHECK(q_optimal_form(9, 4) == Q(-2, 3));
  CHECK(q_optimal_form(12, 3) == -3);
  CHECK(q_optimal_form(8, 2) == Q(3, 2));
  CHECK_THROWS_AS(q_optimal_form(5, 4), DomainError);
}

TEST_CASE("tau and cone verdicts") {
  CHECK(tau(8, 2) == Q(14, 5));
  CHECK(tau(12, 3) == Q(11, 5));
  CHECK(tau(2, 2) == Q(2, 3));
  CHECK(cone_verdict(8, 2, 1) == ConeVerdict::Ample);
  CHECK(cone_verdict(8, 2, Q(14, 5)) == ConeVerdict::NefBoundary);
  CHECK(cone_verdict(8, 2, 0) == ConeVerdict::NefBoundary);
  CHECK(cone_verdict(8, 2, 3) == ConeVerdict::NotNef);
  CHECK(cone_verdict(8, 2, -1) == ConeVerdict::NotNef);
}

TEST_CASE("minimal q family") {
  auto a = minimal_q_family(12, 3);
  REQUIRE(a);
  CHECK(a->s == 2);
  CHECK(a->delta == 4);
  CHECK(a->cls == CurveClass{12, 3, 1, 10});
  CHECK(a->q == -3);
  auto b = minimal_q_family(6, 2);
  REQUIRE(b);
  CHECK(b->s == 2);
  CHECK(b->delta == 2);
  CHECK(b->q == Q(-5, 2));
  CHECK_FALSE(minimal_q_family(7, 2));
}

TEST_CASE("isotropic case") {
  auto a = isotropic_case(5, 2);
  REQUIRE(a);
  CHECK(a->s == 2);
  CHECK(a->delta == 2);
  CHECK(a->cls == CurveClass{5, 2, 1, 4});
  CHECK(a->q == 0);
  auto b = isotropic_case(10, 5);
  REQUIRE(b);
  CHECK(b->s == 6);
  CHECK(b->delta == 2);
  CHECK(b->q == 0);
  CHECK_FALSE(isotropic_case(4, 2));
  // (k-1)(p-1) = 9 is a square but p - 2s + k - 1 = 11 > p
  CHECK_FALSE(isotropic_case(2, 10));
}

TEST_CASE("lagrangian reports") {
  const auto a = lagrangian_report(10, 5);
  CHECK(a.has_isotropic);
  CHECK(a.s == 6);
  CHECK(a.alpha == 1);
  CHECK(a.value == 0);
  CHECK(a.not_nef);
  CHECK_FALSE(a.necessary_condition_holds);
  CHECK_FALSE(a.primitive);
  const auto b = lagrangian_report(10, 2);
  CHECK(b.has_isotropic);
  CHECK(b.s == 3);
  CHECK(b.alpha == 2);
  CHECK(b.value == -2);
  CHECK(b.necessary_condition_holds);
  CHECK(b.primitive);
  CHECK(b.n.value() == 3);
  CHECK_FALSE(lagrangian_report(4, 2).has_isotropic);
}

TEST_CASE("extremal ray status") {
  const auto a = extremal_ray_status(12, 3);
  CHECK(a.status == RayStatus::ProvenMinQ);
  REQUIRE(a.rays.size() == 2);
  CHECK(a.rays[0] == fiber_class(12, 3));
  CHECK(a.rays[1] == CurveClass{12, 3, 1, 10});
  CHECK_FALSE(a.open);
  const auto b = extremal_ray_status(3, 4);
  CHECK(b.status == RayStatus::ProvenBM);
  CHECK(b.rays[1] == CurveClass{3, 4, 1, 6});
  const auto c = extremal_ray_status(8, 2);
  CHECK(c.status == RayStatus::Open);
  CHECK(c.open);
  REQUIRE(c.notes.size() == 2);
  CHECK(c.notes[1].find("3*H - 16*r_k") != std::string::npos);
  const auto d = extremal_ray_status(10, 2);
  CHECK(d.status == RayStatus::ProvenIsoPrim);
  CHECK(d.rays[1].y == 6);
  // n = 1 gives p = k, which falls in the first regime
  CHECK(extremal_ray_status(4, 4).status == RayStatus::ProvenBM);
}

TEST_CASE("genus_for_invariants examples") {
  CHECK(genus_for_invariants(4, 1, 2, 1) == 9);
  CHECK(q_optimal_form(9, 4) == Q(-2, 3));
  CHECK(genus_for_invariants(3, 0, 2, 2) == 12);
  CHECK(q_optimal_form(12, 3) == -3);
  CHECK(genus_for_invariants(2, 0, 1, 3) == 12);
  CHECK(q_optimal_form(12, 2) == Q(-5, 2));
  CHECK_THROWS_AS(genus_for_invariants(3, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(genus_for_invariants(3, 0, 3, 1), DomainError);
}

TEST_CASE("attained q values") {
  CHECK(attained_q_values(2, 200) == std::vector<ExactRational>{Q(-5, 2), -2, Q(-1, 2)});
  CHECK(attained_q_values(3, 300) == std::vector<ExactRational>{-3, Q(-9, 4), -2, -1, Q(-1, 4)});
  CHECK(attained_q_values(4, 400) ==
        std::vector<ExactRational>{Q(-7, 2), Q(-8, 3), Q(-13, 6), -2, Q(-3, 2), Q(-2, 3), Q(-1, 6)});
}

TEST_CASE("HT comparison") {
  const auto a = ht_violation_check(37, 10);
  CHECK(a.applicable);
  CHECK(a.n == 2);
  CHECK(a.q_reduced == Q(-4) - Q(1, 18));
  CHECK(a.over_prediction);
  const auto b = ht_violation_check(10, 2);
  CHECK(b.applicable);
  CHECK(b.q_reduced == Q(-13, 2));
  CHECK_FALSE(b.over_prediction);
  CHECK_FALSE(ht_violation_check(11, 2).applicable);
  CHECK_FALSE(ht_violation_check(2, 2).applicable);  // n = 1
}

TEST_CASE("double identity, lower bound and its equality cases") {
  for (long p = 2; p <= 120; ++p) {
    for (long k = 2; k <= 8; ++k) {
      const ExactInt d0 = gonality::delta0(p, k);
      const bool family = minimal_q_family(p, k).has_value();
      for (ExactInt delta = d0; delta <= p; ++delta) {
        const ExactRational q = q_case(p, k, delta);
        const bool at_bound = q == Q(-(k + 3), 2);
        if (at_bound != (family && delta == d0)) FAIL("bound equality at p=" << p << " k=" << k);
      }
    }
  }
}

TEST_CASE("optimal class consistency and cone boundary") {
  std::mt19937_64 rng(11);
  for (long p = 2; p <= 120; ++p) {
    for (long k = 2; k <= 8; ++k) {
      const CurveClass opt = optimal_class(p, k);
      CHECK(opt == gonality_class(p, k, gonality::delta0(p, k)));
      const ExactRational t = tau(p, k);
      CHECK(pairing({p, k, 1, t}, opt) == 0);
      for (int i = 0; i < 3; ++i) {
        const ExactRational below = t - make_rational(static_cast<long>(rng() % 50 + 1), static_cast<long>(rng() % 7 + 1));
        CHECK(pairing({p, k, 1, below}, opt) > 0);
      }
      if (p > 2 * (k - 1)) CHECK(q_optimal_form(p, k) == q_case(p, k, gonality::delta0(p, k)));
    }
  }
}

TEST_CASE("isotropy scan") {
  for (long p = 2; p <= 120; ++p) {
    for (long k = 2; k <= 8; ++k) {
      const auto iso = isotropic_case(p, k);
      if (iso) {
        CHECK(q_curve(iso->cls) == 0);
        continue;
      }
      for (long delta = 0; delta <= p; ++delta) {
        if (gonality::admissible(p, k, delta)) CHECK(q_case(p, k, delta) != 0);
      }
    }
  }
}

TEST_CASE("realization round trip") {
  for (long k = 2; k <= 5; ++k) {
    for (long rho = 0; rho <= 3; ++rho) {
      for (long beta = 0; beta <= k - 1; ++beta) {
        const long m0 = std::max(1L, rho);
        for (long m = m0; m < m0 + 3; ++m) {
          const ExactInt p = genus_for_invariants(k, rho, beta, m);
          const auto d = gonality::decompose(p, k);
          CHECK(d.m == m);
          CHECK(d.t == k - 1 - beta);
          CHECK(d.lambda == rho);
          CHECK(q_optimal_form(p, k) == Q(2 * (rho - 1)) - Q(beta * beta, 2 * (k - 1)));
        }
      }
    }
  }
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(5);
  auto draw = [&](long span) { return static_cast<long>(rng() % (2 * span + 1)) - span; };
  for (int i = 0; i < 300; ++i) {
    const long p = 2 + static_cast<long>(rng() % 30);
    const long k = 2 + static_cast<long>(rng() % 6);
    const DivisorClass d1{p, k, draw(5), make_rational(draw(9), 1 + rng() % 4)};
    const DivisorClass d2{p, k, draw(5), make_rational(draw(9), 1 + rng() % 4)};
    const CurveClass r1{p, k, draw(5), draw(20)};
    const CurveClass r2{p, k, draw(5), draw(20)};
    const long n = draw(6);
    const DivisorClass dsum{p, k, d1.a + d2.a, d1.c + d2.c};
    const CurveClass rsum{p, k, r1.a + r2.a, r1.y + r2.y};
    CHECK(pairing(dsum, r1) == pairing(d1, r1) + pairing(d2, r1));
    CHECK(pairing(d1, rsum) == pairing(d1, r1) + pairing(d1, r2));
    CHECK(pairing({p, k, n * d1.a, n * d1.c}, r1) == n * pairing(d1, r1));
    CHECK(pairing(d1, {p, k, n * r1.a, n * r1.y}) == n * pairing(d1, r1));
  }
}

TEST_CASE("scan rows are ordered and repeatable") {
  const auto a = scan(30, 5, 4);
  const auto b = scan(30, 5, 1);
  REQUIRE(a.size() == 29 * 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].k == b[i].k);
    CHECK(a[i].q == b[i].q);
    CHECK(a[i].optimal == b[i].optimal);
  }
  CHECK(a[0].p == 2);
  CHECK(a[0].k == 2);
  CHECK(a[29].k == 3);
}
