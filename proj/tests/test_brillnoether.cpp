#include <doctest.h>

#include "k3gonal/brillnoether.hpp"
#include "k3gonal/errors.hpp"

using namespace k3g;

TEST_CASE("rho examples") {
  CHECK(bn::rho(4, 1, 3) == 0);
  CHECK(bn::rho(9, 1, 6) == 1);
  for (long g = 0; g <= 10; ++g) {
    for (long d = 0; d <= g; ++d) CHECK(bn::rho(g, 0, d) == d);
  }
}

TEST_CASE("alpha examples") {
  CHECK(bn::alpha_general(7, 1, 4) == 1);
  CHECK(bn::alpha_general(4, 1, 2) == 2);
  CHECK(bn::alpha_general(10, 2, 6) == 1);
  CHECK(bn::alpha_general(bn::LinearSeriesParams{10, 2, 6}) == 1);
  CHECK_THROWS_AS(bn::alpha_general(5, 2, 2), DomainError);
  CHECK_THROWS_AS(bn::alpha_general(5, 3, 2), DomainError);
}

TEST_CASE("rho_quadratic examples") {
  CHECK(bn::rho_quadratic(9, 2, 1, 4, 1) == 1);
  CHECK(bn::rho_quadratic(8, 3, 1, 2, 2) == -1);
  CHECK(bn::rho_quadratic(7, 7, 2, 5, 3) == 9 * 2 * 3 + 3 * 3 + 7);
}

TEST_CASE("necessary_condition examples") {
  const auto a = bn::necessary_condition(9, 2, 1, 4);
  CHECK(a.satisfied);
  CHECK(a.alpha == 1);
  CHECK(a.threshold_delta == 1);
  const auto b = bn::necessary_condition(8, 3, 1, 2);
  CHECK_FALSE(b.satisfied);
  CHECK(b.alpha == 2);
  CHECK(b.threshold_delta == 4);
  for (long p = 2; p <= 12; ++p) {
    const auto c = bn::necessary_condition(p, p, 2, 5);
    CHECK(c.satisfied);
    CHECK(c.alpha == 0);
    CHECK(c.threshold_delta == 0);
  }
  CHECK_THROWS_AS(bn::necessary_condition(1, 0, 1, 2), DomainError);
  CHECK_THROWS_AS(bn::necessary_condition(5, 6, 1, 2), DomainError);
  CHECK_THROWS_AS(bn::necessary_condition(5, 2, 2, 2), DomainError);
}

TEST_CASE("quadratic identity on the grid") {
  long checked = 0;
  for (long p = 2; p <= 60; ++p) {
    for (long delta = 0; delta <= p; ++delta) {
      for (long r = 1; r <= 7; ++r) {
        for (long d = r + 1; d <= 8; ++d) {
          for (long l = 1; l <= 6; ++l) {
            const ExactInt lhs = bn::rho_quadratic(p, delta, r, d, l);
            if (lhs != bn::rho(p, l * r, l * d + delta)) FAIL("identity fails at p=" << p << " delta=" << delta);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("monotone in delta and alpha minimizes the quadratic") {
  for (long p = 2; p <= 40; ++p) {
    for (long r = 1; r <= 4; ++r) {
      for (long d = r + 1; d <= 7; ++d) {
        bool seen = false;
        for (long delta = 0; delta <= p; ++delta) {
          const auto rep = bn::necessary_condition(p, delta, r, d);
          CHECK(rep.satisfied == (rep.rho_at_alpha >= 0));
          if (seen) CHECK(rep.satisfied);
          seen = seen || rep.satisfied;

          const long alpha = rep.alpha.get_si();
          for (long l = 1; l <= 2 * alpha + 2; ++l) {
            CHECK(rep.rho_at_alpha <= bn::rho_quadratic(p, delta, r, d, l));
          }
        }
        CHECK(seen);
      }
    }
  }
}
