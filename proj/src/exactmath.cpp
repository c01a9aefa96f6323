#include "k3gonal/exactmath.hpp"

#include "k3gonal/errors.hpp"

namespace k3g {

ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
  require(b > 0, "floor_div: divisor must be positive");
  ExactInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExactInt ceil_div(const ExactInt& a, const ExactInt& b) {
  require(b > 0, "ceil_div: divisor must be positive");
  ExactInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExactInt isqrt(const ExactInt& n) {
  require(n >= 0, "isqrt: argument must be nonnegative");
  if (n < 2) return n;
  // Start above the root; the iteration then decreases monotonically.
  ExactInt x = ExactInt(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
  while (true) {
    ExactInt next = (x + n / x) / 2;
    if (next >= x) break;
    x = next;
  }
  ensure(x * x <= n && (x + 1) * (x + 1) > n, "isqrt: Newton iteration did not converge");
  return x;
}

std::optional<ExactInt> exact_sqrt(const ExactInt& n) {
  require(n >= 0, "exact_sqrt: argument must be nonnegative");
  ExactInt s = isqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  require(den != 0, "rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInt parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  ExactInt n;
  if (s.empty() || n.set_str(s, 10) != 0) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return n;
}

ExactRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const ExactRational& q) { return q.get_str(10); }

std::string to_string(const ExactInt& n) { return n.get_str(10); }

std::string to_unicode(const ExactRational& q) {
  ExactInt num = q.get_num();
  std::string out;
  if (num < 0) {
    out = "−";
    num = -num;
  }
  out += num.get_str(10);
  if (q.get_den() != 1) out += "⁄" + q.get_den().get_str(10);
  return out;
}

bool fits_int64(const ExactInt& n) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_fits_slong_p(n.get_mpz_t()) != 0;
}

}  // namespace k3g
