#include "k3gonal/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "k3gonal/errors.hpp"
#include "k3gonal/gonality.hpp"

namespace k3g::hilbert {

namespace {

void check_class_pk(const ExactInt& p, const ExactInt& k) {
  require(k >= 2, "k must be >= 2");
  require(p >= 2, "p must be >= 2");
}

ExactRational min_q_bound(const ExactInt& k) { return make_rational(-(k + 3), 2); }

}  // namespace

ExactRational q_curve(const CurveClass& cls) {
  check_class_pk(cls.p, cls.k);
  const ExactRational h2 = ExactRational(cls.a * cls.a * (2 * cls.p - 2));
  return h2 - make_rational(cls.y * cls.y, 2 * (cls.k - 1));
}

ExactRational q_divisor(const DivisorClass& cls) {
  check_class_pk(cls.p, cls.k);
  const ExactRational h2 = ExactRational(cls.a * cls.a * (2 * cls.p - 2));
  return h2 - ExactRational(2 * (cls.k - 1)) * cls.c * cls.c;
}

ExactRational pairing(const DivisorClass& d, const CurveClass& r) {
  require(d.p == r.p && d.k == r.k, "pairing classes from different (p, k)");
  check_class_pk(d.p, d.k);
  return ExactRational(d.a * r.a * (2 * d.p - 2)) - d.c * ExactRational(r.y);
}

CurveClass fiber_class(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  return {p, k, 0, -1};
}

CurveClass gonality_class(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  require(gonality::admissible(p, k, delta), "inadmissible (p, k, delta): no such curve class");
  return {p, k, 1, p - delta + k - 1};
}

CurveClass optimal_class(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  ExactInt y;
  if (p <= 2 * km1) {
    y = p + k - 1;
  } else {
    const gonality::Decomposition d = gonality::decompose(p, k);
    y = (d.m + 1) * km1 + floor_div(p, d.m + 1);
  }
  const CurveClass cls{p, k, 1, y};
  ensure(cls == gonality_class(p, k, gonality::delta0(p, k)),
         "optimal class differs from the gonality class at delta0");
  return cls;
}

std::string format_class(const CurveClass& cls) {
  std::string out;
  if (cls.a != 0) out = (cls.a == 1 ? std::string() : cls.a == -1 ? std::string("-") : cls.a.get_str() + "*") + "H";
  const ExactInt coef = -cls.y;  // coefficient of r_k
  if (coef == 0) return out.empty() ? "0" : out;
  const ExactInt mag = abs(coef);
  const std::string term = (mag == 1 ? std::string() : mag.get_str() + "*") + "r_k";
  if (out.empty()) return (coef < 0 ? "-" : "") + term;
  return out + (coef < 0 ? " - " : " + ") + term;
}

ExactRational q_case(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  const gonality::GonalityCase c(p, k, delta);
  require(c.admissible(), "inadmissible (p, k, delta)");
  const ExactInt km1 = k - 1;
  const ExactInt y = p - delta + k - 1;
  const ExactRational genus_form = ExactRational(2 * (p - 1)) - make_rational(y * y, 2 * km1);
  const ExactRational rho_form =
      ExactRational(2 * (c.rho() - 1)) - make_rational(c.beta() * c.beta(), 2 * km1);
  ensure(genus_form == rho_form, "the two closed forms of q disagree");
  ensure(genus_form == q_curve(gonality_class(p, k, delta)), "q_case differs from q of the class");
  ensure(genus_form >= min_q_bound(k), "q below -(k+3)/2");
  return genus_form;
}

ExactRational q_optimal_form(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  require(p >= 2 * km1, "q_optimal_form needs p >= 2(k-1); use q_case at delta = 0 below that");
  const gonality::Decomposition d = gonality::decompose(p, k);
  const ExactInt gap = km1 - d.t;
  const ExactRational q = ExactRational(2 * (d.lambda - 1)) - make_rational(gap * gap, 2 * km1);
  ensure(q == q_case(p, k, gonality::delta0(p, k)), "decomposition form of q disagrees with q_case");
  return q;
}

ExactRational tau(const ExactInt& p, const ExactInt& k) {
  const CurveClass opt = optimal_class(p, k);
  return make_rational(2 * (p - 1), opt.y);
}

ConeVerdict cone_verdict(const ExactInt& p, const ExactInt& k, const ExactRational& t) {
  const ExactRational bound = tau(p, k);
  if (t > 0 && t < bound) return ConeVerdict::Ample;
  if (t >= 0 && t <= bound) return ConeVerdict::NefBoundary;
  return ConeVerdict::NotNef;
}

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::Ample: return "ample";
    case ConeVerdict::NefBoundary: return "nef";
    case ConeVerdict::NotNef: return "not-nef";
  }
  return "?";
}

std::optional<SpecialClass> minimal_q_family(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  if (p % km1 != 0) return std::nullopt;
  const std::optional<ExactInt> root = exact_sqrt(4 * (p / km1) + 1);
  if (!root) return std::nullopt;
  const ExactInt s = (*root - 1) / 2;
  if (s < 1) return std::nullopt;
  ensure(s * (s + 1) * km1 == p, "minimal_q_family: root does not reproduce p");
  SpecialClass out{s, p - 2 * s * km1, {p, k, 1, (2 * s + 1) * km1}, 0};
  ensure(out.cls == gonality_class(p, k, out.delta), "minimal_q_family: class mismatch");
  ensure(out.delta == gonality::delta0(p, k), "minimal_q_family: delta is not delta0");
  out.q = q_curve(out.cls);
  ensure(out.q == min_q_bound(k), "minimal_q_family: q is not -(k+3)/2");
  return out;
}

std::optional<SpecialClass> isotropic_case(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  const std::optional<ExactInt> s = exact_sqrt(km1 * (p - 1));
  if (!s) return std::nullopt;
  const ExactInt delta = p - 2 * *s + km1;
  // For 2s < k-1 the formula overshoots p and no gonality class is isotropic.
  if (delta < 0 || delta > p || !gonality::admissible(p, k, delta)) return std::nullopt;
  SpecialClass out{*s, delta, gonality_class(p, k, delta), 0};
  out.q = q_curve(out.cls);
  ensure(out.q == 0, "isotropic_case: q is not zero");
  return out;
}

std::optional<ExactInt> primitive_index(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  if ((p - 1) % km1 != 0) return std::nullopt;
  const std::optional<ExactInt> n = exact_sqrt((p - 1) / km1);
  if (!n || *n < 1) return std::nullopt;
  return n;
}

LagrangianReport lagrangian_report(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  LagrangianReport rep;
  rep.p = p;
  rep.k = k;
  rep.n = primitive_index(p, k);
  rep.primitive = rep.n.has_value();
  const std::optional<ExactInt> s = exact_sqrt(km1 * (p - 1));
  if (!s) return rep;
  rep.has_isotropic = true;
  rep.s = *s;
  rep.alpha = floor_div(2 * rep.s - k + 1, 2 * km1);
  const ExactInt a1 = rep.alpha + 1;
  rep.value = km1 * a1 * a1 - (2 * rep.s + 1) * a1 + p;
  rep.not_nef = rep.value >= 0;
  rep.necessary_condition_holds = rep.value < 0;
  rep.isotropic = isotropic_case(p, k);
  if (rep.n) ensure(rep.s == *rep.n * km1, "lagrangian_report: s != n(k-1) in the primitive case");
  return rep;
}

std::string to_string(RayStatus s) {
  switch (s) {
    case RayStatus::ProvenBM: return "PROVEN_BM";
    case RayStatus::ProvenMinQ: return "PROVEN_MINQ";
    case RayStatus::ProvenIsoPrim: return "PROVEN_ISOPRIM";
    case RayStatus::Open: return "OPEN";
  }
  return "?";
}

RayReport extremal_ray_status(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  const ExactInt km1 = k - 1;
  RayReport rep;
  rep.p = p;
  rep.k = k;
  const CurveClass opt = optimal_class(p, k);
  rep.rays = {fiber_class(p, k), opt};
  rep.q = q_curve(opt);

  const std::optional<ExactInt> n = primitive_index(p, k);
  if (p <= 2 * km1) {
    rep.status = RayStatus::ProvenBM;
  } else if (minimal_q_family(p, k)) {
    rep.status = RayStatus::ProvenMinQ;
  } else if (n && *n >= 2) {
    rep.status = RayStatus::ProvenIsoPrim;
    ensure(opt.y == 2 * *n * km1, "isotropic primitive case: optimal class is not H - 2n(k-1) r_k");
  } else {
    rep.status = RayStatus::Open;
  }
  rep.open = rep.status == RayStatus::Open;
  if (rep.open) {
    rep.notes.push_back("second ray is the optimal class; extremality is not established");
    if (p == 8 && k == 2) {
      rep.notes.push_back(
          "known counterexample: the class 3*H - 16*r_k of non-primitive curves has slope 16/3 > 5, "
          "so H - 5*r_k does not span the second extremal ray");
    }
  }
  return rep;
}

ExactInt genus_for_invariants(const ExactInt& k, const ExactInt& rho, const ExactInt& beta,
                              const ExactInt& m) {
  require(k >= 2, "k must be >= 2");
  require(rho >= 0, "rho must be >= 0");
  require(beta >= 0 && beta <= k - 1, "beta must lie in [0, k-1]");
  require(m >= 1 && m >= rho, "m must be >= max(1, rho)");
  const ExactInt km1 = k - 1;
  const ExactInt p = km1 * m * (m + 1) + (km1 - beta) * (m + 1) + rho;
  const gonality::Decomposition d = gonality::decompose(p, k);
  ensure(d.m == m && d.t == km1 - beta && d.lambda == rho,
         "genus_for_invariants: decomposition does not round-trip");
  const ExactRational predicted = ExactRational(2 * (rho - 1)) - make_rational(beta * beta, 2 * km1);
  ensure(q_optimal_form(p, k) == predicted, "genus_for_invariants: q does not match the invariants");
  return p;
}

std::vector<ExactRational> attained_q_values(const ExactInt& k, const ExactInt& p_max) {
  require(k >= 2, "k must be >= 2");
  require(p_max >= 2, "p_max must be >= 2");
  std::set<ExactRational> seen;
  for (ExactInt p = 2; p <= p_max; ++p) {
    const ExactRational q = q_case(p, k, gonality::delta0(p, k));
    if (q < 0) seen.insert(q);
  }
  return {seen.begin(), seen.end()};
}

HtReport ht_violation_check(const ExactInt& p, const ExactInt& k) {
  check_class_pk(p, k);
  HtReport rep;
  rep.p = p;
  rep.k = k;
  rep.bound = min_q_bound(k);
  const std::optional<ExactInt> n = primitive_index(p, k);
  if (!n || *n < 2) return rep;
  rep.applicable = true;
  rep.n = *n;
  const CurveClass opt = optimal_class(p, k);
  rep.reduced = {p, k, opt.a, opt.y + 1};
  rep.q_reduced = q_curve(rep.reduced);
  ensure(rep.q_reduced == ExactRational(-2 * rep.n) - make_rational(1, 2 * (k - 1)),
         "ht_violation_check: q of the reduced class has the wrong closed form");
  rep.over_prediction = rep.q_reduced >= rep.bound;
  ensure(rep.over_prediction == (4 * rep.n <= k + 2), "ht_violation_check: verdict disagrees with 4n <= k+2");
  return rep;
}

ScanRow scan_row(const ExactInt& p, const ExactInt& k) {
  ScanRow row;
  row.p = p;
  row.k = k;
  row.delta0 = gonality::delta0(p, k);
  ensure(row.delta0 == gonality::delta0_bruteforce(p, k), "delta0 closed form disagrees with the scan");
  row.g = p - row.delta0;
  row.optimal = optimal_class(p, k);
  row.q = q_case(p, k, row.delta0);
  row.tau = tau(p, k);
  row.status = extremal_ray_status(p, k).status;
  const LagrangianReport lag = lagrangian_report(p, k);
  row.isotropic = lag.has_isotropic;
  row.lagrangian_not_nef = lag.not_nef;
  return row;
}

std::vector<ScanRow> scan(std::int64_t p_max, std::int64_t k_max, unsigned threads) {
  require(p_max >= 2, "p_max must be >= 2");
  require(k_max >= 2, "k_max must be >= 2");
  const std::int64_t per_k = p_max - 1;
  const std::int64_t total = per_k * (k_max - 1);
  std::vector<ScanRow> rows(static_cast<std::size_t>(total));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, total));

  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](unsigned id) {
    try {
      for (std::int64_t i = next++; i < total; i = next++) {
        const ExactInt k = 2 + i / per_k;
        const ExactInt p = 2 + i % per_k;
        rows[static_cast<std::size_t>(i)] = scan_row(p, k);
      }
    } catch (...) {
      failures[id] = std::current_exception();
      next = total;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

}  // namespace k3g::hilbert
