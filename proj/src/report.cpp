#include "k3gonal/report.hpp"

namespace k3g::report {

Json integer(const ExactInt& n) {
  if (fits_int64(n)) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Json rational(const ExactRational& q) { return to_string(q); }

namespace {

Json pair(const ExactRational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

}  // namespace

Json to_json(const bn::NecessityReport& r) {
  return {{"alpha", integer(r.alpha)},
          {"rho_at_alpha", integer(r.rho_at_alpha)},
          {"threshold_delta", integer(r.threshold_delta)},
          {"satisfied", r.satisfied}};
}

Json to_json(const gonality::GonalityCase& c) {
  return {{"p", integer(c.p())},       {"k", integer(c.k())},       {"delta", integer(c.delta())},
          {"g", integer(c.g())},       {"alpha", integer(c.alpha())}, {"beta", integer(c.beta())},
          {"rho", integer(c.rho())}, {"admissible", c.admissible()}};
}

Json to_json(const gonality::Decomposition& d) {
  return {{"m", integer(d.m)}, {"t", integer(d.t)}, {"lambda", integer(d.lambda)}};
}

Json to_json(const gonality::ExpectedDims& d) {
  return {{"dim_vk", integer(d.dim_vk)}, {"dim_w1k", integer(d.dim_w1k)}};
}

Json to_json(const chains::ChainPartition& part) {
  Json alpha = Json::object();
  for (const auto& [j, m] : part.multiplicities()) alpha[j.get_str()] = integer(m);
  return {{"p", integer(part.p())},
          {"k", integer(part.k())},
          {"alpha", alpha},
          {"delta", integer(part.delta())},
          {"genus", integer(part.genus())}};
}

Json to_json(const chains::SymbolicChainCurve& curve) {
  return {{"partition", to_json(curve.partition)},
          {"line_count", integer(curve.line_count)},
          {"ruling2_lines", integer(curve.ruling2_lines)},
          {"marked_nodes", integer(curve.marked_nodes)},
          {"nodes_on_gamma2", integer(curve.nodes_on_gamma2)},
          {"e_points", integer(curve.e_points)},
          {"stable_model_nodes", integer(curve.stable_model_nodes)}};
}

Json to_json(const chains::StableModel& model) {
  return {{"node_count", integer(model.node_count)}, {"arithmetic_genus", integer(model.arithmetic_genus)}};
}

Json to_json(const pencil::BinaryForm& form) {
  Json coeffs = Json::array();
  for (const auto& c : form.coeffs()) coeffs.push_back(pair(c));
  return {{"degree_bound", form.degree_bound()}, {"coeffs", coeffs}};
}

Json to_json(const pencil::SymPlaneCurve& curve) {
  Json terms = Json::array();
  for (long i = 0; i <= curve.degree(); ++i) {
    for (long j = 0; i + j <= curve.degree(); ++j) {
      const ExactRational c = curve.coeff(i, j);
      if (c != 0) terms.push_back({{"e1", i}, {"e2", j}, {"c", pair(c)}});
    }
  }
  return {{"degree", curve.degree()}, {"terms", terms}};
}

Json to_json(const pencil::SuiteReport& r) {
  return {{"k", r.k},
          {"samples", r.samples},
          {"seed", r.seed},
          {"degree_ok", r.degree_ok},
          {"diagonal_ok", r.diagonal_ok},
          {"membership_checks", r.membership_checks},
          {"membership_agree", r.membership_agree},
          {"membership_positive", r.membership_positive},
          {"bezout_ok", r.bezout_ok},
          {"transversal", r.transversal},
          {"non_transversal_confirmed", r.non_transversal_confirmed},
          {"ramification_match", r.ramification_match},
          {"covariance_ok", r.covariance_ok},
          {"no_common_point", r.no_common_point},
          {"transversality_rate", r.transversality_rate()},
          {"exact_checks_passed", r.exact_checks_passed()}};
}

Json to_json(const hilbert::CurveClass& c) { return {{"a", integer(c.a)}, {"y", integer(c.y)}}; }

Json to_json(const hilbert::SpecialClass& c) {
  return {{"s", integer(c.s)},
          {"delta", integer(c.delta)},
          {"class", to_json(c.cls)},
          {"text", hilbert::format_class(c.cls)},
          {"q", rational(c.q)}};
}

Json to_json(const hilbert::LagrangianReport& r) {
  Json out = {{"p", integer(r.p)}, {"k", integer(r.k)}, {"has_isotropic", r.has_isotropic}};
  if (r.has_isotropic) {
    out["s"] = integer(r.s);
    out["alpha"] = integer(r.alpha);
    out["value"] = integer(r.value);
    out["not_nef"] = r.not_nef;
    out["necessary_condition_holds"] = r.necessary_condition_holds;
    out["isotropic_class"] = r.isotropic ? to_json(*r.isotropic) : Json(nullptr);
  }
  out["primitive"] = r.primitive;
  out["n"] = r.n ? integer(*r.n) : Json(nullptr);
  return out;
}

Json to_json(const hilbert::RayReport& r) {
  Json rays = Json::array();
  for (const auto& c : r.rays) rays.push_back(to_json(c));
  return {{"p", integer(r.p)},
          {"k", integer(r.k)},
          {"status", hilbert::to_string(r.status)},
          {"rays", rays},
          {"q", rational(r.q)},
          {"notes", r.notes}};
}

Json to_json(const hilbert::HtReport& r) {
  Json out = {{"p", integer(r.p)}, {"k", integer(r.k)}, {"applicable", r.applicable}};
  if (r.applicable) {
    out["n"] = integer(r.n);
    out["reduced_class"] = to_json(r.reduced);
    out["q_reduced"] = rational(r.q_reduced);
    out["bound"] = rational(r.bound);
    out["over_prediction"] = r.over_prediction;
  }
  return out;
}

Json to_json(const hilbert::ScanRow& r) {
  return {{"p", integer(r.p)},
          {"k", integer(r.k)},
          {"delta0", integer(r.delta0)},
          {"g", integer(r.g)},
          {"optimal", hilbert::format_class(r.optimal)},
          {"q", rational(r.q)},
          {"tau", rational(r.tau)},
          {"status", hilbert::to_string(r.status)},
          {"isotropic", r.isotropic},
          {"lagrangian_not_nef", r.lagrangian_not_nef}};
}

}  // namespace k3g::report
