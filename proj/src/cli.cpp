#include "k3gonal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "k3gonal/brillnoether.hpp"
#include "k3gonal/chains.hpp"
#include "k3gonal/errors.hpp"
#include "k3gonal/gonality.hpp"
#include "k3gonal/hilbert.hpp"
#include "k3gonal/pencil.hpp"
#include "k3gonal/report.hpp"

namespace k3g::cli {

namespace {

using report::Json;

// A table cell: ascii for csv, unicode fractions for the terminal.
struct Cell {
  std::string plain;
  std::string pretty;
  Cell(std::string s) : plain(s), pretty(std::move(s)) {}
  Cell(const char* s) : Cell(std::string(s)) {}
  Cell(const ExactRational& q) : plain(to_string(q)), pretty(to_unicode(q)) {}
  Cell(const ExactInt& n) : Cell(ExactRational(n)) {}
  Cell(long n) : Cell(std::to_string(n)) {}
  Cell(bool b) : Cell(b ? "true" : "false") {}
};

struct Output {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<std::string> text;  ///< one-line answer shown in table mode
};

Output key_values(Json json, std::vector<std::pair<std::string, Cell>> fields,
                  std::optional<std::string> text = std::nullopt) {
  Output out;
  out.json = std::move(json);
  out.columns = {"field", "value"};
  for (auto& [k, v] : fields) out.rows.push_back({Cell(k), v});
  out.text = std::move(text);
  return out;
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << o.json.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < o.columns.size(); ++i) os << (i ? "," : "") << csv_field(o.columns[i]);
    os << "\n";
    for (const auto& row : o.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].plain);
      os << "\n";
    }
    return;
  }
  if (o.text) {
    os << *o.text << "\n";
    return;
  }
  std::vector<std::size_t> width(o.columns.size());
  for (std::size_t i = 0; i < o.columns.size(); ++i) width[i] = display_width(o.columns[i]);
  for (const auto& row : o.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i].pretty));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - display_width(cells[i]) + 2, ' ');
    }
    os << "\n";
  };
  line(o.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : o.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.pretty);
    line(cells);
  }
}

ExactInt num(const std::string& s) { return parse_int(s); }

std::int64_t small(const std::string& s, const char* what) {
  const ExactInt n = parse_int(s);
  require(fits_int64(n), std::string(what) + " is too large");
  return n.get_si();
}

// ---------------------------------------------------------------------------
// Commands

Output bn_rho(const std::string& g, const std::string& r, const std::string& d) {
  const ExactInt rho = bn::rho(num(g), num(r), num(d));
  Json j = {{"g", report::integer(num(g))}, {"r", report::integer(num(r))}, {"d", report::integer(num(d))},
            {"rho", report::integer(rho)}};
  return key_values(j, {{"rho", rho}}, to_unicode(ExactRational(rho)));
}

Output bn_check(const std::string& p, const std::string& k, const std::string& delta, const std::string& r,
                const std::string& d) {
  require(!k.empty() || !d.empty(), "give -k for pencils or -r/-d for a general series");
  const ExactInt rr = r.empty() ? ExactInt(1) : num(r);
  const ExactInt dd = d.empty() ? num(k) : num(d);
  const bn::NecessityReport rep = bn::necessary_condition(num(p), num(delta), rr, dd);
  Json j = {{"p", report::integer(num(p))}, {"delta", report::integer(num(delta))}, {"r", report::integer(rr)},
            {"d", report::integer(dd)}};
  j.update(report::to_json(rep));
  return key_values(j, {{"alpha", rep.alpha},
                        {"rho_at_alpha", rep.rho_at_alpha},
                        {"threshold_delta", rep.threshold_delta},
                        {"satisfied", rep.satisfied}});
}

Output gonality_delta0(const std::string& p, const std::string& k, bool verify) {
  const ExactInt d0 = gonality::delta0(num(p), num(k));
  Json j = {{"p", report::integer(num(p))}, {"k", report::integer(num(k))}, {"delta0", report::integer(d0)}};
  std::string text = to_string(d0);
  if (verify) {
    const ExactInt brute = gonality::delta0_bruteforce(num(p), num(k));
    ensure(brute == d0, "delta0 closed form " + to_string(d0) + " != brute force " + to_string(brute));
    j["verified"] = true;
    text += " (verified)";
  }
  Output out = key_values(j, {{"delta0", d0}}, text);
  if (verify) out.rows.push_back({Cell("verified"), Cell(true)});
  return out;
}

Output gonality_case(const std::string& p, const std::string& k, const std::string& delta) {
  const gonality::GonalityCase c(num(p), num(k), num(delta));
  Json j = report::to_json(c);
  const bool optimal = gonality::is_optimal(num(p), num(k), num(delta));
  j["optimal"] = optimal;
  return key_values(j, {{"g", c.g()},
                        {"alpha", c.alpha()},
                        {"beta", c.beta()},
                        {"rho", c.rho()},
                        {"admissible", c.admissible()},
                        {"optimal", optimal}});
}

Output gonality_dims(const std::string& p, const std::string& k, const std::string& delta) {
  const gonality::ExpectedDims d = gonality::expected_dims(num(p), num(k), num(delta));
  Json j = {{"p", report::integer(num(p))}, {"k", report::integer(num(k))}, {"delta", report::integer(num(delta))}};
  j.update(report::to_json(d));
  return key_values(j, {{"dim_vk", d.dim_vk}, {"dim_w1k", d.dim_w1k}});
}

Output partition_output(const chains::ChainPartition& part) {
  return key_values(report::to_json(part),
                    {{"alpha", chains::format_partition(part)}, {"delta", part.delta()}, {"genus", part.genus()}},
                    chains::format_partition(part) + "  (delta " + to_string(part.delta()) + ")");
}

Output chains_enumerate(const std::string& p, const std::string& k) {
  const auto parts =
      chains::enumerate(small(p, "p"), small(k, "k"), chains::enumeration_cap_from_env());
  Output out;
  out.columns = {"alpha", "delta", "genus"};
  Json list = Json::array();
  ExactInt best = -1;
  for (const auto& part : parts) {
    list.push_back(report::to_json(part));
    out.rows.push_back({Cell(chains::format_partition(part)), Cell(part.delta()), Cell(part.genus())});
    if (best < 0 || part.delta() < best) best = part.delta();
  }
  out.json = {{"p", report::integer(num(p))},
              {"k", report::integer(num(k))},
              {"count", static_cast<std::int64_t>(parts.size())},
              {"min_delta", report::integer(best)},
              {"partitions", list}};
  return out;
}

Output chains_stable(const std::string& p, const std::string& k, const std::string& alpha) {
  const chains::ChainPartition part = chains::parse_partition(num(p), num(k), alpha);
  require(chains::validate(part), "invalid partition: need sum j*alpha_j = p and alpha_j <= 2(k-1)");
  const chains::SymbolicChainCurve curve(part);
  const chains::StableModel model = chains::stable_model(curve);
  Json j = report::to_json(curve);
  j["stable_model"] = report::to_json(model);
  return key_values(j, {{"line_count", curve.line_count},
                        {"ruling2_lines", curve.ruling2_lines},
                        {"marked_nodes", curve.marked_nodes},
                        {"nodes_on_gamma2", curve.nodes_on_gamma2},
                        {"e_points", curve.e_points},
                        {"node_count", model.node_count},
                        {"arithmetic_genus", model.arithmetic_genus}});
}

Output pencil_verify(long k, long samples, std::uint64_t seed, long points) {
  const pencil::SuiteReport r = pencil::verify_suite(k, samples, seed, points);
  const ExactRational rate = make_rational(r.transversal, r.samples);
  Output out = key_values(report::to_json(r), {{"seed", Cell(std::to_string(r.seed))},
                                               {"samples", r.samples},
                                               {"degree_ok", r.degree_ok},
                                               {"diagonal_ok", r.diagonal_ok},
                                               {"membership", std::to_string(r.membership_agree) + "/" +
                                                                   std::to_string(r.membership_checks)},
                                               {"bezout_ok", r.bezout_ok},
                                               {"transversal", r.transversal},
                                               {"transversality_rate", rate},
                                               {"non_transversal_confirmed", r.non_transversal_confirmed},
                                               {"ramification_match", r.ramification_match},
                                               {"covariance_ok", r.covariance_ok},
                                               {"no_common_point", r.no_common_point},
                                               {"exact_checks_passed", r.exact_checks_passed()}});
  ensure(r.exact_checks_passed(), "pencil suite: an exact identity failed (seed " + std::to_string(seed) + ")");
  return out;
}

pencil::BinaryForm parse_form(const std::string& text) {
  std::vector<ExactRational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
  require(coeffs.size() >= 2, "a form needs at least two coefficients");
  const long n = static_cast<long>(coeffs.size()) - 1;
  return pencil::BinaryForm(n, std::move(coeffs));
}

Output pencil_wedge(const std::string& f, const std::string& g) {
  const pencil::Pencil pen(parse_form(f), parse_form(g));
  const pencil::SymPlaneCurve curve = pencil::wedge_curve(pen);
  const pencil::BinaryForm w = pencil::wronskian(pen);
  Json j = {{"k", pen.k()},
            {"curve", report::to_json(curve)},
            {"wronskian", report::to_json(w)},
            {"simple_ramification", pencil::simple_ramification(pen)}};
  Output out;
  out.json = j;
  out.columns = {"e1", "e2", "coefficient"};
  for (long i = 0; i <= curve.degree(); ++i) {
    for (long jj = 0; i + jj <= curve.degree(); ++jj) {
      if (curve.coeff(i, jj) != 0) out.rows.push_back({Cell(i), Cell(jj), Cell(curve.coeff(i, jj))});
    }
  }
  return out;
}

Output hilb_class(const std::string& p, const std::string& k, const std::string& delta) {
  const hilbert::CurveClass c = hilbert::gonality_class(num(p), num(k), num(delta));
  const std::string text = hilbert::format_class(c);
  Json j = {{"p", report::integer(c.p)}, {"k", report::integer(c.k)}, {"delta", report::integer(num(delta))},
            {"class", report::to_json(c)}, {"text", text}};
  return key_values(j, {{"class", text}}, text);
}

Output hilb_optimal(const std::string& p, const std::string& k) {
  const hilbert::CurveClass c = hilbert::optimal_class(num(p), num(k));
  const std::string text = hilbert::format_class(c);
  Json j = {{"p", report::integer(c.p)}, {"k", report::integer(c.k)}, {"class", report::to_json(c)},
            {"text", text}, {"q", report::rational(hilbert::q_curve(c))}};
  return key_values(j, {{"class", text}, {"q", hilbert::q_curve(c)}}, text);
}

Output hilb_q(const std::string& p, const std::string& k, const std::string& delta) {
  const ExactRational q = hilbert::q_case(num(p), num(k), num(delta));
  Json j = {{"p", report::integer(num(p))}, {"k", report::integer(num(k))},
            {"delta", report::integer(num(delta))}, {"q", report::rational(q)}};
  return key_values(j, {{"q", q}}, to_unicode(q));
}

Output hilb_cone(const std::string& p, const std::string& k, const std::string& t) {
  const hilbert::CurveClass opt = hilbert::optimal_class(num(p), num(k));
  const ExactRational tau = hilbert::tau(num(p), num(k));
  Json j = {{"p", report::integer(num(p))}, {"k", report::integer(num(k))}, {"tau", report::rational(tau)},
            {"optimal", report::to_json(opt)}, {"optimal_text", hilbert::format_class(opt)}};
  std::vector<std::pair<std::string, Cell>> fields = {{"tau", tau}, {"optimal", hilbert::format_class(opt)}};
  if (!t.empty()) {
    const ExactRational tt = parse_rational(t);
    const std::string verdict = hilbert::to_string(hilbert::cone_verdict(num(p), num(k), tt));
    j["t"] = report::rational(tt);
    j["verdict"] = verdict;
    fields.push_back({"t", tt});
    fields.push_back({"verdict", verdict});
  }
  return key_values(j, fields);
}

Output hilb_qvalues(const std::string& k, const std::string& pmax) {
  const auto values = hilbert::attained_q_values(num(k), num(pmax));
  Output out;
  out.columns = {"q"};
  Json list = Json::array();
  for (const auto& q : values) {
    list.push_back(report::rational(q));
    out.rows.push_back({Cell(q)});
  }
  out.json = {{"k", report::integer(num(k))}, {"pmax", report::integer(num(pmax))}, {"values", list}};
  return out;
}

Output hilb_lagrangian(const std::string& p, const std::string& k) {
  const hilbert::LagrangianReport r = hilbert::lagrangian_report(num(p), num(k));
  std::vector<std::pair<std::string, Cell>> fields = {{"has_isotropic", r.has_isotropic}};
  if (r.has_isotropic) {
    fields.push_back({"s", r.s});
    fields.push_back({"alpha", r.alpha});
    fields.push_back({"value", r.value});
    fields.push_back({"not_nef", r.not_nef});
    fields.push_back({"necessary_condition_holds", r.necessary_condition_holds});
    if (r.isotropic) fields.push_back({"isotropic_class", hilbert::format_class(r.isotropic->cls)});
  }
  fields.push_back({"primitive", r.primitive});
  if (r.n) fields.push_back({"n", *r.n});
  return key_values(report::to_json(r), fields);
}

Output hilb_rays(const std::string& p, const std::string& k) {
  const hilbert::RayReport r = hilbert::extremal_ray_status(num(p), num(k));
  std::vector<std::pair<std::string, Cell>> fields = {{"status", hilbert::to_string(r.status)}};
  for (const auto& c : r.rays) fields.push_back({"ray", hilbert::format_class(c)});
  fields.push_back({"q", r.q});
  for (const auto& n : r.notes) fields.push_back({"note", n});
  return key_values(report::to_json(r), fields);
}

Output hilb_special(const std::string& p, const std::string& k, bool isotropic) {
  const auto c = isotropic ? hilbert::isotropic_case(num(p), num(k)) : hilbert::minimal_q_family(num(p), num(k));
  Json j = {{"p", report::integer(num(p))}, {"k", report::integer(num(k))}, {"found", c.has_value()}};
  std::vector<std::pair<std::string, Cell>> fields = {{"found", c.has_value()}};
  if (c) {
    j.update(report::to_json(*c));
    fields.push_back({"s", c->s});
    fields.push_back({"delta", c->delta});
    fields.push_back({"class", hilbert::format_class(c->cls)});
    fields.push_back({"q", c->q});
  }
  return key_values(j, fields);
}

Output hilb_ht(const std::string& p, const std::string& k) {
  const hilbert::HtReport r = hilbert::ht_violation_check(num(p), num(k));
  std::vector<std::pair<std::string, Cell>> fields = {{"applicable", r.applicable}};
  if (r.applicable) {
    fields.push_back({"n", r.n});
    fields.push_back({"reduced_class", hilbert::format_class(r.reduced)});
    fields.push_back({"q_reduced", r.q_reduced});
    fields.push_back({"bound", r.bound});
    fields.push_back({"over_prediction", r.over_prediction});
  }
  return key_values(report::to_json(r), fields);
}

Output hilb_realize(const std::string& k, const std::string& rho, const std::string& beta, const std::string& m) {
  const ExactInt p = hilbert::genus_for_invariants(num(k), num(rho), num(beta), num(m));
  const ExactRational q = hilbert::q_optimal_form(p, num(k));
  Json j = {{"k", report::integer(num(k))}, {"rho", report::integer(num(rho))},
            {"beta", report::integer(num(beta))}, {"m", report::integer(num(m))},
            {"p", report::integer(p)}, {"q", report::rational(q)}};
  return key_values(j, {{"p", p}, {"q", q}});
}

Output hilb_scan(const std::string& pmax, const std::string& kmax, unsigned threads) {
  const auto rows = hilbert::scan(small(pmax, "pmax"), small(kmax, "kmax"), threads);
  Output out;
  out.columns = {"p", "k", "delta0", "g", "optimal", "q", "tau", "status", "isotropic", "lagrangian_not_nef"};
  Json list = Json::array();
  for (const auto& r : rows) {
    list.push_back(report::to_json(r));
    out.rows.push_back({Cell(r.p), Cell(r.k), Cell(r.delta0), Cell(r.g), Cell(hilbert::format_class(r.optimal)),
                        Cell(r.q), Cell(r.tau), Cell(hilbert::to_string(r.status)), Cell(r.isotropic),
                        Cell(r.lagrangian_not_nef)});
  }
  out.json = {{"pmax", report::integer(num(pmax))}, {"kmax", report::integer(num(kmax))}, {"rows", list}};
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gonality bounds for nodal curves on K3 surfaces and lattice data on Hilb^k", "k3gonal"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string out_file;
  app.add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_file, "Write output to FILE instead of stdout");

  struct Args {
    std::string p, k, delta, g, r, d, alpha, t, pmax, kmax, rho, beta, m, f, gform;
    bool verify = false;
    long samples = 200;
    std::uint64_t seed = 1;
    long points = 100;
    unsigned threads = 0;
  } a;

  std::vector<std::pair<CLI::App*, std::function<Output()>>> leaves;
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Output()> fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    leaves.emplace_back(s, std::move(fn));
    return s;
  };
  auto pk = [&](CLI::App* s) {
    s->add_option("-p", a.p, "K3 genus")->required();
    s->add_option("-k", a.k, "gonality")->required();
  };

  CLI::App* bn = group("bn", "Brill-Noether numbers and the existence bound");
  {
    auto* s = leaf(bn, "rho", "rho(g, r, d)", [&] { return bn_rho(a.g, a.r, a.d); });
    s->add_option("-g", a.g, "genus")->required();
    s->add_option("-r", a.r, "dimension")->required();
    s->add_option("-d", a.d, "degree")->required();
    s = leaf(bn, "check", "necessary condition for a g^r_d on a delta-nodal curve in |H|",
             [&] { return bn_check(a.p, a.k, a.delta, a.r, a.d); });
    s->add_option("-p", a.p, "K3 genus")->required();
    s->add_option("-k", a.k, "pencil degree (r = 1, d = k)");
    s->add_option("--delta", a.delta, "number of nodes")->required();
    s->add_option("-r", a.r, "dimension");
    s->add_option("-d", a.d, "degree");
  }

  CLI::App* gon = group("gonality", "Minimal node counts and expected dimensions");
  {
    auto* s = leaf(gon, "delta0", "minimal admissible delta", [&] { return gonality_delta0(a.p, a.k, a.verify); });
    pk(s);
    s->add_flag("--verify", a.verify, "cross-check against the brute-force scan");
    s = leaf(gon, "dims", "expected dimensions of the k-gonal locus",
             [&] { return gonality_dims(a.p, a.k, a.delta); });
    pk(s);
    s->add_option("--delta", a.delta, "number of nodes")->required();
    s = leaf(gon, "case", "derived invariants of (p, k, delta)", [&] { return gonality_case(a.p, a.k, a.delta); });
    pk(s);
    s->add_option("--delta", a.delta, "number of nodes")->required();
  }

  CLI::App* ch = group("chains", "Chain partitions witnessing the degenerations");
  {
    auto* s = leaf(ch, "witness", "a valid partition with the given delta",
                   [&] { return partition_output(chains::witness(num(a.p), num(a.k), num(a.delta))); });
    pk(s);
    s->add_option("--delta", a.delta, "number of nodes")->required();
    s = leaf(ch, "minimal", "the minimal-delta construction",
             [&] { return partition_output(chains::construct_minimal(num(a.p), num(a.k))); });
    pk(s);
    s = leaf(ch, "enumerate", "all valid partitions (capped by K3GONAL_MAX_P)",
             [&] { return chains_enumerate(a.p, a.k); });
    pk(s);
    s = leaf(ch, "stable", "counts of the limit curve and its stable model",
             [&] { return chains_stable(a.p, a.k, a.alpha); });
    pk(s);
    s->add_option("--alpha", a.alpha, "sparse multiplicities j:m,j:m,...")->required();
  }

  CLI::App* pen = group("pencil", "Pencils of binary forms and their curves in Sym^2 P^1");
  {
    auto* s = leaf(pen, "verify", "seeded randomized identity suite",
                   [&] { return pencil_verify(small(a.k, "k"), a.samples, a.seed, a.points); });
    s->add_option("-k", a.k, "pencil degree")->required();
    s->add_option("--samples", a.samples, "number of random pencils")->capture_default_str();
    s->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
    s->add_option("--points", a.points, "divisor points per pencil")->capture_default_str();
    s = leaf(pen, "wedge", "curve and Wronskian of one pencil", [&] { return pencil_wedge(a.f, a.gform); });
    s->add_option("--f", a.f, "coefficients of f, x0^k first")->required();
    s->add_option("--g", a.gform, "coefficients of g, x0^k first")->required();
  }

  CLI::App* hb = group("hilb", "Beauville-Bogomolov lattice computations");
  {
    auto* s = leaf(hb, "class", "curve class of the gonality curves",
                   [&] { return hilb_class(a.p, a.k, a.delta); });
    pk(s);
    s->add_option("--delta", a.delta, "number of nodes")->required();
    s = leaf(hb, "optimal", "the optimal class", [&] { return hilb_optimal(a.p, a.k); });
    pk(s);
    s = leaf(hb, "q", "q of the gonality class", [&] { return hilb_q(a.p, a.k, a.delta); });
    pk(s);
    s->add_option("--delta", a.delta, "number of nodes")->required();
    s = leaf(hb, "cone", "nef bound tau and an optional verdict for H - t e_k",
             [&] { return hilb_cone(a.p, a.k, a.t); });
    pk(s);
    s->add_option("--t", a.t, "coefficient t (rational)");
    s = leaf(hb, "qvalues", "negative q values at delta0", [&] { return hilb_qvalues(a.k, a.pmax); });
    s->add_option("-k", a.k, "k")->required();
    s->add_option("--pmax", a.pmax, "largest p")->required();
    s = leaf(hb, "lagrangian", "isotropic class and Lagrangian tests", [&] { return hilb_lagrangian(a.p, a.k); });
    pk(s);
    s = leaf(hb, "rays", "extremal ray status", [&] { return hilb_rays(a.p, a.k); });
    pk(s);
    s = leaf(hb, "minq", "the minimal-q family", [&] { return hilb_special(a.p, a.k, false); });
    pk(s);
    s = leaf(hb, "isotropic", "the isotropic case", [&] { return hilb_special(a.p, a.k, true); });
    pk(s);
    s = leaf(hb, "ht", "lower-bound comparison for the reduced class", [&] { return hilb_ht(a.p, a.k); });
    pk(s);
    s = leaf(hb, "realize", "genus realizing given (rho, beta, m)",
             [&] { return hilb_realize(a.k, a.rho, a.beta, a.m); });
    s->add_option("-k", a.k, "k")->required();
    s->add_option("--rho", a.rho, "rho")->required();
    s->add_option("--beta", a.beta, "beta")->required();
    s->add_option("-m", a.m, "m")->required();
    s = leaf(hb, "scan", "full grid report", [&] { return hilb_scan(a.pmax, a.kmax, a.threads); });
    s->add_option("--pmax", a.pmax, "largest p")->required();
    s->add_option("--kmax", a.kmax, "largest k")->required();
    s->add_option("--threads", a.threads, "worker threads (0 = all cores)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (auto& [sub, fn] : leaves) {
      if (!sub->parsed()) continue;
      const Output result = fn();
      if (out_file.empty()) {
        render(result, format, out);
      } else {
        std::ofstream file(out_file, std::ios::binary);
        require(static_cast<bool>(file), "cannot open " + out_file);
        render(result, format, file);
      }
      return 0;
    }
    err << app.help();
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace k3g::cli
