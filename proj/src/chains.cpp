#include "k3gonal/chains.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "k3gonal/errors.hpp"
#include "k3gonal/gonality.hpp"

namespace k3g::chains {

ChainPartition::ChainPartition(ExactInt p, ExactInt k, Multiplicities alpha)
    : p_(std::move(p)), k_(std::move(k)) {
  for (const auto& [j, mult] : alpha) set(j, mult);
}

ExactInt ChainPartition::at(const ExactInt& j) const {
  auto it = alpha_.find(j);
  return it == alpha_.end() ? ExactInt(0) : it->second;
}

void ChainPartition::set(const ExactInt& j, const ExactInt& mult) {
  require(j >= 1, "chain index j must be >= 1");
  require(mult >= 0, "multiplicities must be nonnegative");
  if (mult == 0) {
    alpha_.erase(j);
  } else {
    alpha_[j] = mult;
  }
}

ExactInt ChainPartition::weight() const {
  ExactInt s = 0;
  for (const auto& [j, mult] : alpha_) s += j * mult;
  return s;
}

ExactInt ChainPartition::delta() const {
  ExactInt s = 0;
  for (const auto& [j, mult] : alpha_) s += (j - 1) * mult;
  return s;
}

ExactInt ChainPartition::genus() const {
  ExactInt s = 0;
  for (const auto& [j, mult] : alpha_) s += mult;
  return s;
}

SymbolicChainCurve::SymbolicChainCurve(ChainPartition part) : partition(std::move(part)) {
  line_count = 0;
  for (const auto& [j, mult] : partition.multiplicities()) line_count += (2 * j - 1) * mult;
  ruling2_lines = partition.weight();
  marked_nodes = partition.delta();
  nodes_on_gamma2 = partition.weight();
  e_points = 2 * partition.weight();
  stable_model_nodes = partition.genus();
}

bool validate(const ChainPartition& partition) {
  const ExactInt cap = 2 * (partition.k() - 1);
  for (const auto& [j, mult] : partition.multiplicities()) {
    if (j > partition.p() || mult > cap) return false;
  }
  return partition.weight() == partition.p();
}

ChainPartition construct_minimal(const ExactInt& p, const ExactInt& k) {
  require(p >= 3, "construct_minimal needs p >= 3");
  require(k >= 2, "k must be >= 2");
  const ExactInt cap = 2 * (k - 1);
  ChainPartition out(p, k);
  if (p < cap) {
    out.set(1, p);
  } else {
    const auto [m, t, lambda] = gonality::decompose(p, k);
    if (lambda == 0) {
      for (ExactInt j = 1; j <= m; ++j) out.set(j, cap);
      out.set(m + 1, t);
    } else if (t == 0) {
      for (ExactInt j = 1; j < m; ++j) out.set(j, cap);
      out.set(m, cap - 1);
      out.set(m + lambda, 1);
    } else {
      for (ExactInt j = 1; j <= m; ++j) out.set(j, cap);
      out.set(m + 1, t - 1);
      out.set(m + 1 + lambda, 1);
    }
  }
  ensure(validate(out), "minimal construction produced an invalid partition");
  ensure(out.delta() == gonality::delta0(p, k), "minimal construction missed delta0");
  return out;
}

ChainPartition increment(const ChainPartition& partition) {
  require(validate(partition), "increment needs a valid partition");
  require(partition.delta() < partition.p() - 1, "already maximal: a single chain has delta = p-1");
  const auto& alpha = partition.multiplicities();
  auto top = alpha.rbegin();
  const ExactInt j1 = top->first;
  ExactInt j2 = j1;
  if (top->second < 2) {
    ++top;
    ensure(top != alpha.rend(), "increment: fewer than two chains");
    j2 = top->first;
  }
  ChainPartition out = partition;
  out.set(j1, out.at(j1) - 1);
  out.set(j2, out.at(j2) - 1);
  ensure(out.at(j1 + j2) == 0, "increment: merged index already occupied");
  out.set(j1 + j2, 1);
  ensure(validate(out), "increment produced an invalid partition");
  ensure(out.delta() == partition.delta() + 1, "increment did not raise delta by one");
  return out;
}

ChainPartition witness(const ExactInt& p, const ExactInt& k, const ExactInt& delta) {
  require(p >= 3, "witness needs p >= 3");
  require(k >= 2, "k must be >= 2");
  const ExactInt d0 = gonality::delta0(p, k);
  require(delta >= d0, "inadmissible: delta < delta0(p, k) = " + to_string(d0));
  require(delta <= p - 1, "delta must be <= p-1 (delta = p has no chain witness)");
  ChainPartition out = construct_minimal(p, k);
  for (ExactInt d = d0; d < delta; ++d) out = increment(out);
  ensure(out.delta() == delta, "witness has the wrong delta");
  return out;
}

namespace {

// Dense multiplicity vector indexed 1..p (slot 0 unused).
using Dense = std::vector<std::int64_t>;

void enumerate_rec(std::int64_t remaining, std::int64_t j, std::int64_t cap, Dense& cur,
                   std::vector<Dense>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (j == 0) return;
  // parts 1..j can hold at most cap * j(j+1)/2
  if (cap * j * (j + 1) / 2 < remaining) return;
  const std::int64_t most = std::min(cap, remaining / j);
  for (std::int64_t a = most; a >= 0; --a) {
    cur[j] = a;
    enumerate_rec(remaining - a * j, j - 1, cap, cur, out);
  }
  cur[j] = 0;
}

std::int64_t largest_part(const Dense& v) {
  for (std::int64_t j = static_cast<std::int64_t>(v.size()) - 1; j >= 1; --j) {
    if (v[j] != 0) return j;
  }
  return 0;
}

}  // namespace

std::vector<ChainPartition> enumerate(std::int64_t p, std::int64_t k, std::int64_t cap) {
  require(p >= 1, "p must be >= 1");
  require(k >= 2, "k must be >= 2");
  require(p <= cap, "p = " + std::to_string(p) + " exceeds the enumeration cap " +
                        std::to_string(cap) + "; raise it with K3GONAL_MAX_P");
  std::vector<Dense> raw;
  Dense cur(p + 1, 0);
  enumerate_rec(p, p, 2 * (k - 1), cur, raw);
  std::sort(raw.begin(), raw.end(), [](const Dense& a, const Dense& b) {
    const auto la = largest_part(a);
    const auto lb = largest_part(b);
    if (la != lb) return la < lb;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  std::vector<ChainPartition> out;
  out.reserve(raw.size());
  for (const Dense& v : raw) {
    ChainPartition part(p, k);
    for (std::int64_t j = 1; j <= p; ++j) {
      if (v[j] != 0) part.set(ExactInt(static_cast<long>(j)), ExactInt(static_cast<long>(v[j])));
    }
    out.push_back(std::move(part));
  }
  return out;
}

std::int64_t enumeration_cap_from_env() {
  const char* env = std::getenv("K3GONAL_MAX_P");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  const ExactInt cap = parse_int(env);
  require(cap >= 1 && fits_int64(cap), "K3GONAL_MAX_P must be a positive integer");
  return cap.get_si();
}

StableModel stable_model(const SymbolicChainCurve& curve) {
  require(validate(curve.partition), "stable_model needs a valid partition");
  // Rational curve Gamma_1 with one node per chain.
  return {curve.stable_model_nodes, curve.stable_model_nodes};
}

ChainPartition parse_partition(const ExactInt& p, const ExactInt& k, const std::string& text) {
  ChainPartition out(p, k);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    require(colon != std::string::npos, "partition entries must look like j:m, got '" + item + "'");
    const ExactInt j = parse_int(item.substr(0, colon));
    const ExactInt mult = parse_int(item.substr(colon + 1));
    require(out.at(j) == 0, "chain index listed twice: " + to_string(j));
    out.set(j, mult);
  }
  return out;
}

std::string format_partition(const ChainPartition& partition) {
  std::string out;
  for (const auto& [j, mult] : partition.multiplicities()) {
    if (!out.empty()) out += ',';
    out += to_string(j) + ":" + to_string(mult);
  }
  return out;
}

}  // namespace k3g::chains
