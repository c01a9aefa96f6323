#pragma once

// Chain partitions: multiplicities alpha_j of chains of length 2j-1 with
//   sum_j j alpha_j = p,   alpha_j <= 2(k-1),
// together with their node and genus bookkeeping.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "k3gonal/exactmath.hpp"

namespace k3g::chains {

inline constexpr std::int64_t kDefaultEnumerationCap = 60;

class ChainPartition {
 public:
  /// Sparse: only positive multiplicities are stored, keyed by chain index j.
  using Multiplicities = std::map<ExactInt, ExactInt>;

  ChainPartition(ExactInt p, ExactInt k, Multiplicities alpha = {});

  const ExactInt& p() const { return p_; }
  const ExactInt& k() const { return k_; }
  const Multiplicities& multiplicities() const { return alpha_; }

  /// alpha_j, zero when absent.
  ExactInt at(const ExactInt& j) const;
  /// Sets alpha_j; zero removes the entry.
  void set(const ExactInt& j, const ExactInt& mult);

  ExactInt weight() const;  ///< sum j alpha_j
  ExactInt delta() const;   ///< sum (j-1) alpha_j
  ExactInt genus() const;   ///< sum alpha_j

  friend bool operator==(const ChainPartition&, const ChainPartition&) = default;

 private:
  ExactInt p_;
  ExactInt k_;
  Multiplicities alpha_;
};

/// Counts carried by the limit curve built from a partition.
struct SymbolicChainCurve {
  explicit SymbolicChainCurve(ChainPartition partition);

  ChainPartition partition;
  ExactInt line_count;          ///< sum (2j-1) alpha_j
  ExactInt ruling2_lines;       ///< sum j alpha_j
  ExactInt marked_nodes;        ///< delta
  ExactInt nodes_on_gamma2;     ///< sum j alpha_j
  ExactInt e_points;            ///< 2 sum j alpha_j
  ExactInt stable_model_nodes;  ///< g
};

struct StableModel {
  ExactInt node_count;
  ExactInt arithmetic_genus;
};

bool validate(const ChainPartition& partition);

/// The minimal-delta partition built from the (m, t, lambda) decomposition.
ChainPartition construct_minimal(const ExactInt& p, const ExactInt& k);

/// Merges the two largest chains (by length, counted with multiplicity).
/// Raises delta by exactly one.
ChainPartition increment(const ChainPartition& partition);

/// A valid partition with the requested delta, delta0 <= delta <= p-1.
ChainPartition witness(const ExactInt& p, const ExactInt& k, const ExactInt& delta);

/// All valid partitions of p, ordered by largest part, then by the
/// multiplicity vector read from the largest part downwards.
std::vector<ChainPartition> enumerate(std::int64_t p, std::int64_t k,
                                      std::int64_t cap = kDefaultEnumerationCap);

/// Cap from K3GONAL_MAX_P, or the default.
std::int64_t enumeration_cap_from_env();

StableModel stable_model(const SymbolicChainCurve& curve);

/// "j:m,j:m,..." sparse notation, both directions.
ChainPartition parse_partition(const ExactInt& p, const ExactInt& k, const std::string& text);
std::string format_partition(const ChainPartition& partition);

}  // namespace k3g::chains
