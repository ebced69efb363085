#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polycount/bigint.hpp"
#include "polycount/cayley_tree.hpp"

namespace polycount {

// Brute-force ground truth: exhaustively count the n-vertex connected
// components containing a fixed component, with no Catalan machinery.
//
// Enumeration is by canonical edge decisions: order the free edges leaving
// the current component, then recursively either exclude the first
// undecided edge for good or include its far endpoint (which contributes
// that endpoint's two outward edges). On a tree every connected superset
// corresponds to exactly one decision path, so sets are counted once each
// structurally, without dedup bookkeeping.

// Host graph the enumeration runs on.
enum class HostTree {
  kCayley,        // every vertex has degree 3
  kRootedBinary,  // branch "2" removed; the root keeps two children
};

inline constexpr int kOracleDefaultCap = 14;
// Counts below this size provably fit in 64 bits (they are < C_{n+1}).
inline constexpr int kOracleHardCap = 26;

struct OracleOptions {
  // Resource guard on n; requests above it are rejected. Values above
  // kOracleHardCap are rejected outright.
  int cap = kOracleDefaultCap;
  // Host truncation radius around the fixed component. Defaults to
  // n - |fixed|, which is always sufficient.
  std::optional<int> radius;
  HostTree host = HostTree::kCayley;
  // Split the first edge decision across two threads. Results are summed,
  // so counts are identical to the sequential run.
  bool parallel = false;
  // Test hook: invoked once per enumerated vertex set. Forces a sequential
  // run when set.
  std::function<void(const std::vector<VertexAddress>&)> on_component;
};

// Number of distinct n-vertex connected supersets of `fixed` in the host
// tree. Returns 0 when n < |fixed| (nothing to count, not an error);
// throws std::length_error when n exceeds the cap.
BigInt count_components_oracle(const Component& fixed, int n, const OracleOptions& opts = {});

// Same, reducing a raw vertex set through minimal_component first
// (a singleton set stands for itself).
BigInt count_components_oracle(std::span<const VertexAddress> fixed, int n,
                               const OracleOptions& opts = {});

enum class Family { kFull, kPath };

struct VerifyPoint {
  int m = 0;
  int n = 0;
  BigInt oracle_count;
  BigInt formula_count;
  bool match = false;
};

struct VerifyReport {
  Family family = Family::kFull;
  int max_n = 0;
  int max_m = 0;
  std::vector<VerifyPoint> points;
  bool all_match = true;
};

// Drives the oracle against the convolution formula over the whole
// (m, n) grid: m from 2 to max_m, n from the minimal component size to
// max_n. Requires max_n <= opts.cap.
VerifyReport verify_family(Family family, int max_n, int max_m, const OracleOptions& opts = {});

// True iff the oracle returns the same count for two non-isomorphic full
// components with m boundary vertices (chain-shaped vs ball-shaped
// interior). Requires m >= 6, the first m with two shapes.
bool shape_independence_check(int m, int n, const OracleOptions& opts = {});

}  // namespace polycount
