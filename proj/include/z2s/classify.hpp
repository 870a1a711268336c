#pragma once

// Classification of Z_{2^s}-linear Hadamard codes of length 2^t by rank and
// kernel dimension: per-(t, s) tables, nonequivalence counts A_{t,s} and the
// bounds on A_t over all s.

#include <cstddef>
#include <map>
#include <vector>

#include "z2s/hadamard.hpp"

namespace z2s {

/// Tightness of the per-s count is established for 3 ≤ t ≤ this value.
inline constexpr int kTightCountMaxT = 11;

struct ClassificationRow {
  TypeSpec spec;
  std::size_t rank = 0;
  int kernel_dim = 0;
  bool linear = false;
  bool kernel_verified = false;

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

struct ClassifyOptions {
  bool verify_kernel = false;
  bool allow_large = false;
  unsigned jobs = 1;
};

/// Brute-force kernel verification is only attempted up to this t.
inline constexpr int kKernelVerifyMaxT = 8;

/// One row per type of length 2^t over Z_{2^s}. Ranks are computed; kernel
/// dimensions come from the closed form and, with verify_kernel and
/// t ≤ kKernelVerifyMaxT, are checked by brute force (VerificationError on
/// disagreement).
std::vector<ClassificationRow> classify_fixed(int t, int s, const ClassifyOptions& options = {});

struct NonequivalenceCount {
  int value = 0;
  bool upper_bound_only = false;  // set for t > kTightCountMaxT

  friend bool operator==(const NonequivalenceCount&, const NonequivalenceCount&) = default;
};

/// A_{t,s}: 0 for s ≥ t+2, 1 for s ∈ {t-1, t, t+1} and (t,s) ∈ {(3,2),(4,2)},
/// otherwise the number of types minus one (the linear types collapse to a
/// single class).
NonequivalenceCount a_ts(int t, int s);

struct BoundsRecord {
  int t = 0;
  int lower_K = 0;
  int lower_RK = 0;
  int upper = 0;

  friend bool operator==(const BoundsRecord&, const BoundsRecord&) = default;
};

/// Bounds derived from already computed rows, keyed by s.
BoundsRecord bounds_from_rows(int t, const std::map<int, std::vector<ClassificationRow>>& rows_by_s);

/// Computes every s-table for length 2^t, then the bounds.
BoundsRecord a_t_bounds(int t, const ClassifyOptions& options = {});

struct ClassificationGroup {
  int s = 0;
  NonequivalenceCount count;
  std::vector<ClassificationRow> rows;
};

struct ClassificationReport {
  int t = 0;
  std::vector<ClassificationGroup> groups;  // s ascending
  BoundsRecord bounds;
};

/// Groups for s in [s_min, s_max]; the bounds always cover every s.
ClassificationReport classification_report(int t, int s_min, int s_max, const ClassifyOptions& options = {});

/// Largest s for which a type of length 2^t exists.
inline int max_s_for(int t) { return t + 1; }

}  // namespace z2s
