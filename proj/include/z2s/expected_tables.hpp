#pragma once

// Published classification data, embedded as static tables:
//   * (rank, kernel dimension) of every nonlinear type, 5 ≤ t ≤ 10;
//   * A_{t,s} for 3 ≤ t ≤ 11, 2 ≤ s ≤ 9;
//   * (K, RK, upper) bounds on A_t for 3 ≤ t ≤ 11.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "z2s/classify.hpp"

namespace z2s {

inline constexpr const char* kExpectedTablesVersion = "1";

struct ExpectedRow {
  int t;
  int s;
  std::vector<int> type;
  int rank;
  int kernel_dim;
};

struct ExpectedTables {
  std::vector<ExpectedRow> rows;
  std::map<std::pair<int, int>, int> counts;  // (t, s) -> A_{t,s}
  std::map<int, BoundsRecord> bounds;         // t -> (K, RK, upper)

  int rows_t_min = 5, rows_t_max = 10;
  int counts_t_min = 3, counts_t_max = 11;
  int counts_s_min = 2, counts_s_max = 9;

  std::vector<ExpectedRow> rows_for(int t) const;
};

const ExpectedTables& expected_tables();

nlohmann::json expected_tables_json();

struct VerifySummary {
  int checks = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Recomputes the classification for every t in [t_min, t_max] and compares
/// it with the embedded tables wherever they apply. Also checks that
/// computed linearity matches the linearity criterion on every type and that
/// nonlinear ranks are pairwise distinct within each (t, s). Progress lines
/// go to `log` when provided.
VerifySummary verify_tables(int t_min, int t_max, const ClassifyOptions& options,
                            const std::function<void(const std::string&)>& log = {});

}  // namespace z2s
