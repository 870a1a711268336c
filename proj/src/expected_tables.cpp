#include "z2s/expected_tables.hpp"

#include <set>

#include "z2s/errors.hpp"
#include "z2s/invariants.hpp"

namespace z2s {

namespace {

ExpectedTables build_tables() {
  ExpectedTables tables;
  auto& r = tables.rows;
  // t = 5
  r.push_back({5, 2, {3, 0}, 7, 4});
  r.push_back({5, 3, {2, 0, 0}, 8, 3});
  // t = 6
  r.push_back({6, 2, {3, 1}, 8, 5});
  r.push_back({6, 3, {1, 2, 0}, 8, 5});
  r.push_back({6, 3, {2, 0, 1}, 9, 4});
  r.push_back({6, 4, {1, 1, 0, 0}, 9, 4});
  // t = 7
  r.push_back({7, 2, {3, 2}, 9, 6});
  r.push_back({7, 2, {4, 0}, 11, 5});
  r.push_back({7, 3, {1, 2, 1}, 9, 6});
  r.push_back({7, 3, {2, 0, 2}, 10, 5});
  r.push_back({7, 3, {2, 1, 0}, 12, 4});
  r.push_back({7, 4, {1, 0, 2, 0}, 9, 6});
  r.push_back({7, 4, {1, 1, 0, 1}, 10, 5});
  r.push_back({7, 4, {2, 0, 0, 0}, 14, 3});
  r.push_back({7, 5, {1, 0, 1, 0, 0}, 10, 5});
  // t = 8
  r.push_back({8, 2, {3, 3}, 10, 7});
  r.push_back({8, 2, {4, 1}, 12, 6});
  r.push_back({8, 3, {1, 2, 2}, 10, 7});
  r.push_back({8, 3, {1, 3, 0}, 12, 6});
  r.push_back({8, 3, {2, 0, 3}, 11, 6});
  r.push_back({8, 3, {2, 1, 1}, 13, 5});
  r.push_back({8, 3, {3, 0, 0}, 17, 4});
  r.push_back({8, 4, {1, 0, 2, 1}, 10, 7});
  r.push_back({8, 4, {1, 1, 0, 2}, 11, 6});
  r.push_back({8, 4, {1, 1, 1, 0}, 13, 5});
  r.push_back({8, 4, {2, 0, 0, 1}, 15, 4});
  r.push_back({8, 5, {1, 0, 0, 2, 0}, 10, 7});
  r.push_back({8, 5, {1, 0, 1, 0, 1}, 11, 6});
  r.push_back({8, 5, {1, 1, 0, 0, 0}, 15, 4});
  r.push_back({8, 6, {1, 0, 0, 1, 0, 0}, 11, 6});
  // t = 9
  r.push_back({9, 2, {3, 4}, 11, 8});
  r.push_back({9, 2, {4, 2}, 13, 7});
  r.push_back({9, 2, {5, 0}, 16, 6});
  r.push_back({9, 3, {1, 2, 3}, 11, 8});
  r.push_back({9, 3, {1, 3, 1}, 13, 7});
  r.push_back({9, 3, {2, 0, 4}, 12, 7});
  r.push_back({9, 3, {2, 1, 2}, 14, 6});
  r.push_back({9, 3, {2, 2, 0}, 17, 5});
  r.push_back({9, 3, {3, 0, 1}, 18, 5});
  r.push_back({9, 4, {1, 0, 2, 2}, 11, 8});
  r.push_back({9, 4, {1, 0, 3, 0}, 13, 7});
  r.push_back({9, 4, {1, 2, 0, 0}, 18, 5});
  r.push_back({9, 4, {1, 1, 0, 3}, 12, 7});
  r.push_back({9, 4, {1, 1, 1, 1}, 14, 6});
  r.push_back({9, 4, {2, 0, 0, 2}, 16, 5});
  r.push_back({9, 4, {2, 0, 1, 0}, 20, 4});
  r.push_back({9, 5, {1, 0, 0, 2, 1}, 11, 8});
  r.push_back({9, 5, {1, 0, 1, 0, 2}, 12, 7});
  r.push_back({9, 5, {1, 0, 1, 1, 0}, 14, 6});
  r.push_back({9, 5, {1, 1, 0, 0, 1}, 16, 5});
  r.push_back({9, 5, {2, 0, 0, 0, 0}, 26, 3});
  r.push_back({9, 6, {1, 0, 0, 0, 2, 0}, 11, 8});
  r.push_back({9, 6, {1, 0, 0, 1, 0, 1}, 12, 7});
  r.push_back({9, 6, {1, 0, 1, 0, 0, 0}, 16, 5});
  r.push_back({9, 7, {1, 0, 0, 0, 1, 0, 0}, 12, 7});
  // t = 10
  r.push_back({10, 2, {3, 5}, 12, 9});
  r.push_back({10, 2, {4, 3}, 14, 8});
  r.push_back({10, 2, {5, 1}, 17, 7});
  r.push_back({10, 3, {1, 2, 4}, 12, 9});
  r.push_back({10, 3, {1, 3, 2}, 14, 8});
  r.push_back({10, 3, {1, 4, 0}, 17, 7});
  r.push_back({10, 3, {2, 0, 5}, 13, 8});
  r.push_back({10, 3, {2, 1, 3}, 15, 7});
  r.push_back({10, 3, {2, 2, 1}, 18, 6});
  r.push_back({10, 3, {3, 0, 2}, 19, 6});
  r.push_back({10, 3, {3, 1, 0}, 24, 5});
  r.push_back({10, 4, {1, 0, 2, 3}, 12, 9});
  r.push_back({10, 4, {1, 0, 3, 1}, 14, 8});
  r.push_back({10, 4, {1, 1, 0, 4}, 13, 8});
  r.push_back({10, 4, {1, 1, 1, 2}, 15, 7});
  r.push_back({10, 4, {1, 1, 2, 0}, 18, 6});
  r.push_back({10, 4, {1, 2, 0, 1}, 19, 6});
  r.push_back({10, 4, {2, 0, 0, 3}, 17, 6});
  r.push_back({10, 4, {2, 0, 1, 1}, 21, 5});
  r.push_back({10, 4, {2, 1, 0, 0}, 28, 4});
  r.push_back({10, 5, {1, 0, 0, 2, 2}, 12, 9});
  r.push_back({10, 5, {1, 0, 0, 3, 0}, 14, 8});
  r.push_back({10, 5, {1, 0, 1, 0, 3}, 13, 8});
  r.push_back({10, 5, {1, 0, 1, 1, 1}, 15, 7});
  r.push_back({10, 5, {1, 0, 2, 0, 0}, 19, 6});
  r.push_back({10, 5, {1, 1, 0, 0, 2}, 17, 6});
  r.push_back({10, 5, {1, 1, 0, 1, 0}, 21, 5});
  r.push_back({10, 5, {2, 0, 0, 0, 1}, 27, 4});
  r.push_back({10, 6, {1, 0, 0, 0, 2, 1}, 12, 9});
  r.push_back({10, 6, {1, 0, 0, 1, 0, 2}, 13, 8});
  r.push_back({10, 6, {1, 0, 0, 1, 1, 0}, 15, 7});
  r.push_back({10, 6, {1, 0, 1, 0, 0, 1}, 17, 6});
  r.push_back({10, 6, {1, 1, 0, 0, 0, 0}, 27, 4});
  r.push_back({10, 7, {1, 0, 0, 0, 0, 2, 0}, 12, 9});
  r.push_back({10, 7, {1, 0, 0, 0, 1, 0, 1}, 13, 8});
  r.push_back({10, 7, {1, 0, 0, 1, 0, 0, 0}, 17, 6});
  r.push_back({10, 8, {1, 0, 0, 0, 0, 1, 0, 0}, 13, 8});

  // A_{t,s}, rows s = 2..9, columns t = 3..11.
  const int counts[8][9] = {
      {1, 1, 2, 2, 3, 3, 4, 4, 5},    // s = 2
      {1, 1, 2, 3, 4, 6, 7, 9, 11},   // s = 3
      {1, 1, 1, 2, 4, 5, 8, 10, 14},  // s = 4
      {0, 1, 1, 1, 2, 4, 6, 9, 12},   // s = 5
      {0, 0, 1, 1, 1, 2, 4, 6, 10},   // s = 6
      {0, 0, 0, 1, 1, 1, 2, 4, 6},    // s = 7
      {0, 0, 0, 0, 1, 1, 1, 2, 4},    // s = 8
      {0, 0, 0, 0, 0, 1, 1, 1, 2},    // s = 9
  };
  for (int s = 2; s <= 9; ++s) {
    for (int t = 3; t <= 11; ++t) tables.counts[{t, s}] = counts[s - 2][t - 3];
  }

  const int lower_k[9] = {1, 1, 3, 3, 5, 5, 7, 7, 9};
  const int lower_rk[9] = {1, 1, 3, 3, 6, 7, 11, 13, 20};
  const int upper[9] = {1, 1, 3, 5, 10, 16, 26, 38, 57};
  for (int t = 3; t <= 11; ++t) {
    tables.bounds[t] = BoundsRecord{t, lower_k[t - 3], lower_rk[t - 3], upper[t - 3]};
  }
  return tables;
}

std::string describe(int t, int s, const std::string& type) {
  return "t=" + std::to_string(t) + " s=" + std::to_string(s) + " type=" + type;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::vector<ExpectedRow> ExpectedTables::rows_for(int t) const {
  std::vector<ExpectedRow> out;
  for (const auto& row : rows) {
    if (row.t == t) out.push_back(row);
  }
  return out;
}

const ExpectedTables& expected_tables() {
  static const ExpectedTables tables = build_tables();
  return tables;
}

nlohmann::json expected_tables_json() {
  const auto& tables = expected_tables();
  nlohmann::json j;
  j["version"] = kExpectedTablesVersion;
  j["rank_kernel"] = nlohmann::json::array();
  for (const auto& row : tables.rows) {
    j["rank_kernel"].push_back(
        {{"t", row.t}, {"s", row.s}, {"type", row.type}, {"rank", row.rank}, {"kernel_dim", row.kernel_dim}});
  }
  j["counts"] = nlohmann::json::array();
  for (const auto& [key, value] : tables.counts) {
    j["counts"].push_back({{"t", key.first}, {"s", key.second}, {"A_ts", value}});
  }
  j["bounds"] = nlohmann::json::array();
  for (const auto& [t, b] : tables.bounds) {
    j["bounds"].push_back({{"t", t}, {"lower_K", b.lower_K}, {"lower_RK", b.lower_RK}, {"upper", b.upper}});
  }
  return j;
}

VerifySummary verify_tables(int t_min, int t_max, const ClassifyOptions& options,
                            const std::function<void(const std::string&)>& log) {
  if (t_min < 3 || t_max < t_min) throw UsageError("verify requires 3 <= t-min <= t-max");
  const auto& tables = expected_tables();
  VerifySummary summary;
  auto check = [&](bool ok, const std::string& what) {
    ++summary.checks;
    if (!ok) summary.mismatches.push_back(what);
  };

  for (int t = t_min; t <= t_max; ++t) {
    const std::size_t mismatches_before = summary.mismatches.size();
    const int checks_before = summary.checks;

    if (t >= tables.counts_t_min && t <= tables.counts_t_max) {
      for (int s = tables.counts_s_min; s <= tables.counts_s_max; ++s) {
        const int expected = tables.counts.at({t, s});
        const int got = a_ts(t, s).value;
        check(got == expected, "A(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ") = " +
                                   std::to_string(got) + ", expected " + std::to_string(expected));
      }
    }

    std::map<int, std::vector<ClassificationRow>> rows_by_s;
    for (int s = 2; s <= max_s_for(t); ++s) rows_by_s[s] = classify_fixed(t, s, options);

    std::map<std::pair<int, std::string>, std::pair<std::size_t, int>> computed;  // nonlinear only
    for (const auto& [s, rows] : rows_by_s) {
      std::set<std::size_t> ranks;
      std::size_t nonlinear = 0;
      for (const auto& row : rows) {
        check(row.linear == is_linear_theorem(row.spec),
              describe(t, s, row.spec.to_string()) + ": computed linearity disagrees with the linearity criterion");
        if (row.linear) continue;
        ++nonlinear;
        ranks.insert(row.rank);
        computed[{s, row.spec.to_string()}] = {row.rank, row.kernel_dim};
      }
      if (t <= kTightCountMaxT) {
        check(ranks.size() == nonlinear,
              "t=" + std::to_string(t) + " s=" + std::to_string(s) + ": nonlinear ranks are not pairwise distinct");
      }
    }

    if (t >= tables.rows_t_min && t <= tables.rows_t_max) {
      const auto expected_rows = tables.rows_for(t);
      for (const auto& row : expected_rows) {
        const std::string key = join(row.type);
        auto it = computed.find({row.s, key});
        if (it == computed.end()) {
          check(false, describe(t, row.s, key) + ": expected nonlinear, not computed as such");
          continue;
        }
        const auto [rank_got, ker_got] = it->second;
        check(rank_got == static_cast<std::size_t>(row.rank) && ker_got == row.kernel_dim,
              describe(t, row.s, key) + ": (r,k)=(" + std::to_string(rank_got) + "," + std::to_string(ker_got) +
                  "), expected (" + std::to_string(row.rank) + "," + std::to_string(row.kernel_dim) + ")");
      }
      check(computed.size() == expected_rows.size(),
            "t=" + std::to_string(t) + ": " + std::to_string(computed.size()) + " nonlinear types computed, " +
                std::to_string(expected_rows.size()) + " expected");
    }

    if (tables.bounds.contains(t)) {
      const auto got = bounds_from_rows(t, rows_by_s);
      const auto& want = tables.bounds.at(t);
      check(got == want, "bounds t=" + std::to_string(t) + ": (" + std::to_string(got.lower_K) + "," +
                             std::to_string(got.lower_RK) + "," + std::to_string(got.upper) + "), expected (" +
                             std::to_string(want.lower_K) + "," + std::to_string(want.lower_RK) + "," +
                             std::to_string(want.upper) + ")");
    }

    if (log) {
      const auto bad = summary.mismatches.size() - mismatches_before;
      log("t=" + std::to_string(t) + ": " + std::to_string(summary.checks - checks_before) + " checks, " +
          std::to_string(bad) + " mismatches");
    }
  }
  return summary;
}

}  // namespace z2s
