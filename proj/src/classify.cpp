#include "z2s/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "z2s/errors.hpp"
#include "z2s/graymap.hpp"
#include "z2s/invariants.hpp"

namespace z2s {

namespace {

ClassificationRow classify_one(const TypeSpec& spec, const GrayTable& table, const ClassifyOptions& options) {
  ClassificationRow row{spec};
  const GeneratorMatrix gen = generator_direct(spec);
  row.kernel_dim = kernel_dim_theorem(spec);
  if (options.verify_kernel && spec.t() <= kKernelVerifyMaxT) {
    const BinaryCode code = gray_image(gen, table, options.allow_large);
    row.rank = rank(code);
    const int measured = linear_dimension(kernel_bruteforce(code));
    if (measured != row.kernel_dim) {
      throw VerificationError("brute-force kernel dimension " + std::to_string(measured) + " disagrees with " +
                              std::to_string(row.kernel_dim) + " for type " + spec.to_string());
    }
    row.kernel_verified = true;
  } else {
    row.rank = rank_streaming(gen, table, options.allow_large);
  }
  row.linear = row.rank == static_cast<std::size_t>(spec.t() + 1);
  return row;
}

}  // namespace

std::vector<ClassificationRow> classify_fixed(int t, int s, const ClassifyOptions& options) {
  if (t < 3) throw InvalidType("classification requires t >= 3");
  require_within_cap(t, options.allow_large);
  const auto specs = enumerate_type_specs(t, s);
  std::vector<ClassificationRow> rows(specs.size(), ClassificationRow{TypeSpec(2, {1, 0})});
  if (specs.empty()) return rows;

  const GrayTable table = build_gray(s);
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) rows[i] = classify_one(specs[i], table, options);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < specs.size(); i = next++) {
        try {
          rows[i] = classify_one(specs[i], table, options);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

NonequivalenceCount a_ts(int t, int s) {
  NonequivalenceCount out;
  out.upper_bound_only = t > kTightCountMaxT;
  if (s >= t + 2) {
    out.value = 0;
  } else if (s >= t - 1 || (s == 2 && (t == 3 || t == 4))) {
    out.value = 1;
  } else {
    out.value = static_cast<int>(enumerate_type_specs(t, s).size()) - 1;
  }
  return out;
}

BoundsRecord bounds_from_rows(int t, const std::map<int, std::vector<ClassificationRow>>& rows_by_s) {
  std::set<int> kernels;
  std::set<std::pair<std::size_t, int>> pairs;
  for (const auto& [s, rows] : rows_by_s) {
    for (const auto& row : rows) {
      if (row.linear) continue;
      kernels.insert(row.kernel_dim);
      pairs.emplace(row.rank, row.kernel_dim);
    }
  }
  BoundsRecord b;
  b.t = t;
  // +1 for the single linear class present for every t.
  b.lower_K = static_cast<int>(kernels.size()) + 1;
  b.lower_RK = static_cast<int>(pairs.size()) + 1;
  int upper = 1;
  for (int s = 2; s <= max_s_for(t); ++s) {
    const int count = a_ts(t, s).value;
    if (count >= 1) upper += count - 1;
  }
  b.upper = upper;
  return b;
}

BoundsRecord a_t_bounds(int t, const ClassifyOptions& options) {
  if (t < 3) throw InvalidType("bounds require t >= 3");
  require_within_cap(t, options.allow_large);
  std::map<int, std::vector<ClassificationRow>> rows_by_s;
  for (int s = 2; s <= max_s_for(t); ++s) rows_by_s[s] = classify_fixed(t, s, options);
  return bounds_from_rows(t, rows_by_s);
}

ClassificationReport classification_report(int t, int s_min, int s_max, const ClassifyOptions& options) {
  if (t < 3) throw InvalidType("classification requires t >= 3");
  require_within_cap(t, options.allow_large);
  if (s_min < 2 || s_max < s_min) throw InvalidType("invalid s range");
  std::map<int, std::vector<ClassificationRow>> rows_by_s;
  for (int s = 2; s <= std::max(s_max, max_s_for(t)); ++s) {
    rows_by_s[s] = s <= max_s_for(t) ? classify_fixed(t, s, options) : std::vector<ClassificationRow>{};
  }
  ClassificationReport report;
  report.t = t;
  for (int s = s_min; s <= s_max; ++s) {
    report.groups.push_back(ClassificationGroup{s, a_ts(t, s), rows_by_s[s]});
  }
  report.bounds = bounds_from_rows(t, rows_by_s);
  return report;
}

}  // namespace z2s
