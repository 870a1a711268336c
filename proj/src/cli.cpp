#include "z2s/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "z2s/cache.hpp"
#include "z2s/classify.hpp"
#include "z2s/equivalence.hpp"
#include "z2s/errors.hpp"
#include "z2s/expected_tables.hpp"
#include "z2s/graymap.hpp"
#include "z2s/hadamard.hpp"
#include "z2s/invariants.hpp"
#include "z2s/serialize.hpp"

namespace z2s::cli {

namespace {

struct Globals {
  std::string format;
  std::string cache;
  bool allow_large = false;
  unsigned jobs = 0;
};

std::string format_or(const Globals& g, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return f == a; })) {
    throw UsageError("unsupported --format '" + f + "' for this command");
  }
  return f;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<int> opt_int(const CLI::Option* option, int value) {
  return option->count() ? std::optional<int>(value) : std::nullopt;
}

int cmd_gray(const Globals& g, int s, std::ostream& out) {
  const auto f = format_or(g, "text", {"text", "json"});
  const auto table = build_gray(s);
  if (f == "json") {
    out << to_json(table).dump(2) << '\n';
  } else {
    out << gray_table_to_text(table);
  }
  return 0;
}

int cmd_types(const Globals& g, int t, std::optional<int> s, std::ostream& out) {
  const auto f = format_or(g, "text", {"text", "json"});
  if (t < 1) throw UsageError("--t must be positive");
  const int s_min = s ? *s : 2;
  const int s_max = s ? *s : max_s_for(t);
  nlohmann::json list = nlohmann::json::array();
  for (int sv = s_min; sv <= s_max; ++sv) {
    for (const auto& spec : enumerate_type_specs(t, sv)) {
      if (f == "json") {
        list.push_back({{"s", sv}, {"type", std::vector<int>(spec.counts().begin(), spec.counts().end())}});
      } else {
        out << (s ? spec.to_string() : type_label(spec)) << '\n';
      }
    }
  }
  if (f == "json") out << list.dump(2) << '\n';
  return 0;
}

int cmd_build(const Globals& g, const TypeSpec& spec, const std::string& mode, std::ostream& out) {
  const auto f = format_or(g, "text", {"text", "json"});
  require_within_cap(spec, g.allow_large);
  const auto gen = mode == "recursive" ? generator_recursive(spec) : generator_direct(spec);
  if (f == "json") {
    out << to_json(gen).dump(2) << '\n';
  } else {
    out << generator_to_text(gen);
  }
  return 0;
}

int cmd_invariants(const Globals& g, const TypeSpec& spec, bool verify_kernel, std::ostream& out) {
  const auto f = format_or(g, "json", {"json", "csv"});
  require_within_cap(spec, g.allow_large);
  const bool verify = verify_kernel || spec.t() <= kKernelVerifyMaxT;

  std::optional<ResultsCache> cache;
  if (auto path = resolve_cache_path(g.cache.empty() ? std::nullopt : std::optional<std::string>(g.cache))) {
    cache.emplace(*path);
  }
  std::optional<InvariantRecord> record;
  if (cache) record = cache->lookup(spec, verify);
  if (!record) {
    const auto start = std::chrono::steady_clock::now();
    record = compute_invariants(spec, InvariantOptions{verify, g.allow_large});
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    if (cache) cache->append(*record, elapsed.count());
  }
  if (f == "csv") {
    out << record_csv_header() << '\n' << to_csv(*record) << '\n';
  } else {
    out << to_json(*record).dump(2) << '\n';
  }
  return 0;
}

int cmd_classify(const Globals& g, int t, std::optional<int> s, bool verify_kernel, std::ostream& out) {
  const auto f = format_or(g, "csv", {"csv", "json"});
  require_within_cap(t, g.allow_large);
  ClassifyOptions options{verify_kernel, g.allow_large, resolve_jobs(g.jobs)};
  const int s_min = s ? *s : 2;
  const int s_max = s ? *s : max_s_for(t);
  if (s_min < 2) throw UsageError("--s must be at least 2");
  const auto report = classification_report(t, s_min, s_max, options);
  if (f == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << report_to_csv(report);
  }
  return 0;
}

int cmd_bounds(const Globals& g, int t, std::ostream& out) {
  const auto f = format_or(g, "csv", {"csv", "json", "text"});
  require_within_cap(t, g.allow_large);
  const auto bounds = a_t_bounds(t, ClassifyOptions{false, g.allow_large, resolve_jobs(g.jobs)});
  if (f == "json") {
    out << to_json(bounds).dump(2) << '\n';
  } else if (f == "text") {
    out << bounds.lower_K << ',' << bounds.lower_RK << ',' << bounds.upper << '\n';
  } else {
    out << bounds_csv_header() << '\n' << to_csv(bounds) << '\n';
  }
  return 0;
}

int cmd_equiv(const Globals& g, const std::string& a_text, const std::string& b_text, long long budget_ms,
              unsigned long long max_nodes, std::ostream& out) {
  const auto f = format_or(g, "json", {"json", "text"});
  const auto a = parse_type(a_text);
  const auto b = parse_type(b_text);
  require_within_cap(a, g.allow_large);
  require_within_cap(b, g.allow_large);
  if (budget_ms <= 0) throw UsageError("--budget-ms must be positive");
  const auto code_a = gray_image(generator_direct(a), build_gray(a.s()), g.allow_large);
  const auto code_b = gray_image(generator_direct(b), build_gray(b.s()), g.allow_large);
  const auto verdict =
      equivalence_search(code_a, code_b, EquivalenceBudget{std::chrono::milliseconds(budget_ms), max_nodes});
  if (f == "text") {
    out << to_string(verdict.outcome);
    if (!verdict.separating_invariant.empty()) out << " (" << verdict.separating_invariant << ")";
    out << '\n';
  } else {
    auto j = to_json(verdict);
    j["a"] = type_label(a);
    j["b"] = type_label(b);
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_verify(const Globals& g, int t_min, int t_max, bool dump, std::ostream& out) {
  if (dump) {
    out << expected_tables_json().dump(2) << '\n';
    return 0;
  }
  require_within_cap(t_max, g.allow_large);
  ClassifyOptions options{true, g.allow_large, resolve_jobs(g.jobs)};
  const auto summary = verify_tables(t_min, t_max, options, [&](const std::string& line) { out << line << '\n'; });
  for (const auto& m : summary.mismatches) out << "MISMATCH " << m << '\n';
  out << "verify: " << summary.checks << " checks, " << summary.mismatches.size() << " mismatches\n";
  return summary.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z_{2^s}-linear Hadamard codes: construction, invariants and classification", "z2shad"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format (text, json, csv; depends on the command)");
  app.add_option("--cache", g.cache, std::string("Results cache file (default: $") + kCacheEnvVar + ")");
  app.add_flag("--allow-large", g.allow_large, "Permit t above the default cap");
  app.add_option("--jobs", g.jobs, "Worker threads (default: hardware concurrency)");

  int s = 0, t = 0, t_min = 3, t_max = 10;
  std::string type_text, mode = "direct", a_text, b_text;
  bool verify_kernel = false, dump = false;
  long long budget_ms = 60000;
  unsigned long long max_nodes = EquivalenceBudget{}.max_nodes;

  auto* gray = app.add_subcommand("gray", "Dump the Gray map table");
  gray->add_option("--s", s, "Ring exponent")->required();

  auto* types = app.add_subcommand("types", "List the types of length 2^t");
  types->add_option("--t", t)->required();
  auto* types_s = types->add_option("--s", s);

  auto* build = app.add_subcommand("build", "Print a generator matrix");
  auto* build_s = build->add_option("--s", s);
  build->add_option("--type", type_text, "t_1,...,t_s")->required();
  build->add_option("--mode", mode)->check(CLI::IsMember({"direct", "recursive"}));

  auto* invariants = app.add_subcommand("invariants", "Rank, kernel, linearity and distance of one code");
  auto* inv_s = invariants->add_option("--s", s);
  invariants->add_option("--type", type_text, "t_1,...,t_s")->required();
  invariants->add_flag("--verify-kernel", verify_kernel, "Brute-force the kernel (always done for t <= 8)");

  auto* classify = app.add_subcommand("classify", "Rank and kernel of every type of length 2^t");
  classify->add_option("--t", t)->required();
  auto* classify_s = classify->add_option("--s", s);
  classify->add_flag("--verify-kernel", verify_kernel);

  auto* bounds = app.add_subcommand("bounds", "Bounds on the number of nonequivalent codes");
  bounds->add_option("--t", t)->required();

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two Gray images");
  equiv->add_option("--a", a_text, "[S:]t_1,...,t_s")->required();
  equiv->add_option("--b", b_text, "[S:]t_1,...,t_s")->required();
  equiv->add_option("--budget-ms", budget_ms);
  equiv->add_option("--max-nodes", max_nodes);

  auto* verify = app.add_subcommand("verify", "Recompute and compare with the embedded tables");
  verify->add_option("--t-min", t_min);
  verify->add_option("--t-max", t_max);
  verify->add_flag("--dump-expected", dump, "Print the embedded tables as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*gray) return cmd_gray(g, s, out);
    if (*types) return cmd_types(g, t, opt_int(types_s, s), out);
    if (*build) return cmd_build(g, parse_type(type_text, opt_int(build_s, s)), mode, out);
    if (*invariants) return cmd_invariants(g, parse_type(type_text, opt_int(inv_s, s)), verify_kernel, out);
    if (*classify) return cmd_classify(g, t, opt_int(classify_s, s), verify_kernel, out);
    if (*bounds) return cmd_bounds(g, t, out);
    if (*equiv) return cmd_equiv(g, a_text, b_text, budget_ms, max_nodes, out);
    if (*verify) return cmd_verify(g, t_min, t_max, dump, out);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace z2s::cli
