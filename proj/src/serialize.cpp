#include "z2s/serialize.hpp"

#include <charconv>
#include <sstream>

#include "z2s/errors.hpp"

namespace z2s {

namespace {

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("malformed integer '" + text + "' in " + context);
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

// Splits a CSV line on commas outside double quotes.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw UsageError("unterminated quote in CSV line");
  fields.push_back(current);
  return fields;
}

bool parse_bool(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw UsageError("malformed boolean '" + text + "'");
}

std::vector<int> counts_vector(const TypeSpec& spec) { return {spec.counts().begin(), spec.counts().end()}; }

}  // namespace

TypeSpec parse_type(const std::string& text, std::optional<int> s) {
  std::string body = trim(text);
  std::optional<int> prefix;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    prefix = parse_int(trim(body.substr(0, colon)), "type prefix");
    body = body.substr(colon + 1);
  }
  std::vector<int> counts;
  for (const auto& part : split(body, ',')) counts.push_back(parse_int(trim(part), "type tuple '" + text + "'"));
  if (prefix && s && *prefix != *s) throw UsageError("type prefix disagrees with --s");
  const int resolved = s ? *s : prefix ? *prefix : static_cast<int>(counts.size());
  if (static_cast<int>(counts.size()) != resolved) {
    throw UsageError("type tuple '" + text + "' has " + std::to_string(counts.size()) + " entries, expected " +
                     std::to_string(resolved));
  }
  return TypeSpec(resolved, std::move(counts));
}

std::string type_label(const TypeSpec& spec) { return std::to_string(spec.s()) + ":" + spec.to_string(); }

const char* to_string(KernelCheck check) {
  return check == KernelCheck::verified_bruteforce ? "verified-bruteforce" : "formula-only";
}

KernelCheck kernel_check_from_string(const std::string& text) {
  if (text == "verified-bruteforce") return KernelCheck::verified_bruteforce;
  if (text == "formula-only") return KernelCheck::formula_only;
  throw UsageError("unknown kernel_check '" + text + "'");
}

nlohmann::json to_json(const InvariantRecord& r) {
  return {{"s", r.spec.s()},        {"type", counts_vector(r.spec)}, {"t", r.t},
          {"n", r.n},               {"N", r.N},                      {"rank", r.rank},
          {"kernel_dim", r.kernel_dim}, {"linear", r.linear},        {"min_distance", r.min_distance},
          {"kernel_check", to_string(r.kernel_check)}};
}

InvariantRecord record_from_json(const nlohmann::json& j) {
  try {
    TypeSpec spec(j.at("s").get<int>(), j.at("type").get<std::vector<int>>());
    InvariantRecord r{spec};
    r.t = j.at("t").get<int>();
    r.n = j.at("n").get<std::uint64_t>();
    r.N = j.at("N").get<std::uint64_t>();
    r.rank = j.at("rank").get<std::size_t>();
    r.kernel_dim = j.at("kernel_dim").get<int>();
    r.linear = j.at("linear").get<bool>();
    r.min_distance = j.at("min_distance").get<std::size_t>();
    r.kernel_check = j.contains("kernel_check") ? kernel_check_from_string(j.at("kernel_check").get<std::string>())
                                                : KernelCheck::formula_only;
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed invariant record: ") + e.what());
  }
}

std::string record_csv_header() { return "s,type,t,n,N,rank,kernel_dim,linear,min_distance"; }

std::string to_csv(const InvariantRecord& r) {
  std::ostringstream out;
  out << r.spec.s() << ",\"" << r.spec.to_string() << "\"," << r.t << ',' << r.n << ',' << r.N << ',' << r.rank
      << ',' << r.kernel_dim << ',' << (r.linear ? "true" : "false") << ',' << r.min_distance;
  return out.str();
}

InvariantRecord record_from_csv(const std::string& line) {
  const auto f = split_csv(trim(line));
  if (f.size() != 9) throw UsageError("CSV record needs 9 fields, got " + std::to_string(f.size()));
  const int s = parse_int(f[0], "CSV field s");
  InvariantRecord r{parse_type(f[1], s)};
  r.t = parse_int(f[2], "CSV field t");
  r.n = std::stoull(f[3]);
  r.N = std::stoull(f[4]);
  r.rank = static_cast<std::size_t>(parse_int(f[5], "CSV field rank"));
  r.kernel_dim = parse_int(f[6], "CSV field kernel_dim");
  r.linear = parse_bool(f[7]);
  r.min_distance = std::stoull(f[8]);
  r.kernel_check = KernelCheck::formula_only;
  return r;
}

std::string generator_to_text(const GeneratorMatrix& gen) {
  std::ostringstream out;
  for (const auto& row : gen.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const GeneratorMatrix& gen) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : gen.rows) rows.push_back(std::vector<std::uint32_t>(row.values().begin(), row.values().end()));
  return {{"s", gen.spec.s()}, {"type", counts_vector(gen.spec)}, {"length", gen.length()},
          {"rows", rows},      {"row_orders", gen.row_orders}};
}

std::string gray_table_to_text(const GrayTable& table) {
  std::ostringstream out;
  for (std::size_t u = 0; u < table.images().size(); ++u) out << u << ": " << table.images()[u].to_string() << '\n';
  return out.str();
}

nlohmann::json to_json(const GrayTable& table) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& image : table.images()) images.push_back(image.to_string());
  return {{"s", table.s()}, {"block_length", table.block_length()}, {"images", images}};
}

std::string classification_csv_header() { return "s,type,rank,kernel_dim,linear,kernel_verified"; }

std::string to_csv(const ClassificationRow& row) {
  std::ostringstream out;
  out << row.spec.s() << ",\"" << row.spec.to_string() << "\"," << row.rank << ',' << row.kernel_dim << ','
      << (row.linear ? "true" : "false") << ',' << (row.kernel_verified ? "true" : "false");
  return out.str();
}

nlohmann::json to_json(const ClassificationRow& row) {
  return {{"s", row.spec.s()},      {"type", counts_vector(row.spec)}, {"rank", row.rank},
          {"kernel_dim", row.kernel_dim}, {"linear", row.linear},      {"kernel_verified", row.kernel_verified}};
}

nlohmann::json to_json(const BoundsRecord& b) {
  return {{"t", b.t}, {"lower_K", b.lower_K}, {"lower_RK", b.lower_RK}, {"upper", b.upper},
          {"upper_bound", b.t > kTightCountMaxT}};
}

nlohmann::json to_json(const ClassificationReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : report.groups) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : g.rows) rows.push_back(to_json(row));
    groups.push_back({{"s", g.s}, {"A_ts", g.count.value}, {"upper_bound", g.count.upper_bound_only}, {"rows", rows}});
  }
  return {{"t", report.t}, {"groups", groups}, {"bounds", to_json(report.bounds)}};
}

std::string report_to_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << classification_csv_header() << '\n';
  for (const auto& g : report.groups) {
    for (const auto& row : g.rows) out << to_csv(row) << '\n';
  }
  return out.str();
}

std::string bounds_csv_header() { return "t,lower_K,lower_RK,upper,upper_bound"; }

std::string to_csv(const BoundsRecord& b) {
  std::ostringstream out;
  out << b.t << ',' << b.lower_K << ',' << b.lower_RK << ',' << b.upper << ','
      << (b.t > kTightCountMaxT ? "true" : "false");
  return out.str();
}

nlohmann::json to_json(const EquivalenceVerdict& v) {
  nlohmann::json j = {{"outcome", to_string(v.outcome)}, {"nodes", v.nodes},
                      {"translations_tried", v.translations_tried}};
  if (!v.separating_invariant.empty()) j["separating_invariant"] = v.separating_invariant;
  if (v.witness) {
    j["witness"] = {{"length", v.witness->translation.size()},
                    {"translation", v.witness->translation.to_hex()},
                    {"permutation", v.witness->permutation}};
  }
  return j;
}

}  // namespace z2s
