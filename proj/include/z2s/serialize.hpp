#pragma once

// Text, CSV and JSON formats for types, generator matrices, Gray tables,
// invariant records, classification reports and equivalence verdicts.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "z2s/classify.hpp"
#include "z2s/equivalence.hpp"
#include "z2s/graymap.hpp"
#include "z2s/hadamard.hpp"
#include "z2s/invariants.hpp"

namespace z2s {

/// Accepts "t_1,...,t_s" or "S:t_1,...,t_s". When `s` is given the tuple
/// length (and any prefix) must agree with it. Throws UsageError on malformed
/// input and InvalidType on an invalid type.
TypeSpec parse_type(const std::string& text, std::optional<int> s = std::nullopt);

std::string type_label(const TypeSpec& spec);  // "S:t_1,...,t_s"

const char* to_string(KernelCheck check);
KernelCheck kernel_check_from_string(const std::string& text);

nlohmann::json to_json(const InvariantRecord& record);
InvariantRecord record_from_json(const nlohmann::json& j);

std::string record_csv_header();
std::string to_csv(const InvariantRecord& record);
InvariantRecord record_from_csv(const std::string& line);

std::string generator_to_text(const GeneratorMatrix& gen);
nlohmann::json to_json(const GeneratorMatrix& gen);

/// One line "u: bits" per u, bits in coordinate order.
std::string gray_table_to_text(const GrayTable& table);
nlohmann::json to_json(const GrayTable& table);

std::string classification_csv_header();
std::string to_csv(const ClassificationRow& row);
nlohmann::json to_json(const ClassificationRow& row);
nlohmann::json to_json(const ClassificationReport& report);
std::string report_to_csv(const ClassificationReport& report);

std::string bounds_csv_header();
std::string to_csv(const BoundsRecord& bounds);
nlohmann::json to_json(const BoundsRecord& bounds);

nlohmann::json to_json(const EquivalenceVerdict& verdict);

}  // namespace z2s
