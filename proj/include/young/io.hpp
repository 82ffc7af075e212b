#pragma once

#include "young/expansion.hpp"
#include "young/operators.hpp"
#include "young/slice.hpp"

#include <json.hpp>

#include <string>

namespace young::io {

/// Malformed file contents; the message names the offending record.
class InputError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// FunctionFile:  {"n": N, "k": K, "values": [{"set": [..], "value": "p/q"}, ...]}
// ExpansionFile: {"n": N, "k": K, "coeffs": [{"top_set": [..], "value": "p/q"}, ...]}
// Indices are 1-based; sets and top sets are sorted; values are exact rationals
// in lowest terms. Records are written in canonical order.

SliceFunction function_from_json(const nlohmann::json& doc);
nlohmann::json function_to_json(const SliceFunction& f);

YoungExpansion expansion_from_json(const nlohmann::json& doc);
nlohmann::json expansion_to_json(const YoungExpansion& e);

/// Noise output: same layout as ExpansionFile, values are decimal numbers
/// rounded to 15 significant digits.
nlohmann::json real_expansion_to_json(const RealExpansion& e);

/// Function values as decimals with 15 significant digits.
nlohmann::json real_function_to_json(int n, int k, const std::vector<double>& values);

double round_significant(double value, int digits = 15);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace young::io
