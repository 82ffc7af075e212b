#include "young/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

namespace young::io {

using nlohmann::json;

namespace {

int read_int_field(const json& doc, const char* field) {
    if (!doc.is_object() || !doc.contains(field) || !doc[field].is_number_integer())
        throw InputError(std::string("missing or non-integer field \"") + field + "\"");
    return doc[field].get<int>();
}

std::string where(const char* array, std::size_t i) {
    return std::string(array) + "[" + std::to_string(i) + "]";
}

std::vector<int> read_index_list(const json& record, const char* field, const std::string& at) {
    if (!record.is_object() || !record.contains(field) || !record[field].is_array())
        throw InputError(at + ": missing \"" + field + "\" list");
    std::vector<int> out;
    for (const auto& v : record[field]) {
        if (!v.is_number_integer())
            throw InputError(at + ": non-integer index in \"" + field + "\"");
        out.push_back(v.get<int>());
    }
    return out;
}

Rational read_value(const json& record, const std::string& at) {
    if (!record.contains("value"))
        throw InputError(at + ": missing \"value\"");
    const auto& v = record["value"];
    try {
        if (v.is_string())
            return parse_rational(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(Integer(v.dump()));
    } catch (const InvalidInput& e) {
        throw InputError(at + ": " + e.what());
    }
    throw InputError(at + ": value must be a rational string such as \"3/4\"");
}

json index_list(const std::vector<int>& xs) {
    json out = json::array();
    for (int x : xs)
        out.push_back(x);
    return out;
}

}  // namespace

SliceFunction function_from_json(const json& doc) {
    const int n = read_int_field(doc, "n");
    const int k = read_int_field(doc, "k");
    try {
        check_slice_parameters(n, k);
    } catch (const InvalidInput& e) {
        throw InputError(e.what());
    }
    if (!doc.contains("values") || !doc["values"].is_array())
        throw InputError("missing \"values\" array");
    const auto& records = doc["values"];
    const Slice& slice = Slice::get(n, k);
    if (records.size() != slice.size())
        throw InputError("expected " + std::to_string(slice.size()) + " records for slice (" +
                         std::to_string(n) + "," + std::to_string(k) + "), found " +
                         std::to_string(records.size()));

    SliceFunction f(n, k);
    std::vector<bool> seen(slice.size(), false);
    for (std::size_t r = 0; r < records.size(); ++r) {
        const std::string at = where("values", r);
        const auto set = read_index_list(records[r], "set", at);
        if (static_cast<int>(set.size()) != k)
            throw InputError(at + ": set must have exactly k = " + std::to_string(k) + " entries");
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 1 || set[i] > n)
                throw InputError(at + ": index " + std::to_string(set[i]) + " outside [1," +
                                 std::to_string(n) + "]");
            if (i > 0 && set[i] <= set[i - 1])
                throw InputError(at + ": set must be sorted with distinct entries");
        }
        const std::size_t pos = slice.index_of(monomial_of(set));
        if (seen[pos])
            throw InputError(at + ": duplicate set");
        seen[pos] = true;
        f[pos] = read_value(records[r], at);
    }
    return f;
}

json function_to_json(const SliceFunction& f) {
    json values = json::array();
    const Slice& slice = f.domain();
    for (std::size_t s = 0; s < slice.size(); ++s)
        values.push_back({{"set", index_list(indices_of(slice.point(s)))},
                          {"value", format_rational(f[s])}});
    return {{"n", f.n()}, {"k", f.k()}, {"values", std::move(values)}};
}

YoungExpansion expansion_from_json(const json& doc) {
    const int n = read_int_field(doc, "n");
    const int k = read_int_field(doc, "k");
    try {
        check_slice_parameters(n, k);
    } catch (const InvalidInput& e) {
        throw InputError(e.what());
    }
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw InputError("missing \"coeffs\" array");
    YoungExpansion e(n, k);
    std::set<TopSet> seen;
    const auto& records = doc["coeffs"];
    for (std::size_t r = 0; r < records.size(); ++r) {
        const std::string at = where("coeffs", r);
        const auto entries = read_index_list(records[r], "top_set", at);
        TopSet b;
        try {
            b = TopSet(entries, n);
        } catch (const InvalidInput& err) {
            throw InputError(at + ": " + err.what());
        }
        if (b.size() > k)
            throw InputError(at + ": top set longer than k = " + std::to_string(k));
        if (!seen.insert(b).second)
            throw InputError(at + ": duplicate top set");
        e.set(b, read_value(records[r], at));
    }
    return e;
}

json expansion_to_json(const YoungExpansion& e) {
    json coeffs = json::array();
    for (const auto& [b, c] : e.coefficients())
        coeffs.push_back({{"top_set", index_list(b.entries())}, {"value", format_rational(c)}});
    return {{"n", e.n()}, {"k", e.k()}, {"coeffs", std::move(coeffs)}};
}

double round_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

json real_expansion_to_json(const RealExpansion& e) {
    json coeffs = json::array();
    for (const auto& [b, c] : e.coefficients)
        coeffs.push_back({{"top_set", index_list(b.entries())}, {"value", round_significant(c)}});
    return {{"n", e.n}, {"k", e.k}, {"coeffs", std::move(coeffs)}};
}

json real_function_to_json(int n, int k, const std::vector<double>& values) {
    const Slice& slice = Slice::get(n, k);
    json out = json::array();
    for (std::size_t s = 0; s < slice.size(); ++s)
        out.push_back({{"set", index_list(indices_of(slice.point(s)))},
                       {"value", round_significant(values[s])}});
    return {{"n", n}, {"k", k}, {"values", std::move(out)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace young::io
