// report.hpp
// Deterministic report documents: a flat record model rendered to JSON, CSV,
// or markdown. Floats are always written with 17 significant digits so the
// text round-trips to the exact double and identical runs emit identical
// bytes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tpt {

enum class Format : int { json, csv, markdown };

std::string_view format_name(Format f);
std::optional<Format> parse_format(std::string_view s);

struct DocValue {
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string> v;

    DocValue() : v(nullptr) {}
    DocValue(std::nullptr_t) : v(nullptr) {}
    DocValue(bool b) : v(b) {}
    DocValue(int i) : v(static_cast<std::int64_t>(i)) {}
    DocValue(std::int64_t i) : v(i) {}
    DocValue(std::uint32_t i) : v(static_cast<std::int64_t>(i)) {}
    DocValue(std::uint64_t i) : v(static_cast<std::int64_t>(i)) {}
    DocValue(double d) : v(d) {}
    DocValue(const char* s) : v(std::string(s)) {}
    DocValue(std::string s) : v(std::move(s)) {}
    DocValue(std::string_view s) : v(std::string(s)) {}
};

using Field = std::pair<std::string, DocValue>;
using Record = std::vector<Field>;

struct ReportDocument {
    std::string schema_version = "1";
    std::string command;
    Record inputs;                                         // echo of all parameters
    std::vector<std::string> notes;                        // document-level remarks
    std::vector<std::pair<std::string, Record>> sections;  // named scalar groups
    std::string rows_name = "rows";
    std::vector<Record> rows;
};

// "%.17g", plus bare ".0"-free integers left as-is; never emits NaN/Inf
// (inputs are finite by construction).
std::string format_double(double x);

std::string to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);       // header + rows only
std::string to_markdown(const ReportDocument& doc);
std::string render(const ReportDocument& doc, Format f);

}  // namespace tpt
