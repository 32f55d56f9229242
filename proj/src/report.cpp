#include "tpt/report.hpp"

#include <cstdio>
#include <optional>

namespace tpt {

std::string_view format_name(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::markdown: return "markdown";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "markdown") return Format::markdown;
    return std::nullopt;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_value(const DocValue& value) {
    struct Visitor {
        std::string operator()(std::nullptr_t) const { return "null"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string& s) const {
            return '"' + json_escape(s) + '"';
        }
    };
    return std::visit(Visitor{}, value.v);
}

void json_record(std::string& out, const Record& rec, const std::string& indent) {
    out += "{";
    bool first = true;
    for (const Field& f : rec) {
        out += first ? "\n" : ",\n";
        first = false;
        out += indent + "  \"" + json_escape(f.first) + "\": " + json_value(f.second);
    }
    out += first ? "}" : "\n" + indent + "}";
}

std::string plain_value(const DocValue& value) {
    struct Visitor {
        std::string operator()(std::nullptr_t) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, value.v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
    std::string out = "{\n";
    out += "  \"schema_version\": \"" + json_escape(doc.schema_version) + "\",\n";
    out += "  \"command\": \"" + json_escape(doc.command) + "\",\n";
    out += "  \"inputs\": ";
    json_record(out, doc.inputs, "  ");
    if (!doc.notes.empty()) {
        out += ",\n  \"notes\": [";
        for (std::size_t i = 0; i < doc.notes.size(); ++i) {
            out += i ? ",\n    " : "\n    ";
            out += '"' + json_escape(doc.notes[i]) + '"';
        }
        out += "\n  ]";
    }
    for (const auto& [name, rec] : doc.sections) {
        out += ",\n  \"" + json_escape(name) + "\": ";
        json_record(out, rec, "  ");
    }
    out += ",\n  \"" + json_escape(doc.rows_name) + "\": [";
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        json_record(out, doc.rows[i], "    ");
    }
    out += doc.rows.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string to_csv(const ReportDocument& doc) {
    std::string out;
    if (doc.rows.empty()) return out;
    bool first = true;
    for (const Field& f : doc.rows.front()) {
        if (!first) out += ',';
        first = false;
        out += csv_escape(f.first);
    }
    out += '\n';
    for (const Record& row : doc.rows) {
        first = true;
        for (const Field& f : row) {
            if (!first) out += ',';
            first = false;
            out += csv_escape(plain_value(f.second));
        }
        out += '\n';
    }
    return out;
}

std::string to_markdown(const ReportDocument& doc) {
    std::string out = "# tpt " + doc.command + "\n\n";
    if (!doc.inputs.empty()) {
        for (const Field& f : doc.inputs) {
            out += "- " + f.first + ": " + plain_value(f.second) + "\n";
        }
        out += "\n";
    }
    for (const std::string& note : doc.notes) {
        out += "> " + note + "\n";
    }
    if (!doc.notes.empty()) out += "\n";
    for (const auto& [name, rec] : doc.sections) {
        out += "## " + name + "\n\n";
        for (const Field& f : rec) {
            out += "- " + f.first + ": " + plain_value(f.second) + "\n";
        }
        out += "\n";
    }
    if (!doc.rows.empty()) {
        std::string header = "|";
        std::string rule = "|";
        for (const Field& f : doc.rows.front()) {
            header += " " + md_escape(f.first) + " |";
            rule += " --- |";
        }
        out += header + "\n" + rule + "\n";
        for (const Record& row : doc.rows) {
            out += "|";
            for (const Field& f : row) {
                out += " " + md_escape(plain_value(f.second)) + " |";
            }
            out += "\n";
        }
    }
    return out;
}

std::string render(const ReportDocument& doc, Format f) {
    switch (f) {
        case Format::json: return to_json(doc);
        case Format::csv: return to_csv(doc);
        case Format::markdown: return to_markdown(doc);
    }
    return {};
}

}  // namespace tpt
