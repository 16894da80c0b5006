#pragma once

// Tabular output shared by all commands: CSV (RFC 4180 quoting), TSV, or a
// JSON envelope {command, graph, parameters, summary, rows}.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"  // nlohmann/json, vendored

namespace pagtc::cli {

enum class Format { csv, tsv, json };

/// A cell is empty (null), text, an integer, a real, or a one-decimal
/// percentage.
struct Percent {
    double value;
};
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, Percent>;

inline std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline double round1(double pct) { return std::round(pct * 10.0) / 10.0; }

inline Percent percent_of(std::size_t value, std::size_t n) {
    return {100.0 * static_cast<double>(value) / static_cast<double>(n)};
}

inline std::string cell_text(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_real(v); }
        std::string operator()(Percent p) const {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", round1(p.value));
            return buf;
        }
    };
    return std::visit(Visitor{}, c);
}

inline nlohmann::json cell_json(const Cell& c) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(const std::string& s) const { return s; }
        nlohmann::json operator()(std::int64_t v) const { return v; }
        nlohmann::json operator()(double v) const { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }
        nlohmann::json operator()(Percent p) const { return round1(p.value); }
    };
    return std::visit(Visitor{}, c);
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

inline std::string tsv_clean(std::string s) {
    for (char& ch : s) {
        if (ch == '\t' || ch == '\n' || ch == '\r') {
            ch = ' ';
        }
    }
    return s;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Envelope {
    std::string command;
    nlohmann::json graph = nlohmann::json::object();
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json summary = nlohmann::json::object();
};

inline void write_delimited(const Table& t, std::ostream& out, Format format) {
    const char sep = format == Format::csv ? ',' : '\t';
    auto field = [&](const std::string& s) { return format == Format::csv ? csv_quote(s) : tsv_clean(s); };
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? std::string(1, sep) : "") << field(t.columns[i]);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? std::string(1, sep) : "") << field(cell_text(row[i]));
        }
        out << '\n';
    }
}

inline nlohmann::json table_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[t.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

inline void write_table(const Envelope& env, const Table& t, std::ostream& out, Format format) {
    if (format != Format::json) {
        write_delimited(t, out, format);
        return;
    }
    nlohmann::json doc = {{"command", env.command},
                          {"graph", env.graph},
                          {"parameters", env.parameters},
                          {"summary", env.summary},
                          {"columns", t.columns},
                          {"rows", table_json(t)}};
    out << doc.dump(2) << '\n';
}

}  // namespace pagtc::cli
