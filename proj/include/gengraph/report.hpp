#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gengraph {

/// A flat, schema-stable result table.  All suite output funnels through
/// this so CSV/JSON/text emission is uniform and byte-deterministic.
struct ReportTable {
    std::string suite;   // CLI token, e.g. "main-theorem"
    std::string schema;  // e.g. "gengraph.main-theorem.v1"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    long long failures = 0;
    long long skipped = 0;

    bool passed() const { return failures == 0; }

    void add_row(std::vector<std::string> cells, bool ok) {
        rows.push_back(std::move(cells));
        if (!ok) ++failures;
    }
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_csv(const ReportTable& t, std::ostream& out) {
    out << "# " << t.schema << "\n";
    out << "# failures=" << t.failures << " skipped=" << t.skipped << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << detail::csv_escape(t.columns[i]);
    out << "\n";
    for (auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << detail::csv_escape(row[i]);
        out << "\n";
    }
}

inline nlohmann::ordered_json to_json(const ReportTable& t) {
    nlohmann::ordered_json j;
    j["schema"] = t.schema;
    j["suite"] = t.suite;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (auto& row : t.rows) rows.push_back(row);
    j["rows"] = std::move(rows);
    j["failures"] = t.failures;
    j["skipped"] = t.skipped;
    j["passed"] = t.passed();
    return j;
}

inline void write_text(const ReportTable& t, std::ostream& out) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << "\n";
    };
    out << "== suite " << t.suite << " ==\n";
    line(t.columns);
    for (auto& row : t.rows) line(row);
    out << "suite " << t.suite << ": " << (t.passed() ? "PASS" : "FAIL") << " ("
        << t.rows.size() << " rows, " << t.failures << " failures, " << t.skipped
        << " skipped)\n";
}

inline void write_tables(const std::vector<ReportTable>& tables,
                         const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "gengraph.verify.v1";
        auto arr = nlohmann::ordered_json::array();
        bool pass = true;
        for (auto& t : tables) {
            arr.push_back(to_json(t));
            pass = pass && t.passed();
        }
        j["suites"] = std::move(arr);
        j["passed"] = pass;
        out << j.dump(1) << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) out << "\n";
            write_csv(tables[i], out);
        }
    } else {
        for (auto& t : tables) write_text(t, out);
        bool pass = true;
        for (auto& t : tables) pass = pass && t.passed();
        if (tables.size() > 1)
            out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    }
}

}  // namespace gengraph
