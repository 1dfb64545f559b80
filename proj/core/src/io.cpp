#include "rimhook/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace rimhook::io {

namespace {

using nlohmann::json;

int parse_int(std::string_view text, std::size_t& pos, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) {
        throw ParseError(std::string("expected ") + what + " at position " +
                         std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

}  // namespace

Cell parse_cell(std::string_view text) {
    std::size_t pos = 0;
    const int row = parse_int(text, pos, "a row index");
    if (pos >= text.size() || text[pos] != ',') {
        throw ParseError("expected ',' after the row index in '" + std::string(text) + "'");
    }
    ++pos;
    const int col = parse_int(text, pos, "a column index");
    if (pos != text.size()) {
        throw ParseError("trailing characters after cell in '" + std::string(text) + "'");
    }
    if (row < 1 || col < 1) {
        throw ParseError("cell coordinates must be positive in '" + std::string(text) + "'");
    }
    return {row, col};
}

std::vector<Cell> parse_cell_list(std::string_view text) {
    std::vector<Cell> cells;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == ';')) {
            ++pos;
        }
    };
    skip();
    while (pos < text.size()) {
        const int row = parse_int(text, pos, "a row index");
        if (pos >= text.size() || text[pos] != ',') {
            throw ParseError("expected ',' in cell list at position " + std::to_string(pos));
        }
        ++pos;
        const int col = parse_int(text, pos, "a column index");
        int count = 1;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            count = parse_int(text, pos, "a multiplicity");
        }
        if (row < 1 || col < 1 || count < 1) {
            throw ParseError("cell list items need positive coordinates and multiplicities");
        }
        for (int k = 0; k < count; ++k) cells.push_back({row, col});
        skip();
    }
    return cells;
}

std::string cell_list_text(const std::vector<Cell>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t run = i + 1;
        while (run < cells.size() && cells[run] == cells[i]) ++run;
        if (!out.empty()) out += ' ';
        out += std::to_string(cells[i].row) + "," + std::to_string(cells[i].col);
        if (run - i > 1) out += "*" + std::to_string(run - i);
        i = run;
    }
    return out;
}

ReversePlanePartition parse_rpp(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_rpp_json(text);
    return parse_rpp_text(text);
}

ReversePlanePartition parse_rpp_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) {
        throw ParseError("expected an object with 'shape' and 'rows'");
    }
    std::vector<int> parts;
    try {
        parts = j.at("shape").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid 'shape': ") + e.what());
    }
    Grid rows;
    try {
        rows = j.at("rows").get<Grid>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid 'rows': ") + e.what());
    }
    Partition shape;
    try {
        shape = Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid 'shape': ") + e.what());
    }
    return ReversePlanePartition::validated(std::move(shape), rows);
}

ReversePlanePartition parse_rpp_text(std::string_view text) {
    Grid rows;
    std::vector<int> parts;
    std::size_t line_start = 0;
    int line_no = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        ++line_no;
        std::vector<Entry> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
                ++pos;
                continue;
            }
            Entry value = 0;
            auto [ptr, ec] =
                std::from_chars(line.data() + pos, line.data() + line.size(), value);
            if (ec != std::errc{}) {
                throw ParseError("line " + std::to_string(line_no) + ": expected an integer at column " +
                                 std::to_string(pos + 1));
            }
            pos = static_cast<std::size_t>(ptr - line.data());
            row.push_back(value);
        }
        if (!row.empty()) {
            parts.push_back(static_cast<int>(row.size()));
            rows.push_back(std::move(row));
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    Partition shape;
    try {
        shape = Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw ParseError("row lengths must be weakly decreasing");
    }
    return ReversePlanePartition::validated(std::move(shape), rows);
}

std::string rpp_json(const ReversePlanePartition& rpp) {
    json j;
    j["shape"] = rpp.shape().parts();
    j["rows"] = rpp.rows();
    return j.dump();
}

std::string rpp_text(const ReversePlanePartition& rpp) {
    std::string out;
    for (const auto& row : rpp.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string render_grid(const ReversePlanePartition& rpp, const std::vector<Cell>& marked) {
    const Grid rows = rpp.rows();
    std::size_t width = 1;
    for (const auto& row : rows) {
        for (Entry e : row) width = std::max(width, std::to_string(e).size());
    }
    auto is_marked = [&](Cell u) {
        return std::find(marked.begin(), marked.end(), u) != marked.end();
    };
    std::string out;
    for (int i = 1; i <= rpp.shape().length(); ++i) {
        std::string line;
        for (int j = 1; j <= rpp.shape().part(i); ++j) {
            std::string s = std::to_string(rows[static_cast<std::size_t>(i - 1)]
                                               [static_cast<std::size_t>(j - 1)]);
            s.insert(0, width - s.size(), ' ');
            line += is_marked({i, j}) ? "[" + s + "]" : " " + s + " ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string report_json(const CheckReport& report) {
    json j;
    j["check"] = report.check;
    j["shape"] = report.shape;
    j["bound"] = report.bound;
    j["status"] = report.ok ? "ok" : "disagree";
    j["cases"] = report.cases;
    j["discrepancy"] = report.ok ? json() : json(report.discrepancy);
    return j.dump();
}

}  // namespace rimhook::io
