#include "triconflict/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace triconflict {

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_row(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        cells.push_back(strip(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

SituationTable parse_csv(std::string_view source) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t nl = source.find('\n', start);
        std::string_view line = source.substr(
            start, nl == std::string_view::npos ? std::string_view::npos
                                                : nl - start);
        if (!strip(line).empty())
            lines.emplace_back(line);
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    if (lines.empty())
        throw TableError("empty table source");

    auto header = split_csv_row(lines[0]);
    if (!header[0].empty() && header[0] != "agent")
        throw TableError("first header cell must be empty or 'agent', got '" +
                         header[0] + "'");
    std::vector<std::string> issues(header.begin() + 1, header.end());
    if (issues.empty())
        throw TableError("header lists no issues");

    std::vector<std::string> agents;
    std::vector<Attitude> values;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        auto cells = split_csv_row(lines[r]);
        if (cells.empty() || cells[0].empty())
            throw TableError("row " + std::to_string(r + 1) + ": missing agent id");
        const std::string &agent = cells[0];
        if (cells.size() != issues.size() + 1)
            throw TableError("row '" + agent + "': expected " +
                             std::to_string(issues.size()) + " values, got " +
                             std::to_string(cells.size() - 1));
        agents.push_back(agent);
        for (std::size_t j = 1; j < cells.size(); ++j) {
            try {
                values.push_back(parse_attitude(cells[j]));
            } catch (const TableError &e) {
                throw TableError("cell (" + agent + ", " + issues[j - 1] +
                                 "): " + e.what());
            }
        }
    }
    return SituationTable(std::move(agents), std::move(issues), std::move(values));
}

SituationTable parse_json(std::string_view source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::exception &e) {
        throw TableError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("agents") || !doc.contains("issues") ||
        !doc.contains("values"))
        throw TableError("JSON table needs 'agents', 'issues' and 'values'");

    const auto ids = [](const nlohmann::json &arr, const char *what) {
        if (!arr.is_array())
            throw TableError(std::string("'") + what + "' must be an array");
        std::vector<std::string> out;
        for (const auto &v : arr) {
            if (!v.is_string())
                throw TableError(std::string(what) + " ids must be strings");
            out.push_back(v.get<std::string>());
        }
        return out;
    };
    auto agents = ids(doc["agents"], "agents");
    auto issues = ids(doc["issues"], "issues");

    const auto &rows = doc["values"];
    if (!rows.is_array() || rows.size() != agents.size())
        throw TableError("'values' must have one row per agent");
    std::vector<Attitude> values;
    for (std::size_t x = 0; x < rows.size(); ++x) {
        const auto &row = rows[x];
        if (!row.is_array() || row.size() != issues.size())
            throw TableError("row '" + agents[x] + "': expected " +
                             std::to_string(issues.size()) + " values");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number_integer())
                throw TableError("cell (" + agents[x] + ", " + issues[c] +
                                 "): not an integer");
            int v = row[c].get<int>();
            if (v < -1 || v > 1)
                throw TableError("cell (" + agents[x] + ", " + issues[c] +
                                 "): invalid attitude " + std::to_string(v));
            values.push_back(static_cast<Attitude>(v));
        }
    }
    return SituationTable(std::move(agents), std::move(issues), std::move(values));
}

} // namespace

SituationTable parse_table(std::string_view source, TableFormat format) {
    return format == TableFormat::csv ? parse_csv(source) : parse_json(source);
}

std::string emit_table(const SituationTable &table, TableFormat format) {
    if (format == TableFormat::csv) {
        std::ostringstream out;
        out << "agent";
        for (const auto &c : table.issues())
            out << ',' << c;
        out << '\n';
        for (std::size_t x = 0; x < table.agent_count(); ++x) {
            out << table.agent_name(x);
            for (std::size_t c = 0; c < table.issue_count(); ++c)
                out << ',' << to_string(table.at(x, c));
            out << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["agents"] = table.agents();
    doc["issues"] = table.issues();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < table.agent_count(); ++x) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < table.issue_count(); ++c)
            row.push_back(static_cast<int>(table.at(x, c)));
        rows.push_back(std::move(row));
    }
    doc["values"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TableError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SituationTable load_table(const std::filesystem::path &path) {
    TableFormat format =
        path.extension() == ".json" ? TableFormat::json : TableFormat::csv;
    return parse_table(read_file(path), format);
}

} // namespace triconflict
