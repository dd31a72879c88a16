#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "triconflict/situation_table.hpp"

namespace triconflict {

enum class TableFormat { csv, json };

//! CSV layout: a header row whose first cell is empty or "agent" followed by
//! issue ids, then one row per agent (agent id, then one attitude per issue).
//! JSON layout: {"agents": [...], "issues": [...], "values": [[...], ...]}
//! with row-major integer values in {-1, 0, 1}.
//! Errors name the offending row, cell or id.
SituationTable parse_table(std::string_view source, TableFormat format);

//! Emission is canonical: attitudes spelled "+1"/"0"/"-1" in CSV, integers
//! in JSON (two-space indent, trailing newline). parse(emit(t)) == t.
std::string emit_table(const SituationTable &table, TableFormat format);

//! Reads the whole file; format chosen by extension (".json" vs anything else).
SituationTable load_table(const std::filesystem::path &path);

//! Raw file bytes, for fingerprinting. Throws TableError when unreadable.
std::string read_file(const std::filesystem::path &path);

} // namespace triconflict
