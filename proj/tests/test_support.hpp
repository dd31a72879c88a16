#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "triconflict/table_io.hpp"

namespace testutil {

inline std::filesystem::path fixture_path(const std::string &name) {
    return std::filesystem::path(TRICONFLICT_FIXTURE_DIR) / name;
}

//! The six-agent, five-issue table used throughout the unit tests.
inline const triconflict::SituationTable &mideast() {
    static const triconflict::SituationTable table = triconflict::load_table(fixture_path("mideast.csv"));
    return table;
}

//! Uniformly random table with 1..max_agents rows and 1..max_issues columns.
inline triconflict::SituationTable random_table(std::mt19937 &rng,
                                                std::size_t max_agents = 12,
                                                std::size_t max_issues = 10) {
    std::uniform_int_distribution<std::size_t> pick_agents(1, max_agents);
    std::uniform_int_distribution<std::size_t> pick_issues(1, max_issues);
    std::uniform_int_distribution<int> pick_cell(-1, 1);
    const std::size_t n = pick_agents(rng);
    const std::size_t m = pick_issues(rng);
    std::vector<std::string> agents;
    std::vector<std::string> issues;
    for (std::size_t i = 0; i < n; ++i) agents.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) issues.push_back("c" + std::to_string(j + 1));
    std::vector<triconflict::Attitude> values;
    values.reserve(n * m);
    for (std::size_t k = 0; k < n * m; ++k) values.push_back(static_cast<triconflict::Attitude>(pick_cell(rng)));
    return triconflict::SituationTable(agents, issues, values);
}

//! Random subset mask over a universe of `width` <= 64 elements.
inline std::uint64_t random_mask(std::mt19937 &rng, std::size_t width) {
    const std::uint64_t all = width >= 64 ? ~0ULL : (1ULL << width) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, all);
    return pick(rng);
}

} // namespace testutil
