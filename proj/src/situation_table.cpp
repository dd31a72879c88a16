#include "triconflict/situation_table.hpp"

namespace triconflict {

namespace {

std::unordered_map<std::string, std::size_t>
build_lookup(const std::vector<std::string> &ids, const char *what) {
    std::unordered_map<std::string, std::size_t> lookup;
    lookup.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i].empty())
            throw TableError(std::string("empty ") + what + " id");
        if (!lookup.emplace(ids[i], i).second)
            throw TableError(std::string("duplicate ") + what + " id '" + ids[i] + "'");
    }
    return lookup;
}

} // namespace

SituationTable::SituationTable(std::vector<std::string> agents,
                               std::vector<std::string> issues,
                               std::vector<Attitude> values)
    : agents_(std::move(agents)), issues_(std::move(issues)),
      values_(std::move(values)) {
    if (agents_.empty())
        throw TableError("table has no agents");
    if (issues_.empty())
        throw TableError("table has no issues");
    if (values_.size() != agents_.size() * issues_.size())
        throw TableError("table has " + std::to_string(values_.size()) +
                         " cells, expected " +
                         std::to_string(agents_.size() * issues_.size()));
    agent_lookup_ = build_lookup(agents_, "agent");
    issue_lookup_ = build_lookup(issues_, "issue");

    f_plus_.assign(agent_count(), IssueSet(issue_count()));
    f_minus_.assign(agent_count(), IssueSet(issue_count()));
    g_plus_.assign(issue_count(), AgentSet(agent_count()));
    g_minus_.assign(issue_count(), AgentSet(agent_count()));
    for (std::size_t x = 0; x < agent_count(); ++x) {
        for (std::size_t c = 0; c < issue_count(); ++c) {
            switch (at(x, c)) {
            case Attitude::favorable:
                f_plus_[x].set(c);
                g_plus_[c].set(x);
                break;
            case Attitude::opposed:
                f_minus_[x].set(c);
                g_minus_[c].set(x);
                break;
            case Attitude::neutral:
                break;
            }
        }
    }
}

std::size_t SituationTable::agent_index(std::string_view id) const {
    auto it = agent_lookup_.find(std::string(id));
    if (it == agent_lookup_.end())
        throw UnknownIdError(std::string(id));
    return it->second;
}

std::size_t SituationTable::issue_index(std::string_view id) const {
    auto it = issue_lookup_.find(std::string(id));
    if (it == issue_lookup_.end())
        throw UnknownIdError(std::string(id));
    return it->second;
}

SituationTable SituationTable::transposed() const {
    std::vector<Attitude> values;
    values.reserve(values_.size());
    for (std::size_t c = 0; c < issue_count(); ++c)
        for (std::size_t x = 0; x < agent_count(); ++x)
            values.push_back(at(x, c));
    return SituationTable(issues_, agents_, std::move(values));
}

} // namespace triconflict
