#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "triconflict/attitude.hpp"
#include "triconflict/element_set.hpp"

namespace triconflict {

//! An agents x issues matrix of attitudes, immutable after construction.
//!
//! Universe order is source order: agent i and issue j are the i-th row and
//! j-th column of whatever the table was built from, and every ElementSet
//! index refers back to that order. The four derived maps are computed once
//! up front:
//!   f_plus(x)  — issues agent x is favorable to      (row, +1 cells)
//!   f_minus(x) — issues agent x opposes              (row, -1 cells)
//!   g_plus(c)  — agents favorable to issue c         (column, +1 cells)
//!   g_minus(c) — agents opposed to issue c           (column, -1 cells)
class SituationTable {
public:
    //! values is row-major, one attitude per (agent, issue) pair.
    SituationTable(std::vector<std::string> agents,
                   std::vector<std::string> issues,
                   std::vector<Attitude> values);

    std::size_t agent_count() const { return agents_.size(); }
    std::size_t issue_count() const { return issues_.size(); }

    const std::vector<std::string> &agents() const { return agents_; }
    const std::vector<std::string> &issues() const { return issues_; }

    const std::string &agent_name(std::size_t i) const { return agents_.at(i); }
    const std::string &issue_name(std::size_t j) const { return issues_.at(j); }

    //! Throws UnknownIdError when the id is not in the table.
    std::size_t agent_index(std::string_view id) const;
    std::size_t issue_index(std::string_view id) const;

    Attitude at(std::size_t agent, std::size_t issue) const {
        return values_.at(agent * issue_count() + issue);
    }
    Attitude at(std::string_view agent, std::string_view issue) const {
        return at(agent_index(agent), issue_index(issue));
    }

    const IssueSet &f_plus(std::size_t agent) const { return f_plus_.at(agent); }
    const IssueSet &f_minus(std::size_t agent) const { return f_minus_.at(agent); }
    const AgentSet &g_plus(std::size_t issue) const { return g_plus_.at(issue); }
    const AgentSet &g_minus(std::size_t issue) const { return g_minus_.at(issue); }

    const IssueSet &f_plus(std::string_view agent) const {
        return f_plus_.at(agent_index(agent));
    }
    const IssueSet &f_minus(std::string_view agent) const {
        return f_minus_.at(agent_index(agent));
    }
    const AgentSet &g_plus(std::string_view issue) const {
        return g_plus_.at(issue_index(issue));
    }
    const AgentSet &g_minus(std::string_view issue) const {
        return g_minus_.at(issue_index(issue));
    }

    //! The same data with agents and issues swapped: cell (c, x) of the
    //! result is cell (x, c) of this table.
    SituationTable transposed() const;

    friend bool operator==(const SituationTable &a, const SituationTable &b) {
        return a.agents_ == b.agents_ && a.issues_ == b.issues_ &&
               a.values_ == b.values_;
    }

private:
    std::vector<std::string> agents_;
    std::vector<std::string> issues_;
    std::vector<Attitude> values_;
    std::unordered_map<std::string, std::size_t> agent_lookup_;
    std::unordered_map<std::string, std::size_t> issue_lookup_;
    std::vector<IssueSet> f_plus_, f_minus_;
    std::vector<AgentSet> g_plus_, g_minus_;
};

} // namespace triconflict
