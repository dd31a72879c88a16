#pragma once

#include "triconflict/trisection.hpp"

namespace triconflict {

// Agents trisected against a strategy X (a set of issues).
AgentTrisection trisect_agents_smz(const SituationTable &t, const IssueSet &X);
AgentTrisection trisect_agents_fqw(const SituationTable &t, const IssueSet &X,
                                   const Thresholds &th);
AgentTrisection trisect_agents_generic(const SituationTable &t, const IssueSet &X,
                                       const BoundEvaluation &accept,
                                       const BoundEvaluation &reject,
                                       ModelSpec model);

// Issues trisected against an agent group Y.
IssueTrisection trisect_issues_smz(const SituationTable &t, const AgentSet &Y);
IssueTrisection trisect_issues_fqw(const SituationTable &t, const AgentSet &Y,
                                   const Thresholds &th);
IssueTrisection trisect_issues_generic(const SituationTable &t, const AgentSet &Y,
                                       const BoundEvaluation &accept,
                                       const BoundEvaluation &reject,
                                       ModelSpec model);

// The two halves a trisection composes from: which elements the acceptance
// (resp. rejection) evaluation designates. Degree evaluations require a
// nonempty subject.
AgentSplit two_way_accept_agents(const SituationTable &t,
                                 const BoundEvaluation &accept);
AgentSplit two_way_reject_agents(const SituationTable &t,
                                 const BoundEvaluation &reject);
IssueSplit two_way_accept_issues(const SituationTable &t,
                                 const BoundEvaluation &accept);
IssueSplit two_way_reject_issues(const SituationTable &t,
                                 const BoundEvaluation &reject);

} // namespace triconflict
