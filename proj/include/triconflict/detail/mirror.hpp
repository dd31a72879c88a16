#pragma once

#include "triconflict/models.hpp"
#include "triconflict/rough.hpp"

// The two analyses are mirror images of each other: agents judged through
// f± against a strategy, issues judged through g± against an agent group.
// A Side bundles one orientation's accessors, model runs and splits so the
// audit and report layers can be written once and instantiated twice.
namespace triconflict::detail {

template <typename Dim>
std::vector<std::string> ids_of(const ElementSet<Dim> &s,
                                const std::vector<std::string> &names) {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(names[i]); });
    return out;
}

template <typename Dim>
std::string render_set(const ElementSet<Dim> &s,
                       const std::vector<std::string> &names) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first)
            out += ", ";
        out += names[i];
        first = false;
    });
    return out + "}";
}

struct AgentSide {
    using ElemDim = AgentDim;
    using SubjDim = IssueDim;
    static constexpr UniverseKind universe = UniverseKind::agents;

    const SituationTable &t;

    std::size_t elem_count() const { return t.agent_count(); }
    std::size_t subj_width() const { return t.issue_count(); }
    const std::vector<std::string> &elem_names() const { return t.agents(); }
    const std::vector<std::string> &subj_names() const { return t.issues(); }
    const IssueSet &plus(std::size_t i) const { return t.f_plus(i); }
    const IssueSet &minus(std::size_t i) const { return t.f_minus(i); }

    IssueSet subject_from_ids(const std::vector<std::string> &ids) const {
        IssueSet s(t.issue_count());
        for (const auto &id : ids)
            s.set(t.issue_index(id));
        return s;
    }

    AgentTrisection smz(const IssueSet &X) const { return trisect_agents_smz(t, X); }
    AgentTrisection fqw(const IssueSet &X, const Thresholds &th) const {
        return trisect_agents_fqw(t, X, th);
    }
    AgentTrisection generic_bool(
        const IssueSet &X,
        RejectionReading r = RejectionReading::theorem_consistent) const {
        return trisect_agents_generic(t, X, nu_a_bound(t, X), nu_r_bound(t, X, r),
                                      ModelSpec::generic_inclusion(universe, r));
    }
    AgentTrisection generic_degree(const IssueSet &X, const Thresholds &th) const {
        return trisect_agents_generic(t, X, mu_a_bound(t, X, th.alpha),
                                      mu_r_bound(t, X, th.beta),
                                      ModelSpec::generic_degree(universe, th));
    }

    AgentSplit accept_bool(const IssueSet &X) const {
        return two_way_accept_agents(t, nu_a_bound(t, X));
    }
    AgentSplit reject_bool(
        const IssueSet &X,
        RejectionReading r = RejectionReading::theorem_consistent) const {
        return two_way_reject_agents(t, nu_r_bound(t, X, r));
    }
    AgentSplit accept_degree(const IssueSet &X, const Thresholds &th) const {
        return two_way_accept_agents(t, mu_a_bound(t, X, th.alpha));
    }
    AgentSplit reject_degree(const IssueSet &X, const Thresholds &th) const {
        return two_way_reject_agents(t, mu_r_bound(t, X, th.beta));
    }

    Rational accept_value(std::size_t i, const IssueSet &X) const {
        return mu_a(t, i, X);
    }
    Rational reject_value(std::size_t i, const IssueSet &X) const {
        return mu_r(t, i, X);
    }

    AgentSet upper(Sign s, const IssueSet &X) const {
        return apr_f(t, s, Bound::upper, X);
    }
};

struct IssueSide {
    using ElemDim = IssueDim;
    using SubjDim = AgentDim;
    static constexpr UniverseKind universe = UniverseKind::issues;

    const SituationTable &t;

    std::size_t elem_count() const { return t.issue_count(); }
    std::size_t subj_width() const { return t.agent_count(); }
    const std::vector<std::string> &elem_names() const { return t.issues(); }
    const std::vector<std::string> &subj_names() const { return t.agents(); }
    const AgentSet &plus(std::size_t i) const { return t.g_plus(i); }
    const AgentSet &minus(std::size_t i) const { return t.g_minus(i); }

    AgentSet subject_from_ids(const std::vector<std::string> &ids) const {
        AgentSet s(t.agent_count());
        for (const auto &id : ids)
            s.set(t.agent_index(id));
        return s;
    }

    IssueTrisection smz(const AgentSet &Y) const { return trisect_issues_smz(t, Y); }
    IssueTrisection fqw(const AgentSet &Y, const Thresholds &th) const {
        return trisect_issues_fqw(t, Y, th);
    }
    IssueTrisection generic_bool(
        const AgentSet &Y,
        RejectionReading r = RejectionReading::theorem_consistent) const {
        return trisect_issues_generic(t, Y, omega_a_bound(t, Y),
                                      omega_r_bound(t, Y, r),
                                      ModelSpec::generic_inclusion(universe, r));
    }
    IssueTrisection generic_degree(const AgentSet &Y, const Thresholds &th) const {
        return trisect_issues_generic(t, Y, psi_a_bound(t, Y, th.alpha),
                                      psi_r_bound(t, Y, th.beta),
                                      ModelSpec::generic_degree(universe, th));
    }

    IssueSplit accept_bool(const AgentSet &Y) const {
        return two_way_accept_issues(t, omega_a_bound(t, Y));
    }
    IssueSplit reject_bool(
        const AgentSet &Y,
        RejectionReading r = RejectionReading::theorem_consistent) const {
        return two_way_reject_issues(t, omega_r_bound(t, Y, r));
    }
    IssueSplit accept_degree(const AgentSet &Y, const Thresholds &th) const {
        return two_way_accept_issues(t, psi_a_bound(t, Y, th.alpha));
    }
    IssueSplit reject_degree(const AgentSet &Y, const Thresholds &th) const {
        return two_way_reject_issues(t, psi_r_bound(t, Y, th.beta));
    }

    Rational accept_value(std::size_t i, const AgentSet &Y) const {
        return psi_a(t, i, Y);
    }
    Rational reject_value(std::size_t i, const AgentSet &Y) const {
        return psi_r(t, i, Y);
    }

    IssueSet upper(Sign s, const AgentSet &Y) const {
        return apr_g(t, s, Bound::upper, Y);
    }
};

} // namespace triconflict::detail
