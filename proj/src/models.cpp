#include "triconflict/models.hpp"

namespace triconflict {

namespace {

// The two conflict analyses are mirror images: agents are judged by the
// issues they mark (f±, against a strategy), issues by the agents marking
// them (g±, against an agent group). A perspective names one of the two
// orientations so every model is written once.
struct AgentPerspective {
    using ElemDim = AgentDim;
    using SubjDim = IssueDim;
    static constexpr UniverseKind universe = UniverseKind::agents;

    const SituationTable &t;
    std::size_t size() const { return t.agent_count(); }
    const IssueSet &plus(std::size_t x) const { return t.f_plus(x); }
    const IssueSet &minus(std::size_t x) const { return t.f_minus(x); }
    const char *subject_name() const { return "strategy"; }
};

struct IssuePerspective {
    using ElemDim = IssueDim;
    using SubjDim = AgentDim;
    static constexpr UniverseKind universe = UniverseKind::issues;

    const SituationTable &t;
    std::size_t size() const { return t.issue_count(); }
    const AgentSet &plus(std::size_t c) const { return t.g_plus(c); }
    const AgentSet &minus(std::size_t c) const { return t.g_minus(c); }
    const char *subject_name() const { return "agent group"; }
};

template <typename P>
using Elems = ElementSet<typename P::ElemDim>;
template <typename P>
using Subj = ElementSet<typename P::SubjDim>;
template <typename P>
using Tri = Trisection<typename P::ElemDim, typename P::SubjDim>;

// Qualitative model, computed by its set-difference formulation: collect
// the elements whose plus (resp. minus) marks all lie inside the subject,
// then pos / neg are the two one-sided differences.
template <typename P>
Tri<P> smz(const P &p, const Subj<P> &subject) {
    Elems<P> lower_plus(p.size()), lower_minus(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.plus(i).is_subset_of(subject))
            lower_plus.set(i);
        if (p.minus(i).is_subset_of(subject))
            lower_minus.set(i);
    }
    auto pos = lower_plus - lower_minus;
    auto neg = lower_minus - lower_plus;
    auto bnd = (pos | neg).complement();
    return Tri<P>(std::move(pos), std::move(neg), std::move(bnd), subject,
                  ModelSpec{ModelFamily::smz, P::universe, std::nullopt,
                            std::nullopt, RejectionReading::theorem_consistent});
}

// Quantitative model: inclusion degrees |marks ∩ subject| / |subject| with
// strict designated intervals (alpha,1] and (beta,1]. Exact rational
// comparison, so degrees equal to a threshold land outside the interval.
template <typename P>
Tri<P> fqw(const P &p, const Subj<P> &subject, const Thresholds &th) {
    if (subject.empty())
        throw DomainError(std::string("inclusion-degree model needs a nonempty ") +
                          p.subject_name());
    const long long m = static_cast<long long>(subject.count());
    Elems<P> pos(p.size()), neg(p.size()), bnd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool accept =
            Rational(static_cast<long long>((p.plus(i) & subject).count()), m) >
            th.alpha;
        const bool reject =
            Rational(static_cast<long long>((p.minus(i) & subject).count()), m) >
            th.beta;
        if (accept && !reject)
            pos.set(i);
        else if (reject && !accept)
            neg.set(i);
        else
            bnd.set(i);
    }
    return Tri<P>(std::move(pos), std::move(neg), std::move(bnd), subject,
                  ModelSpec{ModelFamily::fqw, P::universe, std::nullopt, th,
                            RejectionReading::theorem_consistent});
}

template <typename P>
Tri<P> generic(const P &p, const Subj<P> &subject, const BoundEvaluation &accept,
               const BoundEvaluation &reject, ModelSpec model) {
    Elems<P> pos(p.size()), neg(p.size()), bnd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool a = accept.designated(i);
        const bool r = reject.designated(i);
        if (a && !r)
            pos.set(i);
        else if (r && !a)
            neg.set(i);
        else
            bnd.set(i);
    }
    return Tri<P>(std::move(pos), std::move(neg), std::move(bnd), subject,
                  std::move(model));
}

template <typename P>
TwoWaySplit<typename P::ElemDim> split(const P &p, const BoundEvaluation &eval,
                                       typename TwoWaySplit<typename P::ElemDim>::Kind kind) {
    Elems<P> in(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (eval.designated(i))
            in.set(i);
    auto out = in.complement();
    return TwoWaySplit<typename P::ElemDim>(std::move(in), std::move(out), kind);
}

} // namespace

AgentTrisection trisect_agents_smz(const SituationTable &t, const IssueSet &X) {
    return smz(AgentPerspective{t}, X);
}

AgentTrisection trisect_agents_fqw(const SituationTable &t, const IssueSet &X,
                                   const Thresholds &th) {
    return fqw(AgentPerspective{t}, X, th);
}

AgentTrisection trisect_agents_generic(const SituationTable &t, const IssueSet &X,
                                       const BoundEvaluation &accept,
                                       const BoundEvaluation &reject,
                                       ModelSpec model) {
    return generic(AgentPerspective{t}, X, accept, reject, std::move(model));
}

IssueTrisection trisect_issues_smz(const SituationTable &t, const AgentSet &Y) {
    return smz(IssuePerspective{t}, Y);
}

IssueTrisection trisect_issues_fqw(const SituationTable &t, const AgentSet &Y,
                                   const Thresholds &th) {
    return fqw(IssuePerspective{t}, Y, th);
}

IssueTrisection trisect_issues_generic(const SituationTable &t, const AgentSet &Y,
                                       const BoundEvaluation &accept,
                                       const BoundEvaluation &reject,
                                       ModelSpec model) {
    return generic(IssuePerspective{t}, Y, accept, reject, std::move(model));
}

AgentSplit two_way_accept_agents(const SituationTable &t,
                                 const BoundEvaluation &accept) {
    return split(AgentPerspective{t}, accept, AgentSplit::Kind::acceptance);
}

AgentSplit two_way_reject_agents(const SituationTable &t,
                                 const BoundEvaluation &reject) {
    return split(AgentPerspective{t}, reject, AgentSplit::Kind::rejection);
}

IssueSplit two_way_accept_issues(const SituationTable &t,
                                 const BoundEvaluation &accept) {
    return split(IssuePerspective{t}, accept, IssueSplit::Kind::acceptance);
}

IssueSplit two_way_reject_issues(const SituationTable &t,
                                 const BoundEvaluation &reject) {
    return split(IssuePerspective{t}, reject, IssueSplit::Kind::rejection);
}

} // namespace triconflict
