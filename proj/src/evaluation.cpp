#include "triconflict/evaluation.hpp"

namespace triconflict {

namespace {

template <typename Dim>
Rational inclusion_degree(const ElementSet<Dim> &marked,
                          const ElementSet<Dim> &subject, const char *what) {
    if (subject.empty())
        throw DomainError(std::string("degree evaluation against an empty ") + what);
    return Rational(static_cast<long long>((marked & subject).count()),
                    static_cast<long long>(subject.count()));
}

template <typename Dim>
bool rejection_inclusion(const ElementSet<Dim> &opposed,
                         const ElementSet<Dim> &subject,
                         RejectionReading reading) {
    if (reading == RejectionReading::theorem_consistent)
        return opposed.is_subset_of(subject);
    return opposed.is_subset_of(subject.complement());
}

} // namespace

bool nu_a(const SituationTable &t, std::size_t agent, const IssueSet &X) {
    return t.f_plus(agent).is_subset_of(X);
}

bool nu_r(const SituationTable &t, std::size_t agent, const IssueSet &X,
          RejectionReading reading) {
    return rejection_inclusion(t.f_minus(agent), X, reading);
}

bool omega_a(const SituationTable &t, std::size_t issue, const AgentSet &Y) {
    return t.g_plus(issue).is_subset_of(Y);
}

bool omega_r(const SituationTable &t, std::size_t issue, const AgentSet &Y,
             RejectionReading reading) {
    return rejection_inclusion(t.g_minus(issue), Y, reading);
}

Rational mu_a(const SituationTable &t, std::size_t agent, const IssueSet &X) {
    return inclusion_degree(t.f_plus(agent), X, "strategy");
}

Rational mu_r(const SituationTable &t, std::size_t agent, const IssueSet &X) {
    return inclusion_degree(t.f_minus(agent), X, "strategy");
}

Rational psi_a(const SituationTable &t, std::size_t issue, const AgentSet &Y) {
    return inclusion_degree(t.g_plus(issue), Y, "agent group");
}

Rational psi_r(const SituationTable &t, std::size_t issue, const AgentSet &Y) {
    return inclusion_degree(t.g_minus(issue), Y, "agent group");
}

bool nu_a(const SituationTable &t, std::string_view agent, const IssueSet &X) {
    return nu_a(t, t.agent_index(agent), X);
}
bool nu_r(const SituationTable &t, std::string_view agent, const IssueSet &X,
          RejectionReading reading) {
    return nu_r(t, t.agent_index(agent), X, reading);
}
bool omega_a(const SituationTable &t, std::string_view issue, const AgentSet &Y) {
    return omega_a(t, t.issue_index(issue), Y);
}
bool omega_r(const SituationTable &t, std::string_view issue, const AgentSet &Y,
             RejectionReading reading) {
    return omega_r(t, t.issue_index(issue), Y, reading);
}
Rational mu_a(const SituationTable &t, std::string_view agent, const IssueSet &X) {
    return mu_a(t, t.agent_index(agent), X);
}
Rational mu_r(const SituationTable &t, std::string_view agent, const IssueSet &X) {
    return mu_r(t, t.agent_index(agent), X);
}
Rational psi_a(const SituationTable &t, std::string_view issue, const AgentSet &Y) {
    return psi_a(t, t.issue_index(issue), Y);
}
Rational psi_r(const SituationTable &t, std::string_view issue, const AgentSet &Y) {
    return psi_r(t, t.issue_index(issue), Y);
}

BoundEvaluation nu_a_bound(const SituationTable &t, IssueSet X) {
    return {[&t, X = std::move(X)](std::size_t x) {
                return EvaluationValue::verdict(nu_a(t, x, X));
            },
            EvaluationScale::boolean()};
}

BoundEvaluation nu_r_bound(const SituationTable &t, IssueSet X,
                           RejectionReading reading) {
    return {[&t, X = std::move(X), reading](std::size_t x) {
                return EvaluationValue::verdict(nu_r(t, x, X, reading));
            },
            EvaluationScale::boolean()};
}

BoundEvaluation omega_a_bound(const SituationTable &t, AgentSet Y) {
    return {[&t, Y = std::move(Y)](std::size_t c) {
                return EvaluationValue::verdict(omega_a(t, c, Y));
            },
            EvaluationScale::boolean()};
}

BoundEvaluation omega_r_bound(const SituationTable &t, AgentSet Y,
                              RejectionReading reading) {
    return {[&t, Y = std::move(Y), reading](std::size_t c) {
                return EvaluationValue::verdict(omega_r(t, c, Y, reading));
            },
            EvaluationScale::boolean()};
}

BoundEvaluation mu_a_bound(const SituationTable &t, IssueSet X, Rational alpha) {
    return {[&t, X = std::move(X)](std::size_t x) {
                return EvaluationValue::degree(mu_a(t, x, X));
            },
            EvaluationScale::above(std::move(alpha))};
}

BoundEvaluation mu_r_bound(const SituationTable &t, IssueSet X, Rational beta) {
    return {[&t, X = std::move(X)](std::size_t x) {
                return EvaluationValue::degree(mu_r(t, x, X));
            },
            EvaluationScale::above(std::move(beta))};
}

BoundEvaluation psi_a_bound(const SituationTable &t, AgentSet Y, Rational alpha) {
    return {[&t, Y = std::move(Y)](std::size_t c) {
                return EvaluationValue::degree(psi_a(t, c, Y));
            },
            EvaluationScale::above(std::move(alpha))};
}

BoundEvaluation psi_r_bound(const SituationTable &t, AgentSet Y, Rational beta) {
    return {[&t, Y = std::move(Y)](std::size_t c) {
                return EvaluationValue::degree(psi_r(t, c, Y));
            },
            EvaluationScale::above(std::move(beta))};
}

} // namespace triconflict
