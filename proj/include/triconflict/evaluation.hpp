#pragma once

#include <functional>

#include "triconflict/scale.hpp"
#include "triconflict/situation_table.hpp"

namespace triconflict {

//! The Boolean rejection evaluations exist in two readings. The
//! theorem-consistent one tests whether the opposed set lies inside the
//! subject (f-(x) ⊆ X, g-(c) ⊆ Y) and makes the set-inclusion pair reproduce
//! the qualitative model exactly. The as_printed variant tests inclusion in
//! the subject's complement instead; it is kept only so the difference can
//! be studied, and nothing else in the library uses it.
enum class RejectionReading { theorem_consistent, as_printed };

// Boolean pair over agents: accept iff every favored issue is in the
// strategy; reject iff every opposed issue is in the strategy.
bool nu_a(const SituationTable &t, std::size_t agent, const IssueSet &X);
bool nu_r(const SituationTable &t, std::size_t agent, const IssueSet &X,
          RejectionReading reading = RejectionReading::theorem_consistent);

// Boolean pair over issues, judged against an agent group.
bool omega_a(const SituationTable &t, std::size_t issue, const AgentSet &Y);
bool omega_r(const SituationTable &t, std::size_t issue, const AgentSet &Y,
             RejectionReading reading = RejectionReading::theorem_consistent);

// Degree pair over agents: |f±(x) ∩ X| / |X|. Throws DomainError when X is
// empty — the quotient is undefined there.
Rational mu_a(const SituationTable &t, std::size_t agent, const IssueSet &X);
Rational mu_r(const SituationTable &t, std::size_t agent, const IssueSet &X);

// Degree pair over issues: |g±(c) ∩ Y| / |Y|, Y nonempty.
Rational psi_a(const SituationTable &t, std::size_t issue, const AgentSet &Y);
Rational psi_r(const SituationTable &t, std::size_t issue, const AgentSet &Y);

// Id-based conveniences.
bool nu_a(const SituationTable &t, std::string_view agent, const IssueSet &X);
bool nu_r(const SituationTable &t, std::string_view agent, const IssueSet &X,
          RejectionReading reading = RejectionReading::theorem_consistent);
bool omega_a(const SituationTable &t, std::string_view issue, const AgentSet &Y);
bool omega_r(const SituationTable &t, std::string_view issue, const AgentSet &Y,
             RejectionReading reading = RejectionReading::theorem_consistent);
Rational mu_a(const SituationTable &t, std::string_view agent, const IssueSet &X);
Rational mu_r(const SituationTable &t, std::string_view agent, const IssueSet &X);
Rational psi_a(const SituationTable &t, std::string_view issue, const AgentSet &Y);
Rational psi_r(const SituationTable &t, std::string_view issue, const AgentSet &Y);

//! An evaluation bound to a table and subject, paired with the scale that
//! judges its values. The index argument ranges over whichever universe is
//! being trisected.
struct BoundEvaluation {
    std::function<EvaluationValue(std::size_t)> value;
    EvaluationScale scale;

    bool designated(std::size_t element) const {
        return scale.designated(value(element));
    }
};

// The standard pairs, packaged for the generic trisection engine.
BoundEvaluation nu_a_bound(const SituationTable &t, IssueSet X);
BoundEvaluation nu_r_bound(const SituationTable &t, IssueSet X,
                           RejectionReading reading = RejectionReading::theorem_consistent);
BoundEvaluation omega_a_bound(const SituationTable &t, AgentSet Y);
BoundEvaluation omega_r_bound(const SituationTable &t, AgentSet Y,
                              RejectionReading reading = RejectionReading::theorem_consistent);
BoundEvaluation mu_a_bound(const SituationTable &t, IssueSet X, Rational alpha);
BoundEvaluation mu_r_bound(const SituationTable &t, IssueSet X, Rational beta);
BoundEvaluation psi_a_bound(const SituationTable &t, AgentSet Y, Rational alpha);
BoundEvaluation psi_r_bound(const SituationTable &t, AgentSet Y, Rational beta);

} // namespace triconflict
