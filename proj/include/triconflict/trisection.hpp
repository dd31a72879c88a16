#pragma once

#include <optional>
#include <string_view>

#include "triconflict/element_set.hpp"
#include "triconflict/evaluation.hpp"
#include "triconflict/scale.hpp"

namespace triconflict {

enum class UniverseKind { agents, issues };

inline std::string_view to_string(UniverseKind u) {
    return u == UniverseKind::agents ? "agents" : "issues";
}

//! smz is the qualitative set-inclusion model, fqw the quantitative
//! inclusion-degree model, generic the evaluation-pair model both reduce to.
//! probabilistic tags the attribute-conditioned probability regions; it is
//! internal and never reachable from the CLI.
enum class ModelFamily { generic, smz, fqw, probabilistic };

inline std::string_view to_string(ModelFamily f) {
    switch (f) {
    case ModelFamily::generic: return "generic";
    case ModelFamily::smz: return "smz";
    case ModelFamily::fqw: return "fqw";
    case ModelFamily::probabilistic: return "probabilistic";
    }
    return "?";
}

//! Which concrete evaluation pair a generic-model run uses.
enum class EvaluationFamily { set_inclusion, inclusion_degree };

inline std::string_view to_string(EvaluationFamily f) {
    return f == EvaluationFamily::set_inclusion ? "set-inclusion"
                                                : "inclusion-degree";
}

//! Identifies how a trisection was produced. Thresholds are present exactly
//! for fqw and the inclusion-degree generic pair; the rejection reading only
//! matters for the set-inclusion generic pair.
struct ModelSpec {
    ModelFamily family;
    UniverseKind universe;
    std::optional<EvaluationFamily> pair;
    std::optional<Thresholds> thresholds;
    RejectionReading reading = RejectionReading::theorem_consistent;

    static ModelSpec smz(UniverseKind u) {
        return {ModelFamily::smz, u, std::nullopt, std::nullopt,
                RejectionReading::theorem_consistent};
    }
    static ModelSpec fqw(UniverseKind u, Thresholds th) {
        return {ModelFamily::fqw, u, std::nullopt, std::move(th),
                RejectionReading::theorem_consistent};
    }
    static ModelSpec generic_inclusion(
        UniverseKind u,
        RejectionReading reading = RejectionReading::theorem_consistent) {
        return {ModelFamily::generic, u, EvaluationFamily::set_inclusion,
                std::nullopt, reading};
    }
    static ModelSpec generic_degree(UniverseKind u, Thresholds th) {
        return {ModelFamily::generic, u, EvaluationFamily::inclusion_degree,
                std::move(th), RejectionReading::theorem_consistent};
    }
    static ModelSpec probabilistic(UniverseKind u) {
        return {ModelFamily::probabilistic, u, std::nullopt, std::nullopt,
                RejectionReading::theorem_consistent};
    }
};

//! One half of a trisection: the elements an evaluation designates (in) and
//! the rest (out). Checked to be an exact two-part cover of the universe.
template <typename Dim>
class TwoWaySplit {
public:
    enum class Kind { acceptance, rejection };

    TwoWaySplit(ElementSet<Dim> in, ElementSet<Dim> out, Kind kind)
        : in_(std::move(in)), out_(std::move(out)), kind_(kind) {
        if (in_.width() != out_.width() || in_.intersects(out_) ||
            (in_ | out_) != ElementSet<Dim>::full(in_.width()))
            throw PartitionError("two-way split does not bipartition its universe");
    }

    const ElementSet<Dim> &in() const { return in_; }
    const ElementSet<Dim> &out() const { return out_; }
    Kind kind() const { return kind_; }

private:
    ElementSet<Dim> in_, out_;
    Kind kind_;
};

using AgentSplit = TwoWaySplit<AgentDim>;
using IssueSplit = TwoWaySplit<IssueDim>;

//! A validated three-part cover of a universe, tagged with the subject it
//! was computed against and the model that produced it. Construction throws
//! PartitionError unless pos, neg and bnd are pairwise disjoint and jointly
//! exhaustive, so an invalid trisection can never circulate.
template <typename ElemDim, typename SubjDim>
class Trisection {
public:
    Trisection(ElementSet<ElemDim> pos, ElementSet<ElemDim> neg,
               ElementSet<ElemDim> bnd, ElementSet<SubjDim> subject,
               ModelSpec model)
        : pos_(std::move(pos)), neg_(std::move(neg)), bnd_(std::move(bnd)),
          subject_(std::move(subject)), model_(std::move(model)) {
        validate_partition(pos_, neg_, bnd_);
    }

    //! The partition check, usable on raw region sets (and by audits, which
    //! must not trust this constructor).
    static void validate_partition(const ElementSet<ElemDim> &pos,
                                   const ElementSet<ElemDim> &neg,
                                   const ElementSet<ElemDim> &bnd) {
        const std::size_t n = pos.width();
        if (neg.width() != n || bnd.width() != n)
            throw PartitionError("regions span different universes");
        if (pos.intersects(neg) || pos.intersects(bnd) || neg.intersects(bnd))
            throw PartitionError("regions overlap");
        if ((pos | neg | bnd) != ElementSet<ElemDim>::full(n))
            throw PartitionError("regions do not cover the universe");
    }

    const ElementSet<ElemDim> &pos() const { return pos_; }
    const ElementSet<ElemDim> &neg() const { return neg_; }
    const ElementSet<ElemDim> &bnd() const { return bnd_; }
    const ElementSet<SubjDim> &subject() const { return subject_; }
    const ModelSpec &model() const { return model_; }

    bool same_regions(const Trisection &o) const {
        return pos_ == o.pos_ && neg_ == o.neg_ && bnd_ == o.bnd_;
    }

private:
    ElementSet<ElemDim> pos_, neg_, bnd_;
    ElementSet<SubjDim> subject_;
    ModelSpec model_;
};

//! Agents trisected against a strategy (a set of issues).
using AgentTrisection = Trisection<AgentDim, IssueDim>;
//! Issues trisected against an agent group.
using IssueTrisection = Trisection<IssueDim, AgentDim>;

//! Fold an acceptance split and a rejection split over the same universe
//! into a trisection: pos = accepted and not rejected, neg = rejected and
//! not accepted, bnd = the rest (both or neither).
template <typename ElemDim, typename SubjDim>
Trisection<ElemDim, SubjDim>
compose_three_way(const TwoWaySplit<ElemDim> &accept,
                  const TwoWaySplit<ElemDim> &reject,
                  ElementSet<SubjDim> subject, ModelSpec model) {
    if (accept.in().width() != reject.in().width())
        throw DomainError("two-way splits cover different universes");
    if (accept.kind() != TwoWaySplit<ElemDim>::Kind::acceptance ||
        reject.kind() != TwoWaySplit<ElemDim>::Kind::rejection)
        throw DomainError("compose needs one acceptance and one rejection split");
    auto pos = accept.in() & reject.out();
    auto neg = accept.out() & reject.in();
    auto bnd = (pos | neg).complement();
    return Trisection<ElemDim, SubjDim>(std::move(pos), std::move(neg),
                                        std::move(bnd), std::move(subject),
                                        std::move(model));
}

} // namespace triconflict
