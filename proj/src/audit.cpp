#include "triconflict/audit.hpp"

#include "triconflict/detail/mirror.hpp"

namespace triconflict {

namespace {

using detail::render_set;

template <typename Side>
using SubjSet = ElementSet<typename Side::SubjDim>;
template <typename Side>
using ElemSet = ElementSet<typename Side::ElemDim>;
template <typename Side>
using Tri = Trisection<typename Side::ElemDim, typename Side::SubjDim>;

template <typename Side, typename F>
void for_each_subject(const Side &side, F &&f) {
    for_each_subset<typename Side::SubjDim>(side.subj_width(), std::forward<F>(f));
}

template <typename Side>
void compare_regions(const Side &side, const SubjSet<Side> &subject,
                     const std::string &what, const Tri<Side> &lhs,
                     const ElemSet<Side> &pos, const ElemSet<Side> &neg,
                     const ElemSet<Side> &bnd, AuditResult &result) {
    const auto &names = side.elem_names();
    const auto mismatch = [&](const char *region, const ElemSet<Side> &a,
                              const ElemSet<Side> &b) {
        result.counterexamples.push_back(
            {render_set(subject, side.subj_names()),
             std::string(region) + " differs under " + what + ": " +
                 render_set(a, names) + " vs " + render_set(b, names)});
    };
    if (lhs.pos() != pos)
        mismatch("pos", lhs.pos(), pos);
    if (lhs.neg() != neg)
        mismatch("neg", lhs.neg(), neg);
    if (lhs.bnd() != bnd)
        mismatch("bnd", lhs.bnd(), bnd);
}

template <typename Side>
void audit_partition(const Side &side, const Thresholds &th, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        const auto check = [&](const char *model, const Tri<Side> &tri) {
            ++result.subjects_checked;
            if (auto violation = partition_violation(tri.pos(), tri.neg(), tri.bnd()))
                result.counterexamples.push_back(
                    {render_set(subject, side.subj_names()),
                     std::string(model) + ": " + *violation});
        };
        check("smz", side.smz(subject));
        check("generic set-inclusion", side.generic_bool(subject));
        if (!subject.empty()) {
            check("fqw", side.fqw(subject, th));
            check("generic inclusion-degree", side.generic_degree(subject, th));
        }
    });
}

// Difference form vs the complement-intersection form:
//   pos = {i : plus(i) ⊆ S} ∩ {i : minus(i) ∩ S^C ≠ ∅}
//   neg = {i : minus(i) ⊆ S} ∩ {i : plus(i) ∩ S^C ≠ ∅}
//   bnd = pos^C ∩ neg^C
template <typename Side>
void audit_complement_intersection(const Side &side, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        ++result.subjects_checked;
        const auto tri = side.smz(subject);
        const auto comp = subject.complement();
        ElemSet<Side> pos(side.elem_count()), neg(side.elem_count());
        for (std::size_t i = 0; i < side.elem_count(); ++i) {
            if (side.plus(i).is_subset_of(subject) && side.minus(i).intersects(comp))
                pos.set(i);
            if (side.minus(i).is_subset_of(subject) && side.plus(i).intersects(comp))
                neg.set(i);
        }
        const auto bnd = pos.complement() & neg.complement();
        compare_regions(side, subject, "the complement-intersection form", tri,
                        pos, neg, bnd, result);
    });
}

// Difference form vs the uniform-inclusion form:
//   pos = {i : plus(i) ⊆ S ∧ ¬(minus(i) ⊆ S)}
//   neg = {i : minus(i) ⊆ S ∧ ¬(plus(i) ⊆ S)}
//   bnd = {i : both inclusions ∨ neither}
template <typename Side>
void audit_uniform_inclusion(const Side &side, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        ++result.subjects_checked;
        const auto tri = side.smz(subject);
        ElemSet<Side> pos(side.elem_count()), neg(side.elem_count()),
            bnd(side.elem_count());
        for (std::size_t i = 0; i < side.elem_count(); ++i) {
            const bool a = side.plus(i).is_subset_of(subject);
            const bool r = side.minus(i).is_subset_of(subject);
            if (a && !r)
                pos.set(i);
            else if (r && !a)
                neg.set(i);
            else
                bnd.set(i);
        }
        compare_regions(side, subject, "the uniform-inclusion form", tri, pos,
                        neg, bnd, result);
    });
}

template <typename Side>
void audit_compose(const Side &side, const Thresholds &th, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        const auto check = [&](const std::string &model, const Tri<Side> &tri,
                               const TwoWaySplit<typename Side::ElemDim> &accept,
                               const TwoWaySplit<typename Side::ElemDim> &reject) {
            ++result.subjects_checked;
            const auto composed =
                compose_three_way(accept, reject, subject, tri.model());
            compare_regions(side, subject, "composition (" + model + ")", tri,
                            composed.pos(), composed.neg(), composed.bnd(),
                            result);
        };
        check("smz", side.smz(subject), side.accept_bool(subject),
              side.reject_bool(subject));
        if (!subject.empty())
            check("fqw", side.fqw(subject, th), side.accept_degree(subject, th),
                  side.reject_degree(subject, th));
    });
}

template <typename Side>
void audit_reduce_smz(const Side &side, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        ++result.subjects_checked;
        const auto tri = side.smz(subject);
        const auto gen = side.generic_bool(subject);
        compare_regions(side, subject, "the generic Boolean pair", tri,
                        gen.pos(), gen.neg(), gen.bnd(), result);
    });
}

template <typename Side>
void audit_reduce_fqw(const Side &side, const Thresholds &th, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        if (subject.empty())
            return;
        ++result.subjects_checked;
        const auto tri = side.fqw(subject, th);
        const auto gen = side.generic_degree(subject, th);
        compare_regions(side, subject, "the generic degree pair", tri, gen.pos(),
                        gen.neg(), gen.bnd(), result);
    });
}

// upper(S) computed by image-meets-subject must equal the reconstruction
// {i : ¬(image(i) ⊆ S^C)}, for both signs.
template <typename Side>
void audit_upper_duality(const Side &side, AuditResult &result) {
    for_each_subject(side, [&](const SubjSet<Side> &subject) {
        const auto comp = subject.complement();
        for (Sign sign : {Sign::plus, Sign::minus}) {
            ++result.subjects_checked;
            const auto direct = side.upper(sign, subject);
            ElemSet<Side> reconstructed(side.elem_count());
            for (std::size_t i = 0; i < side.elem_count(); ++i) {
                const auto &img = sign == Sign::plus ? side.plus(i) : side.minus(i);
                if (!img.is_subset_of(comp))
                    reconstructed.set(i);
            }
            if (direct != reconstructed)
                result.counterexamples.push_back(
                    {render_set(subject, side.subj_names()),
                     std::string("upper approximation (") +
                         (sign == Sign::plus ? "plus" : "minus") +
                         ") differs: " + render_set(direct, side.elem_names()) +
                         " vs " + render_set(reconstructed, side.elem_names())});
        }
    });
}

} // namespace

const std::vector<AuditProperty> &all_audit_properties() {
    static const std::vector<AuditProperty> all = {
        AuditProperty::partition,  AuditProperty::thm34,
        AuditProperty::thm35,      AuditProperty::thm44,
        AuditProperty::thm45,      AuditProperty::compose,
        AuditProperty::reduce_smz, AuditProperty::reduce_fqw,
        AuditProperty::upper_duality,
    };
    return all;
}

std::string_view to_string(AuditProperty p) {
    switch (p) {
    case AuditProperty::partition: return "partition";
    case AuditProperty::thm34: return "thm34";
    case AuditProperty::thm35: return "thm35";
    case AuditProperty::thm44: return "thm44";
    case AuditProperty::thm45: return "thm45";
    case AuditProperty::compose: return "compose";
    case AuditProperty::reduce_smz: return "reduce-smz";
    case AuditProperty::reduce_fqw: return "reduce-fqw";
    case AuditProperty::upper_duality: return "upper-duality";
    }
    return "?";
}

std::optional<AuditProperty> parse_property(std::string_view name) {
    for (AuditProperty p : all_audit_properties())
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

AuditResult run_audit(const SituationTable &t, AuditProperty property,
                      const Thresholds &th) {
    AuditResult result{property, 0, {}};
    const detail::AgentSide agents{t};
    const detail::IssueSide issues{t};
    switch (property) {
    case AuditProperty::partition:
        audit_partition(agents, th, result);
        audit_partition(issues, th, result);
        break;
    case AuditProperty::thm34:
        audit_complement_intersection(agents, result);
        break;
    case AuditProperty::thm35:
        audit_uniform_inclusion(agents, result);
        break;
    case AuditProperty::thm44:
        audit_complement_intersection(issues, result);
        break;
    case AuditProperty::thm45:
        audit_uniform_inclusion(issues, result);
        break;
    case AuditProperty::compose:
        audit_compose(agents, th, result);
        audit_compose(issues, th, result);
        break;
    case AuditProperty::reduce_smz:
        audit_reduce_smz(agents, result);
        audit_reduce_smz(issues, result);
        break;
    case AuditProperty::reduce_fqw:
        audit_reduce_fqw(agents, th, result);
        audit_reduce_fqw(issues, th, result);
        break;
    case AuditProperty::upper_duality:
        audit_upper_duality(agents, result);
        audit_upper_duality(issues, result);
        break;
    }
    return result;
}

std::vector<AuditResult> run_all_audits(const SituationTable &t,
                                        const Thresholds &th) {
    std::vector<AuditResult> results;
    results.reserve(all_audit_properties().size());
    for (AuditProperty p : all_audit_properties())
        results.push_back(run_audit(t, p, th));
    return results;
}

} // namespace triconflict
