#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triconflict/models.hpp"
#include "triconflict/rough.hpp"

namespace triconflict {

//! Exhaustive per-table checks. Each property enumerates every subject of
//! the relevant universe (all 2^n subsets, in ascending mask order) and
//! compares results computed through deliberately separate code paths:
//!
//!   partition      every model's trisection covers its universe exactly once
//!   thm34 / thm44  set-difference form == complement-intersection form
//!   thm35 / thm45  set-difference form == uniform-inclusion form
//!   compose        model trisection == composition of its two-way splits
//!   reduce-smz     qualitative model == generic model, Boolean pair
//!   reduce-fqw     quantitative model == generic model, degree pair
//!   upper-duality  image-meets-subject == not-contained-in-complement,
//!                  for all four derived maps
//!
//! thm34/thm35 range over strategies (agent side), thm44/thm45 over agent
//! groups (issue side); the remaining properties cover both universes.
enum class AuditProperty {
    partition,
    thm34,
    thm35,
    thm44,
    thm45,
    compose,
    reduce_smz,
    reduce_fqw,
    upper_duality,
};

const std::vector<AuditProperty> &all_audit_properties();
std::string_view to_string(AuditProperty p);
//! Accepts the spelling to_string produces ("reduce-smz", "thm34", ...).
std::optional<AuditProperty> parse_property(std::string_view name);

struct Counterexample {
    std::string subject; //!< rendered subject, e.g. "{c1, c3}"
    std::string detail;  //!< which check failed, with both sides rendered
};

struct AuditResult {
    AuditProperty property;
    //! Number of (subject, check) pairs examined, summed over the models or
    //! operators the property exercises.
    std::size_t subjects_checked = 0;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

//! Thresholds feed the degree-model checks (partition, compose, reduce-fqw);
//! the purely qualitative properties ignore them. Throws TableError when a
//! universe that must be enumerated exceeds the 64-element mask cap.
AuditResult run_audit(const SituationTable &t, AuditProperty property,
                      const Thresholds &th);

std::vector<AuditResult> run_all_audits(const SituationTable &t,
                                        const Thresholds &th);

//! Element-wise partition check on raw region sets. Deliberately does not
//! share code with Trisection's constructor validation, so it also guards
//! against defects there; audits and tests feed it corrupted triples.
template <typename Dim>
std::optional<std::string> partition_violation(const ElementSet<Dim> &pos,
                                               const ElementSet<Dim> &neg,
                                               const ElementSet<Dim> &bnd) {
    if (neg.width() != pos.width() || bnd.width() != pos.width())
        return "regions span different universes";
    for (std::size_t i = 0; i < pos.width(); ++i) {
        const int hits = static_cast<int>(pos.test(i)) +
                         static_cast<int>(neg.test(i)) +
                         static_cast<int>(bnd.test(i));
        if (hits != 1)
            return "element #" + std::to_string(i) + " lies in " +
                   std::to_string(hits) + " regions";
    }
    return std::nullopt;
}

//! Visit every subset of a universe of the given width in ascending mask
//! order. Throws TableError past the 64-element cap.
template <typename Dim, typename F>
void for_each_subset(std::size_t width, F &&f) {
    if (width > kMaskWidthCap)
        throw TableError("universe of " + std::to_string(width) +
                         " elements exceeds the " +
                         std::to_string(kMaskWidthCap) +
                         "-element enumeration cap");
    const std::uint64_t last =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (std::uint64_t m = 0;; ++m) {
        f(ElementSet<Dim>::from_mask(width, m));
        if (m == last)
            break;
    }
}

} // namespace triconflict
