#pragma once

#include <vector>

#include "triconflict/trisection.hpp"

namespace triconflict {

//! A serial set-valued map from one universe into another: every element has
//! a nonempty image and every target element appears in some image. Carries
//! the two approximation operators:
//!   lower(X) = elements whose whole image lies inside X
//!   upper(X) = elements whose image meets X
//! which are dual: upper(X) = complement(lower(complement(X))).
template <typename FromDim, typename ToDim>
class CompatibilityRelation {
public:
    CompatibilityRelation(std::vector<ElementSet<ToDim>> images,
                          std::size_t to_width)
        : images_(std::move(images)), to_width_(to_width) {
        if (images_.empty())
            throw DomainError("relation has an empty source universe");
        ElementSet<ToDim> covered(to_width_);
        for (const auto &img : images_) {
            if (img.width() != to_width_)
                throw DomainError("relation image over the wrong universe");
            if (img.empty())
                throw DomainError("relation is not serial: an element has an empty image");
        }
        for (const auto &img : images_)
            covered = covered | img;
        if (covered != ElementSet<ToDim>::full(to_width_))
            throw DomainError("relation is not serial: a target element is never hit");
    }

    std::size_t from_width() const { return images_.size(); }
    std::size_t to_width() const { return to_width_; }
    const ElementSet<ToDim> &image(std::size_t i) const { return images_.at(i); }

    ElementSet<FromDim> apr_lower(const ElementSet<ToDim> &X) const {
        ElementSet<FromDim> out(from_width());
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i].is_subset_of(X))
                out.set(i);
        return out;
    }

    ElementSet<FromDim> apr_upper(const ElementSet<ToDim> &X) const {
        ElementSet<FromDim> out(from_width());
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i].intersects(X))
                out.set(i);
        return out;
    }

private:
    std::vector<ElementSet<ToDim>> images_;
    std::size_t to_width_;
};

enum class Sign { plus, minus };
enum class Bound { lower, upper };

//! Approximations through the derived maps directly. Unlike the serial
//! relation above, f±/g± images may be empty: an empty image is a subset of
//! every X (so the element is always in the lower approximation) and meets
//! no X (never in the upper one).
AgentSet apr_f(const SituationTable &t, Sign sign, Bound bound, const IssueSet &X);
IssueSet apr_g(const SituationTable &t, Sign sign, Bound bound, const AgentSet &Y);

//! Agents grouped by agreement on every issue in B; B = ∅ yields one block.
//! Blocks are ordered by their lowest agent index.
class Partition {
public:
    explicit Partition(std::vector<AgentSet> blocks);

    const std::vector<AgentSet> &blocks() const { return blocks_; }
    std::size_t width() const { return width_; }
    const AgentSet &block_of(std::size_t agent) const;

private:
    std::vector<AgentSet> blocks_;
    std::size_t width_;
};

Partition equivalence_classes(const SituationTable &t, const IssueSet &B);

//! Probability-graded regions of an agent set X, conditioned on the blocks
//! of agreement over B: a block lands in pos when |block ∩ X| / |block| is
//! at least alpha, in neg when at most beta, in bnd strictly between. Both
//! comparisons are inclusive, unlike the inclusion-degree model's strict
//! intervals. Requires 0 <= beta < alpha <= 1.
Trisection<AgentDim, AgentDim> prob_regions(const SituationTable &t,
                                            const IssueSet &B, const AgentSet &X,
                                            const Rational &alpha,
                                            const Rational &beta);

} // namespace triconflict
