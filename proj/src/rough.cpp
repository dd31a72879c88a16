#include "triconflict/rough.hpp"

#include <algorithm>
#include <map>

namespace triconflict {

AgentSet apr_f(const SituationTable &t, Sign sign, Bound bound, const IssueSet &X) {
    AgentSet out(t.agent_count());
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        const IssueSet &img = sign == Sign::plus ? t.f_plus(x) : t.f_minus(x);
        const bool hit = bound == Bound::lower ? img.is_subset_of(X) : img.intersects(X);
        if (hit)
            out.set(x);
    }
    return out;
}

IssueSet apr_g(const SituationTable &t, Sign sign, Bound bound, const AgentSet &Y) {
    IssueSet out(t.issue_count());
    for (std::size_t c = 0; c < t.issue_count(); ++c) {
        const AgentSet &img = sign == Sign::plus ? t.g_plus(c) : t.g_minus(c);
        const bool hit = bound == Bound::lower ? img.is_subset_of(Y) : img.intersects(Y);
        if (hit)
            out.set(c);
    }
    return out;
}

Partition::Partition(std::vector<AgentSet> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw PartitionError("partition has no blocks");
    width_ = blocks_.front().width();
    AgentSet seen(width_);
    for (const auto &b : blocks_) {
        if (b.width() != width_ || b.empty())
            throw PartitionError("partition block empty or over the wrong universe");
        if (seen.intersects(b))
            throw PartitionError("partition blocks overlap");
        seen = seen | b;
    }
    if (seen != AgentSet::full(width_))
        throw PartitionError("partition blocks do not cover the universe");
}

const AgentSet &Partition::block_of(std::size_t agent) const {
    for (const auto &b : blocks_)
        if (b.test(agent))
            return b;
    throw std::out_of_range("agent index out of range");
}

Partition equivalence_classes(const SituationTable &t, const IssueSet &B) {
    // Group agents by their value row restricted to B; map keys keep block
    // discovery independent of agent order, blocks are then sorted by their
    // lowest member so the result is deterministic.
    std::map<std::vector<Attitude>, AgentSet> groups;
    for (std::size_t x = 0; x < t.agent_count(); ++x) {
        std::vector<Attitude> key;
        key.reserve(B.count());
        B.for_each([&](std::size_t c) { key.push_back(t.at(x, c)); });
        auto [it, fresh] = groups.try_emplace(std::move(key), AgentSet(t.agent_count()));
        (void)fresh;
        it->second.set(x);
    }
    std::vector<AgentSet> blocks;
    blocks.reserve(groups.size());
    for (auto &[key, members] : groups)
        blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(), [](const AgentSet &a, const AgentSet &b) {
        return a.indices().front() < b.indices().front();
    });
    return Partition(std::move(blocks));
}

Trisection<AgentDim, AgentDim> prob_regions(const SituationTable &t,
                                            const IssueSet &B, const AgentSet &X,
                                            const Rational &alpha,
                                            const Rational &beta) {
    if (!(Rational(0) <= beta && beta < alpha && alpha <= Rational(1)))
        throw DomainError("need 0 <= beta < alpha <= 1, got alpha=" +
                          to_string(alpha) + " beta=" + to_string(beta));
    if (X.width() != t.agent_count())
        throw DomainError("agent set over the wrong universe");
    const Partition parts = equivalence_classes(t, B);
    AgentSet pos(t.agent_count()), neg(t.agent_count()), bnd(t.agent_count());
    for (const auto &block : parts.blocks()) {
        const Rational p(static_cast<long long>((block & X).count()),
                         static_cast<long long>(block.count()));
        AgentSet &region = p >= alpha ? pos : (p <= beta ? neg : bnd);
        region = region | block;
    }
    return Trisection<AgentDim, AgentDim>(
        std::move(pos), std::move(neg), std::move(bnd), X,
        ModelSpec::probabilistic(UniverseKind::agents));
}

} // namespace triconflict
