#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using triconflict::Attitude;
using triconflict::SituationTable;

Ids universe_agents(const SituationTable &t) {
    return Ids(t.agents().begin(), t.agents().end());
}

Ids universe_issues(const SituationTable &t) {
    return Ids(t.issues().begin(), t.issues().end());
}

Ids f_plus(const SituationTable &t, const std::string &agent) {
    Ids out;
    for (const auto &issue : t.issues())
        if (t.at(agent, issue) == Attitude::favorable)
            out.insert(issue);
    return out;
}

Ids f_minus(const SituationTable &t, const std::string &agent) {
    Ids out;
    for (const auto &issue : t.issues())
        if (t.at(agent, issue) == Attitude::opposed)
            out.insert(issue);
    return out;
}

Ids g_plus(const SituationTable &t, const std::string &issue) {
    Ids out;
    for (const auto &agent : t.agents())
        if (t.at(agent, issue) == Attitude::favorable)
            out.insert(agent);
    return out;
}

Ids g_minus(const SituationTable &t, const std::string &issue) {
    Ids out;
    for (const auto &agent : t.agents())
        if (t.at(agent, issue) == Attitude::opposed)
            out.insert(agent);
    return out;
}

bool subset(const Ids &a, const Ids &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Ids inter(const Ids &a, const Ids &b) {
    Ids out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

Ids diff(const Ids &a, const Ids &b) {
    Ids out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

Tri smz_agents(const SituationTable &t, const Ids &X) {
    Ids lower_plus, lower_minus;
    for (const auto &x : t.agents()) {
        if (subset(f_plus(t, x), X))
            lower_plus.insert(x);
        if (subset(f_minus(t, x), X))
            lower_minus.insert(x);
    }
    Tri tri;
    tri.pos = diff(lower_plus, lower_minus);
    tri.neg = diff(lower_minus, lower_plus);
    tri.bnd = diff(diff(universe_agents(t), tri.pos), tri.neg);
    return tri;
}

Tri smz_issues(const SituationTable &t, const Ids &Y) {
    Ids lower_plus, lower_minus;
    for (const auto &c : t.issues()) {
        if (subset(g_plus(t, c), Y))
            lower_plus.insert(c);
        if (subset(g_minus(t, c), Y))
            lower_minus.insert(c);
    }
    Tri tri;
    tri.pos = diff(lower_plus, lower_minus);
    tri.neg = diff(lower_minus, lower_plus);
    tri.bnd = diff(diff(universe_issues(t), tri.pos), tri.neg);
    return tri;
}

Tri fqw_agents(const SituationTable &t, const Ids &X, Frac alpha, Frac beta) {
    Tri tri;
    const long long m = static_cast<long long>(X.size());
    for (const auto &x : t.agents()) {
        const long long ka = static_cast<long long>(inter(f_plus(t, x), X).size());
        const long long kr = static_cast<long long>(inter(f_minus(t, x), X).size());
        const bool accept = frac_gt(ka, m, alpha);
        const bool reject = frac_gt(kr, m, beta);
        if (accept && !reject)
            tri.pos.insert(x);
        else if (reject && !accept)
            tri.neg.insert(x);
        else
            tri.bnd.insert(x);
    }
    return tri;
}

Tri fqw_issues(const SituationTable &t, const Ids &Y, Frac alpha, Frac beta) {
    Tri tri;
    const long long m = static_cast<long long>(Y.size());
    for (const auto &c : t.issues()) {
        const long long ka = static_cast<long long>(inter(g_plus(t, c), Y).size());
        const long long kr = static_cast<long long>(inter(g_minus(t, c), Y).size());
        const bool accept = frac_gt(ka, m, alpha);
        const bool reject = frac_gt(kr, m, beta);
        if (accept && !reject)
            tri.pos.insert(c);
        else if (reject && !accept)
            tri.neg.insert(c);
        else
            tri.bnd.insert(c);
    }
    return tri;
}

Ids apr_f(const SituationTable &t, char sign, bool lower, const Ids &X) {
    Ids out;
    for (const auto &x : t.agents()) {
        const Ids img = sign == '+' ? f_plus(t, x) : f_minus(t, x);
        if (lower ? subset(img, X) : !inter(img, X).empty())
            out.insert(x);
    }
    return out;
}

Ids apr_g(const SituationTable &t, char sign, bool lower, const Ids &Y) {
    Ids out;
    for (const auto &c : t.issues()) {
        const Ids img = sign == '+' ? g_plus(t, c) : g_minus(t, c);
        if (lower ? subset(img, Y) : !inter(img, Y).empty())
            out.insert(c);
    }
    return out;
}

std::vector<Ids> agreement_blocks(const SituationTable &t, const Ids &B) {
    std::map<std::string, Ids> groups;
    for (const auto &x : t.agents()) {
        std::string key;
        for (const auto &c : t.issues())
            if (B.count(c))
                key += std::to_string(static_cast<int>(t.at(x, c))) + "|";
        groups[key].insert(x);
    }
    std::vector<Ids> blocks;
    for (auto &[key, members] : groups)
        blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(),
              [&](const Ids &a, const Ids &b) {
                  const auto first_index = [&](const Ids &ids) {
                      for (std::size_t i = 0; i < t.agents().size(); ++i)
                          if (ids.count(t.agents()[i]))
                              return i;
                      return t.agents().size();
                  };
                  return first_index(a) < first_index(b);
              });
    return blocks;
}

Tri prob_regions(const SituationTable &t, const Ids &B, const Ids &X,
                 Frac alpha, Frac beta) {
    Tri tri;
    for (const auto &block : agreement_blocks(t, B)) {
        const long long num = static_cast<long long>(inter(block, X).size());
        const long long den = static_cast<long long>(block.size());
        Ids *region = nullptr;
        if (frac_ge(num, den, alpha))
            region = &tri.pos;
        else if (frac_le(num, den, beta))
            region = &tri.neg;
        else
            region = &tri.bnd;
        region->insert(block.begin(), block.end());
    }
    return tri;
}

} // namespace oracle
