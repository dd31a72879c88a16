#pragma once

#include <set>
#include <string>
#include <vector>

#include "triconflict/situation_table.hpp"

// Brute-force reference implementations, kept deliberately independent of
// the code they check: everything works on std::set<std::string> id sets,
// reads raw cells one at a time, and compares fractions by integer
// cross-multiplication. No bitsets, no cached maps, no engine.
namespace oracle {

using Ids = std::set<std::string>;

struct Frac {
    long long num = 0;
    long long den = 1;
};

inline bool frac_gt(long long num, long long den, const Frac &f) {
    return num * f.den > f.num * den;
}
inline bool frac_ge(long long num, long long den, const Frac &f) {
    return num * f.den >= f.num * den;
}
inline bool frac_le(long long num, long long den, const Frac &f) {
    return num * f.den <= f.num * den;
}

struct Tri {
    Ids pos, neg, bnd;
};

Ids universe_agents(const triconflict::SituationTable &t);
Ids universe_issues(const triconflict::SituationTable &t);

Ids f_plus(const triconflict::SituationTable &t, const std::string &agent);
Ids f_minus(const triconflict::SituationTable &t, const std::string &agent);
Ids g_plus(const triconflict::SituationTable &t, const std::string &issue);
Ids g_minus(const triconflict::SituationTable &t, const std::string &issue);

bool subset(const Ids &a, const Ids &b);
Ids inter(const Ids &a, const Ids &b);
Ids diff(const Ids &a, const Ids &b);

Tri smz_agents(const triconflict::SituationTable &t, const Ids &X);
Tri smz_issues(const triconflict::SituationTable &t, const Ids &Y);
Tri fqw_agents(const triconflict::SituationTable &t, const Ids &X, Frac alpha,
               Frac beta);
Tri fqw_issues(const triconflict::SituationTable &t, const Ids &Y, Frac alpha,
               Frac beta);

Ids apr_f(const triconflict::SituationTable &t, char sign, bool lower,
          const Ids &X);
Ids apr_g(const triconflict::SituationTable &t, char sign, bool lower,
          const Ids &Y);

std::vector<Ids> agreement_blocks(const triconflict::SituationTable &t,
                                  const Ids &B);
Tri prob_regions(const triconflict::SituationTable &t, const Ids &B,
                 const Ids &X, Frac alpha, Frac beta);

//! Bridge: an ElementSet as an id set, for comparing against oracle output.
template <typename Dim>
Ids to_ids(const triconflict::ElementSet<Dim> &s,
           const std::vector<std::string> &names) {
    Ids out;
    s.for_each([&](std::size_t i) { out.insert(names[i]); });
    return out;
}

} // namespace oracle
