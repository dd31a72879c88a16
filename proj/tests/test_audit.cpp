#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "triconflict/audit.hpp"

using namespace triconflict;

namespace {

const Thresholds kHalf{Rational(1, 2), Rational(1, 2)};

} // namespace

TEST_CASE("property names round-trip through parse and to_string") {
    for (const auto p : all_audit_properties())
        CHECK(parse_property(to_string(p)) == p);
    CHECK(parse_property("thm34") == AuditProperty::thm34);
    CHECK(parse_property("reduce-smz") == AuditProperty::reduce_smz);
    CHECK(parse_property("upper-duality") == AuditProperty::upper_duality);
    CHECK_FALSE(parse_property("thm99").has_value());
    CHECK_FALSE(parse_property("").has_value());
    CHECK(all_audit_properties().size() == 9);
}

TEST_CASE("every audit passes on the bundled table") {
    const auto &t = testutil::mideast();
    for (const auto p : all_audit_properties()) {
        const auto result = run_audit(t, p, kHalf);
        INFO("property ", to_string(p));
        CHECK(result.passed());
        CHECK(result.counterexamples.empty());
        CHECK(result.property == p);
    }
}

TEST_CASE("audits count their subject-check pairs exhaustively") {
    const auto &t = testutil::mideast();
    // 6 agents and 5 issues: 32 strategies (31 nonempty), 64 agent groups
    // (63 nonempty).
    auto checked = [&](AuditProperty p) {
        return run_audit(t, p, kHalf).subjects_checked;
    };
    CHECK(checked(AuditProperty::thm34) == 32);
    CHECK(checked(AuditProperty::thm35) == 32);
    CHECK(checked(AuditProperty::thm44) == 64);
    CHECK(checked(AuditProperty::thm45) == 64);
    // reduce-smz covers both universes; reduce-fqw skips the empty subject.
    CHECK(checked(AuditProperty::reduce_smz) == 32 + 64);
    CHECK(checked(AuditProperty::reduce_fqw) == 31 + 63);
    // compose: set-inclusion on every subject, degrees on nonempty ones.
    CHECK(checked(AuditProperty::compose) == (32 + 31) + (64 + 63));
    // partition: two Boolean models on every subject, two degree models on
    // nonempty ones, per universe.
    CHECK(checked(AuditProperty::partition) == (2 * 32 + 2 * 31) + (2 * 64 + 2 * 63));
    // upper-duality: both signs of both derived maps.
    CHECK(checked(AuditProperty::upper_duality) == 2 * 32 + 2 * 64);
}

TEST_CASE("run_all_audits covers every property once") {
    const auto &t = testutil::mideast();
    const auto results = run_all_audits(t, kHalf);
    REQUIRE(results.size() == all_audit_properties().size());
    for (std::size_t k = 0; k < results.size(); ++k) {
        CHECK(results[k].property == all_audit_properties()[k]);
        CHECK(results[k].passed());
    }
}

TEST_CASE("audits pass on random tables and assorted thresholds") {
    std::mt19937 rng(7u);
    const Thresholds pool[] = {
        kHalf,
        Thresholds(Rational(0), Rational(0)),
        Thresholds(Rational(3, 4), Rational(1, 4)),
        Thresholds(Rational(1, 3), Rational(2, 3)),
    };
    for (int round = 0; round < 8; ++round) {
        const auto t = testutil::random_table(rng, 7, 6);
        const auto &th = pool[round % 4];
        for (const auto &result : run_all_audits(t, th)) {
            INFO("property ", to_string(result.property), " on a ",
                 t.agent_count(), "x", t.issue_count(), " table");
            CHECK(result.passed());
        }
    }
}

TEST_CASE("the element-wise partition check flags corrupted regions") {
    const auto pos = AgentSet::of(6, {1, 2, 4});
    const auto neg = AgentSet::of(6, {0});
    const auto bnd = AgentSet::of(6, {3, 5});
    CHECK_FALSE(partition_violation(pos, neg, bnd).has_value());

    // Duplicate an element across regions.
    auto neg_dup = neg;
    neg_dup.set(4);
    const auto overlap = partition_violation(pos, neg_dup, bnd);
    REQUIRE(overlap.has_value());
    CHECK(*overlap == "element #4 lies in 2 regions");

    // Drop an element from all regions.
    auto bnd_hole = bnd;
    bnd_hole.reset(3);
    const auto hole = partition_violation(pos, neg, bnd_hole);
    REQUIRE(hole.has_value());
    CHECK(*hole == "element #3 lies in 0 regions");

    CHECK(partition_violation(pos, neg, AgentSet::of(5, {3})).has_value());
}

TEST_CASE("subset enumeration is ascending and capped") {
    std::vector<std::uint64_t> masks;
    for_each_subset<IssueDim>(3, [&](const IssueSet &s) { masks.push_back(s.mask()); });
    CHECK(masks == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});

    std::size_t n = 0;
    for_each_subset<IssueDim>(0, [&](const IssueSet &) { ++n; });
    CHECK(n == 1); // just the empty set

    CHECK_THROWS_AS(for_each_subset<IssueDim>(65, [](const IssueSet &) {}),
                    TableError);
    CHECK_THROWS_WITH(for_each_subset<IssueDim>(65, [](const IssueSet &) {}),
                      "universe of 65 elements exceeds the 64-element enumeration cap");
}

TEST_CASE("audits refuse universes past the enumeration cap") {
    // 65 issues: strategy enumeration is impossible, so the agent-side
    // properties throw. (Set algebra itself still works at that width.)
    std::vector<std::string> issues;
    for (int j = 0; j < 65; ++j)
        issues.push_back("c" + std::to_string(j + 1));
    std::vector<Attitude> row(65, Attitude::favorable);
    row[0] = Attitude::opposed;
    const SituationTable wide({"x1"}, issues, row);
    CHECK_THROWS_AS(run_audit(wide, AuditProperty::thm34, kHalf), TableError);
    CHECK_THROWS_AS(run_audit(wide, AuditProperty::partition, kHalf), TableError);
    // The issue-side theorem forms only enumerate agent groups, and a single
    // agent is fine.
    CHECK(run_audit(wide, AuditProperty::thm44, kHalf).passed());
}

TEST_CASE("audit results expose pass/fail through counterexamples") {
    AuditResult r{AuditProperty::thm34, 10, {}};
    CHECK(r.passed());
    r.counterexamples.push_back({"{c1}", "pos differs"});
    CHECK_FALSE(r.passed());
}
