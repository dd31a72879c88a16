#include <doctest.h>

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "test_support.hpp"
#include "triconflict/table_io.hpp"

using namespace triconflict;
using oracle::Ids;

namespace {

// The bundled six-agent, five-issue table, row-major.
constexpr int kCells[6][5] = {
    {-1, +1, +1, +1, +1}, // x1
    {+1, 0, -1, -1, -1},  // x2
    {+1, -1, -1, -1, 0},  // x3
    {0, -1, +1, 0, -1},   // x4
    {+1, -1, -1, -1, -1}, // x5
    {0, +1, -1, 0, +1},   // x6
};

} // namespace

TEST_CASE("bundled fixture parses to the published matrix") {
    const auto &t = testutil::mideast();
    REQUIRE(t.agent_count() == 6);
    REQUIRE(t.issue_count() == 5);
    CHECK(t.agents() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "x6"});
    CHECK(t.issues() == std::vector<std::string>{"c1", "c2", "c3", "c4", "c5"});
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(static_cast<int>(t.at(x, c)) == kCells[x][c]);
    CHECK(t.at("x4", "c3") == Attitude::favorable);
    CHECK(t.at("x6", "c4") == Attitude::neutral);
    CHECK(t.at("x1", "c1") == Attitude::opposed);
}

TEST_CASE("id lookup resolves source order and rejects unknown ids") {
    const auto &t = testutil::mideast();
    CHECK(t.agent_index("x1") == 0);
    CHECK(t.agent_index("x6") == 5);
    CHECK(t.issue_index("c5") == 4);
    CHECK(t.agent_name(2) == "x3");
    CHECK(t.issue_name(0) == "c1");
    CHECK_THROWS_AS((void)t.agent_index("x9"), UnknownIdError);
    CHECK_THROWS_AS((void)t.issue_index("x1"), UnknownIdError);
    CHECK_THROWS_WITH((void)t.agent_index("zz"), "unknown id 'zz'");
}

TEST_CASE("derived issue sets per agent match the hand-computed values") {
    const auto &t = testutil::mideast();
    const auto &cs = t.issues();
    auto fp = [&](const char *x) { return oracle::to_ids(t.f_plus(x), cs); };
    auto fm = [&](const char *x) { return oracle::to_ids(t.f_minus(x), cs); };

    CHECK(fp("x1") == Ids{"c2", "c3", "c4", "c5"});
    CHECK(fp("x2") == Ids{"c1"});
    CHECK(fp("x3") == Ids{"c1"});
    CHECK(fp("x4") == Ids{"c3"});
    CHECK(fp("x5") == Ids{"c1"});
    CHECK(fp("x6") == Ids{"c2", "c5"});

    CHECK(fm("x1") == Ids{"c1"});
    CHECK(fm("x2") == Ids{"c3", "c4", "c5"});
    CHECK(fm("x3") == Ids{"c2", "c3", "c4"});
    CHECK(fm("x4") == Ids{"c2", "c5"});
    CHECK(fm("x5") == Ids{"c2", "c3", "c4", "c5"});
    CHECK(fm("x6") == Ids{"c3"});
}

TEST_CASE("derived agent sets per issue match the hand-computed values") {
    const auto &t = testutil::mideast();
    const auto &xs = t.agents();
    auto gp = [&](const char *c) { return oracle::to_ids(t.g_plus(c), xs); };
    auto gm = [&](const char *c) { return oracle::to_ids(t.g_minus(c), xs); };

    CHECK(gp("c1") == Ids{"x2", "x3", "x5"});
    CHECK(gp("c2") == Ids{"x1", "x6"});
    CHECK(gp("c3") == Ids{"x1", "x4"});
    CHECK(gp("c4") == Ids{"x1"});
    CHECK(gp("c5") == Ids{"x1", "x6"});

    CHECK(gm("c1") == Ids{"x1"});
    CHECK(gm("c2") == Ids{"x3", "x4", "x5"});
    CHECK(gm("c3") == Ids{"x2", "x3", "x5", "x6"});
    CHECK(gm("c4") == Ids{"x2", "x3", "x5"});
    CHECK(gm("c5") == Ids{"x2", "x4", "x5"});
}

TEST_CASE("derived maps agree with cell-by-cell scans on random tables") {
    std::mt19937 rng(1u);
    for (int round = 0; round < 25; ++round) {
        const auto t = testutil::random_table(rng);
        for (const auto &x : t.agents()) {
            CHECK(oracle::to_ids(t.f_plus(x), t.issues()) == oracle::f_plus(t, x));
            CHECK(oracle::to_ids(t.f_minus(x), t.issues()) == oracle::f_minus(t, x));
            // Favorable and opposed issues never overlap.
            CHECK_FALSE(t.f_plus(x).intersects(t.f_minus(x)));
        }
        for (const auto &c : t.issues()) {
            CHECK(oracle::to_ids(t.g_plus(c), t.agents()) == oracle::g_plus(t, c));
            CHECK(oracle::to_ids(t.g_minus(c), t.agents()) == oracle::g_minus(t, c));
        }
    }
}

TEST_CASE("each row and column splits into favorable, opposed and neutral parts") {
    auto check_table = [](const SituationTable &t) {
        for (std::size_t x = 0; x < t.agent_count(); ++x) {
            IssueSet neutral(t.issue_count());
            for (std::size_t c = 0; c < t.issue_count(); ++c)
                if (t.at(x, c) == Attitude::neutral)
                    neutral.set(c);
            const auto &fp = t.f_plus(x);
            const auto &fm = t.f_minus(x);
            CHECK_FALSE(fp.intersects(fm));
            CHECK_FALSE(fp.intersects(neutral));
            CHECK_FALSE(fm.intersects(neutral));
            CHECK((fp | fm | neutral) == IssueSet::full(t.issue_count()));
        }
        for (std::size_t c = 0; c < t.issue_count(); ++c) {
            AgentSet neutral(t.agent_count());
            for (std::size_t x = 0; x < t.agent_count(); ++x)
                if (t.at(x, c) == Attitude::neutral)
                    neutral.set(x);
            const auto &gp = t.g_plus(c);
            const auto &gm = t.g_minus(c);
            CHECK_FALSE(gp.intersects(gm));
            CHECK_FALSE(gp.intersects(neutral));
            CHECK_FALSE(gm.intersects(neutral));
            CHECK((gp | gm | neutral) == AgentSet::full(t.agent_count()));
        }
    };
    check_table(testutil::mideast());
    std::mt19937 rng(7u);
    for (int round = 0; round < 20; ++round)
        check_table(testutil::random_table(rng));
}

TEST_CASE("transposing swaps the two derived map families") {
    const auto &t = testutil::mideast();
    const auto tt = t.transposed();
    REQUIRE(tt.agent_count() == 5);
    REQUIRE(tt.issue_count() == 6);
    CHECK(tt.agents() == t.issues());
    CHECK(tt.issues() == t.agents());
    for (const auto &c : t.issues()) {
        CHECK(oracle::to_ids(tt.f_plus(c), tt.issues()) ==
              oracle::to_ids(t.g_plus(c), t.agents()));
        CHECK(oracle::to_ids(tt.f_minus(c), tt.issues()) ==
              oracle::to_ids(t.g_minus(c), t.agents()));
    }
    for (const auto &x : t.agents()) {
        CHECK(oracle::to_ids(tt.g_plus(x), tt.agents()) ==
              oracle::to_ids(t.f_plus(x), t.issues()));
    }
    CHECK(tt.transposed() == t);
    CHECK(tt.at("c3", "x4") == t.at("x4", "c3"));
}

TEST_CASE("construction validates shape and ids") {
    using V = std::vector<Attitude>;
    const Attitude p = Attitude::favorable;
    CHECK_THROWS_AS(SituationTable({}, {"c1"}, {}), TableError);
    CHECK_THROWS_AS(SituationTable({"x1"}, {}, {}), TableError);
    CHECK_THROWS_AS(SituationTable({"x1"}, {"c1"}, V{p, p}), TableError);
    CHECK_THROWS_AS(SituationTable({"x1", "x1"}, {"c1"}, V{p, p}), TableError);
    CHECK_THROWS_AS(SituationTable({"x1"}, {"c1", "c1"}, V{p, p}), TableError);
    CHECK_THROWS_AS(SituationTable({""}, {"c1"}, V{p}), TableError);
    CHECK_THROWS_WITH(SituationTable({"x1", "x1"}, {"c1"}, V{p, p}),
                      "duplicate agent id 'x1'");
}

TEST_CASE("csv parsing reports the offending row or cell") {
    CHECK_THROWS_WITH(parse_table("", TableFormat::csv), "empty table source");
    CHECK_THROWS_WITH(parse_table("agent\nx1\n", TableFormat::csv),
                      "header lists no issues");
    CHECK_THROWS_WITH(parse_table("who,c1\nx1,+1\n", TableFormat::csv),
                      "first header cell must be empty or 'agent', got 'who'");
    CHECK_THROWS_WITH(parse_table("agent,c1,c2\nx1,+1\n", TableFormat::csv),
                      "row 'x1': expected 2 values, got 1");
    CHECK_THROWS_AS(parse_table("agent,c1\nx1,+2\n", TableFormat::csv), TableError);
    CHECK_THROWS_WITH(parse_table("agent,c1\nx1,+2\n", TableFormat::csv),
                      "cell (x1, c1): invalid attitude '+2' (expected +1, 1, 0 or -1)");
    CHECK_THROWS_AS(parse_table("agent,c1\nx1,+1\nx1,0\n", TableFormat::csv),
                    TableError);
    CHECK_THROWS_AS(parse_table(",c1\n,+1\n", TableFormat::csv), TableError);
}

TEST_CASE("csv parsing tolerates whitespace and an anonymous corner") {
    const auto t = parse_table(" , c1 ,\tc2\r\nx1 , +1 , 0\nx2,1,-1\n",
                               TableFormat::csv);
    CHECK(t.agents() == std::vector<std::string>{"x1", "x2"});
    CHECK(t.issues() == std::vector<std::string>{"c1", "c2"});
    CHECK(t.at("x1", "c1") == Attitude::favorable);
    CHECK(t.at("x1", "c2") == Attitude::neutral);
    CHECK(t.at("x2", "c1") == Attitude::favorable); // "1" means "+1"
    CHECK(t.at("x2", "c2") == Attitude::opposed);
}

TEST_CASE("json parsing accepts the object form and reports bad cells") {
    const char *good = R"({"agents":["a","b"],"issues":["p","q"],"values":[[1,0],[-1,1]]})";
    const auto t = parse_table(good, TableFormat::json);
    CHECK(t.agent_count() == 2);
    CHECK(t.at("b", "p") == Attitude::opposed);

    CHECK_THROWS_WITH(parse_table("[1,2]", TableFormat::json),
                      "JSON table needs 'agents', 'issues' and 'values'");
    CHECK_THROWS_AS(parse_table("{", TableFormat::json), TableError);
    CHECK_THROWS_WITH(
        parse_table(R"({"agents":["a"],"issues":["p"],"values":[[2]]})",
                    TableFormat::json),
        "cell (a, p): invalid attitude 2");
    CHECK_THROWS_WITH(
        parse_table(R"({"agents":["a"],"issues":["p"],"values":[[0.5]]})",
                    TableFormat::json),
        "cell (a, p): not an integer");
    CHECK_THROWS_WITH(
        parse_table(R"({"agents":["a"],"issues":["p"],"values":[]})",
                    TableFormat::json),
        "'values' must have one row per agent");
    CHECK_THROWS_WITH(
        parse_table(R"({"agents":["a"],"issues":["p","q"],"values":[[1]]})",
                    TableFormat::json),
        "row 'a': expected 2 values");
}

TEST_CASE("emitting and reparsing is the identity in both formats") {
    std::mt19937 rng(2u);
    std::vector<SituationTable> tables{testutil::mideast()};
    for (int round = 0; round < 10; ++round)
        tables.push_back(testutil::random_table(rng));
    for (const auto &t : tables) {
        CHECK(parse_table(emit_table(t, TableFormat::csv), TableFormat::csv) == t);
        CHECK(parse_table(emit_table(t, TableFormat::json), TableFormat::json) == t);
    }
}

TEST_CASE("the bundled fixture is already in canonical csv form") {
    const auto path = testutil::fixture_path("mideast.csv");
    CHECK(emit_table(load_table(path), TableFormat::csv) == read_file(path));
}

TEST_CASE("load_table picks the format from the extension") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path();
    const auto &t = testutil::mideast();

    const auto json_path = dir / "triconflict_roundtrip.json";
    {
        std::ofstream out(json_path);
        out << emit_table(t, TableFormat::json);
    }
    CHECK(load_table(json_path) == t);
    fs::remove(json_path);

    CHECK_THROWS_AS(load_table(dir / "triconflict_does_not_exist.csv"), TableError);
}

TEST_CASE("attitude parsing and printing") {
    CHECK(parse_attitude("+1") == Attitude::favorable);
    CHECK(parse_attitude("1") == Attitude::favorable);
    CHECK(parse_attitude("0") == Attitude::neutral);
    CHECK(parse_attitude("-1") == Attitude::opposed);
    CHECK_THROWS_AS(parse_attitude("+"), TableError);
    CHECK_THROWS_AS(parse_attitude("2"), TableError);
    CHECK_THROWS_AS(parse_attitude(""), TableError);
    CHECK(std::string(to_string(Attitude::favorable)) == "+1");
    CHECK(std::string(to_string(Attitude::neutral)) == "0");
    CHECK(std::string(to_string(Attitude::opposed)) == "-1");
}
