#include <catch2/catch_amalgamated.hpp>

#include "mct/constructions.hpp"
#include "mct/verify.hpp"
#include "oracles.hpp"

using namespace mct;

namespace {
ColoredGraph k5_two_pentagon() {
    return ColoredGraph(5, {{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}});
}

oracles::RawGraph to_raw(const ColoredGraph& g) {
    return {g.n(), {g.classes().begin(), g.classes().end()}};
}
} // namespace

TEST_CASE("triangle census on the known instances") {
    TriangleCensus k5 = triangle_census(k5_two_pentagon());
    CHECK(k5.triangle_count == 10);
    CHECK(k5.multicolored_count == 0);
    CHECK(k5.delta1 == std::vector<long long>{5, 5});
    CHECK(k5.delta2 == std::vector<long long>{5, 5});

    TriangleCensus empty = triangle_census(ColoredGraph(5, {}));
    CHECK(empty.triangle_count == 0);
    CHECK(empty.multicolored_count == 0);

    TriangleCensus pert = triangle_census(perturbed_construction(10).graph);
    CHECK(pert.triangle_count == 4);
    CHECK(pert.multicolored_count == 0);
}

TEST_CASE("census agrees with the naive oracle") {
    auto graphs = oracles::corpus(50, 424242);
    for (const auto& raw : graphs) {
        ColoredGraph g(raw.n, {raw.classes.begin(), raw.classes.end()});
        TriangleCensus census = triangle_census(g);
        oracles::NaiveCensus naive = oracles::naive_census(raw);
        CHECK(census.triangle_count == naive.triangles);
        CHECK(census.multicolored_count == naive.multicolored);
        CHECK(census.delta1 == naive.delta1);
        CHECK(census.delta2 == naive.delta2);
        // every triangle distributes its three edges over its colors
        long long weighted = 0;
        for (int c = 0; c < g.k(); ++c) weighted += census.delta1[c] + 2 * census.delta2[c];
        CHECK(weighted == 3 * census.triangle_count);
    }
}

TEST_CASE("per-color degree-sum inequality") {
    auto rows = check_kovacs_nagy(k5_two_pentagon());
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.lhs == 20);
        CHECK(row.rhs == 25);
        CHECK(row.slack == 5);
        CHECK(row.pass);
    }

    ColoredGraph c5(5, {{0, 1, 2, 3, 4}});
    auto tight = check_kovacs_nagy(c5);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0].lhs == 10);
    CHECK(tight[0].rhs == 10);
    CHECK(tight[0].slack == 0);

    for (const auto& row : check_kovacs_nagy(perturbed_construction(10).graph))
        CHECK(row.slack >= 0);

    ColoredGraph bad(14, {{0, 1, 5, 6, 7}, {1, 2, 8, 9, 10}, {2, 0, 11, 12, 13}});
    CHECK_THROWS_AS(check_kovacs_nagy(bad), PreconditionViolatedError);
}

TEST_CASE("double count identity") {
    DoubleCountResult k5 = double_count_check(k5_two_pentagon());
    CHECK(k5.by_cycles == 40);
    CHECK(k5.by_degrees == 40);
    CHECK(k5.equal);

    DoubleCountResult c5 = double_count_check(ColoredGraph(5, {{0, 1, 2, 3, 4}}));
    CHECK(c5.by_cycles == 10);
    CHECK(c5.by_degrees == 10);

    CHECK(double_count_check(perturbed_construction(15).graph).equal);

    for (const auto& raw : oracles::corpus(40, 31337)) {
        ColoredGraph g(raw.n, {raw.classes.begin(), raw.classes.end()});
        CHECK(double_count_check(g).equal);
    }
}

TEST_CASE("verify reports") {
    VerifyReport good = verify(perturbed_construction(10).graph);
    CHECK(good.valid);
    CHECK(good.k == 4);
    CHECK_FALSE(good.multicolored_triangle);
    CHECK(good.neighborhood_violations.empty());
    CHECK(good.kn_checked);
    CHECK(good.kn_violations.empty());
    CHECK(good.double_count_ok);

    VerifyReport k5 = verify(k5_two_pentagon());
    CHECK(k5.valid);
    CHECK(k5.k == 2);

    ColoredGraph bad(14, {{0, 1, 5, 6, 7}, {1, 2, 8, 9, 10}, {2, 0, 11, 12, 13}});
    VerifyReport rep = verify(bad);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.multicolored_triangle);
    CHECK((*rep.multicolored_triangle == std::array<int, 3>{0, 1, 2}));
    CHECK_FALSE(rep.kn_checked);
}

TEST_CASE("all perturbed constructions verify cleanly") {
    for (long long n = 10; n <= 100; n += 5) {
        VerifyReport rep = verify(perturbed_construction(n).graph);
        CHECK(rep.valid);
        CHECK(rep.k == (n / 5) * (n / 5));
        CHECK(rep.neighborhood_violations.empty());
        CHECK(rep.kn_violations.empty());
        CHECK(rep.double_count_ok);
    }
}
