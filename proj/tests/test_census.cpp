#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "chatelet/census.hpp"

using namespace chatelet;

namespace {

using Key = std::array<std::int64_t, 4>;

std::vector<Key> collect(std::int64_t P) {
    std::vector<Key> out;
    enumerate(P, [&](const SurfaceTuple& u) { out.push_back({u.a, u.b, u.c, u.d}); });
    return out;
}

std::set<Key> brute_box(std::int64_t P) {
    std::set<Key> out;
    for (std::int64_t a = 1; a <= P; ++a)
        for (std::int64_t b = -P; b <= P; ++b)
            for (std::int64_t c = -P; c <= P; ++c)
                for (std::int64_t d = -P; d <= P; ++d) {
                    if (b == 0 || c == 0 || d == 0) continue;
                    std::int64_t det = a * d - b * c;
                    if (det == 1 || det == -1) out.insert({a, b, c, d});
                }
    return out;
}

}  // namespace

TEST_CASE("tiny boxes, frozen") {
    CHECK(collect(1).empty());

    // all sixteen height-2 tuples, worked out by hand
    const std::set<Key> expected = {
        {1, -2, -1, 1}, {1, -2, 1, -1}, {1, -1, -2, 1}, {1, -1, -1, 2},
        {1, -1, 1, -2}, {1, -1, 2, -1}, {1, 1, -2, -1}, {1, 1, -1, -2},
        {1, 1, 1, 2},   {1, 1, 2, 1},   {1, 2, -1, -1}, {1, 2, 1, 1},
        {2, -1, -1, 1}, {2, -1, 1, -1}, {2, 1, -1, -1}, {2, 1, 1, 1},
    };
    std::vector<Key> got = collect(2);
    CHECK(got.size() == 16);
    CHECK(std::set<Key>(got.begin(), got.end()) == expected);
}

TEST_CASE("enumeration matches brute force with no duplicates") {
    std::vector<Key> got = collect(30);
    std::set<Key> dedup(got.begin(), got.end());
    CHECK(dedup.size() == got.size());
    CHECK(dedup == brute_box(30));
}

TEST_CASE("census at height 2, frozen") {
    auto reports = run_census(2, {1, 2}, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].P == 1);
    CHECK(reports[0].raw_total == 0);
    CHECK(reports[1].P == 2);
    CHECK(reports[1].raw_total == 16);
    // one orbit of each sign pattern; the (+,-,-) orbit has no real points,
    // the other three are soluble with no forced product
    CHECK(reports[1].raw_loc == 12);
    CHECK(reports[1].raw_br == 0);
    CHECK(reports[1].counters.insoluble_real == 4);
    CHECK(reports[1].counters.insoluble_two == 0);
    CHECK(reports[1].counters.insoluble_odd == 0);
    CHECK(reports[1].N == Rational(4));
    CHECK(reports[1].N_loc == Rational(3));
    CHECK(reports[1].N_Br == Rational(0));
    CHECK(reports[1].N_over_P2 == Rational(1));
    CHECK(reports[1].Nloc_over_P2 == Rational(3, 4));

    for (const char* sig : {"(+,+,+)", "(+,-,-)", "(-,+,-)", "(-,-,+)"})
        CHECK(reports[1].counters.sign_histogram.at(sig) == 4);

    // every height-2 orbit has valuation pattern (1,0,0) twice, (0,1,0) and
    // (0,0,1) once each
    CHECK(reports[1].counters.stratum_histogram.at({1, 0, 0}).total == 8);
    CHECK(reports[1].counters.stratum_histogram.at({0, 1, 0}).total == 4);
    CHECK(reports[1].counters.stratum_histogram.at({0, 0, 1}).total == 4);

    std::string csv = census_csv(reports);
    CHECK(csv ==
          "P,raw_total,raw_loc,raw_br,N,N_loc,N_Br,N_over_P2,Nloc_over_P2,NBr_over_P2,"
          "NBr_over_Nloc\n"
          "1,0,0,0,0.00000,0.00000,0.00000,0.00000,0.00000,0.00000,0.00000\n"
          "2,16,12,0,4.00000,3.00000,0.00000,1.00000,0.750000,0.00000,0.00000\n");
}

TEST_CASE("checkpoints are cumulative and shard-independent") {
    auto both = run_census(20, {10, 20}, 3);
    REQUIRE(both.size() == 2);
    auto first = run_census(10, {}, 1);
    REQUIRE(first.size() == 1);
    CHECK(census_csv({both[0]}) == census_csv(first));
    CHECK(both[1].raw_total > both[0].raw_total);
    CHECK(both[0].raw_total % 4 == 0);
    CHECK(both[1].raw_total % 4 == 0);

    auto serial = run_census(20, {10, 20}, 1);
    CHECK(census_csv(both) == census_csv(serial));
    CHECK(census_json(both, 7, {10, 20}) == census_json(serial, 7, {10, 20}));
}

TEST_CASE("height is appended as a final checkpoint when missing") {
    auto implicit = run_census(12, {6}, 2);
    REQUIRE(implicit.size() == 2);
    CHECK(implicit[1].P == 12);
    auto explicit_ = run_census(12, {6, 12}, 2);
    CHECK(census_csv(implicit) == census_csv(explicit_));
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(run_census(0, {}, 1), std::domain_error);
    CHECK_THROWS_AS(run_census(10, {}, 0), std::domain_error);
    CHECK_THROWS_AS(run_census(10, {5, 5}, 1), std::domain_error);
    CHECK_THROWS_AS(run_census(10, {8, 5}, 1), std::domain_error);
    CHECK_THROWS_AS(run_census(10, {11}, 1), std::domain_error);
    CHECK_THROWS_AS(run_census(10, {0, 5}, 1), std::domain_error);
    CHECK_THROWS_AS(enumerate(0, [](const SurfaceTuple&) {}), std::domain_error);
}

TEST_CASE("leading constants from the tail sums") {
    PredictedConstants pc =
        predict_constants(Rational(6144), Rational(17856, 3), Rational(2112));
    CHECK(pc.c_tot == Rational(24));
    CHECK(pc.c_loc == Rational(279, 16));
    CHECK(pc.c_br == Rational(33, 8));
}

TEST_CASE("json report is well formed") {
    auto reports = run_census(8, {4, 8}, 2);
    std::string text = census_json(reports, 42, {4, 8});
    nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["height"] == 8);
    CHECK(doc["seed"] == 42);
    CHECK(doc["checkpoints"].size() == 2);
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][1]["P"] == 8);
    CHECK(doc["reports"][1]["raw_total"] == reports[1].raw_total);
    CHECK(doc["reports"][1]["insoluble"]["odd"] == 0);
    CHECK(doc["reports"][1]["stratum_histogram"].is_array());
}
