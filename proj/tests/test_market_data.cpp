#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "olps/market_data.hpp"

using namespace olps;
namespace fs = std::filesystem;

namespace {

fs::path write_temp_csv(const std::string& contents) {
    static int counter = 0;
    const fs::path path =
        fs::temp_directory_path() / ("olps_md_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(counter++) + ".csv");
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("load_csv parses a relative-valued file") {
    const auto path = write_temp_csv("CASH,STK\n1,2\n1,0.5\n");
    const auto seq = load_csv(path);
    CHECK(seq.num_assets() == 2);
    CHECK(seq.num_periods() == 2);
    CHECK(seq.asset_names == std::vector<std::string>{"CASH", "STK"});
    CHECK(seq.periods[0] == PriceRelativeVector{1.0, 2.0});
    CHECK(seq.periods[1] == PriceRelativeVector{1.0, 0.5});
    fs::remove(path);
}

TEST_CASE("load_csv rejects bad rows with located messages") {
    SUBCASE("non-positive entry") {
        const auto path = write_temp_csv("A,B\n1,2\n0,1\n");
        CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("non-positive price relative"),
                             std::invalid_argument);
        fs::remove(path);
    }
    SUBCASE("ragged row") {
        const auto path = write_temp_csv("A,B\n1,2\n1\n");
        CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("ragged row"),
                             std::invalid_argument);
        fs::remove(path);
    }
    SUBCASE("non-numeric entry names row and column") {
        const auto path = write_temp_csv("A,B\n1,2\n1,abc\n");
        CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("row 2, column 2"),
                             std::invalid_argument);
        fs::remove(path);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_WITH_AS(load_csv("/nonexistent/olps.csv"), doctest::Contains("not found"),
                             std::invalid_argument);
    }
    SUBCASE("single-asset header") {
        const auto path = write_temp_csv("A\n1\n");
        CHECK_THROWS_AS(load_csv(path), std::invalid_argument);
        fs::remove(path);
    }
    SUBCASE("no data rows") {
        const auto path = write_temp_csv("A,B\n");
        CHECK_THROWS_AS(load_csv(path), std::invalid_argument);
        fs::remove(path);
    }
}

TEST_CASE("prices_to_relatives divides consecutive rows") {
    const auto seq = prices_to_relatives({"A", "B"}, {{1, 1}, {1, 2}, {1, 1}});
    CHECK(seq.periods[0] == PriceRelativeVector{1.0, 2.0});
    CHECK(seq.periods[1] == PriceRelativeVector{1.0, 0.5});

    const auto constant = prices_to_relatives({"A", "B"}, {{3, 7}, {3, 7}, {3, 7}});
    for (const auto& row : constant.periods) CHECK(row == PriceRelativeVector{1.0, 1.0});

    const auto halved = prices_to_relatives({"A", "B"}, {{2, 4}, {1, 2}});
    CHECK(halved.periods[0] == PriceRelativeVector{0.5, 0.5});
}

TEST_CASE("prices_to_relatives rejects short or non-positive input") {
    CHECK_THROWS_AS(prices_to_relatives({"A", "B"}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(prices_to_relatives({"A", "B"}, {{1, 1}, {1, -2}}), std::invalid_argument);
}

TEST_CASE("generate_toy reproduces the listed sequences") {
    const auto a = generate_toy({ToyMarketKind::A, 1, 4});
    CHECK(a.periods == std::vector<PriceRelativeVector>{{1, 2}, {1, 0.5}, {1, 2}, {1, 0.5}});

    const auto b = generate_toy({ToyMarketKind::B, 1, 5});
    CHECK(b.periods ==
          std::vector<PriceRelativeVector>{{1, 2}, {1, 2}, {1, 0.5}, {1, 0.5}, {1, 2}});

    const auto d3 = generate_toy({ToyMarketKind::D, 3, 7});
    CHECK(d3.periods == std::vector<PriceRelativeVector>{
                            {1, 2}, {1, 2}, {1, 2}, {1, 0.5}, {1, 0.5}, {1, 0.5}, {1, 2}});

    CHECK_THROWS_AS(generate_toy({ToyMarketKind::A, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate_toy({ToyMarketKind::D, 0, 5}), std::invalid_argument);
}

TEST_CASE("toy cycles hold k rises and k falls") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int n = 2 * k + static_cast<int>(rng() % 40);
        const auto seq = generate_toy({ToyMarketKind::D, k, n});
        int rises = 0;
        int falls = 0;
        for (int t = 0; t < 2 * k; ++t) {
            if (seq.periods[t][1] == 2.0) ++rises;
            if (seq.periods[t][1] == 0.5) ++falls;
        }
        CHECK(rises == k);
        CHECK(falls == k);
    }
}

TEST_CASE("relatives recover normalized prices") {
    std::mt19937 rng(11);
    std::lognormal_distribution<double> price_dist(0.0, 0.4);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = 2 + rng() % 4;
        const std::size_t rows = 2 + rng() % 30;
        std::vector<std::vector<double>> prices(rows, std::vector<double>(m));
        for (auto& row : prices)
            for (auto& p : row) p = price_dist(rng);

        const auto seq = prices_to_relatives(std::vector<std::string>(m, "X"), prices);
        std::vector<double> cumulative(m, 1.0);
        for (std::size_t t = 0; t < seq.num_periods(); ++t) {
            for (std::size_t i = 0; i < m; ++i) {
                cumulative[i] *= seq.periods[t][i];
                const double expected = prices[t + 1][i] / prices[0][i];
                CHECK(cumulative[i] == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("CSV serialization round-trips exactly") {
    std::mt19937 rng(23);
    std::lognormal_distribution<double> ratio(0.0, 0.5);
    MarketSequence seq;
    seq.asset_names = {"AA", "BB", "CC"};
    for (int t = 0; t < 25; ++t)
        seq.periods.push_back({ratio(rng), ratio(rng), ratio(rng)});

    const auto path = write_temp_csv(to_csv(seq));
    CHECK(load_csv(path) == seq);
    fs::remove(path);
}

TEST_CASE("validate flags sequence invariants") {
    MarketSequence seq{{"A", "B"}, {{1.0, 2.0}}};
    CHECK_NOTHROW(seq.validate());
    seq.periods.push_back({1.0});
    CHECK_THROWS_AS(seq.validate(), std::invalid_argument);
    seq.periods.back() = {1.0, -1.0};
    CHECK_THROWS_AS(seq.validate(), std::invalid_argument);
}
