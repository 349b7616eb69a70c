#include <doctest.h>

#include <random>

#include "olps/prediction.hpp"
#include "oracles.hpp"

using namespace olps;

TEST_CASE("predict_mar on worked examples") {
    SUBCASE("w=3 over a fall then a rise") {
        PredictionWindow window(3);
        window.observe({1.0, 0.5});
        window.observe({1.0, 2.0});
        const auto prediction = predict_mar(window);
        CHECK(prediction[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(prediction[1] == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    }
    SUBCASE("constant history predicts ones") {
        PredictionWindow window(6);
        for (int t = 0; t < 10; ++t) window.observe({1.0, 1.0, 1.0});
        const auto prediction = predict_mar(window);
        for (double v : prediction) CHECK(v == 1.0);
    }
    SUBCASE("w=2 averages current and previous price") {
        PredictionWindow window(2);
        window.observe({1.0, 2.0});
        const auto prediction = predict_mar(window);
        CHECK(prediction[0] == 1.0);
        CHECK(prediction[1] == 0.75);
    }
}

TEST_CASE("predict_mar requires an observation") {
    PredictionWindow window(5);
    CHECK_THROWS_AS(predict_mar(window), std::invalid_argument);
}

TEST_CASE("window validates its input") {
    CHECK_THROWS_AS(PredictionWindow(1), std::invalid_argument);
    PredictionWindow window(3);
    window.observe({1.0, 2.0});
    CHECK_THROWS_AS(window.observe({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(window.observe({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(window.observe({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("window retains at most w-1 periods") {
    PredictionWindow window(4);
    for (int t = 0; t < 10; ++t) window.observe({1.0, 1.5});
    CHECK(window.recent().size() == 3);
    CHECK(window.periods_seen() == 10);
}

TEST_CASE("warm-up truncates to the periods seen") {
    // One observation with w=5 must match the two-term price average.
    PredictionWindow window(5);
    window.observe({1.0, 4.0});
    const auto prediction = predict_mar(window);
    CHECK(prediction[0] == 1.0);
    CHECK(prediction[1] == doctest::Approx((1.0 + 0.25) / 2.0).epsilon(1e-15));
}

TEST_CASE("relative form equals the price-space moving average") {
    std::mt19937 rng(404);
    std::lognormal_distribution<double> price(0.0, 0.3);
    std::lognormal_distribution<double> move(0.0, 0.2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng() % 5;
        const int w = 2 + static_cast<int>(rng() % 7);
        const int horizon = 1 + static_cast<int>(rng() % 12);

        std::vector<std::vector<double>> prices;
        prices.emplace_back(m);
        for (auto& p : prices.back()) p = price(rng);

        PredictionWindow window(w);
        for (int t = 0; t < horizon; ++t) {
            PriceRelativeVector x(m);
            std::vector<double> row(m);
            for (std::size_t i = 0; i < m; ++i) {
                x[i] = move(rng);
                row[i] = prices.back()[i] * x[i];
            }
            prices.push_back(row);
            window.observe(x);
        }

        const auto from_relatives = predict_mar(window);
        const auto from_prices = testing::predict_from_prices(prices, w);
        for (std::size_t i = 0; i < m; ++i)
            CHECK(from_relatives[i] == doctest::Approx(from_prices[i]).epsilon(1e-12));
    }
}

TEST_CASE("prediction stays positive and reverts risers") {
    PredictionWindow window(5);
    for (int t = 0; t < 8; ++t) window.observe({1.0, 1.2});
    const auto prediction = predict_mar(window);
    CHECK(prediction[0] == 1.0);  // constant asset keeps prediction 1
    CHECK(prediction[1] > 0.0);
    CHECK(prediction[1] < 1.0);  // price above its moving average
}
