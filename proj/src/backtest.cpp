#include "olps/backtest.hpp"

#include <cmath>
#include <stdexcept>

namespace olps {

void BacktestConfig::validate() const {
    if (!(initial_wealth > 0.0)) throw std::invalid_argument("initial wealth must be positive");
    if (cost_rate < 0.0 || cost_rate >= 1.0)
        throw std::invalid_argument("transaction cost rate must be in [0, 1)");
}

Portfolio evolve_portfolio(const Portfolio& b, const PriceRelativeVector& x) {
    const double growth = b.dot(x);
    Portfolio evolved;
    evolved.weights.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) evolved.weights[i] = b.weights[i] * x[i] / growth;
    return evolved;
}

double cost_factor(const Portfolio& target, const Portfolio& evolved, double rate) {
    if (rate < 0.0 || rate >= 1.0)
        throw std::invalid_argument("transaction cost rate must be in [0, 1)");
    if (target.size() != evolved.size())
        throw std::invalid_argument("dimension mismatch in cost computation");
    double turnover = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
        turnover += std::abs(target.weights[i] - evolved.weights[i]);
    return 1.0 - (rate / 2.0) * turnover;
}

std::vector<BacktestRecord> run_backtest(const MarketSequence& seq, Strategy& strategy,
                                         const BacktestConfig& config) {
    config.validate();
    const std::size_t m = seq.num_assets();
    const std::size_t n = seq.num_periods();

    std::vector<BacktestRecord> records;
    records.reserve(n);
    double wealth = config.initial_wealth;
    Portfolio evolved;
    for (std::size_t t = 0; t < n; ++t) {
        Portfolio b = strategy.next_portfolio();
        if (b.size() != m)
            throw std::invalid_argument("strategy portfolio does not match the asset count");
        const auto& x = seq.periods[t];
        const double period_return = b.dot(x);
        // No charge for the initial purchase at t=1.
        const double cost = (t == 0) ? 1.0 : cost_factor(b, evolved, config.cost_rate);
        wealth = wealth * period_return * cost;
        records.push_back({t + 1, b, period_return, cost, wealth});
        evolved = evolve_portfolio(b, x);
        strategy.observe(x);
    }
    return records;
}

double upper_tail_p_value(double t) {
    return 0.5 * std::erfc(t / std::sqrt(2.0));
}

StatsReport compute_stats(std::span<const double> strategy_returns,
                          std::span<const double> market_returns) {
    const std::size_t n = strategy_returns.size();
    if (market_returns.size() != n)
        throw std::invalid_argument("return series must have equal length");
    if (n < 3) throw std::invalid_argument("statistics need at least 3 periods");

    StatsReport report;
    report.n = n;
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += market_returns[i] - 1.0;
        mean_y += strategy_returns[i] - 1.0;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    report.mer_market = mean_x;
    report.mer_strategy = mean_y;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = (market_returns[i] - 1.0) - mean_x;
        const double dy = (strategy_returns[i] - 1.0) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx == 0.0)
        throw std::domain_error("market returns have zero variance; beta is undefined");

    report.beta = sxy / sxx;
    report.alpha = mean_y - report.beta * mean_x;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = (strategy_returns[i] - 1.0) - report.alpha -
                                report.beta * (market_returns[i] - 1.0);
        ssr += residual * residual;
    }
    const double sigma2 = ssr / static_cast<double>(n - 2);
    const double se_alpha =
        std::sqrt(sigma2 * (1.0 / static_cast<double>(n) + mean_x * mean_x / sxx));
    if (se_alpha > 0.0)
        report.t_statistic = report.alpha / se_alpha;
    else
        report.t_statistic =
            (report.alpha == 0.0) ? 0.0
                                  : std::copysign(std::numeric_limits<double>::infinity(),
                                                  report.alpha);
    report.p_value = upper_tail_p_value(report.t_statistic);
    return report;
}

} // namespace olps
