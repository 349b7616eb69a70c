#pragma once

#include <span>
#include <string>
#include <vector>

#include "olps/market_data.hpp"
#include "olps/simplex.hpp"

namespace olps {

/// Online decision maker: commits a portfolio for the coming period, then is
/// shown the realized relatives. The engine never reveals x_t before the
/// portfolio for period t has been committed.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual Portfolio next_portfolio() = 0;
    virtual void observe(const PriceRelativeVector& x) = 0;
};

struct BacktestConfig {
    double initial_wealth = 1.0;
    double cost_rate = 0.0;  // proportional rate gamma in [0, 1)

    void validate() const;
};

struct BacktestRecord {
    std::size_t period = 0;      // 1-based
    Portfolio portfolio;
    double period_return = 1.0;  // s_t = b_t . x_t
    double cost_factor = 1.0;    // c_t in (0, 1]
    double wealth = 1.0;         // S_t = S_{t-1} * s_t * c_t
};

// Runs the period loop: commit b_t, score s_t, charge the turnover cost
// against the price-drifted previous holdings (no charge at t=1), then reveal
// x_t to the strategy. Deterministic and replayable.
std::vector<BacktestRecord> run_backtest(const MarketSequence& seq, Strategy& strategy,
                                         const BacktestConfig& config = {});

// Price-drifted holdings after one period: b*x / (b.x) elementwise.
Portfolio evolve_portfolio(const Portfolio& b, const PriceRelativeVector& x);

// 1 - (rate/2) * L1 turnover between the target and the drifted holdings.
double cost_factor(const Portfolio& target, const Portfolio& evolved, double rate);

struct StatsReport {
    std::size_t n = 0;
    double mer_strategy = 0.0;
    double mer_market = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double t_statistic = 0.0;
    double p_value = 0.0;
};

// Mean excess returns (risk-free rate 0) and OLS of strategy excess returns
// on market excess returns; t = alpha / SE(alpha) with the one-sided p-value
// under the normal approximation. Requires n >= 3 and non-constant market
// returns.
StatsReport compute_stats(std::span<const double> strategy_returns,
                          std::span<const double> market_returns);

// Upper-tail probability of the standard normal at t.
double upper_tail_p_value(double t);

} // namespace olps
