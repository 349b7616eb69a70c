#pragma once

#include <utility>
#include <vector>

#include "olps/market_data.hpp"
#include "olps/simplex.hpp"

namespace olps {

enum class BaselineKind { Market, BestStock, UCRP, BCRP, EG, PAMR };

struct BaselineSpec {
    BaselineKind kind = BaselineKind::Market;
    double eg_eta = 0.05;
    double pamr_epsilon = 0.5;

    void validate() const;
};

// Uniform buy-and-hold wealth curve S_1..S_n.
std::vector<double> market_wealth(const MarketSequence& seq);

// Per-period growth factors of the uniform buy-and-hold benchmark.
std::vector<double> market_returns(const MarketSequence& seq);

// Hindsight single best asset: (index, cumulative product), ties toward the
// lower index.
std::pair<std::size_t, double> best_stock(const MarketSequence& seq);

struct BcrpResult {
    Portfolio portfolio;
    double wealth = 1.0;
    double mean_log_return = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Hindsight-optimal constant rebalanced portfolio: projected gradient ascent
// on the mean-log objective with backtracking line search. Stops when the
// objective improves by less than tol or after 1e5 iterations; the best
// iterate is returned either way.
BcrpResult bcrp(const MarketSequence& seq, double tol = 1e-10);

// Rebalance to the fixed portfolio each period; returns b.x_t.
double ucrp_step(const Portfolio& portfolio, const PriceRelativeVector& x);

struct EgState {
    Portfolio portfolio;
    double eta = 0.05;
};

// Multiplicative exponentiated-gradient update; returns b_t.x_t.
double eg_step(EgState& state, const PriceRelativeVector& x);

struct PamrState {
    Portfolio portfolio;
    double epsilon = 0.5;
};

// Passive-aggressive mean-reversion update against the last relatives;
// returns b_t.x_t. All-equal relatives keep the portfolio unchanged.
double pamr_step(PamrState& state, const PriceRelativeVector& x);

} // namespace olps
