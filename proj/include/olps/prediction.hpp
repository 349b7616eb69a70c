#pragma once

#include <deque>

#include "olps/market_data.hpp"

namespace olps {

/// Rolling history of the most recent price relatives feeding the
/// moving-average prediction. Retains at most window_size-1 periods.
class PredictionWindow {
public:
    explicit PredictionWindow(int window_size);

    void observe(const PriceRelativeVector& x);

    int window_size() const { return window_size_; }
    std::size_t periods_seen() const { return seen_; }
    std::size_t num_assets() const;
    const std::deque<PriceRelativeVector>& recent() const { return recent_; }

private:
    int window_size_;
    std::size_t seen_ = 0;
    std::deque<PriceRelativeVector> recent_;
};

// Predicted next price relative: the moving average of the last w prices
// divided by the current price, computed entirely from stored relatives as
// (1/w')(1 + 1/x_t + 1/(x_t*x_{t-1}) + ...). During warm-up the average is
// truncated to w' = min(w, t+1) terms. Requires at least one observed period.
PriceRelativeVector predict_mar(const PredictionWindow& window);

} // namespace olps
