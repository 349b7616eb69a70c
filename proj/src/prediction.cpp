#include "olps/prediction.hpp"

#include <cmath>
#include <stdexcept>

namespace olps {

PredictionWindow::PredictionWindow(int window_size) : window_size_(window_size) {
    if (window_size < 2)
        throw std::invalid_argument("prediction window size must be at least 2");
}

std::size_t PredictionWindow::num_assets() const {
    return recent_.empty() ? 0 : recent_.front().size();
}

void PredictionWindow::observe(const PriceRelativeVector& x) {
    if (x.empty()) throw std::invalid_argument("empty price relative vector");
    if (!recent_.empty() && x.size() != recent_.front().size())
        throw std::invalid_argument("dimension mismatch in prediction window");
    for (double v : x)
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument("price relatives must be positive and finite");
    recent_.push_back(x);
    while (recent_.size() > static_cast<std::size_t>(window_size_ - 1)) recent_.pop_front();
    ++seen_;
}

PriceRelativeVector predict_mar(const PredictionWindow& window) {
    if (window.periods_seen() == 0)
        throw std::invalid_argument("prediction requires at least one observed period");

    const auto& recent = window.recent();
    const std::size_t m = recent.front().size();
    // Warm-up: truncate the average to the periods actually seen.
    const std::size_t terms =
        std::min<std::size_t>(window.window_size(), window.periods_seen() + 1);

    PriceRelativeVector sum(m, 1.0);
    PriceRelativeVector reciprocal(m, 1.0);
    for (std::size_t j = 1; j < terms; ++j) {
        const auto& x = recent[recent.size() - j];
        for (std::size_t i = 0; i < m; ++i) {
            reciprocal[i] /= x[i];
            sum[i] += reciprocal[i];
        }
    }
    const double inv = 1.0 / static_cast<double>(terms);
    for (std::size_t i = 0; i < m; ++i) sum[i] *= inv;
    return sum;
}

} // namespace olps
