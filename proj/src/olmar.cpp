#include "olps/olmar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace olps {

void OlmarParams::validate() const {
    if (!(epsilon > 1.0)) throw std::invalid_argument("reversion threshold must exceed 1");
    if (window < 2) throw std::invalid_argument("window size must be at least 2");
}

std::pair<Portfolio, UpdateDiagnostics>
olmar_update(const Portfolio& current, const PriceRelativeVector& predicted, double epsilon) {
    if (!(epsilon > 1.0)) throw std::invalid_argument("reversion threshold must exceed 1");
    if (predicted.size() != current.size())
        throw std::invalid_argument("dimension mismatch in portfolio update");
    const std::size_t m = predicted.size();

    double mean = 0.0;
    double lowest = predicted[0];
    double highest = predicted[0];
    for (double x : predicted) {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument("predicted relatives must be positive and finite");
        mean += x;
        lowest = std::min(lowest, x);
        highest = std::max(highest, x);
    }
    mean /= static_cast<double>(m);

    const double expected_return = current.dot(predicted);
    UpdateDiagnostics diag{0.0, mean, expected_return};

    // Passive case: the expected return already clears the threshold.
    if (expected_return >= epsilon) return {current, diag};
    // Zero-denominator rule: a spreadless prediction cannot move the weights.
    if (lowest == highest) return {current, diag};

    double denom = 0.0;
    for (double x : predicted) denom += (x - mean) * (x - mean);
    if (denom <= 0.0) return {current, diag};

    diag.lambda = (epsilon - expected_return) / denom;
    UnconstrainedWeights moved(m);
    for (std::size_t i = 0; i < m; ++i)
        moved[i] = current.weights[i] + diag.lambda * (predicted[i] - mean);
    return {project_to_simplex(moved), diag};
}

OlmarState OlmarState::initial(std::size_t num_assets, const OlmarParams& params) {
    params.validate();
    return OlmarState{Portfolio::uniform(num_assets), PredictionWindow(params.window)};
}

double olmar_step(OlmarState& state, const PriceRelativeVector& x, const OlmarParams& params) {
    if (x.size() != state.portfolio.size())
        throw std::invalid_argument("dimension mismatch in strategy step");
    const double period_return = state.portfolio.dot(x);
    state.window.observe(x);
    const PriceRelativeVector predicted = predict_mar(state.window);
    state.portfolio = olmar_update(state.portfolio, predicted, params.epsilon).first;
    return period_return;
}

ExpertEnsemble::ExpertEnsemble(std::size_t num_assets, double epsilon, int max_window) {
    if (max_window < 3) throw std::invalid_argument("ensemble needs max window >= 3");
    const int count = max_window - 2;
    const double share = 1.0 / static_cast<double>(count);
    experts_.reserve(static_cast<std::size_t>(count));
    for (int w = 3; w <= max_window; ++w) {
        OlmarParams params{epsilon, w};
        experts_.push_back({params, OlmarState::initial(num_assets, params), share});
    }
    initial_wealths_.assign(static_cast<std::size_t>(count), share);
}

ExpertEnsemble::ExpertEnsemble(std::vector<OlmarExpert> experts) : experts_(std::move(experts)) {
    if (experts_.empty()) throw std::invalid_argument("ensemble needs at least one expert");
    initial_wealths_.reserve(experts_.size());
    for (const auto& e : experts_) {
        if (!(e.wealth > 0.0)) throw std::invalid_argument("expert wealth must be positive");
        initial_wealths_.push_back(e.wealth);
    }
}

Portfolio ExpertEnsemble::combined_portfolio() const {
    if (experts_.size() == 1) return experts_.front().state.portfolio;
    const std::size_t m = experts_.front().state.portfolio.size();
    std::vector<double> acc(m, 0.0);
    double total = 0.0;
    for (const auto& e : experts_) {
        total += e.wealth;
        for (std::size_t i = 0; i < m; ++i) acc[i] += e.wealth * e.state.portfolio.weights[i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc[i] /= total;
        sum += acc[i];
    }
    for (std::size_t i = 0; i < m; ++i) acc[i] /= sum;
    return Portfolio{std::move(acc)};
}

BahStepResult ExpertEnsemble::step(const PriceRelativeVector& x) {
    BahStepResult result;
    result.combined = combined_portfolio();
    result.period_return = result.combined.dot(x);
    for (auto& e : experts_) e.wealth *= olmar_step(e.state, x, e.params);
    return result;
}

std::vector<double> ExpertEnsemble::standalone_wealths() const {
    std::vector<double> out(experts_.size());
    for (std::size_t k = 0; k < experts_.size(); ++k)
        out[k] = experts_[k].wealth / initial_wealths_[k];
    return out;
}

std::pair<std::size_t, double> max_olmar(std::span<const double> final_wealths) {
    if (final_wealths.empty()) throw std::invalid_argument("no expert wealths given");
    std::size_t best = 0;
    for (std::size_t k = 1; k < final_wealths.size(); ++k)
        if (final_wealths[k] > final_wealths[best]) best = k;
    return {best, final_wealths[best]};
}

} // namespace olps
