#include "olps/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace olps {

void BaselineSpec::validate() const {
    if (!(eg_eta > 0.0)) throw std::invalid_argument("EG learning rate must be positive");
    if (pamr_epsilon < 0.0) throw std::invalid_argument("PAMR threshold must be non-negative");
}

std::vector<double> market_wealth(const MarketSequence& seq) {
    const std::size_t m = seq.num_assets();
    const std::size_t n = seq.num_periods();
    std::vector<double> growth(m, 1.0);
    std::vector<double> curve(n);
    for (std::size_t t = 0; t < n; ++t) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            growth[i] *= seq.periods[t][i];
            sum += growth[i];
        }
        curve[t] = sum / static_cast<double>(m);
    }
    return curve;
}

std::vector<double> market_returns(const MarketSequence& seq) {
    const auto curve = market_wealth(seq);
    std::vector<double> returns(curve.size());
    double prev = 1.0;
    for (std::size_t t = 0; t < curve.size(); ++t) {
        returns[t] = curve[t] / prev;
        prev = curve[t];
    }
    return returns;
}

std::pair<std::size_t, double> best_stock(const MarketSequence& seq) {
    const std::size_t m = seq.num_assets();
    std::vector<double> growth(m, 1.0);
    for (const auto& row : seq.periods)
        for (std::size_t i = 0; i < m; ++i) growth[i] *= row[i];
    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (growth[i] > growth[best]) best = i;
    return {best, growth[best]};
}

namespace {

double mean_log_return(const MarketSequence& seq, const Portfolio& b) {
    double total = 0.0;
    for (const auto& row : seq.periods) total += std::log(b.dot(row));
    return total / static_cast<double>(seq.num_periods());
}

} // namespace

BcrpResult bcrp(const MarketSequence& seq, double tol) {
    const std::size_t m = seq.num_assets();
    const std::size_t n = seq.num_periods();
    if (n == 0) throw std::invalid_argument("empty market sequence");

    BcrpResult result;
    result.portfolio = Portfolio::uniform(m);
    double objective = mean_log_return(seq, result.portfolio);
    double step = 1.0;
    const int max_iterations = 100000;

    std::vector<double> gradient(m);
    std::vector<double> trial(m);
    int it = 0;
    for (; it < max_iterations; ++it) {
        std::fill(gradient.begin(), gradient.end(), 0.0);
        for (const auto& row : seq.periods) {
            const double r = result.portfolio.dot(row);
            for (std::size_t i = 0; i < m; ++i) gradient[i] += row[i] / r;
        }
        for (std::size_t i = 0; i < m; ++i) gradient[i] /= static_cast<double>(n);

        // Backtracking line search on the projected ascent step.
        bool accepted = false;
        double alpha = step;
        Portfolio candidate;
        double candidate_obj = objective;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t i = 0; i < m; ++i)
                trial[i] = result.portfolio.weights[i] + alpha * gradient[i];
            candidate = project_to_simplex(trial);
            const double f = mean_log_return(seq, candidate);
            double directional = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                directional += gradient[i] * (candidate.weights[i] - result.portfolio.weights[i]);
            if (f >= objective + 1e-4 * directional) {
                accepted = true;
                candidate_obj = f;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            result.converged = true;
            break;
        }
        const double gain = candidate_obj - objective;
        result.portfolio = std::move(candidate);
        objective = candidate_obj;
        step = std::min(alpha * 2.0, 1e3);
        if (gain <= tol) {
            result.converged = true;
            ++it;
            break;
        }
    }

    result.iterations = it;
    result.mean_log_return = objective;
    result.wealth = 1.0;
    for (const auto& row : seq.periods) result.wealth *= result.portfolio.dot(row);
    return result;
}

double ucrp_step(const Portfolio& portfolio, const PriceRelativeVector& x) {
    return portfolio.dot(x);
}

double eg_step(EgState& state, const PriceRelativeVector& x) {
    const double period_return = state.portfolio.dot(x);
    if (state.eta == 0.0) return period_return;
    const std::size_t m = x.size();
    std::vector<double> next(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        next[i] = state.portfolio.weights[i] * std::exp(state.eta * x[i] / period_return);
        total += next[i];
    }
    for (std::size_t i = 0; i < m; ++i) next[i] /= total;
    state.portfolio.weights = std::move(next);
    return period_return;
}

double pamr_step(PamrState& state, const PriceRelativeVector& x) {
    if (x.size() != state.portfolio.size())
        throw std::invalid_argument("dimension mismatch in strategy step");
    const double period_return = state.portfolio.dot(x);

    const std::size_t m = x.size();
    double mean = 0.0;
    double lowest = x[0];
    double highest = x[0];
    for (double v : x) {
        mean += v;
        lowest = std::min(lowest, v);
        highest = std::max(highest, v);
    }
    mean /= static_cast<double>(m);

    // All-equal relatives carry no signal; keep the portfolio.
    if (lowest == highest) return period_return;
    double denom = 0.0;
    for (double v : x) denom += (v - mean) * (v - mean);
    if (denom <= 0.0) return period_return;

    const double tau = std::max(0.0, (period_return - state.epsilon) / denom);
    if (tau == 0.0) return period_return;
    UnconstrainedWeights moved(m);
    for (std::size_t i = 0; i < m; ++i)
        moved[i] = state.portfolio.weights[i] - tau * (x[i] - mean);
    state.portfolio = project_to_simplex(moved);
    return period_return;
}

} // namespace olps
