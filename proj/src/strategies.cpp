#include "olps/strategies.hpp"

#include <stdexcept>

namespace olps {

OlmarStrategy::OlmarStrategy(std::size_t num_assets, OlmarParams params)
    : params_(params), state_(OlmarState::initial(num_assets, params)) {}

void OlmarStrategy::observe(const PriceRelativeVector& x) {
    olmar_step(state_, x, params_);
}

BahOlmarStrategy::BahOlmarStrategy(std::size_t num_assets, double epsilon, int max_window)
    : ensemble_(num_assets, epsilon, max_window) {}

void BahOlmarStrategy::observe(const PriceRelativeVector& x) {
    ensemble_.step(x);
}

FixedPortfolioStrategy::FixedPortfolioStrategy(Portfolio portfolio, std::string name)
    : portfolio_(std::move(portfolio)), name_(std::move(name)) {
    if (!portfolio_.valid()) throw std::invalid_argument("fixed portfolio is not on the simplex");
}

MarketStrategy::MarketStrategy(std::size_t num_assets)
    : holdings_(Portfolio::uniform(num_assets)) {}

void MarketStrategy::observe(const PriceRelativeVector& x) {
    holdings_ = evolve_portfolio(holdings_, x);
}

EgStrategy::EgStrategy(std::size_t num_assets, double eta)
    : state_{Portfolio::uniform(num_assets), eta} {
    if (!(eta >= 0.0)) throw std::invalid_argument("EG learning rate must be non-negative");
}

void EgStrategy::observe(const PriceRelativeVector& x) {
    eg_step(state_, x);
}

PamrStrategy::PamrStrategy(std::size_t num_assets, double epsilon)
    : state_{Portfolio::uniform(num_assets), epsilon} {
    if (epsilon < 0.0) throw std::invalid_argument("PAMR threshold must be non-negative");
}

void PamrStrategy::observe(const PriceRelativeVector& x) {
    pamr_step(state_, x);
}

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names = {"market", "best_stock", "ucrp", "bcrp",
                                                   "eg",     "pamr",       "olmar", "bah_olmar"};
    return names;
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const MarketSequence& seq) {
    const std::size_t m = seq.num_assets();
    if (spec.name == "market") return std::make_unique<MarketStrategy>(m);
    if (spec.name == "ucrp")
        return std::make_unique<FixedPortfolioStrategy>(Portfolio::uniform(m), "ucrp");
    if (spec.name == "best_stock") {
        const auto [index, wealth] = best_stock(seq);
        Portfolio corner;
        corner.weights.assign(m, 0.0);
        corner.weights[index] = 1.0;
        return std::make_unique<FixedPortfolioStrategy>(std::move(corner), "best_stock");
    }
    if (spec.name == "bcrp")
        return std::make_unique<FixedPortfolioStrategy>(bcrp(seq).portfolio, "bcrp");
    if (spec.name == "eg") return std::make_unique<EgStrategy>(m, spec.eg_eta);
    if (spec.name == "pamr") return std::make_unique<PamrStrategy>(m, spec.pamr_epsilon);
    if (spec.name == "olmar")
        return std::make_unique<OlmarStrategy>(m, OlmarParams{spec.epsilon, spec.window});
    if (spec.name == "bah_olmar" || spec.name == "bah")
        return std::make_unique<BahOlmarStrategy>(m, spec.epsilon, spec.max_window);
    throw std::invalid_argument("unknown strategy: " + spec.name);
}

} // namespace olps
