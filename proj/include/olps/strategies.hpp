#pragma once

#include <memory>
#include <string>
#include <vector>

#include "olps/backtest.hpp"
#include "olps/baselines.hpp"
#include "olps/olmar.hpp"

namespace olps {

struct StrategySpec {
    std::string name = "olmar";
    double epsilon = 10.0;
    int window = 5;
    int max_window = 30;
    double eg_eta = 0.05;
    double pamr_epsilon = 0.5;
};

// Known strategy names: market, best_stock, ucrp, bcrp, eg, pamr, olmar,
// bah_olmar. Hindsight strategies (best_stock, bcrp) are fitted on the full
// sequence and replayed as fixed portfolios; the online ones use seq only for
// the asset count.
std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const MarketSequence& seq);

const std::vector<std::string>& strategy_names();

class OlmarStrategy final : public Strategy {
public:
    OlmarStrategy(std::size_t num_assets, OlmarParams params);
    std::string name() const override { return "olmar"; }
    Portfolio next_portfolio() override { return state_.portfolio; }
    void observe(const PriceRelativeVector& x) override;

private:
    OlmarParams params_;
    OlmarState state_;
};

class BahOlmarStrategy final : public Strategy {
public:
    BahOlmarStrategy(std::size_t num_assets, double epsilon, int max_window);
    std::string name() const override { return "bah_olmar"; }
    Portfolio next_portfolio() override { return ensemble_.combined_portfolio(); }
    void observe(const PriceRelativeVector& x) override;

    const ExpertEnsemble& ensemble() const { return ensemble_; }

private:
    ExpertEnsemble ensemble_;
};

/// Constant rebalanced portfolio with fixed weights (UCRP, BCRP replay,
/// best-stock replay).
class FixedPortfolioStrategy final : public Strategy {
public:
    FixedPortfolioStrategy(Portfolio portfolio, std::string name);
    std::string name() const override { return name_; }
    Portfolio next_portfolio() override { return portfolio_; }
    void observe(const PriceRelativeVector&) override {}

private:
    Portfolio portfolio_;
    std::string name_;
};

/// Buy uniform once and let the holdings drift with prices.
class MarketStrategy final : public Strategy {
public:
    explicit MarketStrategy(std::size_t num_assets);
    std::string name() const override { return "market"; }
    Portfolio next_portfolio() override { return holdings_; }
    void observe(const PriceRelativeVector& x) override;

private:
    Portfolio holdings_;
};

class EgStrategy final : public Strategy {
public:
    EgStrategy(std::size_t num_assets, double eta);
    std::string name() const override { return "eg"; }
    Portfolio next_portfolio() override { return state_.portfolio; }
    void observe(const PriceRelativeVector& x) override;

private:
    EgState state_;
};

class PamrStrategy final : public Strategy {
public:
    PamrStrategy(std::size_t num_assets, double epsilon);
    std::string name() const override { return "pamr"; }
    Portfolio next_portfolio() override { return state_.portfolio; }
    void observe(const PriceRelativeVector& x) override;

private:
    PamrState state_;
};

} // namespace olps
