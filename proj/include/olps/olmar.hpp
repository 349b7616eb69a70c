#pragma once

#include <span>
#include <utility>
#include <vector>

#include "olps/prediction.hpp"
#include "olps/simplex.hpp"

namespace olps {

struct OlmarParams {
    double epsilon = 10.0;  // reversion threshold, > 1
    int window = 5;         // moving-average window, >= 2

    void validate() const;
};

struct UpdateDiagnostics {
    double lambda = 0.0;            // Lagrange multiplier, >= 0
    double prediction_mean = 0.0;   // mean of the predicted relatives
    double constraint_value = 0.0;  // b_t . x~
};

// Passive-aggressive step toward the predicted relatives: when the expected
// return b.x~ already meets epsilon the portfolio is returned unchanged;
// otherwise the minimal move satisfying the constraint is taken and projected
// back onto the simplex. A prediction with no spread across assets keeps the
// portfolio (zero-denominator rule).
std::pair<Portfolio, UpdateDiagnostics>
olmar_update(const Portfolio& current, const PriceRelativeVector& predicted, double epsilon);

struct OlmarState {
    Portfolio portfolio;
    PredictionWindow window;

    static OlmarState initial(std::size_t num_assets, const OlmarParams& params);
};

// One trading period: returns b_t.x_t, then advances the state to b_{t+1}.
double olmar_step(OlmarState& state, const PriceRelativeVector& x, const OlmarParams& params);

struct OlmarExpert {
    OlmarParams params;
    OlmarState state;
    double wealth = 1.0;
};

struct BahStepResult {
    Portfolio combined;
    double period_return = 1.0;
};

/// Buy-and-hold combination over experts with windows 3..max_window, each
/// holding an equal share of the initial wealth and voting with its
/// accumulated wealth.
class ExpertEnsemble {
public:
    ExpertEnsemble(std::size_t num_assets, double epsilon, int max_window);
    explicit ExpertEnsemble(std::vector<OlmarExpert> experts);

    Portfolio combined_portfolio() const;
    BahStepResult step(const PriceRelativeVector& x);

    const std::vector<OlmarExpert>& experts() const { return experts_; }

    // Expert wealths rescaled as if each expert had started with one unit.
    std::vector<double> standalone_wealths() const;

private:
    std::vector<OlmarExpert> experts_;
    std::vector<double> initial_wealths_;
};

inline BahStepResult bah_olmar_step(ExpertEnsemble& ensemble, const PriceRelativeVector& x) {
    return ensemble.step(x);
}

// Hindsight-best expert: index and value of the maximum wealth, ties broken
// toward the smallest index (smallest window).
std::pair<std::size_t, double> max_olmar(std::span<const double> final_wealths);

} // namespace olps
