#pragma once

// Independent reference computations used by the unit and acceptance suites.
// Everything here deliberately avoids the library's own code paths for the
// quantity it checks.

#include <random>
#include <span>
#include <vector>

#include "olps/market_data.hpp"

namespace olps::testing {

// Sort-based simplex projection: full descending sort, prefix-sum scan for
// the support size. Mirrors the library's clamp-and-renormalize convention.
std::vector<double> project_simplex_sorted(std::span<const double> v);

// Euclidean projection of b onto {simplex} ∩ {b.xhat >= eps}. Uses the KKT
// form b(lambda) = P_simplex(b + lambda*xhat) and bisects on the scalar dual,
// since b(lambda).xhat is monotone. Requires a feasible intersection.
std::vector<double> qp_project(const std::vector<double>& b, const std::vector<double>& xhat,
                               double eps);

// Moving-average prediction computed in price space: given price rows
// p_0..p_T, returns MA_T(w') / p_T with w' = min(w, T+1).
std::vector<double> predict_from_prices(const std::vector<std::vector<double>>& prices, int w);

// Exhaustive 2-asset search for the best constant rebalanced portfolio:
// returns the best mean-log objective over b_2 in {0, step, ..., 1}.
double grid_bcrp_objective(const MarketSequence& seq, double step);

std::vector<double> random_simplex_point(std::mt19937& rng, std::size_t m);
std::vector<double> random_relatives(std::mt19937& rng, std::size_t m, double sigma = 0.3);

} // namespace olps::testing
