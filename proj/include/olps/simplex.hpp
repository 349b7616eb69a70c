#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace olps {

/// Pre-projection weights; entries may be negative or exceed one.
using UnconstrainedWeights = std::vector<double>;

/// A point on the probability simplex: nonnegative weights summing to one.
struct Portfolio {
    std::vector<double> weights;

    static Portfolio uniform(std::size_t num_assets);

    std::size_t size() const { return weights.size(); }
    double dot(std::span<const double> x) const;
    bool valid(double tol = 1e-10) const;

    bool operator==(const Portfolio&) const = default;
};

// Euclidean projection onto the simplex. The support is located with an
// expected-linear-time pivot pass; the threshold and normalizer are then
// reduced in descending value order so the result is invariant under
// coordinate permutations. Weights below 1e-12 are clamped to zero and the
// portfolio renormalized. Inputs already on the simplex are returned
// unchanged.
Portfolio project_to_simplex(std::span<const double> v);

} // namespace olps
