#include "olps/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace olps {

namespace {

double median3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

} // namespace

Portfolio Portfolio::uniform(std::size_t num_assets) {
    if (num_assets == 0) throw std::invalid_argument("portfolio needs at least one asset");
    Portfolio p;
    p.weights.assign(num_assets, 1.0 / static_cast<double>(num_assets));
    return p;
}

double Portfolio::dot(std::span<const double> x) const {
    if (x.size() != weights.size())
        throw std::invalid_argument("dimension mismatch in portfolio dot product");
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * x[i];
    return acc;
}

bool Portfolio::valid(double tol) const {
    if (weights.empty()) return false;
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) return false;
        sum += w;
    }
    return std::abs(sum - 1.0) <= tol;
}

Portfolio project_to_simplex(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite entry in projection input");
    if (v.size() == 1) return Portfolio{{1.0}};

    // Already a simplex point: return it unchanged (keeps the map idempotent).
    {
        double sum = 0.0;
        bool nonneg = true;
        for (double x : v) {
            if (x < 0.0) {
                nonneg = false;
                break;
            }
            sum += x;
        }
        if (nonneg && std::abs(sum - 1.0) <= 1e-12)
            return Portfolio{std::vector<double>(v.begin(), v.end())};
    }

    // Pivot pass: locate the support (entries above the final threshold)
    // without sorting the whole vector. Confirmed support values accumulate
    // in u[0, lo).
    std::vector<double> u(v.begin(), v.end());
    std::size_t lo = 0;
    std::size_t hi = u.size();
    double acc_sum = 0.0;
    std::size_t acc_count = 0;
    while (lo < hi) {
        const double pivot = median3(u[lo], u[lo + (hi - lo) / 2], u[hi - 1]);
        auto gt_end =
            std::partition(u.begin() + lo, u.begin() + hi, [&](double a) { return a > pivot; });
        auto eq_end = std::partition(gt_end, u.begin() + hi, [&](double a) { return a == pivot; });
        const auto gt_count = static_cast<std::size_t>(gt_end - (u.begin() + lo));
        const auto eq_count = static_cast<std::size_t>(eq_end - gt_end);
        double gt_sum = 0.0;
        for (auto it = u.begin() + lo; it != gt_end; ++it) gt_sum += *it;
        // pivot is in the support iff sum over {x >= pivot} of (x - pivot) < 1
        const double slack =
            acc_sum + gt_sum - static_cast<double>(acc_count + gt_count) * pivot;
        if (slack < 1.0) {
            acc_sum += gt_sum + pivot * static_cast<double>(eq_count);
            acc_count += gt_count + eq_count;
            lo += gt_count + eq_count;
        } else {
            hi = lo + gt_count;
        }
    }

    // Threshold and normalizer are reduced over the support in descending
    // value order, so permuted inputs produce bitwise identical outputs.
    std::sort(u.begin(), u.begin() + acc_count, std::greater<>());
    double support_sum = 0.0;
    for (std::size_t i = 0; i < acc_count; ++i) support_sum += u[i];
    const double tau = (support_sum - 1.0) / static_cast<double>(acc_count);

    constexpr double kClamp = 1e-12;
    double norm = 0.0;
    for (std::size_t i = 0; i < acc_count; ++i) {
        const double w = u[i] - tau;
        if (w >= kClamp) norm += w;
    }

    Portfolio out;
    out.weights.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = v[i] - tau;
        out.weights[i] = (w >= kClamp) ? w / norm : 0.0;
    }
    return out;
}

} // namespace olps
