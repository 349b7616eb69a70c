#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace olps {

/// Per-period multiplicative price changes, one entry per asset.
using PriceRelativeVector = std::vector<double>;

/// An ordered series of price-relative vectors over a fixed asset universe.
struct MarketSequence {
    std::vector<std::string> asset_names;
    std::vector<PriceRelativeVector> periods;

    std::size_t num_assets() const { return asset_names.size(); }
    std::size_t num_periods() const { return periods.size(); }

    // Throws std::invalid_argument if an invariant is broken: at least two
    // assets, at least one period, rectangular rows, strictly positive and
    // finite entries.
    void validate() const;

    bool operator==(const MarketSequence&) const = default;
};

enum class ToyMarketKind { A, B, C, D };

// Cash plus one volatile stock whose relatives alternate runs of k doublings
// with runs of k halvings, starting with the doubling run. Kinds A/B/C fix
// k = 1/2/3; kind D takes k from run_length.
struct ToyMarketSpec {
    ToyMarketKind kind = ToyMarketKind::A;
    int run_length = 1;
    int periods = 0;
};

MarketSequence generate_toy(const ToyMarketSpec& spec);

// CSV schema: UTF-8, comma separated, header row of asset names, one period
// per row, decimal ratios, no index column.
MarketSequence load_csv(const std::filesystem::path& path);
void write_csv(const MarketSequence& seq, const std::filesystem::path& path);
std::string to_csv(const MarketSequence& seq);

// Converts n+1 rows of positive close prices into n price-relative periods.
MarketSequence prices_to_relatives(std::vector<std::string> asset_names,
                                   const std::vector<std::vector<double>>& price_rows);

// Reads a CSV of close prices and converts it via prices_to_relatives.
MarketSequence load_prices_csv(const std::filesystem::path& path);

// Serializes a ratio with enough digits to round-trip exactly.
std::string format_ratio(double value);

} // namespace olps
