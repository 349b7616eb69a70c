#include "olps/market_data.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace olps {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string token;
    std::stringstream ss(line);
    while (std::getline(ss, token, delim)) out.push_back(trim(token));
    if (!line.empty() && line.back() == delim) out.push_back("");
    return out;
}

double parse_ratio(const std::string& token, const std::string& where) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty())
        throw std::invalid_argument(where + ": invalid number '" + token + "'");
    if (!std::isfinite(value) || value <= 0.0)
        throw std::invalid_argument(where + ": non-positive price relative '" + token + "'");
    return value;
}

struct CsvMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
};

// Shared reader for relative- and price-valued files; entries must be
// strictly positive either way.
CsvMatrix read_positive_csv(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw std::invalid_argument("input file not found: " + path.string());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());

    CsvMatrix matrix;
    std::string line;
    bool have_header = false;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        if (!have_header) {
            matrix.names = split(line, ',');
            if (matrix.names.size() < 2)
                throw std::invalid_argument(path.string() +
                                            ": header must name at least 2 assets");
            for (const auto& name : matrix.names)
                if (name.empty())
                    throw std::invalid_argument(path.string() + ": empty asset name in header");
            have_header = true;
            continue;
        }
        ++row_index;
        const auto tokens = split(line, ',');
        if (tokens.size() != matrix.names.size()) {
            std::ostringstream msg;
            msg << path.string() << ": row " << row_index << ": ragged row (expected "
                << matrix.names.size() << " fields, got " << tokens.size() << ")";
            throw std::invalid_argument(msg.str());
        }
        std::vector<double> row(tokens.size());
        for (std::size_t c = 0; c < tokens.size(); ++c) {
            std::ostringstream where;
            where << path.string() << ": row " << row_index << ", column " << (c + 1);
            row[c] = parse_ratio(tokens[c], where.str());
        }
        matrix.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument(path.string() + ": empty CSV, missing header");
    if (matrix.rows.empty()) throw std::invalid_argument(path.string() + ": no data rows");
    return matrix;
}

} // namespace

void MarketSequence::validate() const {
    if (asset_names.size() < 2)
        throw std::invalid_argument("market sequence needs at least 2 assets");
    if (periods.empty()) throw std::invalid_argument("market sequence needs at least 1 period");
    for (std::size_t t = 0; t < periods.size(); ++t) {
        if (periods[t].size() != asset_names.size()) {
            std::ostringstream msg;
            msg << "period " << (t + 1) << ": ragged row (expected " << asset_names.size()
                << " entries, got " << periods[t].size() << ")";
            throw std::invalid_argument(msg.str());
        }
        for (std::size_t i = 0; i < periods[t].size(); ++i) {
            const double v = periods[t][i];
            if (!std::isfinite(v) || v <= 0.0) {
                std::ostringstream msg;
                msg << "period " << (t + 1) << ", column " << (i + 1)
                    << ": non-positive price relative";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

MarketSequence generate_toy(const ToyMarketSpec& spec) {
    if (spec.periods < 1) throw std::invalid_argument("toy market needs at least 1 period");
    int k = 0;
    switch (spec.kind) {
        case ToyMarketKind::A: k = 1; break;
        case ToyMarketKind::B: k = 2; break;
        case ToyMarketKind::C: k = 3; break;
        case ToyMarketKind::D:
            k = spec.run_length;
            if (k < 1) throw std::invalid_argument("toy market D needs run length k >= 1");
            break;
    }
    MarketSequence seq;
    seq.asset_names = {"CASH", "STOCK"};
    seq.periods.reserve(static_cast<std::size_t>(spec.periods));
    for (int t = 0; t < spec.periods; ++t) {
        const bool rising = (t % (2 * k)) < k;
        seq.periods.push_back({1.0, rising ? 2.0 : 0.5});
    }
    return seq;
}

std::string format_ratio(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string to_csv(const MarketSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.asset_names.size(); ++i) {
        if (i) out += ',';
        out += seq.asset_names[i];
    }
    out += '\n';
    for (const auto& row : seq.periods) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_ratio(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const MarketSequence& seq, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << to_csv(seq);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

MarketSequence load_csv(const std::filesystem::path& path) {
    auto matrix = read_positive_csv(path);
    MarketSequence seq{std::move(matrix.names), std::move(matrix.rows)};
    seq.validate();
    return seq;
}

MarketSequence prices_to_relatives(std::vector<std::string> asset_names,
                                   const std::vector<std::vector<double>>& price_rows) {
    if (price_rows.size() < 2)
        throw std::invalid_argument("need at least 2 price rows to form relatives");
    const std::size_t m = asset_names.size();
    for (std::size_t r = 0; r < price_rows.size(); ++r) {
        if (price_rows[r].size() != m)
            throw std::invalid_argument("price row " + std::to_string(r + 1) +
                                        " does not match the asset count");
        for (double p : price_rows[r])
            if (!std::isfinite(p) || p <= 0.0)
                throw std::invalid_argument("non-positive price in row " + std::to_string(r + 1));
    }
    MarketSequence seq;
    seq.asset_names = std::move(asset_names);
    seq.periods.reserve(price_rows.size() - 1);
    for (std::size_t r = 1; r < price_rows.size(); ++r) {
        PriceRelativeVector rel(m);
        for (std::size_t i = 0; i < m; ++i) rel[i] = price_rows[r][i] / price_rows[r - 1][i];
        seq.periods.push_back(std::move(rel));
    }
    seq.validate();
    return seq;
}

MarketSequence load_prices_csv(const std::filesystem::path& path) {
    auto matrix = read_positive_csv(path);
    if (matrix.rows.size() < 2)
        throw std::invalid_argument(path.string() + ": need at least 2 price rows");
    return prices_to_relatives(std::move(matrix.names), matrix.rows);
}

} // namespace olps
