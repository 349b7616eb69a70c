#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "olps/backtest.hpp"
#include "olps/baselines.hpp"
#include "olps/market_data.hpp"
#include "olps/olmar.hpp"
#include "olps/simplex.hpp"
#include "olps/strategies.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputOptions {
    std::string input_path;
    bool prices = false;
    std::string toy_kind;
    int toy_k = 1;
    int toy_n = 0;
};

struct RunOptions {
    InputOptions input;
    olps::StrategySpec strategy;
    double gamma = 0.0;
    double initial_wealth = 1.0;
    std::string out_dir = ".";
    std::string format = "csv";
    int seed = 0;  // reserved; every algorithm here is deterministic
};

olps::ToyMarketKind parse_toy_kind(std::string kind) {
    for (auto& c : kind) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (kind == "A") return olps::ToyMarketKind::A;
    if (kind == "B") return olps::ToyMarketKind::B;
    if (kind == "C") return olps::ToyMarketKind::C;
    if (kind == "D") return olps::ToyMarketKind::D;
    throw std::invalid_argument("unknown toy market kind: " + kind);
}

olps::MarketSequence load_input(const InputOptions& opts) {
    const bool have_file = !opts.input_path.empty();
    const bool have_toy = !opts.toy_kind.empty();
    if (have_file == have_toy)
        throw std::invalid_argument("exactly one of --input or --toy is required");
    if (have_file)
        return opts.prices ? olps::load_prices_csv(opts.input_path)
                           : olps::load_csv(opts.input_path);
    olps::ToyMarketSpec spec{parse_toy_kind(opts.toy_kind), opts.toy_k, opts.toy_n};
    return olps::generate_toy(spec);
}

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--input", opts.input_path, "CSV of price relatives (or prices with --prices)");
    cmd->add_flag("--prices", opts.prices, "Treat --input rows as close prices");
    cmd->add_option("--toy", opts.toy_kind, "Toy market kind: A, B, C or D");
    cmd->add_option("--k", opts.toy_k, "Run length for toy kind D")->check(CLI::PositiveNumber);
    cmd->add_option("--n", opts.toy_n, "Number of toy periods")->check(CLI::PositiveNumber);
}

void add_strategy_options(CLI::App* cmd, olps::StrategySpec& spec) {
    cmd->add_option("--strategy", spec.name, "One of: market, best_stock, ucrp, bcrp, eg, pamr, olmar, bah_olmar");
    cmd->add_option("--eps", spec.epsilon, "OLMAR reversion threshold (> 1)");
    cmd->add_option("--w", spec.window, "OLMAR moving-average window (>= 2)");
    cmd->add_option("--W", spec.max_window, "Maximum window for bah_olmar experts");
    cmd->add_option("--eg-eta", spec.eg_eta, "EG learning rate");
    cmd->add_option("--pamr-eps", spec.pamr_epsilon, "PAMR mean-reversion threshold");
}

std::string utc_now_iso() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string wealth_curve_csv(const std::vector<olps::BacktestRecord>& records,
                             const std::vector<std::string>& asset_names) {
    std::string out = "t,period_return,cost_factor,wealth";
    for (const auto& name : asset_names) out += ",b_" + name;
    out += '\n';
    for (const auto& rec : records) {
        out += std::to_string(rec.period);
        out += ',';
        out += olps::format_ratio(rec.period_return);
        out += ',';
        out += olps::format_ratio(rec.cost_factor);
        out += ',';
        out += olps::format_ratio(rec.wealth);
        for (double w : rec.portfolio.weights) {
            out += ',';
            out += olps::format_ratio(w);
        }
        out += '\n';
    }
    return out;
}

json wealth_curve_json(const std::vector<olps::BacktestRecord>& records) {
    json rows = json::array();
    for (const auto& rec : records) {
        rows.push_back({{"t", rec.period},
                        {"period_return", rec.period_return},
                        {"cost_factor", rec.cost_factor},
                        {"wealth", rec.wealth},
                        {"portfolio", rec.portfolio.weights}});
    }
    return rows;
}

double final_wealth_of(const olps::MarketSequence& seq, const olps::StrategySpec& spec,
                       double gamma, double initial_wealth) {
    auto strategy = olps::make_strategy(spec, seq);
    const auto records =
        olps::run_backtest(seq, *strategy, olps::BacktestConfig{initial_wealth, gamma});
    return records.back().wealth;
}

int cmd_backtest(const RunOptions& opts) {
    const auto seq = load_input(opts.input);
    if (opts.strategy.name == "olmar" && opts.strategy.window < 3)
        std::cerr << "warning: window size " << opts.strategy.window
                  << " is below the usual minimum of 3\n";

    auto strategy = olps::make_strategy(opts.strategy, seq);
    const olps::BacktestConfig config{opts.initial_wealth, opts.gamma};
    const auto records = olps::run_backtest(seq, *strategy, config);

    fs::create_directories(opts.out_dir);
    const fs::path out_dir(opts.out_dir);

    fs::path curve_path;
    if (opts.format == "json") {
        curve_path = out_dir / "wealth.json";
        write_text_file(curve_path, wealth_curve_json(records).dump(2) + "\n");
    } else {
        curve_path = out_dir / "wealth.csv";
        write_text_file(curve_path, wealth_curve_csv(records, seq.asset_names));
    }

    json report;
    report["strategy"] = strategy->name();
    report["params"] = {{"eps", opts.strategy.epsilon},
                        {"w", opts.strategy.window},
                        {"W", opts.strategy.max_window},
                        {"eg_eta", opts.strategy.eg_eta},
                        {"pamr_eps", opts.strategy.pamr_epsilon}};
    report["config"] = {{"gamma", opts.gamma},
                        {"initial_wealth", opts.initial_wealth},
                        {"seed", opts.seed}};
    report["n"] = records.size();
    report["final_wealth"] = records.back().wealth;

    std::vector<double> net_returns(records.size());
    for (std::size_t t = 0; t < records.size(); ++t)
        net_returns[t] = records[t].period_return * records[t].cost_factor;
    try {
        const auto stats = olps::compute_stats(net_returns, olps::market_returns(seq));
        report["stats"] = {{"mer_strategy", stats.mer_strategy},
                           {"mer_market", stats.mer_market},
                           {"alpha", stats.alpha},
                           {"beta", stats.beta},
                           {"t_statistic", stats.t_statistic},
                           {"p_value", stats.p_value}};
    } catch (const std::exception& e) {
        report["stats_error"] = e.what();
    }

    if (const auto* bah = dynamic_cast<const olps::BahOlmarStrategy*>(strategy.get())) {
        const auto wealths = bah->ensemble().standalone_wealths();
        const auto [index, wealth] = olps::max_olmar(wealths);
        report["max_olmar"] = {{"window", 3 + static_cast<int>(index)}, {"wealth", wealth}};
    }

    report["meta"] = {{"generated_at_utc", utc_now_iso()}};
    const fs::path stats_path = out_dir / "stats.json";
    write_text_file(stats_path, report.dump(2) + "\n");

    std::cout << "final wealth: " << olps::format_ratio(records.back().wealth) << "\n"
              << "wrote " << curve_path.string() << " and " << stats_path.string() << "\n";
    return 0;
}

int cmd_sweep(const RunOptions& opts, const std::string& axis) {
    const auto seq = load_input(opts.input);
    fs::create_directories(opts.out_dir);

    std::vector<std::string> points;
    std::vector<std::future<double>> results;
    auto schedule = [&](std::string point, olps::StrategySpec spec, double gamma) {
        points.push_back(std::move(point));
        results.push_back(std::async(std::launch::async, [&seq, spec, gamma, &opts] {
            return final_wealth_of(seq, spec, gamma, opts.initial_wealth);
        }));
    };

    if (axis == "epsilon") {
        if (opts.strategy.name != "olmar")
            throw std::invalid_argument("the epsilon sweep applies to the olmar strategy");
        for (double eps : {1.1, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
            auto spec = opts.strategy;
            spec.epsilon = eps;
            schedule(olps::format_ratio(eps), spec, opts.gamma);
        }
    } else if (axis == "window") {
        if (opts.strategy.name != "olmar")
            throw std::invalid_argument("the window sweep applies to the olmar strategy");
        for (int w = 3; w <= opts.strategy.max_window; ++w) {
            auto spec = opts.strategy;
            spec.window = w;
            schedule(std::to_string(w), spec, opts.gamma);
        }
        auto bah = opts.strategy;
        bah.name = "bah_olmar";
        schedule("bah", bah, opts.gamma);
    } else if (axis == "cost") {
        for (int i = 0; i <= 10; ++i) {
            const double gamma = static_cast<double>(i) / 1000.0;
            schedule(olps::format_ratio(gamma), opts.strategy, gamma);
        }
    } else {
        throw std::invalid_argument("unknown sweep axis: " + axis);
    }

    std::string table = "axis,point,final_wealth\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        table += axis;
        table += ',';
        table += points[i];
        table += ',';
        table += olps::format_ratio(results[i].get());
        table += '\n';
    }

    const fs::path out_path = fs::path(opts.out_dir) / ("sweep_" + axis + ".csv");
    write_text_file(out_path, table);
    std::cout << table << "wrote " << out_path.string() << "\n";
    return 0;
}

int cmd_toygen(const std::string& kind, int k, int n, const std::string& out_path) {
    const olps::ToyMarketSpec spec{parse_toy_kind(kind), k, n};
    const auto seq = olps::generate_toy(spec);
    if (out_path.empty()) {
        std::cout << olps::to_csv(seq);
    } else {
        olps::write_csv(seq, out_path);
        std::cout << "wrote " << out_path << " (" << seq.num_periods() << " periods)\n";
    }
    return 0;
}

int cmd_project(const std::vector<double>& values) {
    const auto projected = olps::project_to_simplex(values);
    for (std::size_t i = 0; i < projected.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << olps::format_ratio(projected.weights[i]);
    }
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"On-line portfolio selection: mean-reversion strategies, baselines and a "
                 "deterministic backtest engine"};
    app.require_subcommand(1);

    RunOptions backtest_opts;
    auto* backtest = app.add_subcommand("backtest", "Run one strategy over a market sequence");
    add_input_options(backtest, backtest_opts.input);
    add_strategy_options(backtest, backtest_opts.strategy);
    backtest->add_option("--gamma", backtest_opts.gamma,
                         "Proportional transaction cost rate (0.005 = 0.5%)");
    backtest->add_option("--s0", backtest_opts.initial_wealth, "Initial wealth");
    backtest->add_option("--seed", backtest_opts.seed,
                         "Reserved; every algorithm here is deterministic");
    backtest->add_option("--out", backtest_opts.out_dir, "Output directory");
    backtest->add_option("--format", backtest_opts.format, "Wealth curve format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    RunOptions sweep_opts;
    std::string sweep_axis;
    auto* sweep = app.add_subcommand("sweep", "Final wealth across a parameter grid");
    sweep->add_option("--axis", sweep_axis, "One of: epsilon, window, cost")
        ->required()
        ->check(CLI::IsMember({"epsilon", "window", "cost"}));
    add_input_options(sweep, sweep_opts.input);
    add_strategy_options(sweep, sweep_opts.strategy);
    sweep->add_option("--gamma", sweep_opts.gamma, "Fixed cost rate for epsilon/window sweeps");
    sweep->add_option("--s0", sweep_opts.initial_wealth, "Initial wealth");
    sweep->add_option("--out", sweep_opts.out_dir, "Output directory");

    std::string toy_kind;
    int toy_k = 1;
    int toy_n = 0;
    std::string toy_out;
    auto* toygen = app.add_subcommand("toygen", "Write a toy market sequence as CSV");
    toygen->add_option("--kind", toy_kind, "Toy market kind: A, B, C or D")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "a", "b", "c", "d"}));
    toygen->add_option("--k", toy_k, "Run length for kind D")->check(CLI::PositiveNumber);
    toygen->add_option("--n", toy_n, "Number of periods")->required()->check(CLI::PositiveNumber);
    toygen->add_option("--out", toy_out, "Output file (stdout when omitted)");

    std::vector<double> project_values;
    auto* project = app.add_subcommand("project", "Project weights onto the probability simplex");
    project->add_option("values", project_values, "Weights to project")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (backtest->parsed()) return cmd_backtest(backtest_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_axis);
        if (toygen->parsed()) return cmd_toygen(toy_kind, toy_k, toy_n, toy_out);
        if (project->parsed()) return cmd_project(project_values);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
