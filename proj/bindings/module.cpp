#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "olps/backtest.hpp"
#include "olps/baselines.hpp"
#include "olps/market_data.hpp"
#include "olps/olmar.hpp"
#include "olps/prediction.hpp"
#include "olps/simplex.hpp"
#include "olps/strategies.hpp"

namespace py = pybind11;

namespace {

olps::ToyMarketKind toy_kind_from_string(std::string kind) {
    for (auto& c : kind) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (kind == "A") return olps::ToyMarketKind::A;
    if (kind == "B") return olps::ToyMarketKind::B;
    if (kind == "C") return olps::ToyMarketKind::C;
    if (kind == "D") return olps::ToyMarketKind::D;
    throw std::invalid_argument("unknown toy market kind: " + kind);
}

std::vector<olps::BacktestRecord> run_named_backtest(const olps::MarketSequence& seq,
                                                     const std::string& strategy, double epsilon,
                                                     int window, int max_window, double eg_eta,
                                                     double pamr_epsilon, double gamma,
                                                     double initial_wealth) {
    olps::StrategySpec spec{strategy, epsilon, window, max_window, eg_eta, pamr_epsilon};
    auto impl = olps::make_strategy(spec, seq);
    return olps::run_backtest(seq, *impl, olps::BacktestConfig{initial_wealth, gamma});
}

} // namespace

PYBIND11_MODULE(_olps, m) {
    m.doc() = "On-line portfolio selection: moving-average reversion strategies, baselines "
              "and a deterministic backtest engine.";

    py::class_<olps::MarketSequence>(m, "MarketSequence")
        .def(py::init<>())
        .def(py::init([](std::vector<std::string> names,
                         std::vector<std::vector<double>> periods) {
                 olps::MarketSequence seq{std::move(names), std::move(periods)};
                 seq.validate();
                 return seq;
             }),
             py::arg("asset_names"), py::arg("periods"))
        .def_readwrite("asset_names", &olps::MarketSequence::asset_names)
        .def_readwrite("periods", &olps::MarketSequence::periods)
        .def_property_readonly("num_assets", &olps::MarketSequence::num_assets)
        .def_property_readonly("num_periods", &olps::MarketSequence::num_periods)
        .def("validate", &olps::MarketSequence::validate)
        .def("__eq__", [](const olps::MarketSequence& a, const olps::MarketSequence& b) {
            return a == b;
        });

    py::class_<olps::BacktestRecord>(m, "BacktestRecord")
        .def_readonly("period", &olps::BacktestRecord::period)
        .def_property_readonly("portfolio",
                               [](const olps::BacktestRecord& r) { return r.portfolio.weights; })
        .def_readonly("period_return", &olps::BacktestRecord::period_return)
        .def_readonly("cost_factor", &olps::BacktestRecord::cost_factor)
        .def_readonly("wealth", &olps::BacktestRecord::wealth)
        .def("__repr__", [](const olps::BacktestRecord& r) {
            return "BacktestRecord(t=" + std::to_string(r.period) +
                   ", wealth=" + olps::format_ratio(r.wealth) + ")";
        });

    py::class_<olps::StatsReport>(m, "StatsReport")
        .def_readonly("n", &olps::StatsReport::n)
        .def_readonly("mer_strategy", &olps::StatsReport::mer_strategy)
        .def_readonly("mer_market", &olps::StatsReport::mer_market)
        .def_readonly("alpha", &olps::StatsReport::alpha)
        .def_readonly("beta", &olps::StatsReport::beta)
        .def_readonly("t_statistic", &olps::StatsReport::t_statistic)
        .def_readonly("p_value", &olps::StatsReport::p_value);

    py::class_<olps::UpdateDiagnostics>(m, "UpdateDiagnostics")
        .def_readonly("lambda_", &olps::UpdateDiagnostics::lambda)
        .def_readonly("prediction_mean", &olps::UpdateDiagnostics::prediction_mean)
        .def_readonly("constraint_value", &olps::UpdateDiagnostics::constraint_value);

    m.def("generate_toy",
          [](const std::string& kind, int n, int k) {
              return olps::generate_toy(olps::ToyMarketSpec{toy_kind_from_string(kind), k, n});
          },
          py::arg("kind"), py::arg("n"), py::arg("k") = 1,
          "Toy cash-plus-stock market: runs of k doublings then k halvings.");
    m.def("load_csv", &olps::load_csv, py::arg("path"));
    m.def("load_prices_csv", &olps::load_prices_csv, py::arg("path"));
    m.def("write_csv", &olps::write_csv, py::arg("sequence"), py::arg("path"));
    m.def("prices_to_relatives", &olps::prices_to_relatives, py::arg("asset_names"),
          py::arg("price_rows"));

    m.def("uniform_portfolio",
          [](std::size_t m_assets) { return olps::Portfolio::uniform(m_assets).weights; },
          py::arg("num_assets"));
    m.def("project_to_simplex",
          [](const std::vector<double>& v) { return olps::project_to_simplex(v).weights; },
          py::arg("weights"), "Euclidean projection onto the probability simplex.");

    m.def("predict_mar",
          [](int window_size, const std::vector<std::vector<double>>& history) {
              olps::PredictionWindow window(window_size);
              for (const auto& x : history) window.observe(x);
              return olps::predict_mar(window);
          },
          py::arg("window_size"), py::arg("history"),
          "Moving-average reversion prediction from recent price relatives.");

    m.def("olmar_update",
          [](const std::vector<double>& portfolio, const std::vector<double>& predicted,
             double epsilon) {
              auto [next, diag] = olps::olmar_update(olps::Portfolio{portfolio}, predicted, epsilon);
              return py::make_tuple(next.weights, diag);
          },
          py::arg("portfolio"), py::arg("predicted"), py::arg("epsilon"));

    m.def("max_olmar",
          [](const std::vector<double>& wealths) { return olps::max_olmar(wealths); },
          py::arg("final_wealths"));

    m.def("market_wealth", &olps::market_wealth, py::arg("sequence"));
    m.def("market_returns", &olps::market_returns, py::arg("sequence"));
    m.def("best_stock", &olps::best_stock, py::arg("sequence"));
    m.def("bcrp",
          [](const olps::MarketSequence& seq, double tol) {
              const auto result = olps::bcrp(seq, tol);
              return py::make_tuple(result.portfolio.weights, result.wealth);
          },
          py::arg("sequence"), py::arg("tol") = 1e-10,
          "Hindsight-optimal constant rebalanced portfolio and its wealth.");

    m.def("run_backtest", &run_named_backtest, py::arg("sequence"), py::arg("strategy") = "olmar",
          py::arg("epsilon") = 10.0, py::arg("window") = 5, py::arg("max_window") = 30,
          py::arg("eg_eta") = 0.05, py::arg("pamr_epsilon") = 0.5, py::arg("gamma") = 0.0,
          py::arg("initial_wealth") = 1.0,
          "Run a named strategy through the backtest engine; returns per-period records.");

    m.def("compute_stats",
          [](const std::vector<double>& strategy_returns, const std::vector<double>& market) {
              return olps::compute_stats(strategy_returns, market);
          },
          py::arg("strategy_returns"), py::arg("market_returns"));
    m.def("upper_tail_p_value", &olps::upper_tail_p_value, py::arg("t"));

    m.def("strategy_names", [] { return olps::strategy_names(); });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
