"""On-line portfolio selection: moving-average reversion strategies,
baselines, and a deterministic backtest engine."""

from ._olps import (
    BacktestRecord,
    MarketSequence,
    StatsReport,
    UpdateDiagnostics,
    __version__,
    bcrp,
    best_stock,
    compute_stats,
    generate_toy,
    load_csv,
    load_prices_csv,
    market_returns,
    market_wealth,
    max_olmar,
    olmar_update,
    predict_mar,
    prices_to_relatives,
    project_to_simplex,
    run_backtest,
    strategy_names,
    uniform_portfolio,
    upper_tail_p_value,
    write_csv,
)

__all__ = [
    "BacktestRecord",
    "MarketSequence",
    "StatsReport",
    "UpdateDiagnostics",
    "__version__",
    "bcrp",
    "best_stock",
    "compute_stats",
    "generate_toy",
    "load_csv",
    "load_prices_csv",
    "market_returns",
    "market_wealth",
    "max_olmar",
    "olmar_update",
    "predict_mar",
    "prices_to_relatives",
    "project_to_simplex",
    "run_backtest",
    "strategy_names",
    "uniform_portfolio",
    "upper_tail_p_value",
    "write_csv",
]
