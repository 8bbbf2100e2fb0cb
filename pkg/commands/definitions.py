"""Subcommand and option definitions for the command-line parser."""

from typing import Any


# Option groups shared by several subcommands
OPTION_GROUPS: dict[str, list[dict[str, Any]]] = {
    "output": [
        {"flags": ["--out"], "help": "Write results to this CSV file"},
        {
            "flags": ["--digits"],
            "type": int,
            "default": 4,
            "help": "Significant digits in console tables (CSV keeps full precision)",
        },
        {"flags": ["--verbose", "-v"], "action": "store_true", "help": "Debug logging"},
    ],
    "solver": [
        {"flags": ["--grid-points"], "type": int, "help": "Log-grid points of the root scan (512)"},
        {"flags": ["--delta-min"], "type": float, "help": "Lower end of the threshold search (1e-6)"},
        {"flags": ["--delta-max"], "type": float, "help": "Upper end of the threshold search (1e8)"},
        {"flags": ["--tol"], "type": float, "help": "Relative residual tolerance (1e-8)"},
        {
            "flags": ["--accelerate"],
            "action": "store_true",
            "help": "Also try direct fixed-point iteration",
        },
    ],
    "grid": [
        {"flags": ["--grid-start"], "type": float, "help": "First regression threshold (0.001)"},
        {"flags": ["--grid-stop"], "type": float, "help": "Last regression threshold (0.999)"},
        {"flags": ["--grid-step"], "type": float, "help": "Threshold step (0.001)"},
    ],
}

COMMANDS: list[dict[str, Any]] = [
    {
        "name": "eval",
        "help": "Evaluate a metric on a score file at a threshold, or on confusion counts",
        "groups": ["output"],
        "one_of": ["--scores", "--counts"],
        "arguments": [
            {"flags": ["--scores"], "help": "Score CSV with header score,label"},
            {"flags": ["--counts"], "help": "Confusion counts n11,n10,n01,n00"},
            {"flags": ["--metric"], "required": True, "help": "Metric, e.g. mcc or f1.5"},
            {
                "flags": ["--threshold"],
                "type": float,
                "default": 0.5,
                "help": "Regression threshold; score >= threshold predicts 1 (0.5)",
            },
        ],
    },
    {
        "name": "sweep",
        "help": "Grid-optimal regression thresholds of several metrics on a score file",
        "groups": ["output", "grid"],
        "arguments": [
            {"flags": ["--scores"], "required": True, "help": "Score CSV with header score,label"},
            {
                "flags": ["--metrics"],
                "required": True,
                "help": "Comma-separated metrics, e.g. f1.5,mcc,frb:c=0:d0=0.1:d1=1",
            },
            {
                "flags": ["--full"],
                "action": "store_true",
                "help": "Emit every grid threshold instead of the optimum only",
            },
        ],
    },
    {
        "name": "solve-lda",
        "help": "Optimal density-ratio threshold under shared-covariance Gaussians",
        "groups": ["output", "solver"],
        "one_of": ["--delta-mahalanobis", "--scenario"],
        "arguments": [
            {"flags": ["--delta-mahalanobis"], "help": "Comma-separated Mahalanobis distances"},
            {"flags": ["--scenario"], "help": "Scenario JSON with equal covariances"},
            {"flags": ["--metric"], "required": True, "help": "Metric to optimize"},
            {"flags": ["--pi"], "required": True, "help": "Comma-separated prevalences"},
        ],
    },
    {
        "name": "solve-qda",
        "help": "Optimal density-ratio threshold under arbitrary Gaussians",
        "groups": ["output", "solver"],
        "arguments": [
            {"flags": ["--scenario"], "required": True, "help": "Scenario JSON"},
            {"flags": ["--metric"], "required": True, "help": "Metric to optimize"},
            {"flags": ["--pi"], "required": True, "help": "Comma-separated prevalences"},
            {
                "flags": ["--no-mc-fallback"],
                "action": "store_true",
                "help": "Fail instead of falling back to Monte Carlo when quadrature fails",
            },
        ],
    },
    {
        "name": "sweep-pi",
        "help": "Optimal threshold as a function of the prevalence",
        "groups": ["output", "solver"],
        "one_of": ["--delta-mahalanobis", "--scenario"],
        "arguments": [
            {"flags": ["--metric"], "required": True, "help": "Metric to optimize"},
            {"flags": ["--delta-mahalanobis"], "type": float, "help": "Mahalanobis distance"},
            {"flags": ["--scenario"], "help": "Scenario JSON"},
            {"flags": ["--pi-grid"], "required": True, "help": "Comma-separated prevalences"},
        ],
    },
    {
        "name": "roc",
        "help": "ROC and recall-vs-(1-precision) curves with metric-optimal points",
        "groups": ["output", "grid"],
        "arguments": [
            {"flags": ["--scores"], "required": True, "help": "Score CSV with header score,label"},
            {"flags": ["--pr-out"], "help": "Write the recall-vs-(1-precision) curve here"},
            {"flags": ["--metrics"], "help": "Metrics whose optimal points are located"},
            {"flags": ["--points-out"], "help": "Write the optimal points here"},
        ],
    },
    {
        "name": "simulate",
        "help": "Gaussian sampling, logistic regression and threshold optimization",
        "groups": ["output"],
        "arguments": [
            {"flags": ["--config"], "required": True, "help": "Simulation JSON"},
        ],
    },
]
