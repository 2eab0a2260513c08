from .problems import (
    KINDS,
    LayerBound,
    MaximizerClass,
    Problem,
    SearchReport,
    bound_for,
    check_layer_inequality,
    classify_maximizers,
    enumerate_shifted,
    solve,
)

__all__ = [
    "KINDS",
    "LayerBound",
    "MaximizerClass",
    "Problem",
    "SearchReport",
    "bound_for",
    "check_layer_inequality",
    "classify_maximizers",
    "enumerate_shifted",
    "solve",
]
