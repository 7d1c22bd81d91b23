"""Reproducing-kernel boundary numerics."""

from ._rkb import (
    Kernel,
    RkbError,
    SelfMap,
    certify_factor,
    compose,
    exp,
    gram,
    iterate,
    jc_report,
    kernel,
    kernel_labels,
    map_labels,
    nat_matrix_eval,
    power,
    product,
    quotient,
    run_cli,
    self_map,
    zeta,
)

__all__ = [
    "Kernel",
    "RkbError",
    "SelfMap",
    "certify_factor",
    "compose",
    "exp",
    "gram",
    "iterate",
    "jc_report",
    "kernel",
    "kernel_labels",
    "map_labels",
    "nat_matrix_eval",
    "power",
    "product",
    "quotient",
    "run_cli",
    "self_map",
    "zeta",
]
