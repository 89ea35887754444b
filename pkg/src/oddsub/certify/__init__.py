"""Constructive certificates for lower bounds on f_o, and counterexample builders."""

from .bipartite import BoundNotAchieved, bipartite_subgraph_cert, is_bipartite_no_isolated
from .certificate import (
    Certificate,
    CertificateError,
    PreconditionError,
    odd_cert_cycle,
    odd_cert_path,
    revalidate,
)
from .counterexample import ViolationRecord, counterexample_for_order, order_split
from .factors import Factor, check_factor, factor_23, petersen_two_factor
from .pipelines import clawfree_cert, linegraph_cert, linegraph_cert_extended, planar_reduction

__all__ = [
    "BoundNotAchieved",
    "Certificate",
    "CertificateError",
    "Factor",
    "PreconditionError",
    "ViolationRecord",
    "bipartite_subgraph_cert",
    "check_factor",
    "clawfree_cert",
    "counterexample_for_order",
    "factor_23",
    "is_bipartite_no_isolated",
    "linegraph_cert",
    "linegraph_cert_extended",
    "odd_cert_cycle",
    "odd_cert_path",
    "order_split",
    "petersen_two_factor",
    "planar_reduction",
    "revalidate",
]
