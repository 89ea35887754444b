"""Odd induced subgraphs: exact solver, constructive certificates, counterexample checks."""

from .graph import Graph, GraphError, build_graph, is_odd_induced, line_graph
from .oracle import OracleResult, fk_exact, fo_exact

__all__ = ["Graph", "GraphError", "OracleResult", "build_graph", "fk_exact", "fo_exact", "is_odd_induced", "line_graph"]
__version__ = "0.1.0"
