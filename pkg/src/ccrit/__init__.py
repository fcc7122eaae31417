"""Executable toolkit for 2-crossing-critical graphs."""
from __future__ import annotations

from .graph import DegenerateInputError, GraphError, Multigraph, contract_set, suppress_degree_two
from .formats import ParseError, decode_graph, encode_graph
from .canon import canonical_form

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "GraphError",
    "Multigraph",
    "ParseError",
    "canonical_form",
    "contract_set",
    "decode_graph",
    "encode_graph",
    "suppress_degree_two",
]
