"""Extremal and spectral extremal computations for small forbidden graphs."""
from __future__ import annotations

__version__ = "0.1.0"

from .catalog import catalog, parse_graph
from .errors import CapacityError, InputError, NumericError, SpexError
from .graph import Graph

__all__ = ["CapacityError", "Graph", "InputError", "NumericError", "SpexError", "catalog", "parse_graph"]
