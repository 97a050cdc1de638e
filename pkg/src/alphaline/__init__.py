"""Independence numbers of graphs and their line graphs.

Exact solvers for alpha(G), nu(G) and alpha(L(G)), generators for the wheel,
helm, fan, sun, sunlet and armed-crown families (plus complete, complete
bipartite, path and cycle graphs), their closed-form predictions, and a
verification harness that checks one against the other.
"""

from .families import Family, FamilyParamError, FamilySpec, generate, parse_family_range
from .formulas import Prediction, predict
from .graph import (
    EdgeLabel,
    Graph,
    GraphError,
    SelfLoopError,
    VertexRangeError,
    build_graph,
    degree_sequence,
    line_graph,
)
from .solvers import (
    BudgetExhausted,
    SizeLimitError,
    SolveResult,
    alpha_line,
    matching_bruteforce,
    max_matching,
    mis_bruteforce,
    mis_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "EdgeLabel",
    "Family",
    "FamilyParamError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "Prediction",
    "SelfLoopError",
    "SizeLimitError",
    "SolveResult",
    "VertexRangeError",
    "alpha_line",
    "build_graph",
    "degree_sequence",
    "generate",
    "line_graph",
    "matching_bruteforce",
    "max_matching",
    "mis_bruteforce",
    "mis_exact",
    "parse_family_range",
    "predict",
]
