"""Toll walk transit functions, betweenness axioms and their graph-class characterizations."""

from .errors import BudgetExceeded, ContractError, DisconnectedGraphError, ParseError, TransitError
from .graphs import Graph, contains_induced, distances, from_edge_list, from_graph6, separates, to_edge_list, to_graph6
from .catalog import catalog
from .tollwalk import toll_interval, toll_interval_oracle, toll_transit
from .transit import TransitFunction, make_transit_function, underlying_graph
from .axioms import AXIOM_IDS, AxiomVerdict, check_axiom, check_axioms

__all__ = [
    "AXIOM_IDS",
    "AxiomVerdict",
    "BudgetExceeded",
    "ContractError",
    "DisconnectedGraphError",
    "Graph",
    "ParseError",
    "TransitError",
    "TransitFunction",
    "catalog",
    "check_axiom",
    "check_axioms",
    "contains_induced",
    "distances",
    "from_edge_list",
    "from_graph6",
    "make_transit_function",
    "separates",
    "to_edge_list",
    "to_graph6",
    "toll_interval",
    "toll_interval_oracle",
    "toll_transit",
    "underlying_graph",
]
