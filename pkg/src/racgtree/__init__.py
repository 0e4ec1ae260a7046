"""Decide when a triangle-free right-angled Coxeter group is quasiisometric
to a tree RAAG, and build the visible RAAG subgroup when it is."""

from racgtree.classify import Classification, classify
from racgtree.construction import FidlConstruction, assemble
from racgtree.cuts import Cut, Suspension
from racgtree.cylinders import GraphOfCylinders, annotate, graph_of_cylinders
from racgtree.fixtures import fixture
from racgtree.graph import Graph, parse_graph, precondition_gate
from racgtree.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "Cut",
    "FidlConstruction",
    "Graph",
    "GraphOfCylinders",
    "Suspension",
    "annotate",
    "assemble",
    "classify",
    "fixture",
    "graph_of_cylinders",
    "parse_graph",
    "precondition_gate",
]
