"""Exact halving lines, underlying geographs and their connected components."""
from ._kernels import BACKEND
from .audit import AuditReport, CheckResult, audit
from .chains import Chain, ChainDecomposition, chain_decomposition
from .constructions import CrossResult, GeneratorSpec, cross, generate, segmentarize
from .engine import (
    ComponentPartition, Direction, Geograph, OrientedGeograph, choose_direction, components,
    halves, halving_edges, halving_edges_bruteforce, is_halving_pair, left_degree,
    orient_geograph, right_degree,
)
from .exact import DirectedLine, Point, PointConfig, Side, affine_apply, g_balance, orient, side_of

__all__ = [
    "BACKEND", "AuditReport", "CheckResult", "audit", "Chain", "ChainDecomposition",
    "chain_decomposition", "CrossResult", "GeneratorSpec", "cross", "generate", "segmentarize",
    "ComponentPartition", "Direction", "Geograph", "OrientedGeograph", "choose_direction",
    "components", "halves", "halving_edges", "halving_edges_bruteforce", "is_halving_pair",
    "left_degree", "orient_geograph", "right_degree", "DirectedLine", "Point", "PointConfig",
    "Side", "affine_apply", "g_balance", "orient", "side_of",
]
