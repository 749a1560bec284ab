"""Girth approximation: stop-early BFS, greedy hitting sets, and the
subquadratic / near-linear sampling schemes, with exact oracles."""
from .approx import (
    ApproxResult,
    TheoremOneParams,
    TheoremTwoParams,
    algorithm_a,
    algorithm_a_det,
    corollary_params,
    theorem_one,
    theorem_one_bound,
    theorem_two,
    theorem_two_bound,
    verify_corollary_arithmetic,
)
from .cycles import (
    BallRadiusTable,
    CycleWitness,
    SearchOutcome,
    ball_size,
    bfs_cycle,
    exact_girth,
    girth_edge_oracle,
    itai_rodeh_additive,
    radius_table,
)
from .generators import GeneratorSpec, generate
from .graph import EdgeList, Graph, GraphError, build_graph, connected_and_cyclic, parse_edge_list
from .hitting import HittingSet, SetSystem, closest_node_sets, greedy_hitting_set

__version__ = "0.1.0"
