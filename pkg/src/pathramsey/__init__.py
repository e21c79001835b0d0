"""Edge colorings of graphs that avoid long monochromatic paths, with verification."""

from .affine import build_affine_plane, build_field, color_r, color_r_affine, color_r_inductive
from .coloring import BLUE, RED, Certificate, EdgeColoring, parse_coloring, serialize_coloring
from .config import Config
from .decomp import partition_connected, prune_long_paths, star_decompose
from .graph import Graph, parse_graph, serialize_graph
from .lab import GenSpec, brute_force_forcing, generate, probe_regular
from .partition import PartitionSpec, random_balanced_partition
from .pipeline import ColoringFailure, bound_curve, color_two
from .verify import ColoringReport, verify_coloring

__all__ = [
    "BLUE",
    "RED",
    "Certificate",
    "ColoringFailure",
    "ColoringReport",
    "Config",
    "EdgeColoring",
    "GenSpec",
    "Graph",
    "PartitionSpec",
    "bound_curve",
    "brute_force_forcing",
    "build_affine_plane",
    "build_field",
    "color_r",
    "color_r_affine",
    "color_r_inductive",
    "color_two",
    "generate",
    "parse_coloring",
    "parse_graph",
    "partition_connected",
    "probe_regular",
    "prune_long_paths",
    "random_balanced_partition",
    "serialize_coloring",
    "serialize_graph",
    "star_decompose",
    "verify_coloring",
]
