"""Blocks, alcove geometry and parabolic Kazhdan-Lusztig polynomials for the
Brauer algebra ``B_n(delta)``, with a Gram-rank check of predicted
decomposition numbers."""

from .blocks import (BlockKey, BlockSet, block_key, canonical_negative_rep, enumerate_block,
                     same_block, supp, supp2, translation_chain, translation_equivalent)
from .cell import CellModule, cell_basis, cell_dimension, gram_matrix, simple_dim, verify_block
from .diagrams import BrauerDiagram, DiagramCombo, compose
from .errors import BrauerError
from .geometry import (ShiftedPoint, facet_signature, in_fundamental_alcove, length, shift,
                       singularity_degree, unshift)
from .graphs import check_isomorphism, mbs_graph, orbit_graph, par_e_graph, reg_graph_pair
from .kl import KLTable, LaurentPoly, kl_polynomials, predict_decomposition
from .partitions import Partition, is_balanced, parse_partition, transpose

__version__ = "0.1.0"

__all__ = [
    "BlockKey", "BlockSet", "BrauerDiagram", "BrauerError", "CellModule", "DiagramCombo",
    "KLTable", "LaurentPoly", "Partition", "ShiftedPoint", "block_key", "canonical_negative_rep",
    "cell_basis", "cell_dimension", "check_isomorphism", "compose", "enumerate_block",
    "facet_signature", "gram_matrix", "in_fundamental_alcove", "is_balanced", "kl_polynomials",
    "length", "mbs_graph", "orbit_graph", "par_e_graph", "parse_partition",
    "predict_decomposition", "reg_graph_pair", "same_block", "shift", "simple_dim",
    "singularity_degree", "supp", "supp2", "translation_chain", "translation_equivalent",
    "transpose", "unshift", "verify_block",
]
