"""Reconstruction of partial group multiplication tables by the quadrangle criterion."""
from .algebra import (CATALOG, GroupTable, Prop3Witness, cayley_matrix_of, make_group,
                      prop3_witness, validate_prop3_witness, verify_group)
from .oracle import CompletionQuery, complete_all, count_completions, find_stuck_hole_sets
from .reconstructor import Mode, Status, analyze_hole, find_fill, reconstruct, saturate
from .tables import (Cell, CayleyMatrix, PartialMatrix, Quadrangle, border,
                     check_quadrangle_criterion, is_balanced_cayley, is_cayley, is_latin,
                     parse_grid, punch, serialize_grid, writings_of)

__version__ = "0.1.0"
