"""Exact integer determinants by Dodgson condensation with double-crossing repair."""
from .condense import (CondensationStack, FailureSite, OpCounter, condense_once,
                       dodgson_strict, expected_op_bound)
from .crossing import (CrossingPlan, MinorQuad, PivotChoice, apply_repair,
                       build_plan, find_pivot, minor_quad, repaired_entry)
from .driver import RunReport, Strategy, cross_check, determinant, hybrid_det
from .matrix import (ContractViolation, InexactDivisionError, Matrix, Span,
                     delete_row_col, det2x2, interior, submatrix)
from .oracles import (RowColSelection, bareiss_det, cofactor_matrix, jacobi_check,
                      laplace_det)

__version__ = "0.1.0"
