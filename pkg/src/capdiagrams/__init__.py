"""Weyl filtration multiplicities and decomposition numbers for GL_n in
characteristic p via arrow/cap diagram combinatorics, with the transport to
the walled Brauer algebra B_{r,s}(delta)."""

from .caps import CapDiagram, cap_diagram, co_diagram, dagger, is_oriented, overlay
from .characters import (CharacterCombination, mixed_tensor_character, psi,
                         specht_dim, supp1, supp2, tensor_step)
from .diagrams import (ArrowDiagram, DiagramString, arrow_diagram,
                       diagram_string, diagram_to_weight, is_dot_conjugate,
                       normalise_shift, preceq, preceq_oracle, wall_move)
from .errors import (CapdiagError, IncompatibleDiagrams, InvalidParams,
                     NotApplicable, NotDominant, NotInLambdaRS, RankTooSmall,
                     ShapeMismatch)
from .jantzen import JsfTerm, full_jsf, reduced_jsf
from .multiplicities import (DecompositionMatrix, block_below,
                             dagger_duality_check, decomp_number,
                             decomposition_matrix, tilting_mult)
from .walled_brauer import (WalledDiagram, WalledElement,
                            dimension_identity_check, enumerate_diagrams,
                            ideal_rank, multiply, specht_dim_walled,
                            walled_decomp_number)
from .weights import (AffineReflection, DominantWeight, apply_reflection,
                      dot_sort, from_tuple, greatest_hook, in_Lambda_p,
                      in_Lambda_rs, in_Lambda_s1s2, is_p_core, parse_weight,
                      format_weight, rho, to_tuple, weight)

__version__ = "0.1.0"
