"""Up-down action of classical and virtual braid diagrams on integer tuples."""

__version__ = "0.1.0"

from .braid_core import (
    Bigon, BraidWord, Kind, Letter, Permutation, concat, embed, find_bigons, format_word,
    identity, is_classical, is_irreducible, is_pure, mirror, parse_word, permutation_of,
    reverse,
)
from .errors import ContractViolation, MaxRepairExceeded, NotInOrbit, UnsupportedDegree
from .families import (
    default_blocks, permutation_braid, torus, torus_action_formula, weaving,
    weaving_action_formula, weaving_pq, weaving_star,
)
from .orbits import OrbitFlavor, count_type_I, count_type_II, in_orbit, orbit_invariants, trace
from .updown import act, act_via_ou, full_coloring, is_isotropy, ou_matrix, strand_counts
from .witness import (
    closure_admits, make_irreducible, pure_witness_theorem, type_matching_permutation,
    witness_classical, witness_virtual,
)
