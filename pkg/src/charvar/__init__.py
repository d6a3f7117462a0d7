"""Exact computational Lie theory for free-group character varieties.

Subpackages:
  rootsys    - root systems, Dynkin diagrams, classification
  groups     - reductive group descriptors, centers, CI decision
  subalg     - Levi and Borel-de Siebenthal subalgebra tables
  bounds     - codimension lower bounds and singular-locus report
  homotopy   - pi_k of simple groups and of the good locus
  localmodel - slice weight profiles and link homology support
  cli        - command-line front end
"""

from .bounds import (
    CodimReport,
    SingularLocusReport,
    Verdict,
    c_pasbon_lower,
    classify_singular_locus,
    codim_bad_lower,
    codim_red_lower,
    codim_report,
    stable_range,
)
from .errors import CharvarError
from .groups import (
    FgAbelianGroup,
    GroupDescriptor,
    Isogeny,
    center_group,
    is_ci,
    min_simple_rank,
    parse_group,
    pi1,
    pi1_adjoint,
)
from .homotopy import (
    HomotopyDatabase,
    HomotopyResult,
    Validity,
    fga_direct_sum,
    fga_power,
    good_locus_homotopy,
    load_database,
    pi_simple,
)
from .localmodel import (
    HomologySupport,
    WeightProfile,
    homology_support,
    is_sphere_like,
    is_topologically_singular,
    parabolic_weights,
)
from .rootsys import (
    DynkinDiagram,
    DynkinEdge,
    SimpleType,
    cartan_matrix,
    classify_diagram,
    diagram_of,
    dimension,
    extended_diagram,
    highest_root,
    positive_roots,
)
from .subalg import (
    BdSRecord,
    LeviRecord,
    bds_table,
    lattice_index,
    levi_table,
    min_bds_codim,
    min_levi_codim,
)

__version__ = "0.1.0"
