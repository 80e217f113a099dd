"""sil: exact symbolic powers of monomial ideals.

Irredundant irreducible and primary decomposition, symbolic powers and
their comparison with ordinary powers, the standard-gradedness
classification for codimension-2 generically-complete-intersection
ideals through edge-weighted graphs, degreewise searches for minimal
generators of the symbolic power algebra, and the rational-cone
description of the integral closure of that algebra together with its
degree bounds.  All arithmetic is exact.
"""

from ._version import __version__
from .algebra import (
    AlgebraGenerators,
    ConjectureReport,
    DegreeResult,
    algebra_generators_up_to,
    conjecture_experiment,
    degree_of_algebra,
    fixture_goodexample,
    fixture_two_edge,
    probe_window,
)
from .closure import (
    ClosureBoundInput,
    ConeDescription,
    closure_algebra_generators,
    closure_component,
    closure_degree,
    closure_membership,
    cone_of,
    upper_bound_formula,
)
from .decompose import (
    Decomposition,
    IrreducibleComponent,
    PrimaryComponent,
    decompose,
    irreducible_decomposition,
    primary_grouping,
)
from .graphs import (
    BipartiteCertificate,
    ClassificationResult,
    EdgeWeightedGraph,
    StructureError,
    WeightedEdge,
    bipartite_lower_bound,
    classify_standard_graded,
    graph_from_ideal,
    ideal_from_graph,
    is_bipartite,
    trivial_modification_of,
    vertex_cover_ideal,
)
from .monomials import (
    ContextMismatchError,
    Monomial,
    MonomialIdeal,
    SubstitutionVector,
    VariableContext,
    minimalize,
    power_membership_floor,
)
from .symbolic import (
    powers_coincide,
    symbolic_membership,
    symbolic_power,
    symbolic_witness,
)
from .textio import (
    IdealExpression,
    ParseError,
    ReportDocument,
    emit_json,
    parse_ideal,
    parse_monomial,
    render_ideal,
    render_monomial,
)

__all__ = [name for name in dir() if not name.startswith("_")]
