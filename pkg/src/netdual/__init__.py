"""Squarefree monomial ideals of line arrangements: Alexander duality,
Hochster Betti tables, Hilbert series and net detection."""

from .arrangements import (
    LineArrangement,
    NetCandidate,
    RationalLine,
    ceva,
    graphic_flats,
    hessian,
    is_isomorphic,
    l2_from_coordinates,
)
from .catalog import catalog
from .core import (
    GroundSet,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    graph_components,
    induced_subcomplex,
    minimalize,
    monomial,
    sr_complex,
    sr_ideal,
)
from .duality import (
    PrimaryDecomposition,
    alexander_dual,
    dual_complex,
    minimal_cofaces,
    primary_decomposition,
)
from .errors import CrossCheckError, NetdualError, ParseError, SizeLimitError
from .homology import QQ, FieldChoice, HomologyProfile, reduced_homology
from .monomial_os import (
    FlatFamily,
    build_J,
    j_pi,
    j_x,
    kn_ideal,
    quadratic_part,
    split_JY,
)
from .nets import (
    NetVerdict,
    blocks_normal_crossing,
    extra_fibers_required,
    fy_slack,
    net_check,
    net_check_direct,
    net_check_dual,
)
from .oracle import koszul_tor_oracle
from .resolutions import IDEAL, QUOTIENT, BettiTable, betti_table, hochster_betti
from .series import (
    HilbertSeries,
    IntPolynomial,
    cut_polynomial,
    f_polynomial,
    f_vector,
    h_polynomial,
    hilbert_numerator,
    hilbert_series,
    k_polynomial_from_betti,
    linear_strand,
    kn_dual_kpoly_closed_form,
    kn_hilbert_closed_form,
)

__version__ = "0.1.0"
