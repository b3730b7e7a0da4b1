"""Exact computational backend for systolic-volume bounds.

Integer simplicial homology with torsion, Smith normal forms, group
abelianizations, regular graphs of prescribed girth, sleeve assemblies,
Waring decompositions, recurrence detection, and evaluators for the
closed-form inequalities tying these quantities together.
"""

from .bounds import (
    BoundConstants,
    BoundReport,
    GroupCountReport,
    UpperBoundIngredients,
    abelian_kappa_bounds,
    best_upper_bound,
    best_upper_table,
    finite_pi1_3manifold_lb,
    group_count_bound,
    height_from_torsion,
    height_lb,
    kappa_alpha_scale,
    kappa_upper_from_systole,
    lens_lb,
    load_constants,
    sandwich,
    simvol_lb,
    surface_kappa_bounds,
    systolic_area_upper_from_kappa,
    torsion_lb,
    torsion_lb_dominates_power,
    torus_class_bound,
    waring_nil_bound,
)
from .complexes import (
    BoundaryMatrix,
    MalformedSimplexError,
    NonOrientableError,
    NotPseudomanifoldError,
    OrientationResult,
    PseudomanifoldReport,
    SimplicialComplex,
    boundary_matrix,
    connected_sum,
    dump_complex,
    face_counts,
    from_facets,
    is_admissible_dim2,
    is_pseudomanifold,
    load_complex,
    orient,
    orientation_is_valid,
)
from .corpus import corpus_complex, corpus_complexes, corpus_graph, corpus_list
from .genfun import (
    RationalSequence,
    RecurrenceVerdict,
    SandwichScan,
    conjecture_series,
    detect_linear_recurrence,
    partial_series,
    sandwich_scan,
)
from .graphs import (
    GirthSearchError,
    Graph,
    InfeasibleGraphError,
    MetricGraph,
    construct_regular_girth,
    dump_graph,
    girth,
    load_graph,
    metric_systole,
    moore_bound,
    vertex_window,
)
from .homology import (
    HomologySummary,
    TriangleTorsionReport,
    check_s2_torsion_bound,
    homology,
    max_minor_gcd,
    minor_gcd_check,
    torsion_order_h1,
)
from .presentations import (
    AbelianizedGroup,
    Presentation,
    abelianization,
    commutator,
    cyclic_presentation,
    free_product,
    free_reduce,
    heisenberg_presentation,
    inverse_word,
    parse_presentation,
    t1_lower_heisenberg_cover,
    t1_lower_lens,
    weighted_dimension,
)
from .sleeves import (
    AssemblyReport,
    CubicalModel,
    asymptotic_constant,
    assemble,
    multiple_class_bound,
    sleeve_volume_single,
    upper_bound_even,
    upper_bound_odd,
)
from .snf import SmithForm, smith_normal_form
from .waring import (
    FourthPowerReport,
    WaringCapError,
    WaringDecomposition,
    degrees_for_class,
    greedy_parts,
    min_count,
    min_powers,
    verify_g4,
)

__version__ = "0.1.0"
