"""Volume and systole bookkeeping for cube-sleeve assemblies over a graph.

A model of dimension m decomposed into c cubes is hollowed into sleeves of
thickness eps and glued along a c-regular graph; the evaluators here emit
the exact assembly volume, the certified systole lower bound, and the
sublinear upper bounds the construction yields for iterated connected sums.
No geometry is computed: the systole certificate reduces to the graph-side
condition girth * 2 eps > 1, which is checked exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, girth, vertex_window


@dataclass(frozen=True)
class CubicalModel:
    """Dimension m >= 3 and cube count c >= 2m+1 of a cubical decomposition."""

    m: int
    c: int

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("assembly model needs dimension m >= 3")
        if self.c < 2 * self.m + 1:
            raise ValueError(
                f"cube count {self.c} below the feasible regime 2m+1 = {2 * self.m + 1}"
            )


@dataclass(frozen=True)
class AssemblyReport:
    """Certified data of one assembly: exact volume, systole bound, upper bound."""

    m: int
    c: int
    eps: Fraction
    path_scale: int  # floor(1 / (2 eps))
    two_n: int
    graph_girth: int
    volume: Fraction  # exactly 4 m n c eps
    systole_lower_bound: int  # always 1, certified by the girth check
    sublinear_upper_bound: float  # m c ln(c-1) 2n / ln(2n)
    handle_count: int  # n (c-2) + 1


def sleeve_volume_single(model: CubicalModel, eps) -> Fraction:
    """Volume 2 m c eps of one hollowed model; exact in eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("sleeve thickness eps must be positive")
    return 2 * model.m * model.c * eps


def assemble(model: CubicalModel, eps, graph: Graph) -> AssemblyReport:
    """Validate a graph against the assembly preconditions and report.

    Requires: graph c-regular with an even vertex count inside the
    admissible window for l = floor(1/(2 eps)), and girth strictly above
    1/(2 eps).  Each violation is named; success certifies the systole
    lower bound 1 via the distance-decreasing projection onto the graph.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("sleeve thickness eps must be positive")
    if not graph.is_regular(model.c):
        raise ValueError(f"graph is not {model.c}-regular")
    if graph.vertex_count % 2:
        raise ValueError("assembly graph needs an even vertex count 2n")
    threshold = 1 / (2 * eps)
    g = girth(graph)
    if not (g is math.inf or Fraction(g) > threshold):
        raise ValueError(
            f"girth {g} does not exceed 1/(2 eps) = {threshold}; "
            "the systole certificate fails"
        )
    path_scale = int(threshold)  # floor, exact on Fractions
    low, high = vertex_window(model.c, path_scale)
    two_n = graph.vertex_count
    if not low <= two_n <= high:
        raise ValueError(
            f"vertex count {two_n} outside the admissible window [{low}, {high}] "
            f"for degree {model.c}, path scale {path_scale}"
        )
    n = two_n // 2
    volume = 4 * model.m * n * model.c * eps
    return AssemblyReport(
        m=model.m,
        c=model.c,
        eps=eps,
        path_scale=path_scale,
        two_n=two_n,
        graph_girth=int(g),
        volume=volume,
        systole_lower_bound=1,
        sublinear_upper_bound=upper_bound_even(model, n),
        handle_count=n * (model.c - 2) + 1,
    )


def upper_bound_even(model: CubicalModel, n: int) -> float:
    """Upper bound m c ln(c-1) 2n / ln(2n) for the 2n-fold connected sum."""
    if n < 2:
        raise ValueError("even-sum bound needs 2n >= 4")
    two_n = 2 * n
    return model.m * model.c * math.log(model.c - 1) * two_n / math.log(two_n)


def upper_bound_odd(model: CubicalModel, n: int, s_x: float) -> float:
    """Odd multiples: the even bound plus one copy's systolic volume."""
    if s_x < 0:
        raise ValueError("the single-copy systolic volume must be non-negative")
    return upper_bound_even(model, n) + s_x


def asymptotic_constant(model: CubicalModel) -> float:
    """The constant m c ln c governing the k/ln(1+k) regime."""
    return model.m * model.c * math.log(model.c)


def multiple_class_bound(k, constant) -> float:
    """C k / ln(1+k): sublinear upper bound for the k-th multiple of a class."""
    if k < 1:
        raise ValueError("multiple k must be at least 1")
    if constant <= 0:
        raise ValueError("the constant must be positive")
    return constant * k / math.log(1 + k)
