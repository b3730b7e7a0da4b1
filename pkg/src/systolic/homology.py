"""Integer simplicial homology with torsion, plus the triangle/torsion bound.

Betti numbers come from boundary ranks, torsion from the invariant factors
of the next boundary operator.  Homology is unreduced: betti[0] counts the
connected components.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .complexes import BoundaryMatrix, SimplicialComplex, boundary_matrix, face_counts
from .snf import SmithForm, smith_normal_form

# float slack pushed toward "holds": the inequality is a theorem, so only
# rounding of log3 can make it look violated
_LOG_SLACK = 1e-9


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion invariant factors per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def torsion_order(self, k: int) -> int:
        if k < 0 or k >= len(self.torsion):
            return 1
        return math.prod(self.torsion[k])


def homology(complex_: SimplicialComplex) -> HomologySummary:
    """Homology groups H_k = Z^betti(k) + sum Z_d for k = 0..dim."""
    dim = complex_.dim
    if dim is None:
        return HomologySummary((), ())
    counts = face_counts(complex_)
    forms: list[SmithForm | None] = [None] * (dim + 2)
    for k in range(1, dim + 1):
        forms[k] = smith_normal_form(boundary_matrix(complex_, k))
    ranks = [forms[k].rank if forms[k] else 0 for k in range(dim + 2)]
    betti = [counts[k] - ranks[k] - ranks[k + 1] for k in range(dim + 1)]
    torsion = [
        forms[k + 1].torsion_factors if forms[k + 1] else () for k in range(dim + 1)
    ]
    return HomologySummary(tuple(betti), tuple(torsion))


def torsion_order_h1(complex_: SimplicialComplex) -> int:
    """|Tors H_1| of this complex; 1 means torsion-free."""
    if complex_.dim is None or complex_.dim < 2:
        return 1
    return math.prod(smith_normal_form(boundary_matrix(complex_, 2)).torsion_factors)


@dataclass(frozen=True)
class TriangleTorsionReport:
    """Triangle count versus the 2*log3 |Tors H_1| lower bound."""

    s2: int
    torsion_order: int
    lower_bound: float
    holds: bool


def check_s2_torsion_bound(complex_: SimplicialComplex) -> TriangleTorsionReport:
    """Check s_2(X) >= 2 log_3 |Tors H_1(X, Z)|.

    This holds for every complex; a False verdict signals a bug, not a
    property of the input.
    """
    counts = face_counts(complex_)
    s2 = counts[2] if len(counts) > 2 else 0
    order = torsion_order_h1(complex_)
    bound = 2 * math.log(order) / math.log(3)
    return TriangleTorsionReport(s2, order, bound, s2 + _LOG_SLACK >= bound)


def minor_gcd_check(matrix: BoundaryMatrix) -> bool:
    """Verify the determinant-divisor bound for a 2nd boundary matrix.

    Checks (product of invariant factors)^2 <= 3^(number of columns) in
    exact integers, and on matrices with at most 5 columns additionally
    compares the product against the brute-force gcd of all maximal minors.
    """
    if matrix.k != 2:
        raise ValueError("minor gcd check applies to 2nd boundary matrices")
    form = smith_normal_form(matrix)
    product = form.factor_product
    s2 = len(matrix.cols)
    if product * product > 3 ** s2:
        return False
    if s2 <= 5:
        rank, gcd_minors = max_minor_gcd(matrix.dense())
        if (rank, gcd_minors) != (form.rank, product):
            return False
    return True


def max_minor_gcd(dense: list[list[int]]) -> tuple[int, int]:
    """Brute force: largest order with a nonzero minor, and the gcd of those minors.

    Exponential enumeration; intended for small matrices only.
    """
    nrows = len(dense)
    ncols = len(dense[0]) if nrows else 0
    for order in range(min(nrows, ncols), 0, -1):
        gcd_val = 0
        for row_set in combinations(range(nrows), order):
            for col_set in combinations(range(ncols), order):
                sub = [[dense[i][j] for j in col_set] for i in row_set]
                gcd_val = math.gcd(gcd_val, abs(_det(sub)))
        if gcd_val:
            return order, gcd_val
    return 0, 1


def _det(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
