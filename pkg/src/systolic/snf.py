"""Smith normal form of integer matrices, exact and deterministic.

Arbitrary-precision integers throughout: elimination is the place where
coefficient explosion silently corrupts fixed-width arithmetic, so no numpy
here.  Pivots are chosen by (|value|, Markowitz fill estimate, position),
which keeps the sparse working set small on boundary matrices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix."""

    invariant_factors: tuple[int, ...]
    row_dim: int
    col_dim: int

    def __post_init__(self):
        factors = self.invariant_factors
        if any(d <= 0 for d in factors):
            raise ValueError("invariant factors must be positive")
        if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        if len(factors) > min(self.row_dim, self.col_dim):
            raise ValueError("rank exceeds matrix dimensions")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def factor_product(self) -> int:
        """Product of the invariant factors: the gcd of all rank-size minors."""
        return math.prod(self.invariant_factors)

    @property
    def torsion_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _coerce(matrix, shape):
    """Accept dense row lists, {(i, j): value} mappings, or BoundaryMatrix."""
    if hasattr(matrix, "sparse") and hasattr(matrix, "shape"):
        return dict(matrix.sparse()), matrix.shape
    if isinstance(matrix, dict):
        if shape is None:
            raise ValueError("sparse mapping input requires an explicit shape")
        return {k: v for k, v in matrix.items() if v}, shape
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged dense matrix")
    entries = {
        (i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v
    }
    return entries, (len(rows), ncols)


def smith_normal_form(matrix, shape: tuple[int, int] | None = None) -> SmithForm:
    """Compute the Smith normal form of an integer matrix.

    Input may be a dense sequence of rows, a sparse {(i, j): value} mapping
    with ``shape``, or a boundary matrix.  The result is deterministic for a
    given input.
    """
    entries, (nrows, ncols) = _coerce(matrix, shape)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in entries.items():
        if not isinstance(v, int):
            raise TypeError("matrix entries must be integers")
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, {})[i] = v

    def set_entry(i, j, v):
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, {})[i] = v
        else:
            if i in rows and j in rows[i]:
                del rows[i][j]
                if not rows[i]:
                    del rows[i]
            if j in cols and i in cols[j]:
                del cols[j][i]
                if not cols[j]:
                    del cols[j]

    def row_submul(dst, src, q):
        # row dst -= q * row src
        if not q:
            return
        for j, v in list(rows.get(src, {}).items()):
            set_entry(dst, j, rows.get(dst, {}).get(j, 0) - q * v)

    def col_submul(dst, src, q):
        if not q:
            return
        for i, v in list(cols.get(src, {}).items()):
            set_entry(i, dst, cols.get(dst, {}).get(i, 0) - q * v)

    diagonal: list[int] = []
    while rows:
        pivot = min(
            ((i, j, v) for i, row in rows.items() for j, v in row.items()),
            key=lambda t: (
                abs(t[2]),
                (len(rows[t[0]]) - 1) * (len(cols[t[1]]) - 1),
                t[0],
                t[1],
            ),
        )
        pi, pj, _ = pivot
        # alternately clear the pivot column and row with Euclidean steps
        while True:
            p = rows[pi][pj]
            col_others = [i for i in cols[pj] if i != pi]
            for i in col_others:
                q = cols[pj][i] // p
                row_submul(i, pi, q)
                if pj in rows.get(i, {}):  # remainder became the smaller pivot
                    pi = i
                    break
            else:
                p = rows[pi][pj]
                row_others = [j for j in rows[pi] if j != pj]
                for j in row_others:
                    q = rows[pi][j] // p
                    col_submul(j, pj, q)
                    if j in rows.get(pi, {}):
                        pj = j
                        break
                else:
                    break
        diagonal.append(abs(rows[pi][pj]))
        for j in list(rows.get(pi, {})):
            set_entry(pi, j, 0)
        for i in list(cols.get(pj, {})):
            set_entry(i, pj, 0)

    return SmithForm(_divisibility_chain(diagonal), nrows, ncols)


def _divisibility_chain(values: list[int]) -> tuple[int, ...]:
    """Normalise positive diagonal entries into a divisibility chain."""
    chain = [v for v in values if v]
    changed = True
    while changed:
        changed = False
        chain.sort()
        for a in range(len(chain)):
            for b in range(a + 1, len(chain)):
                if chain[b] % chain[a]:
                    g = math.gcd(chain[a], chain[b])
                    chain[a], chain[b] = g, chain[a] * chain[b] // g
                    changed = True
    return tuple(chain)
