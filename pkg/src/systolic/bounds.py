"""Closed-form lower/upper bound evaluators for systolic quantities.

The universal constants in these inequalities are not known numerically;
they are explicit inputs defaulting to 1.0 and outputs are tagged with the
constants' provenance so illustrative values are never mistaken for real
ones.  All "log" here is the natural logarithm.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction

_REL_SLACK = 1e-12

# fixed constants of the simplicial-complexity upper bound and its alpha scale
KAPPA_UPPER_C = 62500 * 25 / 3
KAPPA_UPPER_C_PRIME = 1 + math.log(25)
SYSTOLIC_AREA_FLOOR = math.pi / 16


@dataclass(frozen=True)
class BoundConstants:
    """User-supplied universal constants; defaults are illustrative only."""

    m: int = 3
    cm: float = 1.0  # height/torsion lower-bound constant
    cm_prime: float = 1.0  # exponential-correction constant
    cm_second: float = 1.0  # simplicial-volume lower-bound constant
    a: float = 1.0  # 3-manifold bound constant
    b: float = 1.0  # 3-manifold exponential-correction constant
    pair_lower: float = 1.0  # class-dependent sandwich lower constant
    pair_upper: float = 1.0  # class-dependent sandwich upper constant
    sigma_m: float | None = None  # infimum of systolic volume in dimension m; unknown
    torus_volume: float | None = None  # systolic volume of the m-torus; unknown
    provenance: str = "illustrative-defaults"

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("dimension m must be a positive integer")
        for field in ("cm", "cm_prime", "cm_second", "a", "b", "pair_lower", "pair_upper"):
            if getattr(self, field) <= 0:
                raise ValueError(f"constant {field} must be positive")
        for field in ("sigma_m", "torus_volume"):
            value = getattr(self, field)
            if value is not None and value <= 0:
                raise ValueError(f"constant {field} must be positive when provided")


def load_constants(path: str) -> BoundConstants:
    """Load constants from a JSON file; missing keys keep their defaults."""
    with open(path) as handle:
        data = json.load(handle)
    constants = BoundConstants(**{k: v for k, v in data.items() if k != "provenance"})
    return replace(constants, provenance=str(path))


@dataclass(frozen=True)
class BoundReport:
    """Named lower and upper bound values for one quantity."""

    name: str
    inputs: tuple[tuple[str, float], ...]
    lower_bounds: tuple[tuple[str, float], ...]
    upper_bounds: tuple[tuple[str, float], ...]

    @property
    def consistent(self) -> bool:
        """max lower <= min upper, with relative float slack; vacuous if one side empty."""
        if not self.lower_bounds or not self.upper_bounds:
            return True
        low = max(v for _, v in self.lower_bounds)
        high = min(v for _, v in self.upper_bounds)
        return low <= high * (1 + _REL_SLACK) + _REL_SLACK


def height_lb(h, constants: BoundConstants = BoundConstants()) -> float:
    """Lower bound C_m h / exp(C'_m sqrt(ln h)) from the simplicial height."""
    if h < 2:
        raise ValueError("simplicial height must be at least 2")
    return constants.cm * h / math.exp(constants.cm_prime * math.sqrt(math.log(h)))


def simvol_lb(v, constants: BoundConstants = BoundConstants()) -> float:
    """Lower bound C''_m v / (ln(2+v))^m from the simplicial volume."""
    if v < 0:
        raise ValueError("simplicial volume must be non-negative")
    return constants.cm_second * v / math.log(2 + v) ** constants.m


def torsion_lb(t1, constants: BoundConstants = BoundConstants()) -> float:
    """Lower bound C_m ln t1 / exp(C'_m sqrt(ln ln t1)) from 1-torsion."""
    if t1 < 3:
        raise ValueError("torsion order must be at least 3 (ln ln must be positive)")
    log_t = math.log(t1)
    return constants.cm * log_t / math.exp(constants.cm_prime * math.sqrt(math.log(log_t)))


def torsion_lb_dominates_power(t1, epsilon, constants: BoundConstants = BoundConstants()) -> bool:
    """Whether (ln t1)^(1-epsilon) <= torsion_lb(t1) at these constants."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return math.log(t1) ** (1 - epsilon) <= torsion_lb(t1, constants) * (1 + _REL_SLACK)


def height_from_torsion(t1) -> float:
    """Height lower bound 2 log_3 t1 implied by the 1-torsion."""
    if t1 < 1:
        raise ValueError("torsion order is a positive integer")
    return 2 * math.log(t1) / math.log(3)


def sandwich(k, constants: BoundConstants = BoundConstants()) -> BoundReport:
    """Sandwich for the k-th multiple of a class with positive simplicial volume.

    lower = pair_lower * k / (ln(1+k))^m, upper = pair_upper * k / ln(1+k).
    """
    if k < 1:
        raise ValueError("multiple k must be at least 1")
    log1k = math.log(1 + k)
    lower = constants.pair_lower * k / log1k ** constants.m
    upper = constants.pair_upper * k / log1k
    return BoundReport(
        name="multiple-class-sandwich",
        inputs=(("k", float(k)), ("m", float(constants.m))),
        lower_bounds=(("k-over-polylog", lower),),
        upper_bounds=(("k-over-log", upper),),
    )


def lens_lb(n, constants: BoundConstants = BoundConstants()) -> float:
    """Lower bound for lens-space systolic volume: torsion bound at t1 = n."""
    if n < 3:
        raise ValueError("lens order must be at least 3")
    return torsion_lb(n, constants)


def finite_pi1_3manifold_lb(order: int, constants: BoundConstants = BoundConstants()) -> float:
    """Lower bound for a 3-manifold with finite fundamental group of this order.

    The group has a cyclic subgroup of index at most 12, so the lens bound
    applies to an n-sheeted cover with n = ceil(order/12) and transfers back
    divided by 12.
    """
    if order < 36:
        raise ValueError("group order must be at least 36 for the ln ln domain")
    n = -(-order // 12)
    return lens_lb(n, constants) / 12


def kappa_upper_from_systole(s: float) -> float:
    """Upper bound on simplicial complexity from systolic area, fixed constants.

    C s exp(C' sqrt(ln(62500 s))) with C = 62500*25/3 and C' = 1 + ln 25;
    the scale 62500 inside the logarithm keeps the exponent real on the
    whole admissible range s >= pi/16.
    """
    if s < SYSTOLIC_AREA_FLOOR:
        raise ValueError(f"systolic area is never below pi/16 ~ {SYSTOLIC_AREA_FLOOR:.6f}")
    return KAPPA_UPPER_C * s * math.exp(KAPPA_UPPER_C_PRIME * math.sqrt(math.log(62500 * s)))


def kappa_alpha_scale(s: float) -> float:
    """The admissible-ball scale 25 exp(sqrt(ln(62500 s))); exceeds 5 on the domain."""
    if s < SYSTOLIC_AREA_FLOOR:
        raise ValueError(f"systolic area is never below pi/16 ~ {SYSTOLIC_AREA_FLOOR:.6f}")
    return 25 * math.exp(math.sqrt(math.log(62500 * s)))


def systolic_area_upper_from_kappa(kappa: float) -> float:
    """Upper bound kappa / 2 pi on systolic area from simplicial complexity."""
    if kappa < 0:
        raise ValueError("simplicial complexity is non-negative")
    return kappa / (2 * math.pi)


@dataclass(frozen=True)
class GroupCountReport:
    """Bound 2^(K^3/14) on groups of zero free index with complexity <= K."""

    k_budget: int
    exponent: Fraction  # K^3 / 14
    bound_exact: int | None  # 2^exponent when the exponent is an integer
    bound_float: float  # may be inf when the exponent is large and fractional
    chain_ok: bool  # subset-count <= 2^C(M,3) <= 2^(K^3/14), exact integers
    max_vertices: int  # M = ceil(3K/4)
    triangle_slots: int  # C(M, 3)


def group_count_bound(k_budget: int) -> GroupCountReport:
    """Count bound for groups of zero free index with complexity budget K.

    Verifies internally, in exact big-integer arithmetic, the chain
    sum_(s<=K) C(C(M,3), s) <= 2^C(M,3) and 14 C(M,3) <= K^3 with
    M = ceil(3K/4).
    """
    if k_budget < 1:
        raise ValueError("complexity budget must be a positive integer")
    m_vertices = -(-3 * k_budget // 4)
    slots = math.comb(m_vertices, 3)
    subset_sum = sum(math.comb(slots, s) for s in range(k_budget + 1))
    chain_ok = subset_sum <= 2 ** slots and 14 * slots <= k_budget ** 3
    exponent = Fraction(k_budget ** 3, 14)
    if exponent.denominator == 1:
        exact = 2 ** exponent.numerator
        as_float = float(exact) if exact.bit_length() <= 1024 else math.inf
    else:
        exact = None
        try:
            as_float = 2.0 ** float(exponent)
        except OverflowError:
            as_float = math.inf
    return GroupCountReport(
        k_budget, exponent, exact, as_float, chain_ok, m_vertices, slots
    )


def surface_kappa_bounds(genus: int) -> tuple[Fraction, int]:
    """Simplicial-complexity bounds (4l/3, 4(l-1) + 2{(7+sqrt(1+48l))/2}) for genus l.

    {a} is a for integers and floor(a)+1 otherwise; genus 2 is the quoted
    exception with upper bound 24.
    """
    if genus < 1:
        raise ValueError("genus must be a positive integer")
    lower = Fraction(4 * genus, 3)
    if genus == 2:
        return lower, 24
    radicand = 1 + 48 * genus
    root = math.isqrt(radicand)
    if root * root == radicand and (7 + root) % 2 == 0:
        brace = (7 + root) // 2
    else:
        brace = (7 + root) // 2 + 1
    return lower, 4 * (genus - 1) + 2 * brace


def abelian_kappa_bounds(n: int) -> tuple[int, int]:
    """Complexity bounds (n(n-1)/2, 7n(n-1)) for the free abelian group of rank n."""
    if n < 1:
        raise ValueError("rank must be a positive integer")
    return n * (n - 1) // 2, 7 * n * (n - 1)


def torus_class_bound(n: int, m: int, torus_volume: float) -> float:
    """Binomial bound C(n, m) * S for classes of the rank-n free abelian group."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if torus_volume <= 0:
        raise ValueError("torus systolic volume must be positive")
    return math.comb(n, m) * torus_volume


def waring_nil_bound(power_count: int, base_volume: float) -> float:
    """Uniform bound K(d) * S for all multiples of a graded nilmanifold class."""
    if power_count < 1:
        raise ValueError("the power count must be a positive integer")
    if base_volume < 0:
        raise ValueError("base systolic volume must be non-negative")
    return power_count * base_volume


@dataclass(frozen=True)
class UpperBoundIngredients:
    """Inputs for best_upper_bound.

    ``base``: known upper values at specific multiples (atoms of the
    decomposition lattice).  ``sublinear_constants``: one C per available
    C k/ln(1+k) bound.  ``constant_caps``: multiple-independent bounds,
    e.g. a Waring-type uniform cap.  These three families are closed under
    the min-plus composition used below: same-formula parts always merge
    (each family is subadditive), so an optimal decomposition is a multiset
    of base atoms plus at most one formula part, which the recursion explores
    exactly.
    """

    base: tuple[tuple[int, float], ...]
    sublinear_constants: tuple[float, ...] = ()
    constant_caps: tuple[float, ...] = ()

    def __post_init__(self):
        if not self.base and not self.sublinear_constants and not self.constant_caps:
            raise ValueError("at least one ingredient is required")
        for multiple, value in self.base:
            if multiple < 1 or value < 0:
                raise ValueError("base entries are (multiple >= 1, value >= 0)")
        if any(c <= 0 for c in self.sublinear_constants):
            raise ValueError("sublinear constants must be positive")
        if any(c < 0 for c in self.constant_caps):
            raise ValueError("constant caps must be non-negative")

    @classmethod
    def make(cls, base=None, sublinear=(), caps=()) -> "UpperBoundIngredients":
        base_items = tuple(sorted((int(k), float(v)) for k, v in (base or {}).items()))
        return cls(base_items, tuple(float(c) for c in sublinear), tuple(float(c) for c in caps))

    def direct(self, k: int) -> float:
        """Best single-part value at multiple k."""
        best = math.inf
        for multiple, value in self.base:
            if multiple == k:
                best = min(best, value)
        for c in self.sublinear_constants:
            best = min(best, c * k / math.log(1 + k))
        for cap in self.constant_caps:
            best = min(best, cap)
        return best


def best_upper_table(k_max: int, ingredients: UpperBoundIngredients) -> list[float]:
    """Min-plus closure table best[1..k_max]; best[0] = 0.

    best(j+k) <= best(j) + best(k) holds by construction, so the output
    sequence is subadditive.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    best = [0.0] * (k_max + 1)
    atoms = [(m, v) for m, v in ingredients.base]
    for k in range(1, k_max + 1):
        value = ingredients.direct(k)
        for multiple, atom_value in atoms:
            if multiple < k:
                value = min(value, atom_value + best[k - multiple])
        best[k] = value
    return best


def best_upper_bound(k: int, ingredients: UpperBoundIngredients) -> float:
    """Best composed upper bound for the k-th multiple."""
    if k < 1:
        raise ValueError("multiple k must be at least 1")
    return best_upper_table(k, ingredients)[k]
