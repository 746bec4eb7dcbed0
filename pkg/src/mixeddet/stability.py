"""Stability predicates and certificates for real polynomials.

Verdicts are three-valued: exact certification where an exact decision
procedure exists (two-variable multi-affine inputs), concrete counterexample
witnesses whenever one is found, and explicitly sampled verdicts otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .matcore import RationalLike, as_fraction
from .polycore import (
    MultiPoly,
    UniPoly,
    interlaces,
    is_hyperbolic,
    is_nonneg_on_reals,
)

CERTIFIED_STABLE = "CERTIFIED_STABLE"
SAMPLED_STABLE = "SAMPLED_STABLE"
CERTIFIED_UNSTABLE = "CERTIFIED_UNSTABLE"


@dataclass(frozen=True)
class StabilityVerdict:
    status: str
    method: str
    trials: int = 0
    seed: Optional[int] = None
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.status == CERTIFIED_UNSTABLE and self.witness is None:
            raise ValueError("an unstable verdict must carry a witness")

    @property
    def found_witness(self) -> bool:
        return self.status == CERTIFIED_UNSTABLE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "trials": self.trials,
            "seed": self.seed,
            "witness": self.witness,
        }


def _frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def sample_fraction(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def sample_positive_fraction(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def delta_ij(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """The stability-criterion polynomial
    (df/dz_i)(df/dz_j) - f * d^2 f/(dz_i dz_j) for multi-affine f."""
    if not f.is_multiaffine:
        raise ValueError("criterion polynomial requires multi-affine input")
    if i == j:
        raise ValueError("need two distinct variables")
    di = f.partial_derivative(i)
    dj = f.partial_derivative(j)
    dij = di.partial_derivative(j)
    return di * dj - f * dij


# -- integer-cleared sampling of the criterion sign ---------------------------


def _mask_terms(f: MultiPoly) -> Tuple[Dict[int, int], int]:
    """Multi-affine terms as bitmask -> integer coefficient (common
    denominator cleared; the positive scale is irrelevant for signs)."""
    scale = 1
    for c in f.terms.values():
        scale = math.lcm(scale, c.denominator)
    out = {}
    for e, c in f.terms.items():
        mask = 0
        for pos, x in enumerate(e):
            if x:
                mask |= 1 << pos
        out[mask] = int(c * scale)
    return out, scale


def _derive_mask(terms: Dict[int, int], bit: int) -> Dict[int, int]:
    return {m ^ bit: c for m, c in terms.items() if m & bit}


def _eval_masked(
    terms: Dict[int, int], nums: Sequence[int], dens: Sequence[int], prod_dens: int
) -> int:
    total = 0
    for mask, c in terms.items():
        pa = c
        pb = prod_dens
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            pa *= nums[i]
            pb //= dens[i]
            m ^= low
        total += pa * pb
    return total


def multiaffine_stability_check(
    f: MultiPoly, samples: int = 1000, seed: int = 0, bound: int = 100
) -> StabilityVerdict:
    """Real-stability check of a multi-affine polynomial.

    Two variables are decided exactly (the criterion polynomial of a
    two-variable multi-affine polynomial is a constant, so one rational sign
    settles it).  More variables are sampled: the criterion is evaluated for
    every variable pair at ``samples`` rational points, and any negative
    value certifies instability with that point as witness.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial is not checked for stability")
    if not f.is_multiaffine:
        raise ValueError("input must be multi-affine (degree <= 1 in each variable)")
    nv = f.nvars
    if f.total_degree <= 0 or nv <= 1:
        # nonvanishing constant, or a real polynomial of degree at most one
        return StabilityVerdict(CERTIFIED_STABLE, method="exact")
    if nv == 2:
        crit = delta_ij(f, 1, 2)
        if crit.total_degree > 0:
            raise AssertionError("two-variable multi-affine criterion must be constant")
        c = crit.coefficient((0, 0))
        if c >= 0:
            return StabilityVerdict(CERTIFIED_STABLE, method="exact")
        return StabilityVerdict(
            CERTIFIED_UNSTABLE,
            method="exact",
            witness={
                "i": 1,
                "j": 2,
                "point": ["0", "0"],
                "criterion_value": _frac_str(c),
            },
        )

    rng = random.Random(seed)
    base, _ = _mask_terms(f)
    d1 = [_derive_mask(base, 1 << i) for i in range(nv)]
    d2 = {}
    for i in range(nv):
        for j in range(i + 1, nv):
            d2[(i, j)] = _derive_mask(d1[i], 1 << j)
    for trial in range(samples):
        nums = [rng.randint(-bound, bound) for _ in range(nv)]
        dens = [rng.randint(1, bound) for _ in range(nv)]
        prod_dens = math.prod(dens)
        fval = _eval_masked(base, nums, dens, prod_dens)
        dvals = [_eval_masked(d1[i], nums, dens, prod_dens) for i in range(nv)]
        for i in range(nv):
            for j in range(i + 1, nv):
                crit = dvals[i] * dvals[j] - fval * _eval_masked(
                    d2[(i, j)], nums, dens, prod_dens
                )
                if crit < 0:
                    point = [Fraction(nums[k], dens[k]) for k in range(nv)]
                    exact = delta_ij(f, i + 1, j + 1).eval(point)
                    return StabilityVerdict(
                        CERTIFIED_UNSTABLE,
                        method="sampled",
                        trials=trial + 1,
                        seed=seed,
                        witness={
                            "i": i + 1,
                            "j": j + 1,
                            "point": [_frac_str(x) for x in point],
                            "criterion_value": _frac_str(exact),
                        },
                    )
    return StabilityVerdict(SAMPLED_STABLE, method="sampled", trials=samples, seed=seed)


def line_restriction_test(
    f: MultiPoly, trials: int = 100, seed: int = 0, bound: int = 100
) -> StabilityVerdict:
    """Sample real lines with positive direction vectors; each restriction of
    a real stable polynomial must be hyperbolic.  A non-hyperbolic (or
    identically vanishing) restriction is a certified witness."""
    if f.is_zero:
        raise ValueError("the zero polynomial is not checked for stability")
    nv = f.nvars
    rng = random.Random(seed)
    for trial in range(trials):
        alpha = [sample_fraction(rng, bound) for _ in range(nv)]
        v = [sample_positive_fraction(rng, bound) for _ in range(nv)]
        r = f.restrict_line(alpha, v)
        if r.is_zero or not is_hyperbolic(r):
            return StabilityVerdict(
                CERTIFIED_UNSTABLE,
                method="lines",
                trials=trial + 1,
                seed=seed,
                witness={
                    "alpha": [_frac_str(x) for x in alpha],
                    "v": [_frac_str(x) for x in v],
                    "restriction": [_frac_str(c) for c in r.coeffs],
                },
            )
    return StabilityVerdict(SAMPLED_STABLE, method="lines", trials=trials, seed=seed)


def hermite_biehler_stable(f: UniPoly, g: UniPoly) -> bool:
    """Whether f + i*g is stable: both hyperbolic (or one zero), roots
    interlacing, and f'g - fg' globally nonnegative."""
    if f.is_zero and g.is_zero:
        raise ValueError("f and g cannot both be zero")
    if g.is_zero:
        return is_hyperbolic(f)
    if f.is_zero:
        return is_hyperbolic(g)
    if not (is_hyperbolic(f) and is_hyperbolic(g)):
        return False
    if not interlaces(f, g):
        return False
    return is_nonneg_on_reals(f.derivative() * g - f * g.derivative())


def gws_lift(p: UniPoly, n: int) -> MultiPoly:
    """Symmetric multi-affine lift sum_k a_k * e_k(z)/C(n,k); restricting all
    variables to a common value recovers p."""
    if p.degree > n:
        raise ValueError(f"polynomial degree {p.degree} exceeds lift arity {n}")
    import itertools

    terms: Dict[Tuple[int, ...], Fraction] = {}
    for k, a in enumerate(p.coeffs):
        if not a:
            continue
        c = a / math.comb(n, k)
        for combo in itertools.combinations(range(n), k):
            e = [0] * n
            for pos in combo:
                e[pos] = 1
            terms[tuple(e)] = c
    return MultiPoly(n, terms)


def hyperbolic_in_direction(
    p: MultiPoly,
    e: Sequence[RationalLike],
    trials: int = 100,
    seed: int = 0,
    bound: int = 100,
) -> StabilityVerdict:
    """Sample base points alpha and test that t -> p(alpha + e*t) has all
    real roots; p must be homogeneous and nonvanishing at e."""
    if p.is_zero or not p.is_homogeneous:
        raise ValueError("direction test requires a nonzero homogeneous polynomial")
    direction = [as_fraction(x) for x in e]
    if len(direction) != p.nvars:
        raise ValueError("direction vector length must match the variable count")
    if p.eval(direction) == 0:
        raise ValueError("polynomial vanishes at the direction vector")
    rng = random.Random(seed)
    for trial in range(trials):
        alpha = [sample_fraction(rng, bound) for _ in range(p.nvars)]
        r = p.restrict_line(alpha, direction)
        if not is_hyperbolic(r):
            return StabilityVerdict(
                CERTIFIED_UNSTABLE,
                method="direction",
                trials=trial + 1,
                seed=seed,
                witness={
                    "alpha": [_frac_str(x) for x in alpha],
                    "direction": [_frac_str(x) for x in direction],
                    "restriction": [_frac_str(c) for c in r.coeffs],
                },
            )
    return StabilityVerdict(SAMPLED_STABLE, method="direction", trials=trials, seed=seed)
