"""Exact univariate predicates and sparse multivariate polynomials.

Univariate work (Sturm counting, hyperbolicity, inertia, interlacing,
global nonnegativity) runs on integer-cleared coefficient lists: every
chain element may be rescaled by positive constants only, so all sign
patterns are preserved and every decision is tolerance-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .matcore import RationalLike, as_fraction

Endpoint = Union[None, int, Fraction, float]  # None or +-inf mean unbounded


# -- integer polynomial kernel ----------------------------------------------
# Coefficient lists are low-to-high and trimmed; [] is the zero polynomial.


def _trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deriv(c: Sequence[int]) -> List[int]:
    return _trim([i * c[i] for i in range(1, len(c))])


def _primitive(c: Sequence[int]) -> List[int]:
    """Divide by the (positive) content; sign pattern unchanged."""
    g = 0
    for x in c:
        g = math.gcd(g, x)
        if g == 1:
            return list(c)
    if g == 0:
        return []
    return [x // g for x in c]


def _rem_positive_scale(f: Sequence[int], g: Sequence[int]) -> List[int]:
    """A positive multiple of rem(f, g); g must be nonzero."""
    # Dividing by -g leaves the remainder unchanged, so normalize g to a
    # positive leading coefficient and all accumulated factors stay > 0.
    g = list(g)
    if g[-1] < 0:
        g = [-x for x in g]
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    while len(r) - 1 >= dg and r:
        lf = r[-1]
        shift = len(r) - 1 - dg
        if lg != 1:
            r = [lg * x for x in r]
        for t in range(dg + 1):
            r[shift + t] -= lf * g[t]
        _trim(r)
    return r


def _sturm_chain(c: Sequence[int]) -> List[List[int]]:
    s0 = _primitive(c)
    chain = [s0]
    s1 = _primitive(_deriv(s0))
    if s1:
        chain.append(s1)
    while len(chain[-1]) > 1:
        r = _rem_positive_scale(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-x for x in r]))
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(c: Sequence[int], num: int, den: int) -> int:
    """Sign of c(num/den) with den > 0, evaluated in integers."""
    if not c:
        return 0
    d = len(c) - 1
    acc = 0
    dp = 1
    for i in range(d, -1, -1):
        acc = acc * num + c[i] * dp
        dp *= den
    # dp overshoots by one factor; only the sign of acc matters and den > 0
    return _sign(acc)


def _sign_at_inf(c: Sequence[int], positive: bool) -> int:
    if not c:
        return 0
    s = _sign(c[-1])
    if positive or (len(c) - 1) % 2 == 0:
        return s
    return -s


def _variations(signs: Iterable[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _var_at(chain: Sequence[Sequence[int]], x) -> int:
    """Sign variations of the chain at x; x is ('-inf'|'+inf'|Fraction)."""
    if x == "-inf":
        return _variations(_sign_at_inf(p, False) for p in chain)
    if x == "+inf":
        return _variations(_sign_at_inf(p, True) for p in chain)
    num, den = x.numerator, x.denominator
    return _variations(_sign_at(p, num, den) for p in chain)


def _gcd_poly(a: Sequence[int], b: Sequence[int]) -> List[int]:
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_rem_positive_scale(a, b))
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _divmod_frac(
    f: Sequence[Fraction], g: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) >= len(g) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(g):
            break
        shift = len(r) - 1 - dg
        coef = r[-1] / lg
        q[shift] = coef
        for t in range(dg + 1):
            r[shift + t] -= coef * g[t]
    while r and not r[-1]:
        r.pop()
    return q, r


def _div_exact(f: Sequence[int], g: Sequence[int]) -> List[int]:
    """Exact quotient of primitive integer polynomials (remainder must vanish)."""
    q, r = _divmod_frac([Fraction(x) for x in f], [Fraction(x) for x in g])
    if r:
        raise ArithmeticError("inexact polynomial division")
    scale = math.lcm(*(c.denominator for c in q)) if q else 1
    return _primitive([int(c * scale) for c in q])


def _squarefree(c: Sequence[int]) -> List[int]:
    c = _primitive(c)
    if len(c) <= 2:
        return list(c)
    g = _gcd_poly(c, _deriv(c))
    if len(g) <= 1:
        return list(c)
    return _div_exact(c, g)


def _strip_root(c: Sequence[int], x: Fraction) -> List[int]:
    """Divide once by (den*z - num); x must be a root."""
    return _div_exact(c, [-x.numerator, x.denominator])


def _count_via_chain(chain, lo, hi) -> int:
    return _var_at(chain, lo) - _var_at(chain, hi)


def _cauchy_bound(c: Sequence[int]) -> int:
    lead = abs(c[-1])
    m = max(abs(x) for x in c[:-1]) if len(c) > 1 else 0
    return 1 + math.ceil(Fraction(m, lead))


def _split_point(a: Fraction, b: Fraction, c: Sequence[int]) -> Fraction:
    """A rational in (a, b) that is not a root of c."""
    mid = (a + b) / 2
    if _sign_at(c, mid.numerator, mid.denominator) != 0:
        return mid
    step = (b - a) / 4
    while True:
        for cand in (mid + step, mid - step):
            if a < cand < b and _sign_at(c, cand.numerator, cand.denominator) != 0:
                return cand
        step /= 2


def _isolate(c: Sequence[int]) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], one simple root of square-free c in each.

    All produced endpoints are non-roots, so each root lies strictly inside
    its interval.
    """
    if len(c) <= 1:
        return []
    chain = _sturm_chain(c)
    v_lo = _var_at(chain, "-inf")
    v_hi = _var_at(chain, "+inf")
    if v_lo - v_hi == 0:
        return []
    bound = Fraction(_cauchy_bound(c))
    # no roots outside (-bound, bound), so variations there match +-inf
    out: List[Tuple[Fraction, Fraction]] = []
    stack = [(-bound, v_lo, bound, v_hi)]
    while stack:
        a, va, b, vb = stack.pop()
        k = va - vb
        if k <= 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = _split_point(a, b, c)
        vm = _var_at(chain, mid)
        stack.append((a, va, mid, vm))
        stack.append((mid, vm, b, vb))
    out.sort()
    return out


# -- public univariate types and operations --------------------------------


class UniPoly:
    """Dense univariate polynomial over Q, coefficients low-to-high.

    The zero polynomial is the empty coefficient tuple and reports
    ``is_zero``; ``degree`` is -1 for it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = [as_fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def from_roots(cls, roots: Sequence[RationalLike], lead: RationalLike = 1) -> "UniPoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        q, r = _divmod_frac(list(self.coeffs), list(other.coeffs))
        return UniPoly(q), UniPoly(r)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def square_free_part(self) -> "UniPoly":
        if self.is_zero:
            return UniPoly()
        s = _squarefree(self._int_coeffs())
        return UniPoly(s)

    def _int_coeffs(self) -> List[int]:
        if self.is_zero:
            return []
        scale = math.lcm(*(c.denominator for c in self.coeffs))
        return [int(c * scale) for c in self.coeffs]

    def trailing_zero_order(self) -> int:
        """Largest k with z^k dividing the polynomial."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        return f"UniPoly([{', '.join(str(c) for c in self.coeffs)}])"


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, zero and negative roots, with multiplicity."""

    plus: int
    zero: int
    minus: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.plus, self.zero, self.minus)

    def __iter__(self):
        return iter(self.as_tuple())

    @property
    def total(self) -> int:
        return self.plus + self.zero + self.minus


def _normalize_endpoint(x: Endpoint, sign: int):
    if x is None:
        return "-inf" if sign < 0 else "+inf"
    if isinstance(x, float):
        if math.isinf(x):
            return "-inf" if x < 0 else "+inf"
        raise TypeError("finite endpoints must be exact rationals")
    return as_fraction(x)


def sturm_count(p: UniPoly, a: Endpoint = None, b: Endpoint = None) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    ``None`` (or an infinite float) leaves the corresponding side unbounded.
    """
    if p.is_zero:
        raise ValueError("root counting on the zero polynomial")
    lo = _normalize_endpoint(a, -1)
    hi = _normalize_endpoint(b, +1)
    if isinstance(lo, Fraction) and isinstance(hi, Fraction) and not lo < hi:
        raise ValueError("empty interval: need a < b")
    s = _squarefree(p._int_coeffs())
    if len(s) <= 1:
        return 0
    extra = 0
    if isinstance(hi, Fraction) and _sign_at(s, hi.numerator, hi.denominator) == 0:
        extra = 1
        s = _strip_root(s, hi)
    if isinstance(lo, Fraction) and s and _sign_at(s, lo.numerator, lo.denominator) == 0:
        s = _strip_root(s, lo)
    if len(s) <= 1:
        return extra
    chain = _sturm_chain(s)
    return _count_via_chain(chain, lo, hi) + extra


def is_hyperbolic(p: UniPoly) -> bool:
    """True iff p is nonzero and all its roots are real (any multiplicities).

    The zero polynomial returns False; callers distinguish it via
    ``p.is_zero``.
    """
    if p.is_zero:
        return False
    s = _squarefree(p._int_coeffs())
    if len(s) <= 1:
        return True
    chain = _sturm_chain(s)
    return _count_via_chain(chain, "-inf", "+inf") == len(s) - 1


def inertia(p: UniPoly) -> Inertia:
    """Root-sign counts (with multiplicity) of a hyperbolic polynomial."""
    if not is_hyperbolic(p):
        raise ValueError("inertia requires a nonzero polynomial with all real roots")
    zero = p.trailing_zero_order()
    plus = minus = 0
    cur = _primitive(p._int_coeffs())
    while len(cur) > 1:
        s = _squarefree(cur)
        if s and s[0] == 0:
            s = s[1:]  # drop the root at the origin
        if len(s) > 1:
            chain = _sturm_chain(s)
            plus += _count_via_chain(chain, Fraction(0), "+inf")
            minus += _count_via_chain(chain, "-inf", Fraction(0))
        g = _gcd_poly(cur, _deriv(cur))
        if len(g) <= 1:
            break
        cur = g
    result = Inertia(plus, zero, minus)
    if result.total != p.degree:
        raise AssertionError(f"inertia {result} does not sum to degree {p.degree}")
    return result


def _require_hyperbolic_or_zero(p: UniPoly, name: str):
    if not p.is_zero and not is_hyperbolic(p):
        raise ValueError(f"{name} must be hyperbolic or zero")


def interlaces(p: UniPoly, q: UniPoly) -> bool:
    """Whether the root multisets of p and q interlace.

    Shared roots are cancelled in matched pairs; the zero polynomial
    interlaces everything by convention.
    """
    _require_hyperbolic_or_zero(p, "p")
    _require_hyperbolic_or_zero(q, "q")
    if p.is_zero or q.is_zero:
        return True
    if abs(p.degree - q.degree) > 1:
        return False
    cp = _primitive(p._int_coeffs())
    cq = _primitive(q._int_coeffs())
    g = _gcd_poly(cp, cq)
    if len(g) > 1:
        cp = _div_exact(cp, g)
        cq = _div_exact(cq, g)
    # after cancelling the gcd the parts are coprime, so any repeated root
    # in either part breaks the alternation
    if len(_gcd_poly(cp, _deriv(cp))) > 1 or len(_gcd_poly(cq, _deriv(cq))) > 1:
        return False
    dp, dq = len(cp) - 1, len(cq) - 1
    if dp == 0 and dq == 0:
        return True
    prod = _primitive(_mul_int(cp, cq))
    intervals = _isolate(prod)
    if len(intervals) != dp + dq:
        return False  # cannot happen for hyperbolic input
    chain_p = _sturm_chain(cp) if dp else None
    labels = []
    for a, b in intervals:
        inside_p = (
            _count_via_chain(chain_p, a, b) == 1 if chain_p is not None else False
        )
        labels.append("p" if inside_p else "q")
    return all(labels[i] != labels[i + 1] for i in range(len(labels) - 1))


def _mul_int(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def isolate_real_roots(p: UniPoly) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (a, b], one per distinct real root."""
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    return _isolate(_squarefree(p._int_coeffs()))


def is_nonneg_on_reals(p: UniPoly) -> bool:
    """Exact decision of p(x) >= 0 for every real x.

    Root-isolates the square-free part and samples the sign of p once in
    each root-free region.
    """
    if p.is_zero:
        return True
    if p.degree == 0:
        return p.coeffs[0] > 0
    if p.degree % 2 == 1 or p.leading < 0:
        return False
    pc = p._int_coeffs()
    s = _squarefree(pc)
    intervals = _isolate(s)
    if not intervals:
        return True  # positive leading coefficient and no real roots
    pts = [intervals[0][0]]
    pts.extend(b for _, b in intervals[:-1])
    pts.append(intervals[-1][1] + 1)
    return all(_sign_at(pc, x.numerator, x.denominator) > 0 for x in pts)


# -- sparse multivariate polynomials ----------------------------------------


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> rational coefficient.

    Variables are addressed 1-based to match the index conventions used for
    matrices and subsets throughout the package.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Union[Mapping, Iterable] = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: Dict[Tuple[int, ...], Fraction] = {}
        for exps, coeff in items:
            e = tuple(int(x) for x in exps)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has wrong length for nvars={nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = as_fraction(coeff)
            if not c:
                continue
            c0 = d.get(e)
            if c0 is None:
                d[e] = c
            else:
                c1 = c0 + c
                if c1:
                    d[e] = c1
                else:
                    del d[e]
        self.nvars = nvars
        self.terms = d

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: RationalLike) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: as_fraction(c)})

    @classmethod
    def variable(cls, nvars: int, j: int) -> "MultiPoly":
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} outside 1..{nvars}")
        e = [0] * nvars
        e[j - 1] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, j: int) -> int:
        if not self.terms:
            return -1
        return max(e[j - 1] for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(int(x) for x in exps), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms in graded-lex order (degree first, then lexicographic)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    @property
    def is_multiaffine(self) -> bool:
        return all(all(x <= 1 for x in e) for e in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    def _check_compatible(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("operands have different numbers of variables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            c0 = d.get(e)
            if c0 is None:
                d[e] = c
            else:
                c1 = c0 + c
                if c1:
                    d[e] = c1
                else:
                    del d[e]
        out = MultiPoly(self.nvars)
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -as_fraction(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_fraction(other)
            if not other:
                return MultiPoly.zero(self.nvars)
            out = MultiPoly(self.nvars)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        d: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                c0 = d.get(e)
                if c0 is None:
                    d[e] = c
                else:
                    c1c = c0 + c
                    if c1c:
                        d[e] = c1c
                    else:
                        del d[e]
        out = MultiPoly(self.nvars)
        out.terms = d
        return out

    __rmul__ = __mul__

    def partial_derivative(self, j: int) -> "MultiPoly":
        if not 1 <= j <= self.nvars:
            raise ValueError(f"variable index {j} outside 1..{self.nvars}")
        k = j - 1
        d = {}
        for e, c in self.terms.items():
            if e[k] == 0:
                continue
            e2 = list(e)
            e2[k] -= 1
            d[tuple(e2)] = c * e[k]
        out = MultiPoly(self.nvars)
        out.terms = d
        return out

    def restrict(self, j: int, value: RationalLike) -> "MultiPoly":
        """Substitute a rational for variable j and drop that variable."""
        if not 1 <= j <= self.nvars:
            raise ValueError(f"variable index {j} outside 1..{self.nvars}")
        v = as_fraction(value)
        k = j - 1
        out = MultiPoly(self.nvars - 1)
        d: Dict[Tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            c2 = c * v ** e[k]
            if not c2:
                continue
            e2 = e[:k] + e[k + 1 :]
            c0 = d.get(e2)
            if c0 is None:
                d[e2] = c2
            else:
                c1 = c0 + c2
                if c1:
                    d[e2] = c1
                else:
                    del d[e2]
        out.terms = d
        return out

    def eval(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [as_fraction(x) for x in point]
        pows: List[Dict[int, Fraction]] = [dict() for _ in range(self.nvars)]
        acc = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = pows[i]
                p = cache.get(k)
                if p is None:
                    p = pt[i] ** k
                    cache[k] = p
                term *= p
            acc += term
        return acc

    def restrict_line(
        self, alpha: Sequence[RationalLike], v: Sequence[RationalLike]
    ) -> UniPoly:
        """The univariate polynomial t -> f(alpha + v*t)."""
        if len(alpha) != self.nvars or len(v) != self.nvars:
            raise ValueError("line parameters must match the number of variables")
        al = [as_fraction(x) for x in alpha]
        vl = [as_fraction(x) for x in v]
        lin = [UniPoly([a, w]) for a, w in zip(al, vl)]
        pow_cache: List[Dict[int, UniPoly]] = [
            {0: UniPoly([1]), 1: lin[i]} for i in range(self.nvars)
        ]
        acc = UniPoly()
        for e, c in self.terms.items():
            term = UniPoly([c])
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = pow_cache[i]
                p = cache.get(k)
                if p is None:
                    p = cache[max(cache)]
                    for _ in range(max(cache), k):
                        p = p * lin[i]
                        cache[len(cache)] = p
                    p = cache[k]
                term = term * p
            acc = acc + term
        return acc

    def restrict_diagonal(self) -> UniPoly:
        """All variables set to the same new variable t."""
        out: Dict[int, Fraction] = {}
        for e, c in self.terms.items():
            k = sum(e)
            out[k] = out.get(k, Fraction(0)) + c
        if not out:
            return UniPoly()
        coeffs = [Fraction(0)] * (max(out) + 1)
        for k, c in out.items():
            coeffs[k] = c
        return UniPoly(coeffs)

    def to_unipoly(self) -> UniPoly:
        if self.nvars != 1:
            raise ValueError("only 1-variable polynomials convert to UniPoly")
        if not self.terms:
            return UniPoly()
        coeffs = [Fraction(0)] * (self.total_degree + 1)
        for (e,), c in self.terms.items():
            coeffs[e] = c
        return UniPoly(coeffs)

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "MultiPoly":
        return cls(1, {(i,): c for i, c in enumerate(p.coeffs)})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        if self.is_zero:
            return f"MultiPoly({self.nvars}, 0)"
        parts = [f"{c}*z^{list(e)}" for e, c in self.sorted_terms()]
        return f"MultiPoly({self.nvars}, {' + '.join(parts)})"


def homogenize(f: MultiPoly, d: int) -> MultiPoly:
    """Homogeneous degree-d polynomial p with p(1, z) = f(z); the new
    variable is prepended as variable 1."""
    if f.is_zero:
        return MultiPoly.zero(f.nvars + 1)
    if d < f.total_degree:
        raise ValueError(f"target degree {d} below polynomial degree {f.total_degree}")
    terms = {}
    for e, c in f.terms.items():
        terms[(d - sum(e),) + e] = c
    return MultiPoly(f.nvars + 1, terms)


def normalized_coeff(f: MultiPoly, alpha: Sequence[int]) -> Fraction:
    """Coefficient of z^alpha divided by the multinomial d!/(alpha_1!...)."""
    a = tuple(int(x) for x in alpha)
    if len(a) != f.nvars:
        raise ValueError("alpha length must match the number of variables")
    if any(x < 0 for x in a):
        raise ValueError("alpha entries must be nonnegative")
    d = sum(a)
    if f.is_zero or not f.is_homogeneous or f.total_degree != d:
        raise ValueError(f"polynomial is not homogeneous of degree {d}")
    coeff = f.coefficient(a)
    mult = Fraction(math.factorial(d))
    for x in a:
        mult /= math.factorial(x)
    return coeff / mult
