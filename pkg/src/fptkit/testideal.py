"""Test ideals, F-jumping numbers, F-pure thresholds, and F-thresholds.

The workhorse identity: given a valid bound B on the number of jumping
numbers in [0,1) and the canonical pair (u, v) of a positive rational lam,
the interval between the s-th truncation of lam and truncation + p^(-s)
contains no jumping number for s = u + v*B.  Hence

    tau(f^lam)   = root_s(f^ceil(p^s * lam))        (right end of the gap)
    left limit   = root_s(f^(ceil(p^s * lam) - 1))  (left end of the gap)

with root_s evaluated by the digit recursion in froot, so the astronomical
exponent ceil(p^s * lam) is never expanded.  Everything else here (the
candidate walk, jump detection, thresholds) is bookkeeping on top of these
two evaluations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .basep import candidate_set, candidates_left_open, canonical_pair, format_rational
from .errors import DomainError, InfeasibleError, NotMPrimaryError
from .froot import FrobeniusRootEngine
from .groebner import Ideal, artinian_length, jacobian, scale
from .poly import Polynomial, power

__all__ = [
    "TestIdealResult",
    "JumpingNumberReport",
    "TestIdealComputer",
    "stabilization_exponent",
    "test_ideal",
    "test_ideal_left_limit",
    "is_jumping_number",
    "jumping_numbers_unit_interval",
    "nu",
    "f_threshold",
    "fpt",
    "degree_bound",
    "length_bound",
    "default_bound",
]


def _as_fraction(lam) -> Fraction:
    if isinstance(lam, Fraction):
        return lam
    if isinstance(lam, (int, str)):
        return Fraction(lam)
    raise DomainError(f"expected a rational parameter, got {type(lam).__name__}")


def stabilization_exponent(lam, bound: int, p: int) -> int:
    """s = u + v * bound for the canonical pair (u, v) of lam."""
    if bound < 1:
        raise DomainError("bound must be >= 1")
    pair = canonical_pair(_as_fraction(lam), p)
    return pair.u + pair.v * bound


@dataclass(frozen=True)
class TestIdealResult:
    lam: Fraction
    ideal: Ideal
    stabilization_exponent: int
    bound_used: int


@dataclass(frozen=True)
class JumpingNumberReport:
    """Jumping numbers in [0, 1) with their test ideals.

    jumping_numbers and test_ideals run in parallel, starting at 0 with the
    unit ideal; the ideals strictly descend.  fpt is the least positive
    jumping number whose test ideal is proper at the origin (contained in
    the maximal ideal m), or 1 when no test ideal on (0, 1) drops into m.
    When f has extra singular points away from the origin that value can
    sit above the first global drop of the ideal family; the origin-local
    number is the one the nu invariants bracket.
    """

    poly: Polynomial
    bound: int
    window: tuple[Fraction, Fraction]
    jumping_numbers: tuple[Fraction, ...]
    test_ideals: tuple[Ideal, ...]
    fpt: Fraction
    candidate_count: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "prime": self.poly.ring.prime,
            "poly": str(self.poly),
            "bound": self.bound,
            "fpt": format_rational(self.fpt),
            "jumpingNumbers": [format_rational(x) for x in self.jumping_numbers],
            "testIdeals": [ideal.to_json() for ideal in self.test_ideals],
            "candidateCount": self.candidate_count,
            "elapsedMs": int(self.elapsed * 1000),
        }


class TestIdealComputer:
    """Shared evaluation context: one polynomial, one bound, one root engine."""

    def __init__(self, f: Polynomial, bound: int):
        if f.is_zero():
            raise DomainError("test ideals of the zero polynomial are undefined")
        if bound < 1:
            raise DomainError("bound must be >= 1")
        self.f = f
        self.bound = bound
        self.ring = f.ring
        self.p = f.ring.prime
        self.engine = FrobeniusRootEngine(f)
        self._ppow: dict[int, int] = {}

    def _p_to(self, s: int) -> int:
        v = self._ppow.get(s)
        if v is None:
            v = self.p**s
            self._ppow[s] = v
        return v

    def _exponent(self, lam: Fraction) -> tuple[int, int]:
        """(s, N) with N = ceil(p^s * lam) for the stabilized evaluation."""
        pair = canonical_pair(lam, self.p)
        s = pair.u + pair.v * self.bound
        q = self._p_to(s)
        N = -((-q * lam.numerator) // lam.denominator)
        return s, N

    def ideal_at(self, lam) -> TestIdealResult:
        lam = _as_fraction(lam)
        if lam < 0:
            raise DomainError("test ideal parameters must be >= 0")
        if lam == 0:
            return TestIdealResult(lam, Ideal.unit(self.ring), 0, self.bound)
        if lam < 1:
            s, N = self._exponent(lam)
            return TestIdealResult(lam, self.engine.root_power(N, s), s, self.bound)
        k = lam.numerator // lam.denominator
        frac = lam - k
        if frac == 0:
            inner = TestIdealResult(Fraction(0), Ideal.unit(self.ring), 0, self.bound)
        else:
            inner = self.ideal_at(frac)
        shifted = scale(power(self.f, k), inner.ideal)
        return TestIdealResult(lam, shifted, inner.stabilization_exponent, self.bound)

    def left_limit_at(self, lam) -> Ideal:
        lam = _as_fraction(lam)
        if lam <= 0:
            raise DomainError("left limits require a positive parameter")
        if lam <= 1:
            s, N = self._exponent(lam)
            return self.engine.root_power(N - 1, s)
        k = lam.numerator // lam.denominator
        frac = lam - k
        if frac == 0:
            return scale(power(self.f, k - 1), self.left_limit_at(Fraction(1)))
        return scale(power(self.f, k), self.left_limit_at(frac))


def _inside_m(ideal: Ideal) -> bool:
    """Containment in the maximal ideal at the origin, i.e. properness there."""
    return all(g.constant_term() == 0 for g in ideal.basis())


def test_ideal(f: Polynomial, lam, bound: int) -> TestIdealResult:
    """tau(f^lam), exact, for any rational lam >= 0.

    bound must dominate the number of jumping numbers of f in [0, 1); see
    default_bound.  Parameters >= 1 are folded into [0, 1) by the identity
    tau(f^lam) = f^floor(lam) * tau(f^frac(lam)).
    """
    return TestIdealComputer(f, bound).ideal_at(lam)


def test_ideal_left_limit(f: Polynomial, lam, bound: int) -> Ideal:
    """The stable intersection of tau(f^(lam - eps)) over small eps > 0."""
    return TestIdealComputer(f, bound).left_limit_at(lam)


def is_jumping_number(f: Polynomial, lam, bound: int) -> bool:
    """True iff the test ideal jumps at lam; lam must be a (p, bound) candidate."""
    lam = _as_fraction(lam)
    if lam <= 0:
        raise DomainError("jumping-number tests require a positive parameter")
    pair = canonical_pair(lam, f.ring.prime)
    if pair.u + pair.v > bound:
        raise DomainError(
            f"{lam} is not a candidate for bound {bound}: its minimal pair "
            f"({pair.u}, {pair.v}) exceeds the bound"
        )
    computer = TestIdealComputer(f, bound)
    return computer.left_limit_at(lam) != computer.ideal_at(lam).ideal


def jumping_numbers_unit_interval(f: Polynomial, bound: int) -> JumpingNumberReport:
    """Walk every candidate in [0, 1) in ascending order and record the jumps."""
    if f.is_zero():
        raise DomainError("jumping numbers of the zero polynomial are undefined")
    if f.constant_term() != 0:
        raise DomainError("the polynomial must vanish at the origin")
    if bound < 1:
        raise DomainError("bound must be >= 1")
    start = time.perf_counter()
    computer = TestIdealComputer(f, bound)
    candidates = candidate_set(f.ring.prime, bound, (Fraction(0), Fraction(1))).values
    unit = computer.engine.root_power(0, 0)
    jumps = [Fraction(0)]
    ideals = [unit]
    prev = unit
    for lam in candidates[1:]:
        cur = computer.ideal_at(lam).ideal
        if cur is not prev and cur != prev:
            jumps.append(lam)
            ideals.append(cur)
            prev = cur
    fpt_value = Fraction(1)
    for lam, ideal in zip(jumps[1:], ideals[1:]):
        if _inside_m(ideal):
            fpt_value = lam
            break
    elapsed = time.perf_counter() - start
    return JumpingNumberReport(
        poly=f,
        bound=bound,
        window=(Fraction(0), Fraction(1)),
        jumping_numbers=tuple(jumps),
        test_ideals=tuple(ideals),
        fpt=fpt_value,
        candidate_count=len(candidates),
        elapsed=elapsed,
    )


@lru_cache(maxsize=16)
def _cached_unit_interval(f: Polynomial, bound: int) -> JumpingNumberReport:
    return jumping_numbers_unit_interval(f, bound)


def nu(f: Polynomial, b: Ideal, e: int) -> int:
    """Largest N with f^N outside b^[p^e]; 0 when already f in b^[p^e].

    Membership is decided through the root engine: f^N lies in b^[p^e]
    exactly when root_e(f^N) is contained in b, so no large power of f is
    ever expanded.  The search doubles then bisects, guarded by a cap.
    """
    if e < 0:
        raise DomainError("nu requires e >= 0")
    if f.ring != b.ring:
        raise DomainError("polynomial/ideal ring mismatch")
    if b.is_unit():
        raise DomainError("nu is undefined for the unit ideal")
    engine = FrobeniusRootEngine(f)

    def member(n: int) -> bool:
        return b.contains_ideal(engine.root_power(n, e))

    cap = f.ring.prime**e * (1 + sum(g.total_degree() for g in b.generators))
    if member(1):
        return 0
    lo = 1
    hi = 2
    while not member(hi):
        lo = hi
        hi *= 2
        if hi > cap:
            raise DomainError(
                f"no power of f entered the bracket ideal below the cap {cap}; "
                "is f in the radical of b?"
            )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if member(mid):
            hi = mid
        else:
            lo = mid
    return hi - 1


def degree_bound(f: Polynomial) -> int:
    """Jumping-number count bound from generation in bounded degree."""
    n = f.ring.dimension
    return comb(n + f.total_degree(), n)


def length_bound(f: Polynomial) -> int | None:
    """Length of R modulo the Jacobian ideal, when that ideal is primary
    to the origin; None otherwise."""
    try:
        ell = artinian_length(jacobian(f))
    except NotMPrimaryError:
        return None
    return ell if ell >= 1 else None


def default_bound(f: Polynomial) -> int:
    """The smaller of the degree bound and (when defined) the length bound."""
    b = degree_bound(f)
    ell = length_bound(f)
    if ell is not None and ell < b:
        return ell
    return b


def fpt(f: Polynomial, bound: int | None = None) -> Fraction:
    """The F-pure threshold of f at the origin (f in m, f != 0).

    Uses interval narrowing instead of the full candidate walk: the
    predicate "tau(f^lam) stays outside m" is monotone in lam, candidate
    values are spaced more than p^(-2B) apart, and the threshold itself is
    a candidate, so p-adic bisection down to width p^(-2B-1) isolates it.
    """
    if f.is_zero():
        raise DomainError("fpt of the zero polynomial is undefined")
    if f.constant_term() != 0:
        raise DomainError("fpt requires a polynomial vanishing at the origin")
    B = default_bound(f) if bound is None else bound
    if B < 1:
        raise DomainError("bound must be >= 1")
    p = f.ring.prime
    computer = TestIdealComputer(f, B)

    def outside_m(lam: Fraction) -> bool:
        return not _inside_m(computer.ideal_at(lam).ideal)

    lo, hi = Fraction(0), Fraction(1)
    for _ in range(2 * B + 1):
        step = (hi - lo) / p
        cut = hi
        for j in range(1, p):
            point = lo + j * step
            if not outside_m(point):
                cut = point
                break
        lo = cut - step
        hi = cut
    cands = candidates_left_open(p, B, lo, hi)
    if len(cands) != 1:
        raise DomainError(
            f"expected exactly one candidate in ({lo}, {hi}], found {len(cands)}; "
            "the supplied bound is too small for f"
        )
    value = cands[0]
    if outside_m(value):
        raise DomainError(
            "isolated candidate has a test ideal outside m; the supplied bound "
            "is too small for f"
        )
    return value


def f_threshold(f: Polynomial, b: Ideal, bound: int | None = None, cap=None) -> Fraction:
    """Least parameter lam with tau(f^lam) contained in b.

    Walks the jumping numbers of f in ascending order (candidates above 1
    are integer translates of the jumps in [0,1), plus the integers), and
    returns the first parameter whose test ideal lands inside b.  Requires
    f in sqrt(b) for termination below the cap.
    """
    if f.ring != b.ring:
        raise DomainError("polynomial/ideal ring mismatch")
    if b.is_unit():
        return Fraction(0)
    if f.is_zero():
        raise DomainError("thresholds of the zero polynomial are undefined")
    B = default_bound(f) if bound is None else bound
    if B < 1:
        raise DomainError("bound must be >= 1")
    cap = Fraction(f.ring.dimension) if cap is None else _as_fraction(cap)
    report = _cached_unit_interval(f, B)
    positive = [x for x in report.jumping_numbers if x > 0]
    computer = TestIdealComputer(f, B)
    k = 0
    while True:
        block: list[Fraction] = []
        if k > 0:
            block.append(Fraction(k))
        block.extend(k + j for j in positive)
        progressed = False
        for lam in block:
            if lam > cap:
                raise InfeasibleError(
                    f"no parameter at or below the cap {format_rational(cap)} "
                    "drops the test ideal into b"
                )
            progressed = True
            if b.contains_ideal(computer.ideal_at(lam).ideal):
                return lam
        if not progressed and k > cap:
            raise InfeasibleError(
                f"no parameter at or below the cap {format_rational(cap)} "
                "drops the test ideal into b"
            )
        k += 1
