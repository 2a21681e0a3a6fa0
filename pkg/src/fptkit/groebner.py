"""Groebner-basis kernel over F_p.

Buchberger's algorithm with the normal selection strategy and both classic
pair-skipping criteria; workloads here are 2 to 4 variables with small
bases, so nothing fancier is warranted.  The reduced Groebner basis is the
canonical form of an ideal: equality tests, hashing, serialization, and the
transition caching in the Frobenius-root engine all key off it.
"""

from __future__ import annotations

import heapq

from .errors import DomainError, NotMPrimaryError
from .poly import Polynomial, PolyRing, grevlex_key, partial_derivative

__all__ = [
    "Ideal",
    "reduced_groebner",
    "normal_form",
    "ideal_equal",
    "bracket_power",
    "artinian_length",
    "ideal_sum",
    "ideal_product",
    "scale",
    "jacobian",
    "maximal_ideal",
    "maximal_ideal_power",
]


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _negate_key(k):
    """Order-reversing image of a (possibly nested) tuple-of-ints sort key."""
    return tuple(-part if isinstance(part, int) else _negate_key(part) for part in k)


def _reduce_full(f: Polynomial, basis, key=grevlex_key) -> Polynomial:
    """Remainder of f on division by a list of monic polynomials.

    No monomial of the remainder is divisible by any basis leading monomial,
    which makes the remainder canonical for a reduced basis.  The working
    polynomial is kept in a dict with a lazy max-heap over its monomials.
    """
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    p = ring.prime
    data = [(max(g._terms, key=key), g._terms) for g in basis]
    work = dict(f._terms)
    heap = [(_negate_key(key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder: dict = {}
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.pop(m, 0)
        if not c:
            continue
        for lm, gterms in data:
            if _divides(lm, m):
                shift = _mono_sub(m, lm)
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    mm = _mono_add(gm, shift)
                    old = work.get(mm, 0)
                    s = (old - c * gc) % p
                    if s:
                        work[mm] = s
                        if not old:
                            heapq.heappush(heap, (_negate_key(key(mm)), mm))
                    elif mm in work:
                        del work[mm]
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder, _normalized=True)


def _monic_under(g: Polynomial, key) -> Polynomial:
    lc = g._terms[max(g._terms, key=key)]
    if lc == 1:
        return g
    p = g.ring.prime
    inv = pow(lc, p - 2, p)
    return Polynomial(g.ring, {m: c * inv % p for m, c in g._terms.items()}, _normalized=True)


def _spoly(f: Polynomial, g: Polynomial, key=grevlex_key) -> Polynomial:
    lf, lg = max(f._terms, key=key), max(g._terms, key=key)
    lcm = _mono_lcm(lf, lg)
    return f.scale_term(1, _mono_sub(lcm, lf)) - g.scale_term(1, _mono_sub(lcm, lg))


def _buchberger(gens, key=grevlex_key) -> list[Polynomial]:
    """Buchberger with normal selection (smallest lcm first) and the product
    and chain pair-skipping criteria.  Pending pairs live in a set plus a
    lazily pruned heap keyed by their lcm."""
    G = [_monic_under(g, key) for g in gens if not g.is_zero()]
    if not G:
        return []
    lms = [max(g._terms, key=key) for g in G]
    pending: set = set()
    heap: list = []

    def push(i, j):
        pending.add((i, j))
        heapq.heappush(heap, (key(_mono_lcm(lms[i], lms[j])), i, j))

    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            push(i, j)
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = _mono_lcm(lms[i], lms[j])
        # product criterion: coprime leading monomials need no S-polynomial
        if lcm == _mono_add(lms[i], lms[j]):
            continue
        # chain criterion: a third element dividing the lcm, with both of its
        # pairs already handled, makes this pair redundant
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(lms[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce_full(_spoly(G[i], G[j], key), G, key)
        if not r.is_zero():
            r = _monic_under(r, key)
            G.append(r)
            lms.append(max(r._terms, key=key))
            t = len(G) - 1
            for i2 in range(t):
                push(i2, t)
    return _interreduce(G, key)


def _interreduce(G, key=grevlex_key) -> list[Polynomial]:
    """Minimal then fully reduced basis, sorted ascending by leading monomial."""
    G = sorted(G, key=lambda g: key(max(g._terms, key=key)))
    minimal: list[Polynomial] = []
    min_lms: list = []
    for g in G:
        lm = max(g._terms, key=key)
        if not any(_divides(m, lm) for m in min_lms):
            minimal.append(g)
            min_lms.append(lm)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _reduce_full(g, others, key)
        reduced.append(_monic_under(r, key))
    reduced.sort(key=lambda g: key(max(g._terms, key=key)))
    return reduced


class Ideal:
    """An ideal of F_p[x_1..x_n], carried by a generator list.

    The reduced Groebner basis (grevlex) is computed at most once and then
    cached; it is the canonical form used by __eq__, __hash__ and str.
    """

    __slots__ = ("ring", "generators", "_basis", "_hash")

    def __init__(self, ring: PolyRing, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise DomainError("ideal generators must be polynomials")
            if g.ring != ring:
                raise DomainError("generator ring mismatch")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._basis = None
        self._hash = None

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, (ring.one(),))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    def basis(self) -> tuple[Polynomial, ...]:
        if self._basis is None:
            self._basis = tuple(_buchberger(self.generators))
        return self._basis

    def is_unit(self) -> bool:
        b = self.basis()
        return len(b) == 1 and b[0].is_one()

    def is_zero_ideal(self) -> bool:
        return not self.basis()

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise DomainError("ideal ring mismatch")
        return all(self.contains(g) for g in other.basis())

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis() == other.basis()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.prime, self.basis()))
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.basis()) + ")"

    def __repr__(self):
        return f"Ideal({self.ring.prime}, {[str(g) for g in self.generators]})"

    def to_json(self) -> list[str]:
        return [str(g) for g in self.basis()]


def reduced_groebner(J: Ideal) -> Ideal:
    """The same ideal, presented by its reduced Groebner basis."""
    out = Ideal(J.ring, J.basis())
    out._basis = J.basis()
    return out


def normal_form(f: Polynomial, J: Ideal) -> Polynomial:
    if f.ring != J.ring:
        raise DomainError("polynomial/ideal ring mismatch")
    return _reduce_full(f, J.basis())


def ideal_equal(J: Ideal, K: Ideal) -> bool:
    if J.ring != K.ring:
        raise DomainError("ideal ring mismatch")
    return J == K


def bracket_power(J: Ideal, e: int) -> Ideal:
    """The Frobenius power: the ideal generated by g^(p^e) over generators g.

    Independent of the chosen generating set.
    """
    if e < 0:
        raise DomainError("bracket power exponent must be >= 0")
    if e == 0:
        return J
    return Ideal(J.ring, tuple(g.frobenius(e) for g in J.generators))


def ideal_sum(J: Ideal, K: Ideal) -> Ideal:
    if J.ring != K.ring:
        raise DomainError("ideal ring mismatch")
    return Ideal(J.ring, J.generators + K.generators)


def ideal_product(J: Ideal, K: Ideal) -> Ideal:
    if J.ring != K.ring:
        raise DomainError("ideal ring mismatch")
    return Ideal(J.ring, tuple(a * b for a in J.generators for b in K.generators))


def scale(f: Polynomial, J: Ideal) -> Ideal:
    if f.ring != J.ring:
        raise DomainError("polynomial/ideal ring mismatch")
    return Ideal(J.ring, tuple(f * g for g in J.generators))


def jacobian(f: Polynomial) -> Ideal:
    """The ideal generated by f together with all of its partial derivatives."""
    return Ideal(f.ring, (f, *(partial_derivative(f, i) for i in range(f.ring.dimension))))


def maximal_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens())


def maximal_ideal_power(ring: PolyRing, k: int) -> Ideal:
    """m^k, generated by every monomial of total degree k."""
    if k < 0:
        raise DomainError("power must be >= 0")
    if k == 0:
        return Ideal.unit(ring)
    return Ideal(ring, tuple(ring.monomial(m) for m in ring.monomials_of_degree(k)))


def artinian_length(J: Ideal) -> int:
    """dim_{F_p} R/J for an ideal primary to the origin.

    Returns 0 for the unit ideal.  Raises NotMPrimaryError when the quotient
    is not finite-dimensional, or is finite-dimensional but supported away
    from the origin (detected by x_i^d notin J for d the standard-monomial
    count).
    """
    basis = J.basis()
    if len(basis) == 1 and basis[0].is_one():
        return 0
    n = J.ring.dimension
    lms = [g.leading_monomial() for g in basis]
    caps = [None] * n
    for m in lms:
        support = [i for i, e in enumerate(m) if e > 0]
        if len(support) == 1:
            i = support[0]
            if caps[i] is None or m[i] < caps[i]:
                caps[i] = m[i]
    if any(c is None for c in caps):
        raise NotMPrimaryError(
            "quotient is not zero-dimensional: some variable has no pure power "
            "in the leading ideal"
        )
    standard = []

    def rec(prefix, i):
        if i == n:
            standard.append(tuple(prefix))
            return
        for e in range(caps[i]):
            prefix.append(e)
            m = tuple(prefix) + (0,) * (n - i - 1)
            if not any(_divides(lm, m) for lm in lms):
                rec(prefix, i + 1)
            prefix.pop()

    rec([], 0)
    d = len(standard)
    for i in range(n):
        xi_d = J.ring.monomial([d if j == i else 0 for j in range(n)])
        if not normal_form(xi_d, J).is_zero():
            raise NotMPrimaryError(
                "quotient is zero-dimensional but not supported only at the origin"
            )
    return d


# -- internal helpers for the property suites --------------------------------


def _extend_ring(ring: PolyRing) -> PolyRing:
    aux = "_t"
    while aux in ring.variables:
        aux += "t"
    return PolyRing(ring.prime, (aux,) + ring.variables)


def _lift(f: Polynomial, big: PolyRing, t_degree: int = 0) -> Polynomial:
    return Polynomial(
        big, {(t_degree,) + m: c for m, c in f._terms.items()}, _normalized=True
    )


def _elim_key(m):
    return (m[0], sum(m[1:]), tuple(-e for e in reversed(m[1:])))


def _project(f: Polynomial, ring: PolyRing) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in f._terms.items()}, _normalized=True)


def _exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly."""
    ring = f.ring
    p = ring.prime
    q: dict = {}
    rest = f
    glm = g.leading_monomial()
    glc = g.leading_coefficient()
    inv = pow(glc, p - 2, p)
    while not rest.is_zero():
        lm = rest.leading_monomial()
        if not _divides(glm, lm):
            raise DomainError("non-exact polynomial division")
        shift = _mono_sub(lm, glm)
        c = rest.leading_coefficient() * inv % p
        q[shift] = c
        rest = rest - g.scale_term(c, shift)
    return Polynomial(ring, q, _normalized=True)


def colon(J: Ideal, g: Polynomial) -> Ideal:
    """(J : g) via the intersection trick in an extended ring.

    Small-instance helper for the property suites; not part of the public
    command surface.
    """
    if g.is_zero():
        return Ideal.unit(J.ring)
    big = _extend_ring(J.ring)
    t = big.variable(0)
    lifted = [t * _lift(f, big) for f in J.generators]
    lifted.append((big.one() - t) * _lift(g, big))
    basis = _buchberger(lifted, key=_elim_key)
    intersection = [_project(f, J.ring) for f in basis if all(m[0] == 0 for m in f._terms)]
    return Ideal(J.ring, tuple(_exact_quotient(f, g) for f in intersection))


def radical_member(g: Polynomial, J: Ideal) -> bool:
    """g in sqrt(J), decided with an auxiliary inverse variable."""
    if g.is_zero():
        return True
    big = _extend_ring(J.ring)
    t = big.variable(0)
    gens = [_lift(f, big) for f in J.generators]
    gens.append(big.one() - t * _lift(g, big))
    basis = _buchberger(gens)
    return len(basis) == 1 and basis[0].is_one()
