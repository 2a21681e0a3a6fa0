"""Frobenius-root ideals.

frobenius_root(f, e) is the smallest ideal b with f in b^[p^e].  Over F_p
it is read off directly: split every exponent vector of f into its residue
mu and quotient modulo p^e, and collect the quotient polynomials, one per
residue (coefficient roots are trivial because Frobenius fixes F_p).

frobenius_root_power(f, N, e, carried) evaluates the root of f^N * J
without ever expanding f^N.  It peels one base-p digit of N per level:

    root_e(f^N * J) = root_{e-1}(f^(N div p) * root_1(f^(N mod p) * J))

which rests on the scaling rule root_1(g^p * h) = g * root_1(h), a
consequence of flatness of Frobenius on the polynomial ring.  Digits are
consumed least-significant first, intermediate ideals are canonicalized at
every level, and no power beyond f^(p-1) times current generators is ever
expanded, so N may vastly exceed p^e.
"""

from __future__ import annotations

from .errors import DomainError
from .groebner import Ideal
from .poly import Polynomial, power

__all__ = [
    "frobenius_root",
    "frobenius_root_ideal",
    "frobenius_root_power",
    "FrobeniusRootEngine",
]


def _split_terms(f: Polynomial, q: int) -> list[Polynomial]:
    """Coordinates of f in the monomial basis of R over R^q, q = p^e."""
    buckets: dict = {}
    for m, c in f._terms.items():
        mu = tuple(x % q for x in m)
        quo = tuple(x // q for x in m)
        buckets.setdefault(mu, {})[quo] = c
    ring = f.ring
    return [Polynomial(ring, terms, _normalized=True) for terms in buckets.values()]


def frobenius_root(f: Polynomial, e: int) -> Ideal:
    """Smallest ideal b with f in b^[p^e]; requires e >= 1."""
    if e < 1:
        raise DomainError("frobenius_root requires e >= 1")
    return Ideal(f.ring, _split_terms(f, f.ring.prime**e))


def frobenius_root_ideal(J: Ideal, e: int) -> Ideal:
    """Smallest ideal b with J contained in b^[p^e]; generator-wise sum."""
    if e < 1:
        raise DomainError("frobenius_root_ideal requires e >= 1")
    q = J.ring.prime**e
    gens: list[Polynomial] = []
    for g in J.generators:
        gens.extend(_split_terms(g, q))
    return Ideal(J.ring, gens)


class FrobeniusRootEngine:
    """Evaluates root_e(f^N * J) with a per-f digit-transition cache.

    The map J -> root_1(f^d * J) is well defined on ideals, so its values
    may be memoized keyed by the canonical (reduced Groebner) form of J.
    Walking many parameters for a fixed f reuses the same few transitions,
    which is what makes full candidate sweeps affordable.
    """

    __slots__ = ("f", "ring", "_fpow", "_states", "_steps")

    def __init__(self, f: Polynomial):
        self.f = f
        self.ring = f.ring
        self._fpow: dict[int, Polynomial] = {0: f.ring.one(), 1: f}
        self._states: dict = {}
        self._steps: dict = {}

    def _f_power(self, d: int) -> Polynomial:
        g = self._fpow.get(d)
        if g is None:
            g = power(self.f, d)
            self._fpow[d] = g
        return g

    def _intern(self, J: Ideal) -> Ideal:
        J.basis()
        cached = self._states.get(J)
        if cached is None:
            self._states[J] = J
            return J
        return cached

    def _step(self, state: Ideal, digit: int) -> Ideal:
        key = (state, digit)
        out = self._steps.get(key)
        if out is None:
            fd = self._f_power(digit)
            gens: list[Polynomial] = []
            q = self.ring.prime
            for g in state.basis():
                gens.extend(_split_terms(fd * g, q))
            out = self._intern(Ideal(self.ring, _dedupe(gens)))
            self._steps[key] = out
        return out

    def root_power(self, N: int, e: int, carried: Ideal | None = None) -> Ideal:
        if N < 0 or e < 0:
            raise DomainError("root_power requires N >= 0 and e >= 0")
        if carried is None:
            state = Ideal.unit(self.ring)
        else:
            if carried.ring != self.ring:
                raise DomainError("carried ideal ring mismatch")
            state = carried
        state = self._intern(state)
        p = self.ring.prime
        for _ in range(e):
            N, d = divmod(N, p)
            state = self._step(state, d)
        if N == 0:
            return state
        fN = power(self.f, N)
        return self._intern(Ideal(self.ring, tuple(fN * g for g in state.basis())))


def _dedupe(gens):
    """Drop duplicate and zero generators before canonicalization."""
    seen = set()
    out = []
    for g in gens:
        if g.is_zero() or g in seen:
            continue
        seen.add(g)
        out.append(g)
    return tuple(out)


def frobenius_root_power(f: Polynomial, N: int, e: int, carried: Ideal | None = None) -> Ideal:
    """root_e of the ideal f^N * J, J defaulting to the unit ideal.

    Equals frobenius_root_ideal applied to the fully expanded f^N * J, but
    runs in e digit steps regardless of the size of N.
    """
    return FrobeniusRootEngine(f).root_power(N, e, carried)
