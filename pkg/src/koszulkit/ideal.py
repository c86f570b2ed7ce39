"""The Ideal type: a generator list with per-order cached reduced Gröbner bases."""

from __future__ import annotations

import threading

from .groebner import GroebnerBasis, groebner_basis, reduce_poly
from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, RingMismatchError


class TruncatedBasisError(RuntimeError):
    """A degree cap stopped Buchberger before the basis was complete."""


class Ideal:
    def __init__(self, ring: PolyRing, gens=(), degree_cap: int | None = None):
        gens = [g for g in gens if g.terms]
        for g in gens:
            if g.ring.names != ring.names or g.ring.field != ring.field:
                raise RingMismatchError("generator from another ring")
        self.ring = ring
        self.gens = tuple(g if g.ring is ring else Polynomial(ring, g.terms) for g in gens)
        self.degree_cap = degree_cap
        self._gb: dict = {}
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ring: PolyRing, texts) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        with self._lock:
            cached = self._gb.get(order)
        if cached is None:
            if self.gens:
                cached = groebner_basis(list(self.gens), order, self.degree_cap)
            else:
                cached = GroebnerBasis((), order, True)
            if cached.truncated:
                raise TruncatedBasisError(
                    f"Gröbner basis truncated at degree cap {self.degree_cap or 8}; pass a larger degree_cap")
            with self._lock:
                self._gb.setdefault(order, cached)
        return cached

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def contains(self, p: Polynomial) -> bool:
        if not p.terms:
            return True
        gb = self.gb()
        return not reduce_poly(p, list(gb.generators), gb.order).terms if gb.generators else False

    def __contains__(self, p):
        return self.contains(p)

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb().generators)

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring.names != self.ring.names:
            return False
        return self.gb().generators == other.gb(self.ring.order).generators

    def __hash__(self):
        return hash(self.gb().generators)

    def with_order(self, order) -> "Ideal":
        ring = self.ring.with_order(order)
        return Ideal(ring, [Polynomial(ring, g.terms) for g in self.gens], self.degree_cap)
