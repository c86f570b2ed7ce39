"""Ideal arithmetic: sums, products, intersections, colons, saturation,
elimination, minimal generators, unmixed parts and artinian reduction."""

from __future__ import annotations

import random

from .field import Field
from .groebner import normal_form
from .ideal import Ideal
from .linalg import rank
from .modules import GradedFreeModule, GradedMap, syzygies
from .orders import block
from .poly import Polynomial, PolyRing, RingMismatchError


class SaturationError(RuntimeError):
    pass


class ReductionError(RuntimeError):
    pass


def _same_ring(I: Ideal, J: Ideal):
    if I.ring.names != J.ring.names or I.ring.field != J.ring.field:
        raise RingMismatchError("ideals live in different rings")


def maximal_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens())


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, list(I.gens) + [Polynomial(I.ring, g.terms) for g in J.gens])


def product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * Polynomial(I.ring, g.terms) for f in I.gens for g in J.gens])


def _fresh_name(names, base="t"):
    name = base
    while name in names:
        name += "_"
    return name


def _extend(ring: PolyRing, k: int = 1):
    """Ring with k new leading variables, eliminated first by a block order."""
    names = list(ring.names)
    new = []
    for _ in range(k):
        new.append(_fresh_name(names + new))
    n = len(names) + k
    order = block(n, ("grevlex", list(range(k))), ("grevlex", list(range(k, n))))
    return PolyRing(new + names, ring.field, order)


def _lift(p: Polynomial, big: PolyRing, k: int) -> Polynomial:
    return Polynomial(big, {(0,) * k + e: c for e, c in p.terms.items()})


def _drop(p: Polynomial, ring: PolyRing, k: int) -> Polynomial:
    return Polynomial(ring, {e[k:]: c for e, c in p.terms.items()})


def eliminate(I: Ideal, variables) -> Ideal:
    """I intersected with the subring without ``variables`` (indices or names)."""
    ring = I.ring
    idx = sorted(ring.names.index(v) if isinstance(v, str) else int(v) for v in variables)
    rest = [i for i in range(ring.nvars) if i not in idx]
    if not idx:
        return I
    order = block(ring.nvars, ("grevlex", idx), ("grevlex", rest))
    gb = I.gb(order)
    keep = [g for g in gb.generators if all(g_e[i] == 0 for g_e in g.terms for i in idx)]
    return Ideal(ring, keep, I.degree_cap)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    big = _extend(ring)
    t = big.var(0)
    one = big.one()
    gens = [t * _lift(f, big, 1) for f in I.gens] + [(one - t) * _lift(g, big, 1) for g in J.gens]
    K = Ideal(big, gens, I.degree_cap)
    gb = K.gb(big.order)
    keep = [_drop(g, ring, 1) for g in gb.generators if all(e[0] == 0 for e in g.terms)]
    return Ideal(ring, keep, I.degree_cap)


def quotient(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = (I ∩ (f)) / f."""
    if not f.terms:
        raise ValueError("quotient by the zero polynomial")
    ring = I.ring
    f = Polynomial(ring, f.terms)
    K = intersect(I, Ideal(ring, [f]))
    out = []
    for g in K.gens:
        res = normal_form(g, [f], ring.order)
        if res.remainder.terms:
            raise ArithmeticError("intersection element not divisible by f")
        out.append(res.quotients[0])
    return Ideal(ring, out, I.degree_cap)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of (I : f) over the generators of J."""
    _same_ring(I, J)
    if J.is_zero():
        return Ideal(I.ring, [I.ring.one()])
    out = None
    for f in J.gens:
        Q = quotient(I, f)
        out = Q if out is None else intersect(out, Q)
    return out


def saturate(I: Ideal, f, max_iter: int = 50) -> Ideal:
    """(I : f^∞) by iterating colons; ``f`` may be a polynomial or an ideal."""
    step = (lambda K: colon(K, f)) if isinstance(f, Ideal) else (lambda K: quotient(K, f))
    cur = I
    for _ in range(max_iter):
        nxt = step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise SaturationError(f"saturation did not stabilize within {max_iter} steps")


def minimal_generators(I: Ideal):
    """A minimal homogeneous generating set picked from I's generators, and its size."""
    if not I.is_homogeneous():
        raise ValueError("minimal_generators needs a homogeneous ideal")
    ring = I.ring
    F = ring.field
    gens = sorted(I.gens, key=lambda g: g.degree())
    chosen: list = []
    for d in sorted({g.degree() for g in gens}):
        mons = ring.monomials_of_degree(d)
        rows = []
        for g in chosen:
            for m in ring.monomials_of_degree(d - g.degree()):
                rows.append((g * ring.monomial(m)).coefficient_vector(mons))
        r = rank(rows, F) if rows else 0
        for g in (g for g in gens if g.degree() == d):
            cand = rows + [g.coefficient_vector(mons)]
            rr = rank(cand, F)
            if rr > r:
                rows, r = cand, rr
                chosen.append(g)
    if any(g.is_constant() for g in chosen):
        chosen = [ring.one()]
    return chosen, len(chosen)


def _transpose(d: GradedMap) -> GradedMap:
    ring = d.ring
    src = GradedFreeModule(-t for t in d.target.twists)
    tgt = GradedFreeModule(-t for t in d.source.twists)
    rows = [[d.entries[i][j] for i in range(d.target.rank)] for j in range(d.source.rank)]
    return GradedMap(ring, src, tgt, rows)


def ext_annihilator(I: Ideal, c: int) -> Ideal:
    """ann Ext^c(S/I, S), from the dual of a minimal free resolution."""
    from .resolution import minimal_free_resolution

    ring = I.ring
    res = minimal_free_resolution(I)
    if c > res.length or c < 1:
        return Ideal(ring, [ring.one()])
    Fc = res.modules[c]
    dual_c = GradedFreeModule(-t for t in Fc.twists)
    if c < res.length:
        Z = syzygies(_transpose(res.maps[c]))
    else:
        zero = ring.zero()
        Z = GradedMap(ring, dual_c, dual_c,
                      [[ring.one() if i == j else zero for j in range(Fc.rank)] for i in range(Fc.rank)])
    B = _transpose(res.maps[c - 1])
    ann = None
    for k in range(Z.source.rank):
        cols = [Z.column(k)] + [B.column(j) for j in range(B.source.rank)]
        src = GradedFreeModule([Z.source.twists[k]] + list(B.source.twists))
        M = GradedMap(ring, src, Z.target, [[col[i] for col in cols] for i in range(Z.target.rank)])
        S = syzygies(M)
        piece = Ideal(ring, S.entries[0], I.degree_cap)
        ann = piece if ann is None else intersect(ann, piece)
    return ann if ann is not None else Ideal(ring, [ring.one()])


def unmixed_part(I: Ideal) -> Ideal:
    """Intersection of the primary components of minimal codimension (equidimensional hull)."""
    from .invariants import hilbert_report

    if I.is_zero():
        return I
    if I.is_unit():
        raise ValueError("unmixed_part of the unit ideal")
    if not I.is_homogeneous():
        raise ValueError("unmixed_part needs a homogeneous ideal")
    c = hilbert_report(I).c
    return ext_annihilator(I, c)


def _substitute_last(I: Ideal, lam, small: PolyRing) -> Ideal:
    """Image of I in S/(x_last + sum lam_i x_i), identified with a ring on the other variables."""
    n = I.ring.nvars
    F = I.ring.field
    images = [small.var(i) for i in range(n - 1)]
    images.append(small.linear_form([F.reduce(-v) for v in lam]))
    return Ideal(small, [g.substitute(images) for g in I.gens], I.degree_cap)


def artinian_reduction(I: Ideal, seed: int = 0, max_retries: int = 20, steps: int | None = None) -> Ideal:
    """Kill a maximal regular sequence of generic linear forms on S/I.

    Each form is x_last + (random combination of the other variables); it is
    accepted when the Hilbert numerator is unchanged, which holds exactly when
    the form is a nonzerodivisor.  The number of forms defaults to the depth
    n - pd, so the Betti table is preserved.  Raises ReductionError naming the
    seed when ``max_retries`` draws fail.
    """
    from .invariants import hilbert_numerator_of
    from .resolution import projective_dimension

    F: Field = I.ring.field
    if F.is_prime_field and F.modulus < 101:
        raise ValueError("artinian_reduction needs a field with at least 101 elements")
    rng = random.Random(seed)
    n = I.ring.nvars
    if steps is None:
        steps = n - projective_dimension(I)
    cur = I
    Q = hilbert_numerator_of(I)
    for _ in range(steps):
        ring = cur.ring
        small = PolyRing(ring.names[:-1], F)
        for _attempt in range(max_retries):
            lam = [F.random_element(rng) for _ in range(ring.nvars - 1)]
            cand = _substitute_last(cur, lam, small)
            if hilbert_numerator_of(cand) == Q:
                cur = cand
                break
        else:
            raise ReductionError(f"no regular linear form found in {max_retries} draws (seed {seed})")
    return cur
