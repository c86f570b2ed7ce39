"""Division, Buchberger's algorithm and reduced Gröbner bases."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, mono_divides, mono_lcm


@dataclass(frozen=True)
class DivisionResult:
    remainder: Polynomial
    quotients: tuple


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    reduced: bool = False
    truncated: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self) -> list[tuple]:
        return [g.lm(self.order) for g in self.generators]


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce(terms: dict, basis, order: MonomialOrder, red, track: bool = False, top_only: bool = False):
    """Divide a term dict by ``basis`` = [(lm, lc_inverse, terms)].

    Returns (remainder dict, quotient dicts or None).  With ``top_only`` the
    loop stops at the first irreducible leading term (it is kept with the rest).
    """
    nkey = order.neg_key
    p = dict(terms)
    heap = [(nkey(e), e) for e in p]
    heapq.heapify(heap)
    rem: dict = {}
    quots = [dict() for _ in basis] if track else None
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for i, (lm, inv, g) in enumerate(basis):
            if _divides(lm, e):
                m = tuple(a - b for a, b in zip(e, lm))
                f = red(c * inv)
                for ge, gc in g.items():
                    if ge == lm:
                        continue
                    ne = tuple(a + b for a, b in zip(ge, m))
                    v = p.get(ne)
                    if v is None:
                        p[ne] = red(-f * gc)
                        heapq.heappush(heap, (nkey(ne), ne))
                    else:
                        v = red(v - f * gc)
                        if v:
                            p[ne] = v
                        else:
                            del p[ne]
                if track:
                    q = quots[i]
                    v = red(q.get(m, 0) + f)
                    if v:
                        q[m] = v
                    else:
                        q.pop(m, None)
                break
        else:
            rem[e] = c
            if top_only:
                rem.update(p)
                return rem, quots
    return rem, quots


def _prepare(divisors, order, field):
    out = []
    for d in divisors:
        if not d.terms:
            raise ValueError("zero divisor in division list")
        lm = d.lm(order)
        out.append((lm, field.inv(d.terms[lm]), d.terms))
    return out


def normal_form(p: Polynomial, divisors, order: MonomialOrder | None = None) -> DivisionResult:
    """Multivariate division of ``p`` by ``divisors`` (remainder fully reduced)."""
    ring = p.ring
    order = order or ring.order
    for d in divisors:
        if d.ring.names != ring.names:
            raise ValueError("divisors from another ring")
    basis = _prepare(divisors, order, ring.field)
    rem, quots = _reduce(p.terms, basis, order, ring.field.reduce, track=True)
    return DivisionResult(Polynomial(ring, rem), tuple(Polynomial(ring, q) for q in quots))


def reduce_poly(p: Polynomial, divisors, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder only (no quotient bookkeeping)."""
    order = order or p.ring.order
    basis = _prepare(divisors, order, p.ring.field)
    rem, _ = _reduce(p.terms, basis, order, p.ring.field.reduce)
    return Polynomial(p.ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    F = f.ring.field
    lf, lg = f.lm(order), g.lm(order)
    L = mono_lcm(lf, lg)
    a = tuple(x - y for x, y in zip(L, lf))
    b = tuple(x - y for x, y in zip(L, lg))
    return f.mul_term(a, F.inv(f.terms[lf])) - g.mul_term(b, F.inv(g.terms[lg]))


def _disjoint(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def buchberger(gens, order: MonomialOrder | None = None, degree_cap: int | None = None,
               reduce: bool = True) -> GroebnerBasis:
    """Gröbner basis by Buchberger's algorithm with the Gebauer–Möller criteria.

    Pairs are processed by the normal strategy (smallest lcm degree, then the
    order on lcms).  When ``degree_cap`` stops the run early the result is
    flagged ``truncated``.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        return GroebnerBasis((), order, True, False)
    ring = gens[0].ring
    order = order or ring.order
    if degree_cap is None and ring.nvars > 8:
        degree_cap = 8
    F = ring.field
    red = F.reduce
    key = order.key

    polys: list[dict] = []
    lms: list[tuple] = []

    def add(terms):
        lm = max(terms, key=key)
        inv = F.inv(terms[lm])
        terms = {e: red(c * inv) for e, c in terms.items()}
        polys.append(terms)
        lms.append(lm)
        return len(polys) - 1

    def update(G, B, ih):
        mh = lms[ih]
        C = sorted(G)
        D = []
        while C:
            ig = C.pop(0)
            mg = lms[ig]
            L = mono_lcm(mh, mg)
            if _disjoint(mh, mg) or (
                not any(_divides(mono_lcm(mh, lms[ip]), L) for ip in C)
                and not any(_divides(mono_lcm(mh, lms[jp]), L) for _, jp in D)
            ):
                D.append((ih, ig))
        E = {(a, b) for a, b in D if not _disjoint(lms[a], lms[b])}
        Bn = set()
        for i1, i2 in B:
            L12 = mono_lcm(lms[i1], lms[i2])
            if (not _divides(mh, L12) or mono_lcm(lms[i1], mh) == L12
                    or mono_lcm(lms[i2], mh) == L12):
                Bn.add((i1, i2))
        Bn |= E
        Gn = {ig for ig in G if not _divides(mh, lms[ig])}
        Gn.add(ih)
        return Gn, Bn

    # seed with the interreduced input, sorted so small leading terms come first
    G: set = set()
    B: set = set()
    start = sorted((dict(g.terms) for g in gens), key=lambda t: key(max(t, key=key)))
    for t in start:
        basis = [(lms[i], F.one, polys[i]) for i in sorted(G)]
        r, _ = _reduce(t, basis, order, red)
        if r:
            ih = add(r)
            G, B = update(G, B, ih)

    truncated = False
    while B:
        def sel(pr):
            L = mono_lcm(lms[pr[0]], lms[pr[1]])
            return (sum(L), key(L), pr)
        pair = min(B, key=sel)
        L = mono_lcm(lms[pair[0]], lms[pair[1]])
        if degree_cap is not None and sum(L) > degree_cap:
            truncated = True
            break
        B.discard(pair)
        i, j = pair
        a = tuple(x - y for x, y in zip(L, lms[i]))
        b = tuple(x - y for x, y in zip(L, lms[j]))
        s: dict = {}
        for e, c in polys[i].items():
            s[tuple(x + y for x, y in zip(e, a))] = c
        for e, c in polys[j].items():
            ne = tuple(x + y for x, y in zip(e, b))
            v = red(s.get(ne, 0) - c)
            if v:
                s[ne] = v
            else:
                s.pop(ne, None)
        basis = [(lms[k], F.one, polys[k]) for k in sorted(G)]
        r, _ = _reduce(s, basis, order, red)
        if r:
            ih = add(r)
            G, B = update(G, B, ih)

    out = tuple(Polynomial(ring, polys[i]) for i in sorted(G))
    gb = GroebnerBasis(out, order, False, truncated)
    return reduce_basis(gb) if reduce else gb


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Reduced Gröbner basis: minimal leading terms, monic, tails fully reduced."""
    order = gb.order
    key = order.key
    if not gb.reduced and not gb.truncated and not is_groebner(gb.generators, order):
        gb = buchberger(gb.generators, order, reduce=False)
    items = [g for g in gb.generators if g.terms]
    items.sort(key=lambda g: key(g.lm(order)))
    minimal = []
    for g in items:
        lm = g.lm(order)
        if not any(_divides(h.lm(order), lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = g.lm(order)
        F = g.ring.field
        lead = {lm: g.terms[lm]}
        tail = {e: c for e, c in g.terms.items() if e != lm}
        if others and tail:
            basis = _prepare(others, order, F)
            tail, _ = _reduce(tail, basis, order, F.reduce)
        lead.update(tail)
        out.append(Polynomial(g.ring, lead).monic(order))
    return GroebnerBasis(tuple(out), order, True, gb.truncated)


def groebner_basis(gens, order: MonomialOrder | None = None, degree_cap: int | None = None) -> GroebnerBasis:
    return buchberger(gens, order, degree_cap, reduce=True)


def is_groebner(gens, order: MonomialOrder | None = None) -> bool:
    gens = [g for g in gens if g.terms]
    if not gens:
        return True
    order = order or gens[0].ring.order
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if _disjoint(gens[i].lm(order), gens[j].lm(order)):
                continue
            s = s_polynomial(gens[i], gens[j], order)
            if reduce_poly(s, gens, order).terms:
                return False
    return True


def max_basis_degree(gb: GroebnerBasis) -> int:
    return max((g.degree() for g in gb.generators), default=-1)


def initial_ideal(gb: GroebnerBasis) -> list[tuple]:
    if not gb.reduced:
        gb = reduce_basis(gb)
    return [g.lm(gb.order) for g in gb.generators]
