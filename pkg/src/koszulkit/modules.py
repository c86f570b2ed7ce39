"""Graded free modules, graded maps, module orders and Schreyer syzygies.

Module elements are dicts ``{(exp, component): coeff}``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, mono_lcm


class NonHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class GradedFreeModule:
    """Direct sum of S(-d) over ``twists``."""

    twists: tuple

    def __init__(self, twists=()):
        object.__setattr__(self, "twists", tuple(int(t) for t in twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __add__(self, other):
        return GradedFreeModule(self.twists + other.twists)

    def shift(self, d: int) -> "GradedFreeModule":
        return GradedFreeModule(t + d for t in self.twists)


class GradedMap:
    """Matrix of polynomials; ``entries[i][j]`` maps source basis j into target row i."""

    def __init__(self, ring: PolyRing, source: GradedFreeModule, target: GradedFreeModule, entries):
        self.ring = ring
        self.source = source
        self.target = target
        zero = ring.zero()
        rows = [list(r) for r in entries] if entries else []
        if not rows:
            rows = [[zero] * source.rank for _ in range(target.rank)]
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("entry matrix shape does not match modules")
        self.entries = rows

    @classmethod
    def from_columns(cls, ring, source, target, columns):
        zero = ring.zero()
        rows = [[zero] * source.rank for _ in range(target.rank)]
        for j, col in enumerate(columns):
            for i, p in col.items():
                rows[i][j] = p
        return cls(ring, source, target, rows)

    def column(self, j) -> list[Polynomial]:
        return [row[j] for row in self.entries]

    def columns_as_elements(self) -> list[dict]:
        out = []
        for j in range(self.source.rank):
            el = {}
            for i, row in enumerate(self.entries):
                for e, c in row[j].terms.items():
                    el[(e, i)] = c
            out.append(el)
        return out

    def is_homogeneous(self) -> bool:
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                if p.terms:
                    d = self.source.twists[j] - self.target.twists[i]
                    if any(sum(e) != d for e in p.terms):
                        return False
        return True

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self ∘ other."""
        zero = self.ring.zero()
        rows = []
        for i in range(self.target.rank):
            row = []
            for j in range(other.source.rank):
                acc = zero
                for k in range(self.source.rank):
                    a = self.entries[i][k]
                    if a.terms:
                        b = other.entries[k][j]
                        if b.terms:
                            acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMap(self.ring, other.source, self.target, rows)

    def is_zero(self) -> bool:
        return all(not p.terms for row in self.entries for p in row)

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.source == other.source
                and self.target == other.target and self.entries == other.entries)

    def __repr__(self):
        return f"GradedMap({self.source.twists} -> {self.target.twists})"


class ModuleOrder:
    """Order on module monomials (exp, comp) through a cached key function."""

    def __init__(self, keyfn):
        self._keyfn = keyfn
        self._cache: dict = {}
        self._ncache: dict = {}

    def key(self, exp, comp):
        k = self._cache.get((exp, comp))
        if k is None:
            k = self._keyfn(exp, comp)
            self._cache[(exp, comp)] = k
        return k

    def neg_key(self, t):
        k = self._ncache.get(t)
        if k is None:
            k = tuple(-v for v in self.key(*t))
            self._ncache[t] = k
        return k


def top_order(order: MonomialOrder, twists=None) -> ModuleOrder:
    """Term-over-position, comparing degree (twist included) first."""
    tw = tuple(twists) if twists is not None else None

    def keyfn(exp, comp):
        d = sum(exp) + (tw[comp] if tw else 0)
        return (d,) + order.key(exp) + (comp,)
    return ModuleOrder(keyfn)


def schreyer_order(prev: ModuleOrder, leads) -> ModuleOrder:
    """Induced order: a*e_i compares as a*LM(g_i) in ``prev``, ties broken by index."""
    leads = list(leads)

    def keyfn(exp, i):
        le, lc = leads[i]
        return prev.key(tuple(a + b for a, b in zip(exp, le)), lc) + (i,)
    return ModuleOrder(keyfn)


def leading(el: dict, morder: ModuleOrder):
    return max(el, key=lambda t: morder.key(*t))


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mreduce(terms: dict, basis, morder: ModuleOrder, red, track: bool = False):
    """Divide module element by basis [(lm_exp, lm_comp, lc_inv, terms)].

    Returns (remainder, quotients) with quotients as {monomial exp: coeff} per basis entry.
    """
    nkey = morder.neg_key
    p = dict(terms)
    heap = [(nkey(t), t) for t in p]
    heapq.heapify(heap)
    rem = {}
    quots = [dict() for _ in basis] if track else None
    by_comp: dict = {}
    for idx, b in enumerate(basis):
        by_comp.setdefault(b[1], []).append((idx, b))
    while heap:
        _, t = heapq.heappop(heap)
        c = p.pop(t, None)
        if c is None:
            continue
        e, comp = t
        for i, (le, lc, inv, g) in by_comp.get(comp, ()):
            if _divides(le, e):
                m = tuple(a - b for a, b in zip(e, le))
                f = red(c * inv)
                for (ge, gc), gv in g.items():
                    if ge == le and gc == lc:
                        continue
                    nt = (tuple(a + b for a, b in zip(ge, m)), gc)
                    v = p.get(nt)
                    if v is None:
                        p[nt] = red(-f * gv)
                        heapq.heappush(heap, (nkey(nt), nt))
                    else:
                        v = red(v - f * gv)
                        if v:
                            p[nt] = v
                        else:
                            del p[nt]
                if track:
                    q = quots[i]
                    v = red(q.get(m, 0) + f)
                    if v:
                        q[m] = v
                    else:
                        q.pop(m, None)
                break
        else:
            rem[t] = c
    return rem, quots


def prepare_basis(G, morder, field):
    out = []
    for g in G:
        le, lc = leading(g, morder)
        out.append((le, lc, field.inv(g[(le, lc)]), g))
    return out


def add_into(acc: dict, el: dict, mono, coeff, red, comp_map=None):
    """acc += coeff * mono * el (components optionally relabelled)."""
    for (e, c), v in el.items():
        nt = (tuple(a + b for a, b in zip(e, mono)), comp_map(c) if comp_map else c)
        w = red(acc.get(nt, 0) + coeff * v)
        if w:
            acc[nt] = w
        else:
            acc.pop(nt, None)


def schreyer_syzygies(G, morder: ModuleOrder, field):
    """Syzygies of a module Gröbner basis G from its S-pairs (Schreyer's theorem).

    Only pairs whose lcm quotient m_ij = lcm/LM(g_i) is a minimal generator of
    the monomial ideal (LM(g_j) : LM(g_i))_{j<i} are used; the result is a
    Gröbner basis of Syz(G) for the induced order.  Each syzygy is a dict over
    (exp, index of G); leading term m_ij * e_i.
    """
    red = field.reduce
    basis = prepare_basis(G, morder, field)
    syz = []
    for i, (le_i, lc_i, inv_i, g_i) in enumerate(basis):
        cands = []
        for j in range(i):
            le_j, lc_j, _, _ = basis[j]
            if lc_j != lc_i:
                continue
            L = mono_lcm(le_i, le_j)
            cands.append((tuple(a - b for a, b in zip(L, le_i)), j, L))
        mins = []
        for m, j, L in sorted(cands, key=lambda c: (sum(c[0]), c[1])):
            if not any(_divides(mm, m) for mm, _, _ in mins):
                mins.append((m, j, L))
        for m, j, L in mins:
            le_j, _, inv_j, g_j = basis[j]
            n = tuple(a - b for a, b in zip(L, le_j))
            s: dict = {}
            add_into(s, g_i, m, inv_i, red)
            add_into(s, g_j, n, red(-inv_j), red)
            rem, quots = mreduce(s, basis, morder, red, track=True)
            if rem:
                raise ArithmeticError("input to schreyer_syzygies is not a Gröbner basis")
            vec = {}
            vec[(m, i)] = inv_i
            v = red(vec.get((n, j), 0) - inv_j)
            if v:
                vec[(n, j)] = v
            else:
                vec.pop((n, j), None)
            for k, q in enumerate(quots):
                for mono, c in q.items():
                    w = red(vec.get((mono, k), 0) - c)
                    if w:
                        vec[(mono, k)] = w
                    else:
                        vec.pop((mono, k), None)
            if vec:
                syz.append(vec)
    return syz


def module_groebner(elements, morder: ModuleOrder, field, twists):
    """Buchberger in a free module, tracking each basis element as a combination of the inputs.

    Returns (G, T) where G[k] = sum over (mono, j) of T[k][(mono, j)] * mono * elements[j].
    """
    red = field.reduce
    G: list = []
    T: list = []

    def deg(t):
        return sum(t[0]) + twists[t[1]]

    def insert(el, tr):
        basis = prepare_basis(G, morder, field)
        rem, quots = mreduce(el, basis, morder, red, track=True)
        if not rem:
            return None
        tr = dict(tr)
        for k, q in enumerate(quots):
            for mono, c in q.items():
                add_into(tr, T[k], mono, red(-c), red)
        le, lc = leading(rem, morder)
        inv = field.inv(rem[(le, lc)])
        rem = {t: red(v * inv) for t, v in rem.items()}
        tr = {t: red(v * inv) for t, v in tr.items()}
        G.append(rem)
        T.append(tr)
        return len(G) - 1

    pairs = []
    order0 = sorted(range(len(elements)),
                    key=lambda j: morder.key(*leading(elements[j], morder)) if elements[j] else ())
    for j in order0:
        if not elements[j]:
            continue
        idx = insert(elements[j], {(tuple([0] * _nv(elements[j])), j): field.one})
        if idx is not None:
            for k in range(idx):
                pairs.append((k, idx))
    while pairs:
        def pkey(pr):
            a, b = pr
            (ea, ca), (eb, cb) = leading(G[a], morder), leading(G[b], morder)
            if ca != cb:
                return (-1, pr)
            return (sum(mono_lcm(ea, eb)) + twists[ca], pr)
        pairs.sort(key=pkey)
        a, b = pairs.pop(0)
        (ea, ca), (eb, cb) = leading(G[a], morder), leading(G[b], morder)
        if ca != cb:
            continue
        L = mono_lcm(ea, eb)
        ma = tuple(x - y for x, y in zip(L, ea))
        mb = tuple(x - y for x, y in zip(L, eb))
        s: dict = {}
        add_into(s, G[a], ma, field.one, red)
        add_into(s, G[b], mb, red(-1), red)
        tr: dict = {}
        add_into(tr, T[a], ma, field.one, red)
        add_into(tr, T[b], mb, red(-1), red)
        idx = insert(s, tr)
        if idx is not None:
            for k in range(idx):
                pairs.append((k, idx))
    return G, T


def _nv(el):
    for (e, _c) in el:
        return len(e)
    return 0


def element_to_column(el: dict, ring: PolyRing, rank: int) -> dict:
    cols: dict = {}
    for (e, c), v in el.items():
        cols.setdefault(c, {})[e] = v
    return {c: Polynomial(ring, t) for c, t in cols.items()}


def element_degree(el: dict, twists) -> int:
    for (e, c) in el:
        return sum(e) + twists[c]
    raise ValueError("zero element has no degree")


def syzygies(gmap: GradedMap, order: MonomialOrder | None = None) -> GradedMap:
    """Generators of the kernel of a homogeneous graded map.

    The columns are completed to a module Gröbner basis (tracking how each
    basis element comes from the columns); Schreyer's S-pair syzygies of that
    basis are pulled back, together with the relations expressing each
    original column through the basis.
    """
    if not gmap.is_homogeneous():
        raise NonHomogeneousError("syzygies needs homogeneous entries")
    ring = gmap.ring
    F = ring.field
    red = F.reduce
    order = order or ring.order
    n = ring.nvars
    m = gmap.source.rank
    cols = gmap.columns_as_elements()
    morder = top_order(order, gmap.target.twists)
    G, T = module_groebner(cols, morder, F, gmap.target.twists)
    zero = (0,) * n
    gens = []
    if G:
        for s in schreyer_syzygies(G, morder, F):
            v: dict = {}
            for (mono, k), c in s.items():
                add_into(v, T[k], mono, c, red)
            if v:
                gens.append(v)
    basis = prepare_basis(G, morder, F)
    for j, col in enumerate(cols):
        v = {(zero, j): F.one}
        if col:
            rem, quots = mreduce(col, basis, morder, red, track=True)
            assert not rem
            for k, q in enumerate(quots):
                for mono, c in q.items():
                    add_into(v, T[k], mono, red(-c), red)
        if v:
            gens.append(v)
    # drop duplicates and scalar multiples of earlier generators
    uniq = []
    seen = set()
    src = gmap.source.twists
    for v in gens:
        t = max(v, key=lambda t: morder_src_key(t, src, order))
        inv = F.inv(v[t])
        nv = {k: red(c * inv) for k, c in v.items()}
        key = frozenset(nv.items())
        if key not in seen:
            seen.add(key)
            uniq.append(nv)
    uniq.sort(key=lambda v: element_degree(v, src))
    twists = [element_degree(v, src) for v in uniq]
    columns = [element_to_column(v, ring, m) for v in uniq]
    return GradedMap.from_columns(ring, GradedFreeModule(twists), gmap.source, columns)


def morder_src_key(t, twists, order):
    e, c = t
    return (sum(e) + twists[c],) + order.key(e) + (c,)
