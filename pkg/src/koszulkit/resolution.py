"""Free resolutions, minimization and graded Betti tables."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .groebner import groebner_basis
from .ideal import Ideal
from .modules import (GradedFreeModule, GradedMap, ModuleOrder, NonHomogeneousError,
                      element_degree, element_to_column, leading, schreyer_order,
                      schreyer_syzygies, top_order)
from .poly import Polynomial


class ResolutionBoundError(RuntimeError):
    pass


@dataclass
class Resolution:
    """Complex F_0 <- F_1 <- ... ; ``maps[k-1]`` is d_k : F_k -> F_{k-1}."""

    ring: object
    modules: list
    maps: list
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.maps)

    def is_complex(self) -> bool:
        for k in range(1, len(self.maps)):
            if not self.maps[k - 1].compose(self.maps[k]).is_zero():
                return False
        return True

    def cokernel_ideal(self) -> Ideal:
        """Ideal generated by the entries of d_1 (only meaningful when F_0 = S)."""
        if not self.maps:
            return Ideal(self.ring, [])
        return Ideal(self.ring, self.maps[0].entries[0])

    def betti_table(self) -> "BettiTable":
        if not self.minimal:
            raise ValueError("Betti numbers are read off a minimal resolution")
        entries: dict = {}
        for i, M in enumerate(self.modules):
            for t in M.twists:
                entries[(i, t - i)] = entries.get((i, t - i), 0) + 1
        return BettiTable(entries)


@dataclass
class BettiTable:
    """beta_{i,i+j} stored as ``entries[(i, j)]``."""

    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, ij) -> int:
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def graded(self, i: int, d: int) -> int:
        """beta_{i,d} indexed by internal degree."""
        return self.entries.get((i, d - i), 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    @property
    def regularity(self) -> int:
        return max((j for _, j in self.entries), default=0)

    def row(self, j: int) -> list[int]:
        return [self[(i, j)] for i in range(self.projective_dimension + 1)]

    def to_text(self) -> str:
        """Header ``| 0 1 ...``, then ``j | ...`` rows, ``--`` for zero, single spaces."""
        if not self.entries:
            return "|\n"
        pd = self.projective_dimension
        js = [j for _, j in self.entries]
        out = ["| " + " ".join(str(i) for i in range(pd + 1))]
        for j in range(min(js), max(js) + 1):
            cells = [str(self[(i, j)]) if self[(i, j)] else "--" for i in range(pd + 1)]
            out.append(f"{j} | " + " ".join(cells))
        return "\n".join(out) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BettiTable":
        lines = [l for l in text.strip("\n").splitlines() if l.strip()]
        if not lines or lines[0].strip() == "|":
            return cls({})
        cols = [int(c) for c in lines[0].split("|", 1)[1].split()]
        entries = {}
        for line in lines[1:]:
            lab, rest = line.split("|", 1)
            j = int(lab)
            for i, c in zip(cols, rest.split()):
                if c != "--":
                    entries[(i, j)] = int(c)
        return cls(entries)

    @classmethod
    def from_rows(cls, rows: dict) -> "BettiTable":
        """Build from {row j: [beta_{0,j}, beta_{1,1+j}, ...]} with None/0 for blanks."""
        return cls({(i, j): v for j, r in rows.items() for i, v in enumerate(r) if v})

    def __str__(self):
        return self.to_text()


def _poly_elements(polys):
    return [{(e, 0): c for e, c in p.terms.items()} for p in polys]


def free_resolution(I: Ideal, order=None, max_length: int | None = None) -> Resolution:
    """Schreyer resolution of S/I (not necessarily minimal).

    At step k the generators inside each component are sorted ascending by
    the exponent of variable k in their leading monomial, which keeps the
    length at most the number of variables.
    """
    if not I.is_homogeneous():
        raise NonHomogeneousError("free_resolution needs a homogeneous ideal")
    ring = I.ring
    F = ring.field
    n = ring.nvars
    order = order or ring.order
    max_length = n + 1 if max_length is None else max_length
    gb = list(I.gb(order).generators)
    modules = [GradedFreeModule([0])]
    maps = []
    if not gb:
        return Resolution(ring, modules, maps, minimal=True)
    morder: ModuleOrder = top_order(order, (0,))
    G = _poly_elements(gb)
    prev_twists = (0,)
    step = 0
    while G:
        var = step % n
        G.sort(key=lambda g: (leading(g, morder)[1], leading(g, morder)[0][var]))
        twists = [element_degree(g, prev_twists) for g in G]
        src = GradedFreeModule(twists)
        cols = [element_to_column(g, ring, len(prev_twists)) for g in G]
        maps.append(GradedMap.from_columns(ring, src, modules[-1], cols))
        modules.append(src)
        if len(maps) > max_length:
            raise ResolutionBoundError("resolution exceeded its length bound")
        leads = [leading(g, morder) for g in G]
        syz = schreyer_syzygies(G, morder, F)
        morder = schreyer_order(morder, leads)
        G = syz
        prev_twists = tuple(twists)
        step += 1
    return Resolution(ring, modules, maps, minimal=False)


def minimize(res: Resolution) -> Resolution:
    """Prune unit entries until no differential has a nonzero constant entry."""
    ring = res.ring
    F = ring.field
    red = F.reduce
    mods = [list(M.twists) for M in res.modules]
    # matrices as lists of rows of Polynomials
    mats = [[list(r) for r in d.entries] for d in res.maps]
    k = 0
    while k < len(mats):
        D = mats[k]
        hit = None
        for r, row in enumerate(D):
            for c, p in enumerate(row):
                if p.terms and p.is_constant():
                    hit = (r, c, p.constant_coeff())
                    break
            if hit:
                break
        if hit is None:
            k += 1
            continue
        r, c, u = hit
        uinv = F.inv(u)
        col = [D[i][c] for i in range(len(D))]
        rowr = D[r]
        newD = []
        for i in range(len(D)):
            if i == r:
                continue
            a = col[i]
            nr = []
            for j in range(len(rowr)):
                if j == c:
                    continue
                v = D[i][j]
                if a.terms and rowr[j].terms:
                    v = v - (a * rowr[j]).scale(uinv)
                nr.append(v)
            newD.append(nr)
        mats[k] = newD
        # d_k: F_{k+1} -> F_k  (maps[k] is d_{k+1}); row r indexes F_k, col c indexes F_{k+1}
        if k > 0:
            mats[k - 1] = [row[:r] + row[r + 1:] for row in mats[k - 1]]
        if k + 1 < len(mats):
            mats[k + 1] = mats[k + 1][:c] + mats[k + 1][c + 1:]
        del mods[k][r]
        del mods[k + 1][c]
    # trim trailing zero modules
    while len(mods) > 1 and not mods[-1]:
        mods.pop()
        mats.pop()
    modules = [GradedFreeModule(t) for t in mods]
    maps = [GradedMap(ring, modules[i + 1], modules[i], mats[i]) for i in range(len(mats))]
    return Resolution(ring, modules, maps, minimal=True)


def minimal_free_resolution(I: Ideal, order=None) -> Resolution:
    return minimize(free_resolution(I, order))


def betti_table(I: Ideal, order=None) -> BettiTable:
    return minimal_free_resolution(I, order).betti_table()


def regularity(I: Ideal) -> int:
    """Castelnuovo–Mumford regularity of S/I."""
    return betti_table(I).regularity


def projective_dimension(I: Ideal) -> int:
    return betti_table(I).projective_dimension


def betti_oracle(I: Ideal, max_i: int | None = None, max_j: int = 4, max_dim: int = 4000) -> BettiTable:
    """Betti numbers from Koszul homology: beta_{i,i+j} = dim H_i(K(x) ⊗ S/I)_{i+j}.

    Works degree by degree with standard monomials of S/I as a basis; meant
    as an independent check on small inputs.
    """
    from itertools import combinations
    from .groebner import normal_form
    from .linalg import sparse_rank

    if not I.is_homogeneous():
        raise NonHomogeneousError("betti_oracle needs a homogeneous ideal")
    ring = I.ring
    F = ring.field
    n = ring.nvars
    order = ring.order
    gb = I.gb(order)
    lms = gb.leading_monomials()
    max_i = n if max_i is None else max_i

    def std(d):
        if d < 0:
            return []
        return [m for m in ring.monomials_of_degree(d)
                if not any(all(a <= b for a, b in zip(l, m)) for l in lms)]

    def nf(exp):
        p = Polynomial(ring, {exp: F.one})
        return normal_form(p, gb.generators, order).remainder

    stdcache: dict = {}

    def basis(i, d):
        key = (i, d)
        if key not in stdcache:
            if i < 0 or i > n:
                stdcache[key] = []
            else:
                stdcache[key] = [(m, s) for s in combinations(range(n), i) for m in std(d - i)]
            if len(stdcache[key]) > max_dim:
                raise ResolutionBoundError("oracle dimension bound exceeded")
        return stdcache[key]

    nfcache: dict = {}

    def diff_rank(i, d):
        """Rank of K_i -> K_{i-1} in degree d."""
        src, tgt = basis(i, d), basis(i - 1, d)
        if not src or not tgt:
            return 0
        index = {b: k for k, b in enumerate(tgt)}
        rows = []
        for m, s in src:
            v: dict = {}
            for pos, var in enumerate(s):
                sign = F.one if pos % 2 == 0 else F.reduce(-1)
                rest = s[:pos] + s[pos + 1:]
                e = list(m)
                e[var] += 1
                e = tuple(e)
                if e not in nfcache:
                    nfcache[e] = nf(e)
                for me, c in nfcache[e].terms.items():
                    k = index[(me, rest)]
                    v[k] = F.reduce(v.get(k, 0) + sign * c)
            rows.append(v)
        return sparse_rank(rows, F)

    entries = {}
    for i in range(0, max_i + 1):
        for j in range(0, max_j + 1):
            d = i + j
            dim = len(basis(i, d))
            if dim == 0:
                continue
            h = dim - diff_rank(i, d) - diff_rank(i + 1, d)
            if h:
                entries[(i, j)] = h
    return BettiTable(entries)
