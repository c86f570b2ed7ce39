"""Builders for the ideal families used throughout: edge ideals, Koszul
complexes, forms with multiplicity two, determinantal and linkage ideals,
representation by minors, and mapping cones."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .field import QQ
from .ideal import Ideal
from .ideal_ops import colon, intersect, minimal_generators, quotient
from .invariants import hilbert_report
from .linalg import rank, solve
from .modules import GradedFreeModule, GradedMap
from .poly import Polynomial, PolyRing
from .resolution import Resolution, minimal_free_resolution, minimize


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges):
        es = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError("graphs have no loops")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("edge endpoint out of range")
            pair = (min(i, j), max(i, j))
            if pair in es:
                raise ValueError(f"duplicate edge {pair}")
            es.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_one_based(cls, n, edges) -> "Graph":
        return cls(n, [(i - 1, j - 1) for i, j in edges])

    def vertex_cover_number(self) -> int:
        used = sorted({v for e in self.edges for v in e})
        for k in range(len(used) + 1):
            for cover in combinations(used, k):
                s = set(cover)
                if all(i in s or j in s for i, j in self.edges):
                    return k
        return len(used)


def edge_ideal(G: Graph, ring: PolyRing | None = None) -> Ideal:
    ring = ring or PolyRing([f"x{i + 1}" for i in range(G.n)], QQ)
    if ring.nvars < G.n:
        raise ConstructionError(f"ring has {ring.nvars} variables, graph needs {G.n}")
    x = ring.gens()
    return Ideal(ring, [x[i] * x[j] for i, j in sorted(G.edges)])


_TABLE1 = [
    ("(i)-a", 4, [(1, 2), (2, 3), (3, 4), (4, 1)]),
    ("(i)-b", 4, [(1, 2), (2, 3), (3, 4), (3, 1)]),
    ("(i)-c", 5, [(2, 3), (3, 4), (3, 1), (4, 5)]),
    ("(ii)", 6, [(2, 3), (3, 4), (3, 1), (6, 5)]),
    ("(iii)", 5, [(1, 2), (2, 3), (3, 4), (4, 5)]),
    ("(iv)", 6, [(1, 2), (2, 3), (4, 5), (5, 6)]),
]


def table1_graphs() -> list:
    """The six graphs with four edges and vertex cover number two, labelled by Betti table."""
    out = []
    for label, n, edges in _TABLE1:
        G = Graph.from_one_based(n, edges)
        if len(G.edges) != 4 or G.vertex_cover_number() != 2:
            raise ConstructionError(f"graph {label} fails the four-edge/cover-two guard")
        out.append((label, G))
    return out


# ---------------------------------------------------------------- Koszul complexes

def koszul_complex(seq, ring: PolyRing | None = None) -> Resolution:
    """Koszul complex on homogeneous forms; F_k has a basis indexed by k-subsets."""
    seq = list(seq)
    ring = ring or seq[0].ring
    m = len(seq)
    degs = [f.degree() for f in seq]
    subsets = [list(combinations(range(m), k)) for k in range(m + 1)]
    modules = [GradedFreeModule(sum(degs[i] for i in s) for s in subsets[k]) for k in range(m + 1)]
    maps = []
    zero = ring.zero()
    for k in range(1, m + 1):
        index = {s: r for r, s in enumerate(subsets[k - 1])}
        rows = [[zero] * len(subsets[k]) for _ in subsets[k - 1]]
        for c, s in enumerate(subsets[k]):
            for pos, i in enumerate(s):
                rest = s[:pos] + s[pos + 1:]
                f = seq[i] if pos % 2 == 0 else -seq[i]
                rows[index[rest]][c] = Polynomial(ring, f.terms)
        maps.append(GradedMap(ring, modules[k], modules[k - 1], rows))
    minimal = all(not p.is_constant() for d in maps for row in d.entries for p in row if p.terms)
    res = Resolution(ring, modules, maps, minimal=minimal)
    if not res.is_complex():
        raise ArithmeticError("Koszul differentials do not compose to zero")
    return res


def scaled_koszul(z: Polynomial, J) -> Resolution:
    """Resolution of S/(z*J) for a regular sequence J: Koszul on J with d_1 scaled by z."""
    K = koszul_complex(J, z.ring)
    dz = z.degree()
    modules = [K.modules[0]] + [M.shift(dz) for M in K.modules[1:]]
    maps = []
    for k, d in enumerate(K.maps, start=1):
        rows = [[p * z if k == 1 else p for p in row] for row in d.entries]
        maps.append(GradedMap(z.ring, modules[k], modules[k - 1], rows))
    res = Resolution(z.ring, modules, maps, minimal=K.minimal)
    if not res.is_complex():
        raise ArithmeticError("scaled Koszul differentials do not compose to zero")
    return res


def twist(res: Resolution, d: int) -> Resolution:
    """Shift every twist by d (the resolution of M(-d))."""
    modules = [M.shift(d) for M in res.modules]
    maps = [GradedMap(res.ring, modules[k + 1], modules[k], m.entries) for k, m in enumerate(res.maps)]
    return Resolution(res.ring, modules, maps, minimal=res.minimal)


# ---------------------------------------------------------------- linear forms helpers

def _linear_rank(forms) -> int:
    forms = list(forms)
    if not forms:
        return 0
    ring = forms[0].ring
    mons = ring.monomials_of_degree(1)
    return rank([f.coefficient_vector(mons) for f in forms], ring.field)


def _check_linear(forms, what):
    for f in forms:
        if not f.terms or not f.is_homogeneous() or f.degree() != 1:
            raise ConstructionError(f"{what} must be nonzero linear forms")


def random_linear_form(ring: PolyRing, rng) -> Polynomial:
    F = ring.field
    while True:
        f = ring.linear_form([F.random_element(rng) for _ in range(ring.nvars)])
        if f.terms:
            return f


def random_quadric(ring: PolyRing, rng) -> Polynomial:
    F = ring.field
    while True:
        q = ring.from_terms({m: F.random_element(rng) for m in ring.monomials_of_degree(2)})
        if q.terms:
            return q


# ---------------------------------------------------------------- multiplicity-two forms

ENGHETA_CASES = ("ia_intersection", "ia_quadric", "ib", "ii")


def engheta_form(case: str, g: int, ring: PolyRing, params: dict | None = None,
                 rng: random.Random | None = None) -> Ideal:
    """Height-two, multiplicity-two ideals of g quadrics.

    ia_intersection: (x,y) ∩ (z,w); ia_quadric: ((x,y)^2, xz+yw)  (both g = 4,
    params x, y, z, w).  ib / ii: (a_1 x, ..., a_{g-1} x, q) with params x,
    a (list) and q; ib needs q in (a) but not in (x), ii needs q regular modulo
    (a_1 x, ...).  Missing params are drawn at random from ``rng``.
    """
    params = dict(params or {})
    rng = rng or random.Random(0)
    if case not in ENGHETA_CASES:
        raise ConstructionError(f"unknown case {case!r}; expected one of {', '.join(ENGHETA_CASES)}")
    if case in ("ia_intersection", "ia_quadric"):
        if g != 4:
            raise ConstructionError(f"{case} has exactly 4 generators")
        if ring.nvars < 4:
            raise ConstructionError(f"{case} needs at least 4 variables")
        v = ring.gens()
        x, y, z, w = (params.get(k, v[i]) for i, k in enumerate("xyzw"))
        _check_linear([x, y, z, w], "x, y, z, w")
        if _linear_rank([x, y, z, w]) != 4:
            raise ConstructionError("x, y, z, w must be linearly independent")
        if case == "ia_intersection":
            I = Ideal(ring, [x * z, x * w, y * z, y * w])
        else:
            I = Ideal(ring, [x * x, x * y, y * y, x * z + y * w])
        return I
    if g < 2:
        raise ConstructionError("g must be at least 2")
    need = g - 1 if case == "ib" else g
    if ring.nvars < need:
        raise ConstructionError(f"case {case} with g={g} needs at least {need} variables")
    a = params.get("a")
    if a is None:
        while True:
            a = [random_linear_form(ring, rng) for _ in range(g - 1)]
            if _linear_rank(a) == g - 1:
                break
    x = params.get("x")
    if x is None:
        x = random_linear_form(ring, rng)
    a = list(a)
    if len(a) != g - 1:
        raise ConstructionError(f"need {g - 1} linear forms a_i, got {len(a)}")
    _check_linear(a + [x], "x and the a_i")
    if _linear_rank(a) != g - 1:
        raise ConstructionError("the a_i must be linearly independent")
    A = Ideal(ring, a)
    X = Ideal(ring, [x])
    base = Ideal(ring, [ai * x for ai in a])
    q = params.get("q")
    if case == "ib":
        if q is None:
            while True:
                q = sum((random_linear_form(ring, rng) * ai for ai in a), ring.zero())
                if q.terms and not X.contains(q):
                    break
        if not A.contains(q):
            raise ConstructionError("case ib needs q in (a_1, ..., a_{g-1})")
        if X.contains(q):
            raise ConstructionError("case ib needs q outside (x)")
    else:
        if q is None:
            for _ in range(100):
                q = random_quadric(ring, rng)
                if quotient(base, q) == base:
                    break
        if quotient(base, q) != base:
            raise ConstructionError("case ii needs q to be a nonzerodivisor modulo (a_1 x, ..., a_{g-1} x)")
    if not q.is_homogeneous() or q.degree() != 2:
        raise ConstructionError("q must be a quadric")
    I = Ideal(ring, list(base.gens) + [q])
    if minimal_generators(I)[1] != g:
        raise ConstructionError(f"the generators are not {g} independent quadrics")
    return I


def random_engheta(case: str, g: int, ring: PolyRing, rng, attempts: int = 50):
    """Random instance of a multiplicity-two shape together with its parameters."""
    for _ in range(attempts):
        if case in ("ia_intersection", "ia_quadric"):
            L = [random_linear_form(ring, rng) for _ in range(4)]
            if _linear_rank(L) != 4:
                continue
            params = dict(zip("xyzw", L))
        else:
            a = [random_linear_form(ring, rng) for _ in range(g - 1)]
            x = random_linear_form(ring, rng)
            if case == "ib":
                q = sum((random_linear_form(ring, rng) * ai for ai in a), ring.zero())
            else:
                q = random_quadric(ring, rng)
            params = {"x": x, "a": a, "q": q}
        try:
            return engheta_form(case, g, ring, params), params
        except ConstructionError:
            continue
    raise ConstructionError(f"no valid {case} instance in {attempts} draws")


# ---------------------------------------------------------------- matrices

class LinearMatrix:
    """Matrix of linear (or zero) forms."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged or empty matrix")
        for r in rows:
            for p in r:
                if p.terms and (not p.is_homogeneous() or p.degree() != 1):
                    raise ValueError("entries must be zero or linear forms")
        self.rows = rows

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def transpose(self) -> "LinearMatrix":
        return LinearMatrix([list(c) for c in zip(*self.rows)])

    def column(self, j):
        return [r[j] for r in self.rows]


def two_minors(rows) -> list:
    """All 2x2 minors of a matrix with two rows, column pairs in lexicographic order."""
    r0, r1 = rows
    return [r0[i] * r1[j] - r0[j] * r1[i] for i, j in combinations(range(len(r0)), 2)]


def minors2(M) -> Ideal:
    """Ideal of 2x2 minors of a 2 x n (or n x 2) matrix of linear forms."""
    if not isinstance(M, LinearMatrix):
        M = LinearMatrix(M)
    r, c = M.shape
    if r != 2:
        if c != 2:
            raise ValueError("minors2 needs a matrix with two rows or two columns")
        M = M.transpose()
    ring = M.rows[0][0].ring
    return Ideal(ring, two_minors(M.rows))


class LinkageError(ArithmeticError):
    pass


def northcott(f, g, a1, a2, b1, b2, verify: bool = True):
    """(C, I) with C = (a1 f + b1 g, a2 f + b2 g) and I = I_2([[g, a1, a2], [-f, b1, b2]]).

    C must be a complete intersection (codim 2); with ``verify`` the direct
    linkage (C : (f, g)) = I and (f, g) ⊆ (C : I) is checked.
    """
    ring = f.ring
    c1, c2 = a1 * f + b1 * g, a2 * f + b2 * g
    C = Ideal(ring, [c1, c2])
    if not c1.terms or not c2.terms or C.is_unit() or hilbert_report(C).c != 2:
        raise ConstructionError("C is not a complete intersection of codimension 2")
    I = Ideal(ring, two_minors([[g, a1, a2], [-f, b1, b2]]))
    if verify:
        FG = Ideal(ring, [f, g])
        if colon(C, FG) != I:
            raise LinkageError("(C : (f, g)) differs from the minors ideal")
        if not FG.issubset(colon(C, I)):
            raise LinkageError("(f, g) is not contained in (C : I)")
    return C, I


@dataclass
class RepresentationByMinors:
    x: Polynomial
    y: Polynomial
    a: list
    b: list
    M: LinearMatrix
    A: LinearMatrix


def representation_by_minors(I: Ideal, x: Polynomial, y: Polynomial) -> RepresentationByMinors:
    """Write each minimal generator q_i = a_i x + b_i y with linear a_i, b_i.

    M = [[y, a_1, ...], [-x, b_1, ...]] and A = [[a_1, ...], [b_1, ...]];
    the particular solution with free unknowns set to zero is used.
    """
    ring = I.ring
    F = ring.field
    gens, _ = minimal_generators(I)
    lin = ring.monomials_of_degree(1)
    quad = ring.monomials_of_degree(2)
    n = ring.nvars
    # columns: coefficients of a (n of them) then of b (n of them)
    cols = [(ring.monomial(m) * x).coefficient_vector(quad) for m in lin] + \
           [(ring.monomial(m) * y).coefficient_vector(quad) for m in lin]
    mat = [[cols[j][i] for j in range(2 * n)] for i in range(len(quad))]
    a, b = [], []
    for q in gens:
        if not q.is_homogeneous() or q.degree() != 2:
            raise ConstructionError("representation by minors needs quadric generators")
        sol = solve(mat, q.coefficient_vector(quad), F)
        if sol is None:
            raise ConstructionError(f"generator {q} is not in (x, y)")
        a.append(ring.linear_form(sol[:n]))
        b.append(ring.linear_form(sol[n:]))
    M = LinearMatrix([[y] + a, [-x] + b])
    A = LinearMatrix([a, b])
    IA = Ideal(ring, list(I.gens) + two_minors(A.rows))
    if IA != Ideal(ring, two_minors(M.rows)):
        raise ArithmeticError("I + I_2(A) differs from I_2(M)")
    return RepresentationByMinors(x, y, a, b, M, A)


# ---------------------------------------------------------------- chain maps and cones

class ChainMapError(ArithmeticError):
    pass


@dataclass
class ChainMap:
    """phi_i : A_i -> B_i with d^B phi_i = phi_{i-1} d^A."""

    source: Resolution
    target: Resolution
    maps: list

    def check(self):
        A, B = self.source, self.target
        for i in range(1, len(self.maps)):
            if i > A.length:
                break
            left = B.maps[i - 1].compose(self.maps[i]) if i <= B.length else None
            right = self.maps[i - 1].compose(A.maps[i - 1])
            if left is None:
                if not right.is_zero():
                    raise ChainMapError(f"square {i} does not commute")
            elif left.entries != right.entries:
                raise ChainMapError(f"square {i} does not commute")
        return True


def lift_through(d: GradedMap, v: list, deg: int):
    """A column w over d.source with d(w) = v (v homogeneous of degree ``deg``), or None."""
    ring = d.ring
    F = ring.field
    unknowns = [(m, j) for j, t in enumerate(d.source.twists) for m in ring.monomials_of_degree(deg - t)]
    coords = [(m, i) for i, t in enumerate(d.target.twists) for m in ring.monomials_of_degree(deg - t)]
    if not coords:
        return [ring.zero()] * d.source.rank
    index = {c: k for k, c in enumerate(coords)}
    rows = [[F.zero] * len(unknowns) for _ in coords]
    for u, (m, j) in enumerate(unknowns):
        for i in range(d.target.rank):
            for e, c in (d.entries[i][j] * ring.monomial(m)).terms.items():
                rows[index[(e, i)]][u] = c
    rhs = [F.zero] * len(coords)
    for i, p in enumerate(v):
        for e, c in p.terms.items():
            k = index.get((e, i))
            if k is None:
                raise ValueError("vector is not homogeneous of the given degree")
            rhs[k] = c
    if not unknowns:
        return None if any(rhs) else []
    sol = solve(rows, rhs, F)
    if sol is None:
        return None
    out = [dict() for _ in range(d.source.rank)]
    for (m, j), c in zip(unknowns, sol):
        if c:
            out[j][m] = c
    return [Polynomial(ring, t) for t in out]


def lift_chain_map(A: Resolution, B: Resolution, phi0: GradedMap) -> ChainMap:
    """Extend phi0 : A_0 -> B_0 to a chain map by solving graded linear systems."""
    ring = A.ring
    maps = [phi0]
    for i in range(1, A.length + 1):
        src = A.modules[i]
        if i > B.length:
            tgt = GradedFreeModule()
            maps.append(GradedMap(ring, src, tgt, []))
            continue
        tgt = B.modules[i]
        comp = maps[i - 1].compose(A.maps[i - 1])
        cols = []
        for j in range(src.rank):
            w = lift_through(B.maps[i - 1], comp.column(j), src.twists[j])
            if w is None:
                raise ChainMapError(f"no lift in homological degree {i}")
            cols.append(w)
        rows = [[cols[j][r] for j in range(src.rank)] for r in range(tgt.rank)]
        maps.append(GradedMap(ring, src, tgt, rows))
    cm = ChainMap(A, B, maps)
    cm.check()
    return cm


def mapping_cone(phi: ChainMap) -> Resolution:
    """Cone C_i = A_{i-1} ⊕ B_i, d(a, b) = (-d^A a, phi(a) + d^B b)."""
    phi.check()
    A, B = phi.source, phi.target
    ring = A.ring
    zero = ring.zero()
    L = max(A.length + 1, B.length)

    def Amod(i):
        return A.modules[i] if 0 <= i <= A.length else GradedFreeModule()

    def Bmod(i):
        return B.modules[i] if 0 <= i <= B.length else GradedFreeModule()

    modules = [Amod(i - 1) + Bmod(i) for i in range(L + 1)]
    maps = []
    for i in range(1, L + 1):
        a_src, b_src = Amod(i - 1), Bmod(i)
        a_tgt, b_tgt = Amod(i - 2), Bmod(i - 1)
        rows = [[zero] * (a_src.rank + b_src.rank) for _ in range(a_tgt.rank + b_tgt.rank)]
        if i - 1 >= 1 and a_src.rank and a_tgt.rank:
            dA = A.maps[i - 2]
            for r in range(a_tgt.rank):
                for c in range(a_src.rank):
                    rows[r][c] = -dA.entries[r][c]
        if a_src.rank and b_tgt.rank and i - 1 < len(phi.maps):
            ph = phi.maps[i - 1]
            for r in range(b_tgt.rank):
                for c in range(a_src.rank):
                    rows[a_tgt.rank + r][c] = ph.entries[r][c]
        if b_src.rank and b_tgt.rank:
            dB = B.maps[i - 1]
            for r in range(b_tgt.rank):
                for c in range(b_src.rank):
                    rows[a_tgt.rank + r][a_src.rank + c] = dB.entries[r][c]
        maps.append(GradedMap(ring, modules[i], modules[i - 1], rows))
    cone = Resolution(ring, modules, maps, minimal=False)
    if not cone.is_complex():
        raise ChainMapError("cone differentials do not compose to zero")
    return cone


def _gm(ring, src, tgt, rows):
    return GradedMap(ring, GradedFreeModule(src), GradedFreeModule(tgt), rows)


def quadric_cone_chain_map(ring: PolyRing, x=None, y=None, z=None, w=None) -> ChainMap:
    """The explicit lift of multiplication by xz+yw from S/(x,y)(-2) to S/(x,y)^2."""
    v = ring.gens()
    x, y, z, w = (p if p is not None else v[i] for i, p in enumerate((x, y, z, w)))
    zero = ring.zero()
    A = Resolution(ring, [GradedFreeModule([2]), GradedFreeModule([3, 3]), GradedFreeModule([4])],
                   [_gm(ring, [3, 3], [2], [[x, y]]), _gm(ring, [4], [3, 3], [[y], [-x]])], minimal=True)
    B = Resolution(ring, [GradedFreeModule([0]), GradedFreeModule([2, 2, 2]), GradedFreeModule([3, 3])],
                   [_gm(ring, [2, 2, 2], [0], [[x * x, x * y, y * y]]),
                    _gm(ring, [3, 3], [2, 2, 2], [[y, zero], [-x, y], [zero, -x]])], minimal=True)
    phi = [_gm(ring, [2], [0], [[x * z + y * w]]),
           _gm(ring, [3, 3], [2, 2, 2], [[z, zero], [w, z], [zero, w]]),
           _gm(ring, [4], [3, 3], [[z], [w]])]
    cm = ChainMap(A, B, phi)
    cm.check()
    return cm


def colon_cone(J: Ideal, q: Polynomial, B: Resolution | None = None) -> Resolution:
    """Resolution of S/(J, q) as the cone over multiplication by q from S/(J : q)(-deg q)."""
    ring = J.ring
    Kq = quotient(J, q)
    A = twist(minimal_free_resolution(Kq), q.degree())
    B = B or minimal_free_resolution(J)
    phi0 = _gm(ring, [q.degree()], [0], [[q]])
    return mapping_cone(lift_chain_map(A, B, phi0))


def engheta_cone(I: Ideal, case: str) -> Resolution:
    """Minimal resolution of an engheta_form ideal through its cone (before minimizing)."""
    ring = I.ring
    gens = list(I.gens)
    if case == "ia_quadric":
        return mapping_cone(quadric_cone_chain_map(ring))
    if case == "ia_intersection":
        J = Ideal(ring, gens[:3])
        return colon_cone(J, gens[3])
    *lin, q = gens
    J = Ideal(ring, lin)
    return colon_cone(J, q)


def cone_betti(I: Ideal, case: str):
    return minimize(engheta_cone(I, case)).betti_table()
