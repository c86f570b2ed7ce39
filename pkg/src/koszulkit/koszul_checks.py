"""Necessary conditions for Koszulness, G-quadratic witnesses, 1-genericity,
table membership, the height-two multiplicity-two classifier and the random
sampling harness.

Koszulness is never decided: verdicts are ``fails-necessary``,
``passes-necessary`` or ``g-quadratic-witnessed``.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from math import comb

import numpy as np

from . import kernels
from .constructions import LinearMatrix, two_minors
from .field import Field, GF
from .groebner import GroebnerBasis, is_groebner
from .ideal import Ideal
from .ideal_ops import intersect, minimal_generators, quotient, unmixed_part
from .invariants import hilbert_report
from .linalg import inverse, nullspace, rank, rref
from .orders import MonomialOrder, block, lex, standard_orders
from .poly import LinearChange, Polynomial, PolyRing
from .resolution import BettiTable, betti_table


class SearchBoundError(RuntimeError):
    pass


class UnsupportedFieldError(ValueError):
    pass


# ---------------------------------------------------------------- tables

MAIN_TABLES = {
    "i": BettiTable.from_rows({0: [1], 1: [0, 4, 4, 1]}),
    "ii": BettiTable.from_rows({0: [1], 1: [0, 4, 3, 1], 2: [0, 0, 3, 3, 1]}),
    "iii": BettiTable.from_rows({0: [1], 1: [0, 4, 3], 2: [0, 0, 1, 1]}),
    "iv": BettiTable.from_rows({0: [1], 1: [0, 4, 2], 2: [0, 0, 4, 4, 1]}),
}


def main_theorem_membership(bt: BettiTable):
    """Label of the matching table among the four height-two, four-quadric tables, else None."""
    for label, t in MAIN_TABLES.items():
        if bt == t:
            return label
    return None


# ---------------------------------------------------------------- battery

@dataclass
class KoszulReport:
    quadratic_generation: bool
    subdiagonal_ok: bool
    linear_strand_bounds: bool
    diagonal_bounds: bool
    diagonal_vanishing_ok: bool
    beta23_ok: bool
    pd_linear_socle_ok: bool
    reg_le_pd: bool
    ci_equality_ok: bool
    betti_bound_ok: bool
    verdict: str
    g: int = 0
    codim: int = 0
    betti: BettiTable | None = None
    witness: "GQuadraticWitness | None" = None

    FLAGS = ("quadratic_generation", "subdiagonal_ok", "linear_strand_bounds", "diagonal_bounds",
             "diagonal_vanishing_ok", "beta23_ok", "pd_linear_socle_ok", "reg_le_pd",
             "ci_equality_ok", "betti_bound_ok")

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAGS}

    def failed(self) -> list:
        return [k for k, v in self.flags().items() if not v]


def koszul_necessary_battery(I: Ideal, witness: "GQuadraticWitness | None" = None,
                             search: bool = False, trials: int = 200, seed: int = 0) -> KoszulReport:
    """Evaluate the necessary conditions; with ``search`` also look for a witness when they pass."""
    if not I.is_homogeneous():
        raise ValueError("the battery needs a homogeneous ideal")
    if I.is_unit():
        raise ValueError("the battery needs a proper ideal")
    gens, g = minimal_generators(I) if not I.is_zero() else ([], 0)
    bt = betti_table(I)
    c = hilbert_report(I).c
    quad = all(p.degree() == 2 for p in gens)
    pd, reg = bt.projective_dimension, bt.regularity

    def beta(i, d):
        return bt.graded(i, d)

    sub = all(j <= i or (i, j) == (0, 0) for (i, j) in bt.entries)
    lin_ok = all(beta(i, i + 1) <= comb(g, i) for i in range(2, g + 1))
    if g >= 2 and beta(2, 3) == comb(g, 2):
        # equality forces height one and a linear resolution of length g
        linear = all(j <= 1 for (i, j) in bt.entries if i > 0)
        lin_ok = lin_ok and c == 1 and linear and pd == g
    diag = all(beta(i, 2 * i) <= comb(g, i) for i in range(2, g + 1))
    if any(beta(i, 2 * i) == comb(g, i) for i in range(2, g + 1)):
        diag = diag and c == g
    vanish = all(beta(i, 2 * i) == 0 for i in range(c + 1, pd + 1))
    b23 = beta(2, 3) >= 2 if c <= g - 2 else True
    if pd >= 1 and beta(pd, pd + 1) != 0:
        socle = pd <= g and ((pd == g) == (c == 1))
    else:
        socle = True
    reg_ok = reg <= pd
    ci = (reg == pd) == (c == g)
    bound = all(bt.total(i) <= comb(g, i) for i in range(pd + 1))
    flags = [quad, sub, lin_ok, diag, vanish, b23, socle, reg_ok, ci, bound]
    if all(flags) and witness is None and search:
        witness = g_quadratic_witness(I, trials=trials, seed=seed)
    if not all(flags):
        verdict = "fails-necessary"
    elif witness is not None:
        verdict = "g-quadratic-witnessed"
    else:
        verdict = "passes-necessary"
    return KoszulReport(*flags, verdict=verdict, g=g, codim=c, betti=bt, witness=witness)


# ---------------------------------------------------------------- G-quadratic witnesses

@dataclass
class GQuadraticWitness:
    change: LinearChange
    order: MonomialOrder
    gb: GroebnerBasis
    method: str = "identity"      # identity | normal-form | random


def quadratic_gb(gens, order: MonomialOrder):
    """Reduced quadric basis of span(gens) if it is a Gröbner basis under ``order``, else None."""
    gens = [g for g in gens if g.terms]
    if not gens:
        return GroebnerBasis((), order, True)
    ring = gens[0].ring
    if any(not g.is_homogeneous() or g.degree() != 2 for g in gens):
        return None
    mons = sorted(ring.monomials_of_degree(2), key=order.key, reverse=True)
    rows, piv = rref([g.coefficient_vector(mons) for g in gens], ring.field)
    basis = [ring.from_terms({mons[j]: v for j, v in enumerate(r) if v}) for r in rows]
    if not is_groebner(basis, order):
        return None
    return GroebnerBasis(tuple(sorted(basis, key=lambda p: order.key(p.lm(order)))), order, True)


def g_quadratic_witness(I: Ideal, orders=None, trials: int = 200, seed: int = 0):
    """Search coordinate changes and orders for a quadratic Gröbner basis.

    Stages: every order in the given coordinates; for height-two
    multiplicity-two ideals of the (a_i x, q) shape, the normal-form change;
    then ``trials`` random invertible changes against every order.  None is
    not a proof that no witness exists.
    """
    ring = I.ring
    gens, _ = minimal_generators(I)
    if any(g.degree() != 2 for g in gens):
        return None
    orders = list(orders) if orders is not None else standard_orders(ring.nvars)
    ident = LinearChange.identity(ring)
    for o in orders:
        gb = quadratic_gb(gens, o)
        if gb is not None:
            return GQuadraticWitness(ident, o, gb, "identity")
    w = normal_form_witness(I)
    if w is not None:
        return w
    rng = random.Random(seed)
    for _ in range(trials):
        phi = _random_change(ring, rng)
        moved = [phi(g) for g in gens]
        for o in orders:
            gb = quadratic_gb(moved, o)
            if gb is not None:
                return GQuadraticWitness(phi, o, gb, "random")
    return None


def line_multiple_structure(I: Ideal):
    """(x, [a_1..a_k], q, case) when I = (a_i x, q) with x read off the unmixed part, else None."""
    ring = I.ring
    F = ring.field
    if not F.is_prime_field or F.modulus == 2:
        return None
    rep = hilbert_report(I)
    if (rep.c, rep.e) != (2, 2):
        return None
    gens, g = minimal_generators(I)
    lin = [u for u in unmixed_part(I).gens if u.degree() == 1]
    if len(lin) != 1:
        return None
    x = lin[0]
    mons2 = ring.monomials_of_degree(2)
    p = F.modulus
    B, piv, _ = _quadric_space(gens, ring)
    table = _product_table(ring, mons2)
    a = [ring.linear_form(v) for v in _multipliers(B, piv, table, _coeffs(x), p)]
    if len(a) != g - 1:
        return None
    span = [ai * x for ai in a]
    r0 = rank([s.coefficient_vector(mons2) for s in span], F)
    q = next(gq for gq in gens
             if rank([s.coefficient_vector(mons2) for s in span] + [gq.coefficient_vector(mons2)], F) > r0)
    case = "ib" if Ideal(ring, a).contains(q) else "ii"
    return x, a, q, case


def normal_form_witness(I: Ideal):
    """Witness from the normal-form change when the variable count matches the shape."""
    s = line_multiple_structure(I)
    if s is None:
        return None
    x, a, q, case = s
    need = len(a) if case == "ib" else len(a) + 1
    if I.ring.nvars != need:
        return None
    w = explicit_witness(x, a, q, case)
    if w is None or not verify_witness(I, w):
        return None
    w.method = "normal-form"
    return w


def _random_change(ring: PolyRing, rng) -> LinearChange:
    """Random invertible change; half the draws are sparse (unipotent times permutation)."""
    if rng.random() < 0.5:
        return LinearChange.random(ring, rng)
    F = ring.field
    n = ring.nvars
    perm = list(range(n))
    rng.shuffle(perm)
    m = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        m[i][perm[i]] = F.one
        for j in range(n):
            if j != perm[i] and rng.random() < 0.3:
                m[i][j] = F.random_element(rng)
    try:
        return LinearChange(ring, m)
    except ValueError:
        return LinearChange.random(ring, rng)


def verify_witness(I: Ideal, w: GQuadraticWitness) -> bool:
    gens, _ = minimal_generators(I)
    return quadratic_gb([w.change(g) for g in gens], w.order) is not None


def _compose(ring, *mats):
    F = ring.field
    n = ring.nvars
    out = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for m in mats:
        out = [[F.reduce(sum(out[i][k] * m[k][j] for k in range(n))) for j in range(n)] for i in range(n)]
    return out


def _coeffs(f: Polynomial):
    ring = f.ring
    return f.coefficient_vector(ring.monomials_of_degree(1))


def _perm_matrix(F, n, perm):
    """Substitution x_i -> x_{perm[i]}."""
    m = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        m[i][perm[i]] = F.one
    return m


def _elementary(F, n, target, adds):
    """Substitution x_target -> x_target + sum adds[j] x_j."""
    m = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for j, c in adds.items():
        m[target][j] = F.reduce(m[target][j] + c)
    return m


def _direction_matrix(F, n, vec):
    """Substitution whose column 0 is ``vec`` (so f's x_0^2 coefficient becomes f(vec))."""
    m = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    k = next(i for i, v in enumerate(vec) if v)
    for i in range(n):
        m[i][0] = F.reduce(vec[i]) if i < len(vec) else F.zero
    if k != 0:
        m[0][k] = F.one
        m[k][k] = F.zero
    return m


def _sqrt(F: Field, a):
    a = F.reduce(a)
    for r in range(F.modulus):
        if r * r % F.modulus == a:
            return r
    return None


def _values(qr, last, F, tries: int = 2000):
    """Vectors v (last coordinate dropped) with q(v) != 0: unit and two-term vectors, then random."""
    ring = qr.ring

    def candidates():
        for i in range(last):
            yield [F.one if j == i else F.zero for j in range(last)]
        for i, j in combinations(range(last), 2):
            for t in range(1, F.modulus):
                v = [F.zero] * last
                v[i], v[j] = F.one, t
                yield v
        rng = random.Random(0)
        for _ in range(tries):
            yield [F.random_element(rng) for _ in range(last)]

    for v in candidates():
        if any(v):
            val = F.reduce(qr.substitute([ring.const(t) for t in v] + [ring.zero()]).constant_coeff())
            if val:
                yield v, val


def explicit_witness(x, a, q, case: str) -> GQuadraticWitness | None:
    """Follow the normal-form coordinate changes for the ib / ii shapes.

    Expects a prime field, a ring with exactly g-1 (ib) or g (ii) variables
    and a_1, ..., a_{g-1} independent.  Returns None for case ii when the
    remaining quadric takes no nonzero square value (an extension field would
    be needed).
    """
    ring = x.ring
    F = ring.field
    if not F.is_prime_field or F.modulus == 2:
        raise UnsupportedFieldError("explicit changes are implemented over F_p, p odd")
    n = ring.nvars
    last = n - 1
    A = [_coeffs(ai) for ai in a]
    if case == "ii":
        for k in range(n):
            e = [F.one if j == k else F.zero for j in range(n)]
            if rank(A + [e], F) == n:
                A = A + [e]
                break
    if len(A) != n or rank(A, F) != n:
        raise ValueError("the a_i must complete to a basis of the linear forms")
    mats = [inverse(A, F)]          # a_i become the variables x_i
    gens = _generators(x, a, q)

    def now(p):
        return LinearChange(ring, _compose(ring, *mats))(p)

    def finish(order):
        phi = LinearChange(ring, _compose(ring, *mats))
        gb = quadratic_gb([phi(p) for p in gens], order)
        return GQuadraticWitness(phi, order, gb) if gb else None

    xc = _coeffs(now(x))
    if case == "ii" and not xc[last]:
        # x already lies in (a); a lex order led by the complementary variable works
        return finish(block(n, ("lex", [last]), ("grevlex", list(range(last)))))
    if case == "ib" and not xc[last]:
        k = max(i for i in range(n) if xc[i])
        perm = list(range(n))
        perm[k], perm[last] = perm[last], perm[k]
        mats.append(_perm_matrix(F, n, perm))
        xc = _coeffs(now(x))
    lam = F.inv(xc[last])
    mats.append(_elementary(F, n, last, {i: F.reduce(-xc[i] * lam) for i in range(last) if xc[i]}))

    def rest_of_q():
        qc = now(q)
        return qc, ring.from_terms({e: c for e, c in qc.terms.items() if e[last] == 0})

    qc, qr = rest_of_q()
    if not qr:
        raise ValueError("q lies in (x); the shape is not height two")
    if case == "ib":
        vec, _ = next(_values(qr, last, F))
        mats.append(_direction_matrix(F, n, vec))
        return finish(lex(n))
    sq_last = tuple(2 if j == last else 0 for j in range(n))
    c2 = qc.terms.get(sq_last)
    if not c2:
        raise ValueError("q is a zero divisor modulo the x-multiples; not the ii shape")
    inv2 = F.inv(c2)
    vec = next((v for v, val in _values(qr, last, F) if _sqrt(F, val * inv2) is not None), None)
    if vec is None:
        return None
    mats.append(_direction_matrix(F, n, vec))
    qc, qr = rest_of_q()
    sq0 = (2,) + (0,) * (n - 1)
    alpha = qr.terms[sq0]
    # complete the square in x_0 so q has no x_0 * x_j cross terms
    half = F.inv(F.reduce(2 * alpha))
    cross = {}
    for e, c in qr.terms.items():
        if e[0] == 1:
            j = next(i for i in range(1, n) if e[i])
            cross[j] = F.reduce(-c * half)
    mats.append(_elementary(F, n, 0, cross))
    delta = _sqrt(F, alpha * inv2)
    mats.append(_elementary(F, n, last, {0: delta}))
    return finish(block(n, ("grlex", [0, last]), ("grevlex", list(range(1, last)))))


def _generators(x, a, q):
    return [ai * x for ai in a] + [q]


# ---------------------------------------------------------------- 1-genericity

def _coefficient_tensor(M: LinearMatrix, p: int) -> np.ndarray:
    ring = M.rows[0][0].ring
    lin = ring.monomials_of_degree(1)
    r, c = M.shape
    T = np.zeros((r, c, ring.nvars), dtype=np.int64)
    for i in range(r):
        for j in range(c):
            p_ = M.rows[i][j]
            if p_.terms and p_.degree() != 1:
                raise ValueError("1-genericity needs linear entries")
            for k, m in enumerate(lin):
                T[i, j, k] = int(p_.terms.get(m, 0)) % p
    return T


def _require_prime_field(ring) -> int:
    F = ring.field
    if not F.is_prime_field:
        raise UnsupportedFieldError("finite-field enumeration is unavailable over QQ")
    return F.modulus


def is_one_generic(M: LinearMatrix, limit: int = 10 ** 7) -> bool:
    """No generalized zero over F_p: every u*M*v (u, v nonzero) is a nonzero form.

    For each u in P^1 the forms of u*M must be linearly independent, so the
    check is a minimum rank over the pencil of rows ((p + 1) small ranks).
    """
    if not isinstance(M, LinearMatrix):
        M = LinearMatrix(M)
    r, c = M.shape
    if r != 2:
        raise ValueError("is_one_generic expects a matrix with two rows")
    p = _require_prime_field(M.rows[0][0].ring)
    if (p + 1) * c * c * M.rows[0][0].ring.nvars > limit:
        raise SearchBoundError(f"pencil scan over F_{p} with {c} columns exceeds {limit}")
    T = _coefficient_tensor(M, p)
    return kernels.min_rank_pencil(np.ascontiguousarray(T), p) == c


def one_generic_bruteforce(M: LinearMatrix, limit: int = 10 ** 7) -> bool:
    """Direct enumeration of all nonzero u in F_p^2 and v in F_p^n."""
    r, c = M.shape
    p = _require_prime_field(M.rows[0][0].ring)
    if p ** (2 + c) > limit:
        raise SearchBoundError(f"search space p^(2+n) = {p}^{2 + c} exceeds {limit}")
    T = _coefficient_tensor(M, p)
    for u in product(range(p), repeat=2):
        if not any(u):
            continue
        row = (u[0] * T[0] + u[1] * T[1]) % p
        for v in product(range(p), repeat=c):
            if not any(v):
                continue
            if not ((np.array(v) @ row) % p).any():
                return False
    return True


# ---------------------------------------------------------------- classifier

@dataclass
class Classification:
    label: str
    details: dict = dc_field(default_factory=dict)

    def __str__(self):
        return self.label


def _quadric_space(gens, ring):
    mons = ring.monomials_of_degree(2)
    p = ring.field.modulus
    B = np.array([g.coefficient_vector(mons) for g in gens], dtype=np.int64) % p
    B = np.ascontiguousarray(B)
    piv = kernels.rref_modp(B, p)
    return np.ascontiguousarray(B[:len(piv)]), piv, mons


def _product_table(ring, mons):
    n = ring.nvars
    index = {m: k for k, m in enumerate(mons)}
    t = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            t[i, j] = index[tuple(e)]
    return t


def _multipliers(B, piv, table, point, p):
    """Basis of {a in S_1 : a * point in span(B)} as coefficient lists."""
    n = table.shape[0]
    N = B.shape[1]
    W = np.zeros((n, N), dtype=np.int64)
    for j in range(n):
        for i in range(n):
            if point[i]:
                W[j, table[i, j]] = (W[j, table[i, j]] + point[i]) % p
    for k, c in enumerate(piv):
        f = W[:, c].copy()
        W = (W - np.outer(f, B[k])) % p
    # left kernel of W: nullspace of W^T
    F = GF(p)
    return nullspace([[int(v) for v in row] for row in W.T], n, F)


def classify_ht2_mult2(I: Ideal, scan_limit: int = 10 ** 6) -> Classification:
    """Identify which height-two, multiplicity-two shape I has (g >= 4)."""
    ring = I.ring
    p = _require_prime_field(ring)
    n = ring.nvars
    if p ** n > scan_limit:
        raise SearchBoundError(f"linear-form scan needs p^n = {p}^{n} <= {scan_limit}")
    rep = hilbert_report(I)
    if (rep.c, rep.e) != (2, 2):
        return Classification("none", {"reason": f"codim {rep.c}, multiplicity {rep.e}"})
    gens, g = minimal_generators(I)
    if g < 4 or any(q.degree() != 2 for q in gens):
        return Classification("none", {"reason": "needs at least four quadric generators"})
    B, piv, mons = _quadric_space(gens, ring)
    table = _product_table(ring, mons)
    dims = kernels.scan_multiples(B, list(piv), table, p)
    points = list(kernels.projective_points(n, p))
    F = ring.field
    hits = [pt for pt, d in zip(points, dims) if d >= g - 1]
    if hits:
        pt = hits[0]
        x = ring.linear_form(pt)
        a = [ring.linear_form(v) for v in _multipliers(B, piv, table, pt, p)]
        span = [ai * x for ai in a]
        base = Ideal(ring, span)
        mons2 = ring.monomials_of_degree(2)
        r0 = rank([s.coefficient_vector(mons2) for s in span], F)
        q = next(gq for gq in gens
                 if rank([s.coefficient_vector(mons2) for s in span] + [gq.coefficient_vector(mons2)], F) > r0)
        details = {"x": str(x), "a": [str(v) for v in a], "q": str(q)}
        if Ideal(ring, a).contains(q):
            return Classification("ib", details)
        if quotient(base, q) == base:
            return Classification("ii", details)
        return Classification("none", dict(details, reason="q neither in (a) nor regular"))
    if g != 4:
        return Classification("none", {"reason": "no linear form carries g-1 multiples"})
    twos = [pt for pt, d in zip(points, dims) if d >= 2]
    lines = []
    used = []
    for pt in twos:
        if used and rank(used + [pt], F) == len(used):
            continue
        # find a partner spanning a line whose ideal contains I
        l1 = ring.linear_form(pt)
        for pt2 in twos:
            if rank([pt, pt2], F) < 2:
                continue
            if used and rank(used + [pt, pt2], F) < len(used) + 2:
                continue
            P = Ideal(ring, [l1, ring.linear_form(pt2)])
            if I.issubset(P):
                lines.append(P)
                used += [pt, pt2]
                break
        if len(lines) == 2:
            break
    if len(lines) == 2 and intersect(lines[0], lines[1]) == I:
        return Classification("ia_intersection", {"primes": [str(L) for L in lines]})
    if len(lines) >= 1:
        P = lines[0]
        sq = Ideal(ring, [u * v for u in P.gens for v in P.gens])
        if sq.issubset(I):
            return Classification("ia_quadric", {"prime": str(P)})
    return Classification("none", {"reason": "no shape matched"})


def recombine(I: Ideal, rng) -> Ideal:
    """Random invertible recombination of the generators."""
    F = I.ring.field
    gens = list(I.gens)
    k = len(gens)
    while True:
        m = [[F.random_element(rng) for _ in range(k)] for _ in range(k)]
        if rank(m, F) == k:
            break
    return Ideal(I.ring, [sum((g.scale(c) for g, c in zip(gens, row)), I.ring.zero()) for row in m])


# ---------------------------------------------------------------- sampling

def random_quadric_ideal(n: int, g: int, field: Field, seed: int, names=None) -> Ideal:
    """g quadrics with independent uniform coefficients (zero included)."""
    if n > 6:
        raise ValueError("sampling is limited to n <= 6")
    rng = random.Random(seed)
    ring = PolyRing(names or [f"x{i + 1}" for i in range(n)], field)
    mons = ring.monomials_of_degree(2)
    return Ideal(ring, [ring.from_terms({m: field.random_element(rng) for m in mons}) for _ in range(g)])


HOST_FAMILIES = ("uniform", "linear_prime", "two_planes", "square_plus", "line_multiples", "minors32")


def _rand_lin(ring, rng):
    F = ring.field
    while True:
        f = ring.linear_form([F.random_element(rng) for _ in range(ring.nvars)])
        if f.terms:
            return f


def _host_quadrics(family: str, ring: PolyRing, rng) -> list:
    """Spanning quadrics of a random codimension-two host of the given family."""
    F = ring.field
    L = [_rand_lin(ring, rng) for _ in range(ring.nvars)]
    x, y, z, w = (L + L)[:4]
    mons = ring.monomials_of_degree(1)
    if family == "linear_prime":
        return [x * m_ for m_ in map(ring.monomial, mons)] + [y * m_ for m_ in map(ring.monomial, mons)]
    if family == "two_planes":
        return [x * z, x * w, y * z, y * w]
    if family == "square_plus":
        return [x * x, x * y, y * y, x * z + y * w]
    if family == "line_multiples":
        q = sum((_rand_lin(ring, rng) * _rand_lin(ring, rng) for _ in range(2)), ring.zero())
        return [ring.monomial(m) * x for m in mons] + [q]
    if family == "minors32":
        M = [[_rand_lin(ring, rng) for _ in range(2)] for _ in range(3)]
        return two_minors([list(r) for r in zip(*M)])
    raise ValueError(f"unknown host family {family!r}")


def sample_ideal(n: int, g: int, field: Field, seed: int, family: str = "uniform") -> Ideal:
    if family == "uniform":
        return random_quadric_ideal(n, g, field, seed)
    rng = random.Random(seed)
    ring = PolyRing([f"x{i + 1}" for i in range(n)], field)
    host = _host_quadrics(family, ring, rng)
    gens = [sum((h.scale(field.random_element(rng)) for h in host), ring.zero()) for _ in range(g)]
    return Ideal(ring, gens)


CSV_FIELDS = ["seed", "n", "g", "codim", "e", "pd", "reg", "betti_bound_ok", "table_label", "witness_found"]


@dataclass
class SampleRow:
    seed: int
    n: int
    g: int
    codim: int
    e: int
    pd: int
    reg: int
    betti_bound_ok: bool
    table_label: str
    witness_found: bool
    family: str = "uniform"
    ideal: Ideal | None = None
    report: KoszulReport | None = None

    def csv_values(self):
        return [self.seed, self.n, self.g, self.codim, self.e, self.pd, self.reg,
                int(self.betti_bound_ok), self.table_label, int(self.witness_found)]


def sample_one(n, g, field, seed, family="uniform", witness_trials: int = 0) -> SampleRow | None:
    I = sample_ideal(n, g, field, seed, family)
    if I.is_zero() or I.is_unit():
        return None
    gens, gmin = minimal_generators(I)
    I = Ideal(I.ring, gens)
    rep = hilbert_report(I)
    witness = g_quadratic_witness(I, trials=witness_trials, seed=seed) if witness_trials >= 0 else None
    kr = koszul_necessary_battery(I, witness)
    bt = kr.betti
    label = main_theorem_membership(bt) or "-"
    return SampleRow(seed, n, gmin, rep.c, rep.e, bt.projective_dimension, bt.regularity,
                     kr.betti_bound_ok, label, witness is not None, family, I, kr)


def sample_experiment(n: int = 4, g: int = 4, field: Field | None = None, samples: int = 200,
                      seed: int = 0, families=("uniform",), codim: int | None = None,
                      witness_trials: int = 0) -> list:
    """Run ``samples`` seeded draws cycling through ``families``; optionally keep one codimension."""
    field = field or GF(101)
    rows = []
    for k in range(samples):
        s = seed + k
        fam = families[k % len(families)]
        row = sample_one(n, g, field, s, fam, witness_trials)
        if row is None or (codim is not None and row.codim != codim):
            continue
        rows.append(row)
    rows.sort(key=lambda r: r.seed)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow(r.csv_values())
    return buf.getvalue()


def hilbert_burch_shape(I: Ideal) -> bool:
    """Betti table (1; 3, 2) with both first syzygies linear."""
    bt = betti_table(I)
    return bt.entries == {(0, 0): 1, (1, 1): 3, (2, 1): 2}
