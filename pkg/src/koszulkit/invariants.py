"""Hilbert series numerators, codimension, multiplicity, socle degrees.

Integer polynomials in t are tuples of coefficients, lowest degree first,
with trailing zeros stripped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb


class BoundExceededError(RuntimeError):
    pass


class NotArtinianError(ValueError):
    pass


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a, b):
    return poly_add(a, tuple(-v for v in b))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def poly_shift(a, k):
    return _trim((0,) * k + tuple(a))


def poly_eval(a, t):
    return sum(c * t**i for i, c in enumerate(a))


def divide_one_minus_t(a):
    """Exact synthetic division by (1 - t); returns None when t=1 is not a root."""
    if sum(a) != 0:
        return None
    # a = (1 - t) q  =>  q_i = a_0 + ... + a_i
    q, acc = [], 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return _trim(q) if q else (0,)


def format_tpoly(a, var="t") -> str:
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def hilbert_numerator(bt) -> tuple:
    """Q(t) = sum (-1)^i beta_{i,d} t^d from a Betti table."""
    out: dict = {}
    for (i, j), v in bt.entries.items():
        d = i + j
        out[d] = out.get(d, 0) + (-1) ** i * v
    if not out:
        return (0,)
    return _trim([out.get(d, 0) for d in range(max(out) + 1)])


def _minimalize(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(all(a <= b for a, b in zip(o, m)) for o in out):
            out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=4096)
def _monomial_numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if all(sum(1 for v in m if v) == 1 for m in gens):
        # pure powers of distinct variables: product of (1 - t^a)
        out = (1,)
        for m in gens:
            out = poly_mul(out, poly_sub((1,), poly_shift((1,), sum(m))))
        return out
    # pivot on the generator of largest degree
    m = max(gens, key=lambda g: (sum(g), g))
    rest = tuple(g for g in gens if g != m)
    colon = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest))
    return poly_sub(_monomial_numerator(rest), poly_shift(_monomial_numerator(colon), sum(m)))


def monomial_hilbert_numerator(lms) -> tuple:
    """Numerator of the Hilbert series of S/(monomials), by the colon recursion."""
    return _monomial_numerator(_minimalize(tuple(tuple(m) for m in lms)))


def hilbert_numerator_of(I) -> tuple:
    """Q(t) for S/I from the initial ideal (I homogeneous)."""
    if not I.is_homogeneous():
        raise ValueError("hilbert_numerator_of needs a homogeneous ideal")
    gb = I.gb()
    lms = gb.leading_monomials()
    if any(sum(m) == 0 for m in lms):
        return (0,)
    return monomial_hilbert_numerator(lms)


@dataclass(frozen=True)
class HilbertReport:
    Q: tuple
    c: int
    K: tuple
    e: int
    dim: int

    def to_json(self) -> str:
        return json.dumps({"Q": list(self.Q), "c": self.c, "e": self.e,
                           "dim": self.dim, "K": list(self.K)})


def codim_multiplicity(Q, n: int) -> HilbertReport:
    """c = order of vanishing of Q at t=1, K = Q/(1-t)^c, e = K(1)."""
    Q = _trim(Q)
    if Q == (0,):
        raise ValueError("zero numerator (unit ideal) has no codimension")
    c, K = 0, Q
    while True:
        nxt = divide_one_minus_t(K)
        if nxt is None:
            break
        K, c = nxt, c + 1
    return HilbertReport(Q=Q, c=c, K=K, e=poly_eval(K, 1), dim=n - c)


def hilbert_report(I) -> HilbertReport:
    return codim_multiplicity(hilbert_numerator_of(I), I.ring.nvars)


def codim(I) -> int:
    return hilbert_report(I).c


def multiplicity(I) -> int:
    return hilbert_report(I).e


def numerator_system(known: dict, unknown, e: int = 1):
    """Solve Q(1) = Q'(1) = 0, Q''(1)/2 = e for the coefficients of Q at ``unknown`` degrees.

    ``known`` maps degree -> coefficient.  Returns {degree: value} when the
    system has exactly one rational solution, else None.
    """
    from fractions import Fraction
    from .field import QQ
    from .linalg import rank, solve
    unknown = list(unknown)
    rows = [[Fraction(1)] * len(unknown),
            [Fraction(d) for d in unknown],
            [Fraction(d * (d - 1), 2) for d in unknown]]
    rhs = [-sum(known.values()),
           -sum(d * c for d, c in known.items()),
           e - sum(Fraction(d * (d - 1), 2) * c for d, c in known.items())]
    if rank(rows, QQ) < len(unknown):
        return None
    x = solve(rows, rhs, QQ)
    if x is None:
        return None
    return {d: v for d, v in zip(unknown, x)}


def series_coefficients(Q, n: int, up_to: int) -> list[int]:
    """Coefficients of Q(t)/(1-t)^n through degree ``up_to``."""
    if n == 0:
        return [Q[d] if d < len(Q) else 0 for d in range(up_to + 1)]
    return [sum(Q[k] * comb(d - k + n - 1, n - 1) for k in range(min(d, len(Q) - 1) + 1))
            for d in range(up_to + 1)]


def hilbert_function_oracle(I, up_to: int) -> list[int]:
    """dim (S/I)_d for d <= up_to by counting standard monomials."""
    if up_to > 12:
        raise BoundExceededError("hilbert_function_oracle is limited to degree 12")
    ring = I.ring
    lms = I.gb().leading_monomials()
    out = []
    for d in range(up_to + 1):
        out.append(sum(1 for m in ring.monomials_of_degree(d)
                       if not any(all(a <= b for a, b in zip(l, m)) for l in lms)))
    return out


@dataclass(frozen=True)
class SocleReport:
    degrees: dict

    def total(self) -> int:
        return sum(self.degrees.values())


def socle_degrees(I, require_artinian: bool = False) -> SocleReport:
    """Graded dimensions of (I : m)/I.

    The socle is killed by the maximal ideal, so it is finite dimensional even
    when S/I is not artinian; ``require_artinian`` restores the strict check.
    """
    from .ideal_ops import colon, maximal_ideal

    ring = I.ring
    if require_artinian and hilbert_report(I).dim != 0:
        raise NotArtinianError("S/I is not artinian")
    J = colon(I, maximal_ideal(ring))
    top = max((g.degree() for g in J.gb().generators), default=0)
    a = hilbert_function_oracle(I, top)
    b = hilbert_function_oracle(J, top)
    return SocleReport({d: a[d] - b[d] for d in range(top + 1) if a[d] != b[d]})


def is_nondegenerate(I) -> bool:
    """True iff I contains no nonzero linear form (checked on the reduced GB)."""
    return not any(g.degree() <= 1 for g in I.gb().generators)
