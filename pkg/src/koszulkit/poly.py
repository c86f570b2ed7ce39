"""Sparse multivariate polynomials over exact fields."""

from __future__ import annotations

from fractions import Fraction

from .field import Field, QQ
from .orders import MonomialOrder, grevlex

MAX_EXPONENT = 2**16
MAX_DEGREE = 2**20


class DegreeOverflowError(OverflowError):
    pass


class RingMismatchError(ValueError):
    pass


class PolyRing:
    """Standard graded polynomial ring with named variables."""

    def __init__(self, names, field: Field = QQ, order: MonomialOrder | str | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.field = field
        n = len(names)
        if order is None:
            order = grevlex(n)
        elif isinstance(order, str):
            from .orders import parse_order
            order = parse_order(order, names)
        if order.nvars != n:
            raise ValueError("order size does not match variable count")
        self.order = order
        self.zero_exp = (0,) * n

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"ring {self.field} [{', '.join(self.names)}] order {self.order.describe(self.names)}"

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, self.field, order)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.names, field, self.order)

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def __getitem__(self, name):
        return self.var(name)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exp, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def from_terms(self, terms: dict) -> "Polynomial":
        """Build from a raw {exp: coeff} dict, dropping zeros."""
        red = self.field.reduce
        return Polynomial(self, {e: red(c) for e, c in terms.items() if red(c)})

    def linear_form(self, coeffs) -> "Polynomial":
        n = self.nvars
        terms = {}
        F = self.field
        for i, c in enumerate(coeffs):
            c = F(c)
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_polynomial
        return parse_polynomial(text, self)

    def monomials_of_degree(self, d: int) -> list[tuple]:
        return monomials_of_degree(self.nvars, d)


_MONO_CACHE: dict = {}


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    """All exponent tuples of total degree d, in lex-descending order."""
    key = (n, d)
    out = _MONO_CACHE.get(key)
    if out is None:
        if n == 0:
            out = [()] if d == 0 else []
        elif n == 1:
            out = [(d,)]
        else:
            out = [(a,) + rest for a in range(d, -1, -1) for rest in monomials_of_degree(n - 1, d - a)]
        _MONO_CACHE[key] = out
    return out


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # canonical form
    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple]:
        """(coeff, exp) pairs strictly descending under ``order`` (ambient order by default)."""
        key = (order or self.ring.order).key
        return sorted(((c, e) for e, c in self.terms.items()), key=lambda t: key(t[1]), reverse=True)

    def lm(self, order: MonomialOrder | None = None) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def lc(self, order: MonomialOrder | None = None):
        return self.terms[self.lm(order)]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc(order)))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    # arithmetic
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = red(v + c)
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Polynomial(self.ring, {e: red(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return Polynomial(self.ring, {})
        red = self.ring.field.reduce
        return Polynomial(self.ring, {e: red(v * c) for e, v in self.terms.items()})

    def mul_term(self, exp: tuple, c) -> "Polynomial":
        red = self.ring.field.reduce
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, exp)): red(v * c)
                                      for e, v in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Polynomial(self.ring, {})
        if self.degree() + other.degree() > MAX_DEGREE:
            raise DegreeOverflowError("total degree exceeds 2^20")
        red = self.ring.field.reduce
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        out = {}
        for e, c in t.items():
            c = red(c)
            if c:
                out[e] = c if self.ring.field.modulus else Fraction(c)
        _check_exponents(out)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        if self.terms and self.degree() * k > MAX_DEGREE:
            raise DegreeOverflowError("total degree exceeds 2^20")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def arithmetic(self, other, op: str) -> "Polynomial":
        if op == "add":
            return self + other
        if op == "sub":
            return self - other
        if op == "mul":
            return self * other
        raise ValueError(f"unknown op {op!r}")

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.terms == other.terms and self.ring.names == other.ring.names
                    and self.ring.field == other.ring.field)
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient_vector(self, monomials: list[tuple]) -> list:
        z = self.ring.field.zero
        return [self.terms.get(m, z) for m in monomials]

    def substitute(self, images: list["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to ``images[i]`` (images may live in another ring)."""
        target = images[0].ring if images else self.ring
        result = Polynomial(target, {})
        powers: dict = {}
        for e, c in self.terms.items():
            t = target.const(c)
            for i, a in enumerate(e):
                if a:
                    p = powers.get((i, a))
                    if p is None:
                        p = images[i] ** a
                        powers[(i, a)] = p
                    t = t * p
            result = result + t
        return result

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret in a ring with the same variables (e.g. another order)."""
        if ring.names != self.ring.names:
            raise RingMismatchError("variable lists differ")
        if ring.field != self.ring.field:
            return ring.from_terms({e: ring.field(c) for e, c in self.terms.items()})
        return Polynomial(ring, self.terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _check_exponents(terms):
    for e in terms:
        for a in e:
            if a >= MAX_EXPONENT:
                raise DegreeOverflowError("exponent exceeds 2^16")


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    names = p.ring.names
    F = p.ring.field
    parts = []
    for c, e in p.sorted_terms():
        mono = "*".join(names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a)
        neg = False
        if F.kind == "QQ" and c < 0:
            neg, c = True, -c
        cs = F.fmt(c)
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        parts.append(("-" if neg else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LinearChange:
    """Invertible linear substitution: variable i maps to sum_j matrix[i][j] * x_j."""

    def __init__(self, ring: PolyRing, matrix):
        F = ring.field
        n = ring.nvars
        m = [[F(v) for v in row] for row in matrix]
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("linear change must be a square matrix of size nvars")
        from .linalg import rank
        if rank(m, F) != n:
            raise ValueError("singular linear change")
        self.ring = ring
        self.matrix = m

    @classmethod
    def identity(cls, ring: PolyRing) -> "LinearChange":
        n = ring.nvars
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def random(cls, ring: PolyRing, rng) -> "LinearChange":
        F = ring.field
        n = ring.nvars
        while True:
            m = [[F.random_element(rng) for _ in range(n)] for _ in range(n)]
            try:
                return cls(ring, m)
            except ValueError:
                continue

    def images(self) -> list[Polynomial]:
        return [self.ring.linear_form(row) for row in self.matrix]

    def inverse(self) -> "LinearChange":
        from .linalg import inverse
        return LinearChange(self.ring, inverse(self.matrix, self.ring.field))

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply_linear_change(self, p)


def apply_linear_change(phi: LinearChange, p: Polynomial) -> Polynomial:
    if p.ring.names != phi.ring.names:
        raise RingMismatchError("linear change built for another ring")
    imgs = [q.change_ring(p.ring) for q in phi.images()]
    return p.substitute(imgs) if imgs else p


def gram_rank(q: Polynomial) -> int:
    """Rank of the symmetric Gram matrix of a quadratic form."""
    F = q.ring.field
    if F.characteristic == 2:
        raise ValueError("gram_rank is undefined in characteristic 2")
    if q.terms and (not q.is_homogeneous() or q.degree() != 2):
        raise ValueError("gram_rank needs a homogeneous quadric")
    n = q.ring.nvars
    half = F.inv(F(2))
    G = [[F.zero] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, a in enumerate(e) for _ in range(a)]
        i, j = idx
        if i == j:
            G[i][i] = c
        else:
            h = F.reduce(c * half)
            G[i][j] = G[j][i] = h
    from .linalg import rank
    return rank(G, F)
