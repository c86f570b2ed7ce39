import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from koszulkit.field import QQ, GF, Field
from koszulkit.orders import standard_orders, parse_order, lex, grevlex, block, MonomialOrder
from koszulkit.parse import ParseError, UnknownVariableError, parse_polynomial, parse_ring
from koszulkit.poly import (DegreeOverflowError, LinearChange, PolyRing, RingMismatchError,
                            apply_linear_change, gram_rank)


def test_parse_examples(R4):
    x, y, z, w = R4.gens()
    assert R4.parse("x*z + y*w") == x * z + y * w
    assert R4.parse("0").terms == {}
    assert R4.parse("(x+y)^2 - x^2 - 2*x*y") == y**2


def test_parse_errors(R4):
    with pytest.raises(ParseError) as exc:
        R4.parse("2x")
    assert exc.value.position == 1
    with pytest.raises(UnknownVariableError):
        R4.parse("x + q")
    with pytest.raises(ParseError):
        R4.parse("x +")
    with pytest.raises(ParseError):
        R4.parse("(x+y)(x-y)")
    with pytest.raises(ParseError):
        R4.parse("x / y")


def test_precedence(R4):
    x, y, z, w = R4.gens()
    assert R4.parse("-x^2") == -(x * x)
    assert R4.parse("x + y*z^2") == x + y * z * z
    assert R4.parse("2^3*x") == x.scale(8)


def test_arithmetic_examples(R4):
    x, y, z, w = R4.gens()
    assert (x + y) * (x - y) == x**2 - y**2
    assert y * (x * z + y * w) - w * y**2 == x * y * z
    assert (x * y) * R4.zero() == R4.zero()
    assert (x + y).arithmetic(x, "sub") == y


def test_ring_mismatch(R4):
    other = PolyRing(["a", "b"], QQ)
    with pytest.raises(RingMismatchError):
        R4.var(0) + other.var(0)


def test_overflow(R4):
    with pytest.raises(DegreeOverflowError):
        R4.parse("x^70000")


def test_homogeneous_product(R4):
    p = R4.parse("x^2 + y*z")
    q = R4.parse("x + 3*w")
    assert (p * q).is_homogeneous() and (p * q).degree() == 3


def test_linear_change_examples():
    R = PolyRing(["a1", "a2", "a3"], QQ)
    a1, a2, a3 = R.gens()
    ident = LinearChange.identity(R)
    p = a1 * a2 + a3**2
    assert apply_linear_change(ident, p) == p
    phi = LinearChange(R, [[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    assert phi(a1 * a2) == a1**2 + a1 * a2
    with pytest.raises(ValueError):
        LinearChange(R, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


@pytest.mark.parametrize("seed", range(100))
def test_random_change_degree_and_inverse(seed, R4):
    rng = random.Random(seed)
    phi = LinearChange.random(R4, rng)
    x = R4.var(0)
    img = phi(x**2)
    assert img.is_homogeneous() and img.degree() == 2
    p = R4.parse("x*z + y*w - 3*x^2")
    assert phi.inverse()(phi(p)) == p


def _gram_rank_oracle(q):
    # fraction-free elimination on 2*Gram (integer matrix)
    R = q.ring
    n = R.nvars
    M = [[0] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, a in enumerate(e) for _ in range(a)]
        i, j = idx
        if i == j:
            M[i][i] += 2 * c
        else:
            M[i][j] += c
            M[j][i] += c
    M = [[Fraction(v) for v in row] for row in M]
    rank = 0
    prev = Fraction(1)
    rows = M
    for c in range(n):
        piv = next((r for r in range(rank, n) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, n):
            rows[r] = [(rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]) / prev for k in range(n)]
        prev = rows[rank][c]
        rank += 1
    return rank


def test_gram_rank_examples(R4):
    q = R4.parse("x*z + y*w")
    assert gram_rank(q) == 4 == _gram_rank_oracle(q)
    assert gram_rank(R4.parse("x^2")) == 1
    xy = R4.parse("x*y")
    assert gram_rank(xy) == 2 == _gram_rank_oracle(xy)
    with pytest.raises(ValueError):
        gram_rank(R4.parse("x^3"))
    R2 = PolyRing(["x", "y"], GF(2))
    with pytest.raises(ValueError):
        gram_rank(R2.parse("x*y"))


def test_rank_two_iff_product(R4):
    rng = random.Random(3)
    for _ in range(20):
        l1 = R4.linear_form([rng.randint(-3, 3) for _ in range(4)])
        l2 = R4.linear_form([rng.randint(-3, 3) for _ in range(4)])
        assert gram_rank(l1 * l2) <= 2


def test_field_parse():
    assert Field.parse("QQ") == QQ
    assert Field.parse("Fp(101)") == GF(101)
    assert Field.parse("Fp:7") == GF(7)
    with pytest.raises(ValueError):
        Field.parse("Fp(100)")
    with pytest.raises(ValueError):
        GF(2**31 + 11)


def test_ring_line_and_orders():
    R = parse_ring("ring Fp(101) [a, b, c, d] order block(grlex[a,d], grevlex[b,c])")
    assert R.field == GF(101)
    assert R.order.kind == "block"
    assert parse_order("block:lex[b];grevlex[a,c,d]", R.names).blocks[0] == ("lex", (1,))
    R2 = parse_ring(repr(R))
    assert R2 == R


# --- property tests ------------------------------------------------------------

def _rand_poly(ring, rng, nterms=4, maxdeg=3):
    F = ring.field
    terms = {}
    for _ in range(nterms):
        e = [0] * ring.nvars
        for _ in range(rng.randint(0, maxdeg)):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = F.random_element(rng)
    return ring.from_terms(terms)


@pytest.mark.parametrize("field", [QQ, GF(101), GF(2)])
def test_ring_axioms(field):
    R = PolyRing(["x", "y", "z"], field)
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (_rand_poly(R, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a


@pytest.mark.parametrize("field", [QQ, GF(101)])
def test_round_trip(field):
    R = PolyRing(["x", "y", "z", "w"], field)
    rng = random.Random(11)
    for _ in range(500):
        p = _rand_poly(R, rng, nterms=5)
        if field == QQ:
            p = p.scale(Fraction(1, rng.randint(1, 5)))
        assert parse_polynomial(str(p), R) == p


def test_canonical_form(R4):
    rng = random.Random(2)
    for _ in range(200):
        p = _rand_poly(R4, rng)
        ts = p.sorted_terms()
        keys = [R4.order.key(e) for _, e in ts]
        assert all(a > b for a, b in zip(keys, keys[1:]))
        assert all(c != 0 for c, _ in ts)


mono = st.tuples(*[st.integers(0, 6)] * 4)


@settings(max_examples=300, deadline=None)
@given(mono, mono, mono)
def test_order_axioms(a, b, m):
    for order in standard_orders(4):
        ka, kb = order.key(a), order.key(b)
        am = tuple(x + y for x, y in zip(a, m))
        bm = tuple(x + y for x, y in zip(b, m))
        if ka < kb:
            assert order.key(am) < order.key(bm)
        assert order.key((0, 0, 0, 0)) <= ka
        if a != b:
            assert ka != kb
