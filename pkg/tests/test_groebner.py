import random

import pytest

from koszulkit.field import QQ, GF
from koszulkit.groebner import (buchberger, groebner_basis, initial_ideal, is_groebner,
                                max_basis_degree, normal_form, reduce_basis, s_polynomial,
                                GroebnerBasis)
from koszulkit.orders import grevlex, lex, permuted, standard_orders, block
from koszulkit.poly import PolyRing


def naive_closure(gens, order, max_deg=6):
    """Exhaustive S-pair closure: plain division, no criteria, no reduction."""
    G = list(gens)
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                s = s_polynomial(G[i], G[j], order)
                if not s or s.degree() > max_deg:
                    continue
                r = normal_form(s, G, order).remainder
                if r:
                    G.append(r)
                    changed = True
    return G


def test_division_examples(R4):
    x, y, z, w = R4.gens()
    divs = [x**2, x * y, y**2, x * z + y * w]
    p = x**2 * z
    res = normal_form(p, divs, grevlex(4))
    assert not res.remainder
    total = sum((q * d for q, d in zip(res.quotients, divs)), R4.zero())
    assert total == p
    assert normal_form(x, [y]).remainder == x
    with pytest.raises(ValueError):
        normal_form(x, [R4.zero()])


def test_division_invariants(R4):
    rng = random.Random(5)
    order = grevlex(4)
    gens = [R4.parse(s) for s in ("x^2 - y*z", "x*y + w^2", "z^2 - x*w")]
    lms = [g.lm(order) for g in gens]
    for _ in range(50):
        p = R4.from_terms({tuple(rng.randint(0, 2) for _ in range(4)): rng.randint(-3, 3) for _ in range(5)})
        res = normal_form(p, gens, order)
        assert sum((q * g for q, g in zip(res.quotients, gens)), res.remainder) == p
        for e in res.remainder.terms:
            assert not any(all(a <= b for a, b in zip(m, e)) for m in lms)
        if p:
            for q, g in zip(res.quotients, gens):
                if q:
                    assert order.key((q * g).lm(order)) <= order.key(p.lm(order))


def test_thm34_block_spair():
    # (i_b)/(ii) style: a1*ag and q = ag^2 + q' under the product order (grlex on {a1, ag}) then rest
    R = PolyRing(["a1", "a2", "a3", "ag"], GF(101))
    a1, a2, a3, ag = R.gens()
    order = block(4, ("grlex", [0, 3]), ("grevlex", [1, 2]))
    q = ag**2 + a2 * a3 + a2**2
    x = ag + a1.scale(3)
    gens = [a1 * x, a2 * x, a3 * x, q]
    assert q.lm(order) == (0, 0, 0, 2)
    for g in gens[:3]:
        s = s_polynomial(g, q, order)
        assert not normal_form(s, gens, order).remainder
    assert is_groebner(gens, order)


def test_buchberger_examples(R4):
    x, y, z, w = R4.gens()
    gens = [x**2, x * y, y**2, x * z + y * w]
    gb = buchberger(gens, grevlex(4))
    assert set(gb.generators) == set(gens)
    assert buchberger([x]).generators == (x,)
    order = permuted("lex", [2, 1, 0, 3])  # z > y > x > w
    f, g = x * z - y**2, y * w - z**2
    gb = buchberger([f, g], order)
    assert len(gb) > 2
    oracle = reduce_basis(GroebnerBasis(tuple(naive_closure([f, g], order)), order))
    assert set(oracle.generators) == set(gb.generators)
    assert not is_groebner([f, g], order)
    assert is_groebner([f, g], lex(4))


def test_reduce_basis_examples(R4):
    x, y, z, w = R4.gens()
    gb = reduce_basis(GroebnerBasis((x, x + y), grevlex(4)))
    assert set(gb.generators) == {x, y}
    again = reduce_basis(gb)
    assert again.generators == gb.generators


def test_universal_quadratic(R4):
    x, y, z, w = R4.gens()
    gens = [x**2, x * y, y**2, x * z + y * w]
    for order in standard_orders(4):
        assert is_groebner(gens, order)
        assert max_basis_degree(groebner_basis(gens, order)) == 2


def test_initial_ideal(R4):
    x, y, z, w = R4.gens()
    assert set(initial_ideal(groebner_basis([x, y]))) == {(1, 0, 0, 0), (0, 1, 0, 0)}


def _random_quadrics(ring, rng, k):
    mons = ring.monomials_of_degree(2)
    return [ring.from_terms({m: ring.field.random_element(rng) for m in mons}) for _ in range(k)]


@pytest.mark.parametrize("seed", range(10))
def test_spairs_reduce_to_zero(seed):
    R = PolyRing(["x", "y", "z", "w"], GF(101))
    rng = random.Random(seed)
    gens = _random_quadrics(R, rng, 3)
    for order in (grevlex(4), lex(4)):
        gb = buchberger(gens, order)
        G = list(gb.generators)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                assert not normal_form(s_polynomial(G[i], G[j], order), G, order).remainder


def test_membership_soundness():
    R = PolyRing(["x", "y", "z", "w"], GF(101))
    rng = random.Random(1)
    gens = _random_quadrics(R, rng, 3)
    gb = groebner_basis(gens)
    for _ in range(500):
        p = R.zero()
        for g in gens:
            c = R.from_terms({tuple(rng.randint(0, 1) for _ in range(4)): rng.randrange(101) for _ in range(2)})
            p = p + c * g
        assert not normal_form(p, gb.generators).remainder


def test_reduced_gb_uniqueness():
    R = PolyRing(["x", "y", "z", "w"], GF(101))
    rng = random.Random(4)
    for _ in range(50):
        gens = _random_quadrics(R, rng, 3)
        while True:
            M = [[rng.randrange(101) for _ in range(3)] for _ in range(3)]
            from koszulkit.linalg import rank
            if rank(M, R.field) == 3:
                break
        mixed = [sum((g.scale(M[i][j]) for j, g in enumerate(gens)), R.zero()) for i in range(3)]
        assert groebner_basis(gens).generators == groebner_basis(mixed).generators


def test_degree_cap():
    R = PolyRing(["x", "y", "z"], QQ)
    gens = [R.parse("x^2 - y*z"), R.parse("x*y - z^2")]
    full = groebner_basis(gens, lex(3))
    assert not full.truncated
    prev = None
    for cap in (2, 3, 4, 5, 8):
        gb = buchberger(gens, lex(3), degree_cap=cap, reduce=False)
        lows = {g for g in gb.generators if g.degree() <= 2}
        if prev is not None:
            assert prev <= lows
        prev = lows
    assert buchberger(gens, lex(3), degree_cap=2).truncated
