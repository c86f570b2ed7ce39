import random

import pytest

from koszulkit.field import QQ, GF
from koszulkit.ideal import Ideal
from koszulkit.ideal_ops import artinian_reduction
from koszulkit.invariants import (BoundExceededError, NotArtinianError, codim_multiplicity,
                                  divide_one_minus_t, format_tpoly, hilbert_function_oracle,
                                  hilbert_numerator, hilbert_numerator_of, hilbert_report,
                                  is_nondegenerate, monomial_hilbert_numerator, poly_mul,
                                  series_coefficients, socle_degrees)
from koszulkit.poly import LinearChange, PolyRing
from koszulkit.resolution import BettiTable, betti_table

TABLE_III = BettiTable.from_rows({0: [1], 1: [0, 4, 3], 2: [0, 0, 1, 1]})
TABLE_IV = BettiTable.from_rows({0: [1], 1: [0, 4, 2], 2: [0, 0, 4, 4, 1]})
TABLE_I = BettiTable.from_rows({0: [1], 1: [0, 4, 4, 1]})


def ideal(R, text):
    return Ideal(R, [R.parse(t) for t in text.split(",")])


def test_numerator_of_tables():
    assert hilbert_numerator(TABLE_III) == (1, 0, -4, 3, 1, -1)
    assert hilbert_numerator(TABLE_IV) == (1, 0, -4, 2, 4, -4, 1)
    assert hilbert_numerator(BettiTable({(0, 0): 1})) == (1,)


def test_codim_multiplicity_examples():
    r = codim_multiplicity((1, 0, -4, 3, 1, -1), 3)
    assert (r.c, r.e, r.dim) == (2, 1, 1)
    r = codim_multiplicity(poly_mul((1, -1), (1, -1)), 4)
    assert (r.c, r.e, r.K) == (2, 1, (1,))
    r = codim_multiplicity(hilbert_numerator(TABLE_I), 4)
    assert (r.c, r.e) == (2, 2)


def test_two_derivative_identities_for_height_two():
    # Q(1) = Q'(1) = 0 and Q''(1)/2 = e
    for Q in [(1, 0, -4, 3, 1, -1), (1, 0, -4, 2, 4, -4, 1), hilbert_numerator(TABLE_I)]:
        r = codim_multiplicity(Q, 6)
        assert sum(Q) == 0
        assert sum(i * c for i, c in enumerate(Q)) == 0
        assert sum(i * (i - 1) * c for i, c in enumerate(Q)) // 2 == r.e


def test_synthetic_division():
    assert divide_one_minus_t((1, -1)) == (1,)
    assert divide_one_minus_t((1, 0, -1)) == (1, 1)
    assert divide_one_minus_t((1, 1)) is None


def test_report_json_keys(R4):
    text = hilbert_report(ideal(R4, "x*z,x*w,y*z,y*w")).to_json()
    assert text == '{"Q": [1, 0, -4, 4, -1], "c": 2, "e": 2, "dim": 2, "K": [1, 2, -1]}'


def test_hilbert_function_examples():
    R2 = PolyRing(["x", "y"])
    assert hilbert_function_oracle(ideal(R2, "x^2,x*y,y^2"), 4) == [1, 2, 0, 0, 0]
    assert hilbert_function_oracle(Ideal(R2, []), 4) == [1, 2, 3, 4, 5]
    with pytest.raises(BoundExceededError):
        hilbert_function_oracle(Ideal(R2, []), 13)


def test_format_tpoly():
    assert format_tpoly((1, 0, -4, 3, 1, -1)) == "1 - 4*t^2 + 3*t^3 + t^4 - t^5"


def random_quadrics(R, rng, g):
    mons = R.monomials_of_degree(2)
    return Ideal(R, [R.from_terms({m: R.field.random_element(rng, nonzero=True)
                                   for m in rng.sample(mons, rng.randint(1, 4))}) for _ in range(g)])


@pytest.mark.parametrize("seed", range(15))
def test_hilbert_function_matches_betti_series(seed):
    rng = random.Random(seed)
    R = PolyRing(["x", "y", "z", "w"], GF(101))
    I = random_quadrics(R, rng, rng.randint(1, 5))
    Q = hilbert_numerator(betti_table(I))
    assert Q == hilbert_numerator_of(I)
    assert hilbert_function_oracle(I, 10) == series_coefficients(Q, 4, 10)


@pytest.mark.parametrize("gens", [["x*z", "x*w", "y*z", "y*w"], ["x^2", "x*y", "y^2", "x*z+y*w"],
                                  ["x*y", "y*z", "z*w", "w*x"]])
def test_multiplicity_invariant_under_coordinate_change(gens):
    R = PolyRing(["x", "y", "z", "w"], QQ)
    I = Ideal.parse(R, gens)
    base = hilbert_report(I)
    rng = random.Random(7)
    for _ in range(20):
        phi = LinearChange.random(R, rng)
        J = Ideal(R, [phi(g) for g in I.gens])
        r = hilbert_report(J)
        assert (r.c, r.e) == (base.c, base.e)


def test_monomial_numerator_simple():
    assert monomial_hilbert_numerator([(1, 0), (0, 1)]) == (1, -2, 1)
    assert monomial_hilbert_numerator([(2, 0), (1, 1), (0, 2)]) == (1, 0, -3, 2)


def test_socle_examples():
    R2 = PolyRing(["x", "y"])
    assert socle_degrees(ideal(R2, "x^2,x*y,y^2")).degrees == {1: 2}
    assert socle_degrees(ideal(R2, "x,y")).degrees == {0: 1}
    with pytest.raises(NotArtinianError):
        socle_degrees(ideal(R2, "x^2"), require_artinian=True)


def test_socle_in_degree_one_after_reduction():
    # 4-cycle: pd 3 with beta_{3,4} = 1; killing a regular linear form leaves depth 0
    R = PolyRing(["a", "b", "c", "d"], QQ)
    I = ideal(R, "a*b,b*c,c*d,d*a")
    A = artinian_reduction(I, seed=3)
    assert A.ring.nvars == 3
    assert socle_degrees(A).degrees == {1: 1}


@pytest.mark.parametrize("gens", [["a*b", "b*c", "c*d", "d*e"], ["a*b", "b*c", "c*d", "a*d"],
                                  ["a*b", "b*c", "c*a", "c*d"]])
def test_socle_reads_last_betti_column(gens):
    R = PolyRing(list("abcde"), QQ)
    I = Ideal.parse(R, gens)
    bt = betti_table(I)
    r = bt.projective_dimension
    A = artinian_reduction(I, seed=11)
    soc = socle_degrees(A).degrees
    assert soc == {j: bt[(r, j)] for j in range(4) if bt[(r, j)]}


def test_nondegenerate_examples(R4):
    assert is_nondegenerate(ideal(R4, "x^2,x*y"))
    assert not is_nondegenerate(ideal(R4, "x+y,x^2"))
    assert is_nondegenerate(ideal(R4, "x^2+y^2,x*z+y*w,x*w-y*z,z^2+w^2,x*z-y*w+0*x"))
