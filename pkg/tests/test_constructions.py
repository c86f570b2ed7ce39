import random
from math import comb

import pytest

from koszulkit.constructions import (ENGHETA_CASES, ChainMap, ChainMapError, ConstructionError,
                                     Graph, LinearMatrix, cone_betti, edge_ideal, engheta_form,
                                     koszul_complex, lift_chain_map, mapping_cone, minors2,
                                     northcott, quadric_cone_chain_map, representation_by_minors,
                                     scaled_koszul, table1_graphs, twist)
from koszulkit.field import QQ, GF
from koszulkit.ideal import Ideal
from koszulkit.ideal_ops import colon, quotient, unmixed_part, ideal_sum
from koszulkit.invariants import hilbert_numerator, hilbert_report
from koszulkit.modules import GradedFreeModule, GradedMap
from koszulkit.poly import PolyRing
from koszulkit.resolution import BettiTable, betti_table, minimize, minimal_free_resolution


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    assert Graph(4, [(0, 1), (2, 3)]).vertex_cover_number() == 2


def test_edge_ideal_examples():
    G = Graph.from_one_based(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    I = edge_ideal(G)
    assert len(I.gens) == 4
    assert I == Ideal.parse(I.ring, ["x1*x2", "x2*x3", "x3*x4", "x1*x4"])
    single = edge_ideal(Graph(2, [(0, 1)]))
    assert [str(g) for g in single.gens] == ["x1*x2"]
    with pytest.raises(ConstructionError):
        edge_ideal(G, PolyRing(["a", "b"]))


def test_table1_graph_guards():
    graphs = table1_graphs()
    assert len(graphs) == 6
    for _, G in graphs:
        assert len(G.edges) == 4
        assert G.vertex_cover_number() == 2
    assert all(hilbert_report(edge_ideal(G)).c == 2 for _, G in graphs)


def test_koszul_complex_shapes(R4):
    x, y, z, w = R4.gens()
    K = koszul_complex([x, y])
    assert [M.rank for M in K.modules] == [1, 2, 1]
    assert K.is_complex() and K.minimal
    K3 = koszul_complex([x * x, y * z, w])
    assert [M.twists for M in K3.modules][-1] == (5,)


@pytest.mark.parametrize("g", [3, 4, 5])
def test_scaled_koszul_betti_row(g):
    R = PolyRing([f"a{i}" for i in range(g)], QQ)
    v = R.gens()
    res = scaled_koszul(v[-1] + v[0], v[:g - 1])
    bt = res.betti_table()
    assert bt.row(1) == [0] + [comb(g - 1, i) for i in range(1, g)]
    assert res.cokernel_ideal() == Ideal(R, [(v[-1] + v[0]) * a for a in v[:g - 1]])


@pytest.mark.parametrize("seed", range(10))
def test_koszul_composition_on_random_forms(seed, R4p):
    rng = random.Random(seed)
    F = R4p.field
    seq = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 2)
        seq.append(R4p.from_terms({m: F.random_element(rng, nonzero=True)
                                   for m in rng.sample(R4p.monomials_of_degree(d), 2)}))
    assert koszul_complex(seq).is_complex()


def test_engheta_ia_examples(R4):
    x, y, z, w = R4.gens()
    I = engheta_form("ia_intersection", 4, R4)
    assert I == Ideal(R4, [x * z, x * w, y * z, y * w])
    J = engheta_form("ia_quadric", 4, R4)
    assert J == Ideal(R4, [x * x, x * y, y * y, x * z + y * w])
    with pytest.raises(ConstructionError):
        engheta_form("ia_quadric", 5, R4)
    with pytest.raises(ConstructionError, match="independent"):
        engheta_form("ia_quadric", 4, R4, {"w": x + y})


def test_engheta_validation(R4):
    x, y, z, w = R4.gens()
    with pytest.raises(ConstructionError, match=r"q in \(a_1"):
        engheta_form("ib", 4, R4, {"x": x, "a": [x, y, z], "q": w * w})
    with pytest.raises(ConstructionError, match=r"outside \(x\)"):
        engheta_form("ib", 4, R4, {"x": x, "a": [x, y, z], "q": x * x})
    with pytest.raises(ConstructionError, match="nonzerodivisor"):
        engheta_form("ii", 4, R4, {"x": w, "a": [x, y, z], "q": x * y})
    with pytest.raises(ConstructionError, match="unknown case"):
        engheta_form("iii", 4, R4)


def cor33_first(g):
    row = [0, g, comb(g - 1, 2) + 1] + [comb(g - 1, i) for i in range(3, g - 1)] + [1]
    return BettiTable.from_rows({0: [1], 1: row[:g]})


def cor33_second(g):
    r1 = [0, g] + [comb(g - 1, i) for i in range(2, g - 1)] + [1]
    r2 = [0, 0] + [comb(g - 1, i - 1) for i in range(2, g + 1)]
    return BettiTable.from_rows({0: [1], 1: r1, 2: r2})


@pytest.mark.parametrize("g", [4, 5, 6])
def test_closed_form_tables_for_multiplicity_two(g):
    rng = random.Random(g)
    R = PolyRing([f"a{i}" for i in range(g)], GF(101))
    for case, expected in [("ib", cor33_first(g)), ("ii", cor33_second(g))]:
        I = engheta_form(case, g, R, rng=rng)
        rep = hilbert_report(I)
        assert (rep.c, rep.e) == (2, 2)
        assert betti_table(I) == expected
        assert cone_betti(I, case) == expected


def test_quadric_cone_gives_first_table(R4):
    cm = quadric_cone_chain_map(R4)
    cone = mapping_cone(cm)
    assert cone.is_complex()
    assert cone.cokernel_ideal() == engheta_form("ia_quadric", 4, R4)
    assert minimize(cone).betti_table() == cor33_first(4)


def test_lifted_chain_map_agrees_with_explicit_one(R4):
    cm = quadric_cone_chain_map(R4)
    lifted = lift_chain_map(cm.source, cm.target, cm.maps[0])
    assert minimize(mapping_cone(lifted)).betti_table() == cor33_first(4)


def test_noncommuting_chain_map_rejected(R4):
    cm = quadric_cone_chain_map(R4)
    bad = ChainMap(cm.source, cm.target, [cm.maps[0], cm.maps[1], cm.maps[2].compose(
        GradedMap(R4, GradedFreeModule([4]), GradedFreeModule([4]), [[R4.const(2)]]))])
    with pytest.raises(ChainMapError):
        bad.check()


def test_cone_over_zero_map_is_direct_sum(R4):
    x, y, z, w = R4.gens()
    A = twist(koszul_complex([z]), 2)
    B = koszul_complex([x, y])
    zero = GradedMap(R4, A.modules[0], B.modules[0], [[R4.zero()]])
    cone = mapping_cone(lift_chain_map(A, B, zero))
    assert [M.rank for M in cone.modules] == [1, 3, 2]


def test_colon_identity_for_ib_instance():
    R = PolyRing([f"a{i}" for i in range(4)], GF(101))
    I = engheta_form("ib", 4, R, rng=random.Random(5))
    *lin, q = I.gens
    x = lin[0]
    J = Ideal(R, lin)
    # every a_i x shares the factor x; (J : q) is the principal ideal of that factor
    K = quotient(J, q)
    assert len(K.gb().generators) == 1 and K.gb().generators[0].degree() == 1


def test_minors2_examples(R4):
    x, y, z, w = R4.gens()
    assert minors2([[x, y], [z, w]]) == Ideal(R4, [x * w - y * z])
    rem = minors2([[x, y, z, w], [-y, x, -w, z]])
    rep = hilbert_report(rem)
    assert (rep.c, rep.e) == (2, 2)
    three = minors2([[x, y], [z, w], [y, x]])
    assert len(three.gens) == 3
    with pytest.raises(ValueError):
        minors2([[x, y, z], [y, z, w], [z, w, x]])
    with pytest.raises(ValueError):
        LinearMatrix([[x * x, y], [z, w]])


def test_northcott_linkage(R4):
    x, y, z, w = R4.gens()
    C, I = northcott(x, y, z, w, w, z)
    assert colon(C, Ideal(R4, [x, y])) == I
    with pytest.raises(ConstructionError):
        northcott(x, y, z, R4.zero(), w, R4.zero())


def test_linkage_setup_and_unmixed():
    R = PolyRing(["x", "y", "z", "w", "u"], QQ)
    x, y, z, w, u = R.gens()
    a3, b3, a4, b4 = z, w, w + u, z - u
    q3, q4 = a3 * x + b3 * y, a4 * x + b4 * y
    Q = Ideal(R, [q3, q4])
    assert hilbert_report(Q).c == 2
    assert unmixed_part(ideal_sum(Q, Ideal(R, [x]))) == Ideal(R, [x, y])
    M = [[-a4, -b4], [a3, b3], [-y, x]]
    assert quotient(Q, x) == minors2(M)


def test_representation_by_minors(R4):
    x, y, z, w = R4.gens()
    I = Ideal(R4, [x * z, x * w, y * z, y * w])
    rep = representation_by_minors(I, x, y)
    for q, a, b in zip(I.gens, rep.a, rep.b):
        assert a * x + b * y == q
    assert rep.a == [z, w, R4.zero(), R4.zero()]
    assert rep.b == [R4.zero(), R4.zero(), z, w]
    M = rep.M.rows
    col0 = [M[0][0] * M[1][j] - M[0][j] * M[1][0] for j in range(1, 5)]
    assert col0 == list(I.gens)
    with pytest.raises(ConstructionError):
        representation_by_minors(Ideal(R4, [z * w]), x, y)


def test_representation_of_a_square(R4):
    x, y, z, w = R4.gens()
    rep = representation_by_minors(Ideal(R4, [x * x]), x, y)
    assert rep.M.shape == (2, 2)
    assert rep.a[0] * x + rep.b[0] * y == x * x


@pytest.mark.parametrize("case", ENGHETA_CASES)
def test_constructed_forms_have_height_two_multiplicity_two(case):
    R = PolyRing([f"a{i}" for i in range(5)], GF(101))
    I = engheta_form(case, 4, R, rng=random.Random(9))
    rep = hilbert_report(I)
    assert (rep.c, rep.e) == (2, 2)
