"""Fixture suite behind ``koszulkit verify-paper``.

Each check returns a CheckResult; table comparisons are textual against the
golden files so a mismatch can be shown as a diff.
"""

from __future__ import annotations

import difflib
import os
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from pathlib import Path

from .constructions import (cone_betti, edge_ideal, engheta_form, mapping_cone, minors2,
                            quadric_cone_chain_map, random_engheta, table1_graphs)
from .field import GF, QQ
from .ideal import Ideal
from .ideal_ops import artinian_reduction, minimal_generators, quotient, unmixed_part
from .invariants import (hilbert_function_oracle, hilbert_numerator, hilbert_report,
                         is_nondegenerate, numerator_system, poly_eval, series_coefficients,
                         socle_degrees)
from .koszul_checks import (HOST_FAMILIES, classify_ht2_mult2, explicit_witness,
                            g_quadratic_witness, hilbert_burch_shape, koszul_necessary_battery,
                            main_theorem_membership, quadratic_gb, recombine, sample_experiment,
                            sample_ideal,
                            verify_witness)
from .orders import standard_orders
from .poly import PolyRing
from .resolution import BettiTable, betti_oracle, betti_table, minimize

TABLE_LABELS = ("i", "ii", "iii", "iv")


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str = ""
    diffs: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.number:>2} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def golden_dir() -> Path:
    env = os.environ.get("KOSZULKIT_GOLDEN_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("koszulkit") / "golden"))


def golden_text(label: str, directory: Path | None = None) -> str:
    d = directory or golden_dir()
    return (d / f"table_{label}.txt").read_text().strip("\n")


def _compare(label: str, bt: BettiTable, what: str, directory, diffs) -> bool:
    want = golden_text(label, directory)
    got = bt.to_text().strip("\n")
    if want == got:
        return True
    diffs.append("\n".join(difflib.unified_diff(want.splitlines(), got.splitlines(),
                                                 f"golden table_{label}", what, lineterm="")))
    return False


# ---------------------------------------------------------------- closed forms

def first_family_table(g: int) -> BettiTable:
    """Table of (a_1 x, ..., a_{g-1} x, q) with q in (a): one linear strand."""
    row = [0, g, comb(g - 1, 2) + 1] + [comb(g - 1, i) for i in range(3, g - 1)] + [1]
    return BettiTable.from_rows({0: [1], 1: row[:g]})


def second_family_table(g: int) -> BettiTable:
    """Table of (a_1 x, ..., a_{g-1} x, q) with q regular modulo the products."""
    r1 = [0, g] + [comb(g - 1, i) for i in range(2, g - 1)] + [1]
    r2 = [0, 0] + [comb(g - 1, i - 1) for i in range(2, g + 1)]
    return BettiTable.from_rows({0: [1], 1: r1, 2: r2})


# ---------------------------------------------------------------- fixtures

def table_fixtures():
    """Named fixtures used by the oracle and battery checks."""
    out = [(f"graph {lab}", edge_ideal(G)) for lab, G in table1_graphs()]
    R = PolyRing(["x", "y", "z", "w"], QQ)
    out.append(("square shape", engheta_form("ia_quadric", 4, R)))
    out.append(("two planes", engheta_form("ia_intersection", 4, R)))
    x, y, z, w = R.gens()
    out.append(("determinantal 2x4", minors2([[x, y, z, w], [-y, x, -w, z]])))
    Rp = PolyRing(["a", "b", "c", "d"], GF(101))
    for case in ("ib", "ii"):
        out.append((f"{case} g=4", random_engheta(case, 4, Rp, random.Random(11))[0]))
    out.append(("ib g=5", random_engheta("ib", 5, Rp, random.Random(12))[0]))
    return out


# ---------------------------------------------------------------- checks

def check_table1(directory=None):
    diffs = []
    ok = True
    for lab, G in table1_graphs():
        label = lab.split("-")[0].strip("()")
        ok &= _compare(label, betti_table(edge_ideal(G)), f"edge ideal {lab}", directory, diffs)
    return ok, "six graphs", diffs


def check_main_tables(directory=None):
    diffs = []
    R = PolyRing(["x", "y", "z", "w"], QQ)
    ok = _compare("i", betti_table(engheta_form("ia_quadric", 4, R)), "ia_quadric", directory, diffs)
    ok &= _compare("i", betti_table(engheta_form("ia_intersection", 4, R)), "ia_intersection",
                   directory, diffs)
    Rp = PolyRing(["a0", "a1", "a2", "a3"], GF(101))
    ok &= _compare("i", betti_table(random_engheta("ib", 4, Rp, random.Random(0))[0]), "ib g=4",
                   directory, diffs)
    ok &= _compare("ii", betti_table(random_engheta("ii", 4, Rp, random.Random(0))[0]), "ii g=4",
                   directory, diffs)
    for g in (4, 5, 6):
        Rg = PolyRing([f"a{i}" for i in range(g)], GF(101))
        for case, want in (("ib", first_family_table(g)), ("ii", second_family_table(g))):
            got = betti_table(random_engheta(case, g, Rg, random.Random(g))[0])
            if got != want:
                ok = False
                diffs.append(f"{case} g={g}: expected\n{want.to_text()}\ncomputed\n{got.to_text()}")
    return ok, "g=4 tables and closed forms at g=4,5,6", diffs


def check_cones(directory=None):
    diffs = []
    R = PolyRing(["x", "y", "z", "w"], QQ)
    cone = mapping_cone(quadric_cone_chain_map(R))
    ok = cone.is_complex()
    ok &= _compare("i", minimize(cone).betti_table(), "quadric cone", directory, diffs)
    Rp = PolyRing(["a0", "a1", "a2", "a3"], GF(101))
    I, _ = random_engheta("ii", 4, Rp, random.Random(0))
    ok &= _compare("ii", cone_betti(I, "ii"), "ii cone", directory, diffs)
    return ok, "explicit chain map cone and ii cone", diffs


def _q_derivatives(Q):
    d1 = sum(k * c for k, c in enumerate(Q))
    d2 = sum(k * (k - 1) * c for k, c in enumerate(Q))
    return poly_eval(Q, 1), d1, d2


def check_hilbert(directory=None):
    tables = {lab.split("-")[0].strip("()"): edge_ideal(G) for lab, G in table1_graphs()}
    notes = []
    ok = True
    for label in ("iii", "iv"):
        Q = hilbert_numerator(betti_table(tables[label]))
        q0, q1, q2 = _q_derivatives(Q)
        ok &= (q0, q1, q2) == (0, 0, 2)
        notes.append(f"{label}: Q(1)={q0} Q'(1)={q1} Q''(1)/2={q2 // 2}")
    Q3 = hilbert_numerator(betti_table(tables["iii"]))
    sol = numerator_system({0: 1, 2: -4}, [3, 4, 5])
    # Q = 1 - 4t^2 + a t^3 + b t^4 - d t^5
    a, b, d = sol[3], sol[4], -sol[5]
    ok &= (a, b, d) == (3, 1, 1) and Q3 == (1, 0, -4, 3, 1, -1)
    bt4 = betti_table(tables["iv"])
    # e = 1 and f = 0 are forced by nonnegativity and pd = 4
    sol4 = numerator_system({0: 1, 2: -4, 6: 1, 7: 0}, [3, 4, 5])
    a4 = sol4[3]
    ok &= a4 == 2 and bt4.graded(2, 3) == 2 and bt4.graded(3, 4) == 0
    ok &= sol4[4] == bt4.graded(2, 4) - bt4.graded(3, 4) and -sol4[5] == bt4.graded(3, 5)
    notes.append(f"iii: a={a} b={b} d={d}; iv: a={a4}, c={bt4.graded(3, 4)}")
    return ok, "; ".join(notes), []


def check_colons(directory=None):
    R = PolyRing(["x", "y", "z", "w"], QQ)
    x, y, z, w = R.gens()
    ok = quotient(Ideal(R, [x * x, x * y, y * y]), x * z + y * w) == Ideal(R, [x, y])
    ok &= quotient(Ideal(R, [x * z, x * w, y * z]), y * w) == Ideal(R, [x, z])
    Rp = PolyRing(["a0", "a1", "a2", "a3"], GF(101))
    I, par = random_engheta("ib", 4, Rp, random.Random(5))
    J = Ideal(Rp, [ai * par["x"] for ai in par["a"]])
    ok &= quotient(J, par["q"]) == Ideal(Rp, [par["x"]])
    return ok, "three colon identities as reduced-basis equalities", []


def check_g_quadratic(directory=None):
    R = PolyRing(["x", "y", "z", "w"], QQ)
    x, y, z, w = R.gens()
    gens = [x * x, x * y, y * y, x * z + y * w]
    ok = all(quadratic_gb(gens, o) is not None for o in standard_orders(4))
    found = []
    for case in ("ib", "ii"):
        g = 4
        n = g - 1 if case == "ib" else g
        Rp = PolyRing([f"a{i}" for i in range(n)], GF(101))
        for seed in range(3):
            I, par = random_engheta(case, g, Rp, random.Random(seed))
            wit = explicit_witness(par["x"], par["a"], par["q"], case)
            ok &= wit is not None and verify_witness(I, wit)
            search = g_quadratic_witness(I, trials=200, seed=seed)
            ok &= search is not None and verify_witness(I, search)
            found.append(f"{case}:{search.method if search else 'none'}")
    return ok, "8 orders for the square shape; explicit and searched witnesses " + " ".join(found), []


def check_determinantal(directory=None):
    R = PolyRing(["x", "y", "z", "w"], QQ)
    x, y, z, w = R.gens()
    I = minors2([[x, y, z, w], [-y, x, -w, z]])
    _, g = minimal_generators(I)
    rep = hilbert_report(I)
    ok = g == 4 and is_nondegenerate(I) and (rep.c, rep.e) == (2, 2)
    return ok, f"g={g} (six minors, two pairs agree up to sign), codim {rep.c}, e {rep.e}", []


def check_sampling(directory=None):
    F = GF(101)
    rows4 = sample_experiment(4, 4, F, 200, seed=0, families=HOST_FAMILIES[:5], codim=2)
    ok = bool(rows4) and all(r.e <= 2 for r in rows4 if r.g >= 4)
    rows3 = sample_experiment(4, 3, F, 200, seed=1000,
                              families=("uniform", "linear_prime", "minors32", "two_planes", "square_plus"),
                              codim=2)
    e3 = [r for r in rows3 if r.e == 3]
    ok &= all(r.e <= 3 for r in rows3) and bool(e3)
    ok &= all(hilbert_burch_shape(unmixed_part(r.ideal)) for r in e3)
    return ok, f"{len(rows4)} codim-2 samples at g=4, {len(rows3)} at g=3 ({len(e3)} with e=3)", []


def socle_fixtures(count: int = 20):
    """Artinian-reduced ideals over F_101 with beta_{r,r+1} != 0 at r = pd."""
    R = PolyRing(["a", "b", "c", "d"], GF(101))
    out = []
    rng = random.Random(2024)
    cases = ["ia_intersection", "ia_quadric", "ib", "ii"]
    k = 0
    while len(out) < count and k < 10 * count:
        case = cases[k % 4]
        g = 4 if case.startswith("ia") else 4 + (k // 4) % 2
        k += 1
        try:
            I, _ = random_engheta(case, g, R, rng)
        except Exception:
            continue
        bt = betti_table(I)
        r = bt.projective_dimension
        if bt.graded(r, r + 1) == 0:
            continue
        out.append((f"{case} g={g}", I, artinian_reduction(I, seed=k)))
    return out


def check_socle(directory=None):
    fx = socle_fixtures()
    ok = len(fx) == 20
    for name, I, red in fx:
        ok &= socle_degrees(red).degrees.get(1, 0) > 0
    return ok, f"{len(fx)} reduced fixtures with degree-one socle", []


def oracle_samples(count: int = 50):
    F = GF(101)
    fams = HOST_FAMILIES
    out = []
    for k in range(count):
        out.append(sample_ideal(4, 2 + k % 3, F, 500 + k, fams[k % len(fams)]))
    return out


def check_oracles(directory=None):
    ok = True
    bad = []
    fixtures = [I for _, I in table_fixtures()]
    for I in fixtures + oracle_samples():
        bt = betti_table(I)
        if bt != betti_oracle(I, max_j=max(4, bt.regularity + 1)):
            ok = False
            bad.append(str(I))
    for I in fixtures:
        Q = hilbert_numerator(betti_table(I))
        if series_coefficients(Q, I.ring.nvars, 10) != hilbert_function_oracle(I, 10):
            ok = False
            bad.append(f"HF {I}")
    return ok, f"{len(fixtures)} fixtures and 50 samples", bad


def check_classifier(directory=None, draws: int = 50):
    R = PolyRing(["x", "y", "z", "w"], GF(11))
    ok = True
    bad = []
    for case in ("ia_intersection", "ia_quadric", "ib", "ii"):
        rng = random.Random(len(case) * 97)
        for _ in range(draws):
            I, _ = random_engheta(case, 4, R, rng)
            for J in (I, recombine(I, rng)):
                got = classify_ht2_mult2(J).label
                if got != case:
                    ok = False
                    bad.append(f"{case} -> {got}: {J}")
    return ok, f"{draws} draws per case, plain and recombined", bad


def check_battery(directory=None):
    ok = True
    bad = []
    witnessed = 0
    rows = sample_experiment(4, 4, GF(101), 60, seed=300, families=HOST_FAMILIES[1:5], witness_trials=2)
    ideals = [r.ideal for r in rows] + [I for _, I in table_fixtures()]
    for I in ideals:
        rep = koszul_necessary_battery(I, search=True, trials=2)
        if rep.witness is None:
            continue
        witnessed += 1
        if rep.failed() or not rep.betti_bound_ok:
            ok = False
            bad.append(f"{I}: {rep.failed()}")
        if rep.g == 4 and rep.codim == 2 and main_theorem_membership(rep.betti) is None:
            ok = False
            bad.append(f"no table label: {I}")
    ok &= witnessed > 0
    return ok, f"{witnessed} witnessed ideals pass every necessary condition", bad


CHECKS = [
    (1, "table1", check_table1),
    (2, "main-tables", check_main_tables),
    (3, "cones", check_cones),
    (4, "hilbert", check_hilbert),
    (5, "colon", check_colons),
    (6, "g-quadratic", check_g_quadratic),
    (7, "determinantal", check_determinantal),
    (8, "sampling", check_sampling),
    (9, "socle", check_socle),
    (10, "oracles", check_oracles),
    (11, "classifier", check_classifier),
    (12, "battery", check_battery),
]


def select(only: str | None):
    if not only:
        return CHECKS
    keys = [k.strip() for k in only.split(",") if k.strip()]
    return [c for c in CHECKS if any(k == str(c[0]) or k in c[1] for k in keys)]


def run_checks(only: str | None = None, directory: Path | None = None):
    results = []
    for number, name, fn in select(only):
        t = time.perf_counter()
        ok, detail, diffs = fn(directory)
        results.append(CheckResult(number, name, bool(ok), detail, diffs, time.perf_counter() - t))
    return results
