"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 a computation bound was exceeded,
4 verify-paper found a mismatch against the golden tables.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .constructions import (ConstructionError, Graph, LinkageError, edge_ideal, engheta_form,
                            koszul_complex, minors2, northcott, random_engheta, scaled_koszul,
                            table1_graphs)
from .field import Field
from .ideal import Ideal, TruncatedBasisError
from .ideal_ops import SaturationError, colon, intersect, minimal_generators, unmixed_part
from .invariants import BoundExceededError, NotArtinianError, hilbert_report, socle_degrees
from .koszul_checks import (HOST_FAMILIES, SearchBoundError, UnsupportedFieldError,
                            classify_ht2_mult2, koszul_necessary_battery, main_theorem_membership,
                            rows_to_csv, sample_experiment)
from .modules import NonHomogeneousError
from .orders import parse_order
from .parse import ParseError, format_ideal, parse_ideal_text
from .poly import PolyRing
from .resolution import ResolutionBoundError, betti_table

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_MISMATCH = 0, 2, 3, 4

INPUT_ERRORS = (ParseError, ConstructionError, UnsupportedFieldError, NonHomogeneousError,
                NotArtinianError, LinkageError, ValueError, OSError)
BOUND_ERRORS = (TruncatedBasisError, ResolutionBoundError, SearchBoundError, BoundExceededError,
                SaturationError)


class UsageError(Exception):
    pass


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="lex | grlex | grevlex | block:grevlex[x,y],lex[z,w]")
    common.add_argument("--field", type=_field, help="QQ or Fp:p (overrides the ideal file)")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--trials", type=_positive, default=200)
    common.add_argument("--degree-cap", type=_positive, default=None)
    common.add_argument("--out", help="write output to this path instead of stdout")

    p = _Parser(prog="koszulkit", description="Exact quadric ideals and Betti tables.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, files=1):
        s = sub.add_parser(name, help=help_, parents=[common])
        for k in range(files):
            s.add_argument("ideal" if files == 1 else f"ideal{k + 1}", help="ideal file")
        return s

    cmd("gb", "reduced Gröbner basis")
    cmd("betti", "graded Betti table of S/I")
    cmd("invariants", "Hilbert numerator, codimension, multiplicity (JSON)")
    s = cmd("socle", "socle degrees of S/I")
    s.add_argument("--strict", action="store_true", help="require an artinian quotient")
    cmd("colon", "ideal quotient I : J", files=2)
    cmd("intersect", "intersection of two ideals", files=2)
    cmd("unmixed", "unmixed part of I")
    s = sub.add_parser("construct", help="build an ideal file", parents=[common])
    s.add_argument("kind", choices=["edge", "koszul", "zj", "engheta-ia1", "engheta-ia2",
                                    "engheta-ib", "engheta-ii", "minors2", "northcott"])
    s.add_argument("--vars", default="x,y,z,w", help="comma separated variable names")
    s.add_argument("--graph", help="edge list 'n:1-2,2-3' (one-based) or a table label like '(iii)'")
    s.add_argument("--forms", help="comma separated forms (koszul, zj)")
    s.add_argument("--z", help="the common factor for zj")
    s.add_argument("--g", type=_positive, default=4, help="number of generators (engheta)")
    s.add_argument("--matrix", help="rows separated by ';', entries by ','")
    s.add_argument("--params", help="northcott: f;g;a1;a2;b1;b2")
    s = cmd("check-koszul", "necessary conditions and a witness search")
    s.add_argument("--no-search", action="store_true", help="skip the G-quadratic witness search")
    cmd("classify", "height-two multiplicity-two shape (prime fields)")
    s = sub.add_parser("sample", help="random quadric sampling experiment (CSV)", parents=[common])
    s.add_argument("--n", type=_positive, default=4)
    s.add_argument("--g", type=_positive, default=4)
    s.add_argument("--samples", type=_positive, default=200)
    s.add_argument("--codim", type=_positive, default=None)
    s.add_argument("--families", default="uniform",
                   help=f"comma separated host families: {', '.join(HOST_FAMILIES)} or 'all'")
    s = sub.add_parser("verify-paper", help="run the fixture suite against the golden tables",
                       parents=[common])
    s.add_argument("--only", help="comma separated check numbers or names (e.g. table1)")
    s.add_argument("--golden-dir", help="directory holding table_*.txt (default: packaged)")
    return p


def _load(path: str, args) -> Ideal:
    text = Path(path).read_text()
    I = parse_ideal_text(text, field=args.field, order=args.order)
    if args.degree_cap is not None:
        I = Ideal(I.ring, I.gens, degree_cap=args.degree_cap)
    return I


def _ring(args) -> PolyRing:
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    field = args.field or Field("QQ")
    return PolyRing(names, field, parse_order(args.order, names) if args.order else None)


def _forms(ring, text, what):
    if not text:
        raise ValueError(f"--{what} is required")
    return [ring.parse(t) for t in text.split(",") if t.strip()]


def _graph(text: str) -> Graph:
    labelled = dict(table1_graphs())
    if text in labelled:
        return labelled[text]
    try:
        n, edges = text.split(":")
        pairs = [tuple(int(v) for v in e.split("-")) for e in edges.split(",") if e.strip()]
        return Graph.from_one_based(int(n), pairs)
    except ValueError:
        raise ValueError(f"bad graph {text!r}; expected 'n:1-2,2-3' or one of {', '.join(labelled)}")


def _construct(args) -> str:
    kind = args.kind
    rng = random.Random(args.seed)
    comment = []
    if kind == "edge":
        if not args.graph:
            raise ValueError("--graph is required")
        G = _graph(args.graph)
        ring = PolyRing([f"x{i + 1}" for i in range(G.n)], args.field) if args.field else None
        I = edge_ideal(G, ring)
    elif kind == "koszul":
        ring = _ring(args)
        seq = _forms(ring, args.forms or args.vars, "forms")
        I = Ideal(ring, seq)
        comment = koszul_complex(seq, ring).betti_table().to_text().splitlines()
    elif kind == "zj":
        ring = _ring(args)
        if not args.z:
            raise ValueError("--z is required")
        z = ring.parse(args.z)
        J = _forms(ring, args.forms, "forms")
        res = scaled_koszul(z, J)
        I = Ideal(ring, [z * f for f in J])
        comment = res.betti_table().to_text().splitlines()
    elif kind.startswith("engheta-"):
        ring = _ring(args)
        case = {"engheta-ia1": "ia_intersection", "engheta-ia2": "ia_quadric",
                "engheta-ib": "ib", "engheta-ii": "ii"}[kind]
        if case.startswith("ia") and args.seed == 0:
            I = engheta_form(case, 4, ring)
        else:
            I, _ = random_engheta(case, args.g, ring, rng)
    elif kind == "minors2":
        ring = _ring(args)
        if not args.matrix:
            raise ValueError("--matrix is required")
        rows = [[ring.parse(e) for e in r.split(",")] for r in args.matrix.split(";")]
        I = minors2(rows)
        I = Ideal(I.ring, minimal_generators(I)[0])
    else:
        ring = _ring(args)
        if not args.params:
            raise ValueError("--params f;g;a1;a2;b1;b2 is required")
        parts = [ring.parse(t) for t in args.params.split(";")]
        if len(parts) != 6:
            raise ValueError("northcott needs six forms f;g;a1;a2;b1;b2")
        C, I = northcott(*parts)
        comment = ["linked complete intersection:"] + [str(c) for c in C.gens]
    text = format_ideal(I)
    if comment:
        text += "".join(f"# {line}\n" for line in comment)
    return text


def _run(args, out) -> int:
    c = args.command
    if c == "verify-paper":
        from .verification import run_checks
        results = run_checks(args.only, Path(args.golden_dir) if args.golden_dir else None)
        if not results:
            raise ValueError(f"--only {args.only!r} matched no checks")
        for r in results:
            out.write(r.line() + "\n")
            for d in r.diffs:
                out.write(d + "\n")
        passed = sum(r.ok for r in results)
        out.write(f"{passed}/{len(results)} PASS\n")
        return EXIT_OK if passed == len(results) else EXIT_MISMATCH
    if c == "construct":
        out.write(_construct(args))
        return EXIT_OK
    if c == "sample":
        fams = HOST_FAMILIES if args.families == "all" else tuple(
            f.strip() for f in args.families.split(","))
        bad = [f for f in fams if f not in HOST_FAMILIES]
        if bad:
            raise ValueError(f"unknown families {bad}")
        field = args.field or Field("Fp", 101)
        if not field.is_prime_field:
            raise UnsupportedFieldError("sampling needs a prime field")
        rows = sample_experiment(args.n, args.g, field, args.samples, seed=args.seed,
                                 families=fams, codim=args.codim, witness_trials=args.trials)
        out.write(rows_to_csv(rows))
        return EXIT_OK
    if c in ("colon", "intersect"):
        I, J = _load(args.ideal1, args), _load(args.ideal2, args)
        K = colon(I, J) if c == "colon" else intersect(I, J)
        out.write(format_ideal(Ideal(K.ring, K.gb().generators)))
        return EXIT_OK
    I = _load(args.ideal, args)
    if c == "gb":
        gb = I.gb(I.ring.order)
        for g in gb.generators:
            out.write(f"{g}\n")
    elif c == "betti":
        out.write(betti_table(I).to_text().rstrip("\n") + "\n")
    elif c == "invariants":
        out.write(hilbert_report(I).to_json() + "\n")
    elif c == "socle":
        rep = socle_degrees(I, require_artinian=args.strict)
        if not rep.degrees:
            out.write("zero socle\n")
        for d in sorted(rep.degrees):
            out.write(f"{d}: {rep.degrees[d]}\n")
    elif c == "unmixed":
        U = unmixed_part(I)
        out.write(format_ideal(Ideal(U.ring, U.gb().generators)))
    elif c == "check-koszul":
        rep = koszul_necessary_battery(I, search=not args.no_search, trials=args.trials, seed=args.seed)
        out.write(rep.betti.to_text().rstrip("\n") + "\n")
        for k, v in rep.flags().items():
            out.write(f"{k}: {'true' if v else 'false'}\n")
        label = main_theorem_membership(rep.betti)
        out.write(f"table: {label or '-'}\n")
        if rep.witness is not None:
            w = rep.witness
            out.write(f"witness: {w.method}, order {w.order.describe(I.ring.names)}, "
                      f"{len(w.gb.generators)} quadrics\n")
        out.write(f"verdict: {rep.verdict}\n")
    elif c == "classify":
        res = classify_ht2_mult2(I)
        out.write(res.label + "\n")
        if res.details:
            out.write(json.dumps(res.details, sort_keys=True) + "\n")
        if res.label == "none":
            print(f"no multiplicity-two shape matched: {res.details.get('reason', '')}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"koszulkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.out:
            with open(args.out, "w") as fh:
                return _run(args, fh)
        return _run(args, sys.stdout)
    except BOUND_ERRORS as exc:
        print(f"koszulkit: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except INPUT_ERRORS as exc:
        print(f"koszulkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
