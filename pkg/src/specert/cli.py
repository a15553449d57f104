"""Command-line front end.

Exit status: 0 on success, 1 when an oracle says no or a sweep finds a
violation, 2 on usage errors, malformed input and exceeded size caps.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterator, Optional, TextIO

from .certify import certify, format_record
from .closure import k_closure
from .families import (Family, MembershipCapExceeded, gen_EC, gen_EP, gen_ES, gen_union_cliques,
                       membership)
from .formats import GraphFormatError, looks_like_edge_list, parse_graph, to_graph6
from .graph import Graph, complement
from .harness import enumerate_labeled, exhaustive_sweep, sample_gnp, soundness_sweep, tightness_search
from .oracles import GraphOracles, OracleCapExceeded, OracleVerdict
from .params import Theorem, TheoremParams, valid_params
from .spectral import DEFAULT_BAND, DEFAULT_TOL, min_edge_geometric_degree, spectral_radius

VALUE_PROPERTIES = ("connectivity", "edge-connectivity", "deficiency", "path-cover")
DECISION_PROPERTIES = ("hamiltonian",) + tuple(t.value for t in Theorem)


class UsageError(Exception):
    pass


# -- argument parsing ---------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser):
    p.add_argument("graph", nargs="?", default="-",
                   help="graph6 string, path to a file, or '-' for stdin (default)")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")


def _add_params(p: argparse.ArgumentParser, theorem_required: bool = True):
    p.add_argument("--theorem", required=theorem_required,
                   help="one of " + ", ".join(t.value for t in Theorem))
    p.add_argument("--k", type=int, required=theorem_required)
    p.add_argument("--s", type=int)
    p.add_argument("--beta", type=int)


def _add_numeric(p: argparse.ArgumentParser):
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--band", type=float, default=DEFAULT_BAND)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="run a spectral certifier")
    _add_input(p)
    _add_params(p)
    _add_numeric(p)
    p.add_argument("--relax-connectivity", action="store_true")

    p = sub.add_parser("oracle", help="decide a property exactly")
    _add_input(p)
    p.add_argument("--property", required=True, choices=VALUE_PROPERTIES + DECISION_PROPERTIES)
    p.add_argument("--s", type=int)
    p.add_argument("--beta", type=int)

    p = sub.add_parser("closure", help="compute the k-closure")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, help="shuffle the scan order (the result does not change)")

    p = sub.add_parser("spectrum", help="spectral radius of a graph")
    _add_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--complement", action="store_true", help="use the complement")

    p = sub.add_parser("family-gen", help="generate an exceptional family member")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int, default=0, help="core regularity (EP)")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--g2-edges", type=int, help="edge mask selecting the join-part graph")

    p = sub.add_parser("family-test", help="search a graph for exceptional family structure")
    _add_input(p)
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    _add_params(p)

    p = sub.add_parser("sweep", help="check certified verdicts against the oracles")
    p.add_argument("graph", nargs="?", help="optional graph6 corpus (file or '-')")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--n", type=int, help="order; exhaustive unless --p is given")
    p.add_argument("--p", type=float, help="edge probability for G(n, p) sampling")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorem", action="append",
                   help="restrict to this theorem (repeatable); default all six")
    p.add_argument("--relax-connectivity", action="store_true")
    _add_numeric(p)

    p = sub.add_parser("tightness", help="family instances meeting a bound with equality")
    p.add_argument("--n", type=int, required=True)
    _add_params(p)
    p.add_argument("--band", type=float, default=DEFAULT_BAND)
    return parser


def _theorem_params(args) -> TheoremParams:
    try:
        theorem = Theorem.parse(args.theorem)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if theorem is Theorem.DEFICIENT:
        if args.beta is None or args.s is not None:
            raise UsageError("--theorem deficient takes --beta and not --s")
        return TheoremParams(theorem, args.k, beta=args.beta)
    if args.s is None or args.beta is not None:
        raise UsageError(f"--theorem {theorem.value} takes --s and not --beta")
    return TheoremParams(theorem, args.k, s=args.s)


def _validate(args) -> None:
    """Flag checks that argparse cannot express, done before any input is read."""
    if getattr(args, "tol", 1.0) <= 0:
        raise UsageError("--tol must be positive")
    if getattr(args, "band", 0.0) < 0:
        raise UsageError("--band must be nonnegative")
    cmd = args.command
    if cmd in ("certify", "family-test", "tightness"):
        args.params = _theorem_params(args)
    if cmd == "oracle":
        prop = args.property
        if prop == "deficient" and (args.beta is None or args.s is not None):
            raise UsageError("--property deficient takes --beta")
        if prop in DECISION_PROPERTIES and prop not in ("deficient", "hamiltonian") and args.s is None:
            raise UsageError(f"--property {prop} takes --s")
        if prop in VALUE_PROPERTIES + ("hamiltonian",) and (args.s is not None or args.beta is not None):
            raise UsageError(f"--property {prop} takes no parameter")
    if cmd == "closure" and args.k < 0:
        raise UsageError("--k must be nonnegative")
    if cmd == "family-gen":
        fam = Family(args.family)
        if fam in (Family.EC, Family.ES) and args.s is None:
            raise UsageError(f"--family {fam.value} takes --s")
    if cmd == "sweep":
        if args.graph is None and args.n is None:
            raise UsageError("sweep needs --n or a graph corpus")
        if args.graph is not None and (args.n is not None or args.p is not None):
            raise UsageError("give either a corpus or --n/--p, not both")
        if args.p is not None and not 0.0 <= args.p <= 1.0:
            raise UsageError("--p must lie in [0, 1]")
        if args.count < 0:
            raise UsageError("--count must be nonnegative")
        if args.n is not None and args.n < 1:
            raise UsageError("--n must be positive")
        try:
            args.theorems = tuple(Theorem.parse(t) for t in args.theorem) if args.theorem else tuple(Theorem)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if cmd == "tightness" and args.n < 1:
        raise UsageError("--n must be positive")


# -- input ------------------------------------------------------------------------------

def _read_source(spec: str, stdin: TextIO) -> tuple[Optional[str], Optional[TextIO]]:
    """Whole text for files and inline strings, or the open stream for stdin."""
    if spec == "-":
        return None, stdin
    if os.path.isfile(spec):
        with open(spec, encoding="ascii", errors="surrogateescape") as fh:
            return fh.read(), None
    return spec, None


def _graphs(spec: str, fmt: str, stdin: TextIO) -> Iterator[Graph]:
    """Graphs from the input: one edge list, or one graph6 string per line."""
    text, stream = _read_source(spec, stdin)
    if stream is not None:
        first = ""
        for line in stream:
            if line.strip():
                first = line
                break
        if not first:
            raise GraphFormatError("no graph in input", 0)
        if fmt == "edgelist" or (fmt == "auto" and looks_like_edge_list(first)):
            yield parse_graph(first + stream.read(), "edgelist")
            return
        yield parse_graph(first, "graph6")
        for line in stream:
            if line.strip():
                yield parse_graph(line, "graph6")
        return
    if fmt == "edgelist" or (fmt == "auto" and looks_like_edge_list(text)):
        yield parse_graph(text, "edgelist")
        return
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("no graph in input", 0)
    for line in lines:
        yield parse_graph(line, "graph6")


# -- subcommands ----------------------------------------------------------------------------

def _fmt_verdict(prop: str, v: OracleVerdict) -> str:
    fields = [f"property={prop}", f"param={v.param}", f"holds={str(v.holds).lower()}"]
    if v.value is not None:
        fields.append(f"value={v.value}")
    if v.witness is not None:
        fields.append(f"witness={_fmt_witness(v.witness)}")
    return " ".join(fields)


def _fmt_witness(w) -> str:
    name = type(w).__name__
    (field_name, payload), *_ = vars(w).items()
    if isinstance(payload, tuple) and payload and isinstance(payload[0], tuple):
        body = ";".join("-".join(map(str, item)) for item in payload)
    elif isinstance(payload, tuple):
        body = ",".join(map(str, payload))
    else:
        body = str(payload)
    return f"{name}:{body}"


def _cmd_certify(args, graphs, out) -> int:
    for g in graphs:
        outcome = certify(g, args.params, relax_connectivity=args.relax_connectivity,
                          tol=args.tol, band=args.band)
        print(format_record(outcome), file=out, flush=True)
    return 0


def _cmd_oracle(args, graphs, out) -> int:
    code = 0
    for g in graphs:
        o = GraphOracles(g)
        prop = args.property
        if prop == "connectivity":
            print(f"connectivity={o.kappa()[0]}", file=out)
        elif prop == "edge-connectivity":
            if g.n < 2:
                raise UsageError("edge connectivity needs at least two vertices")
            print(f"edge-connectivity={o.lam()[0]}", file=out)
        elif prop == "deficiency":
            print(f"deficiency={o.deficiency()}", file=out)
        elif prop == "path-cover":
            if g.n < 1:
                raise UsageError("path cover needs at least one vertex")
            cover = o.path_cover()
            paths = ";".join("-".join(map(str, p)) for p in cover.paths)
            print(f"path-cover={len(cover.paths)} paths={paths}", file=out)
        else:
            if prop == "hamiltonian":
                theorem, param = Theorem.S_HAM, 0
            else:
                theorem = Theorem.parse(prop)
                param = args.beta if theorem is Theorem.DEFICIENT else args.s
            if theorem is Theorem.S_EDGE_CONN and g.n < 2:
                raise UsageError("edge connectivity needs at least two vertices")
            v = o.verdict(theorem, param)
            print(_fmt_verdict(prop, v), file=out)
            if not v.holds:
                code = 1
        out.flush()
    return code


def _cmd_closure(args, graphs, out) -> int:
    import random
    rng = random.Random(args.seed) if args.seed is not None else None
    for g in graphs:
        res = k_closure(g, args.k, rng)
        added = ";".join(f"{u}-{v}" for u, v in res.added_edges) or "-"
        print(f"closed={to_graph6(res.closed)} edges={res.closed.num_edges} "
              f"added={len(res.added_edges)} added_edges={added}", file=out, flush=True)
    return 0


def _cmd_spectrum(args, graphs, out) -> int:
    for g in graphs:
        if g.n < 1:
            raise UsageError("spectral radius needs at least one vertex")
        h = complement(g) if args.complement else g
        est = spectral_radius(h, args.tol)
        fields = [f"mu={est.value!r}", f"mu_squared={est.value * est.value!r}",
                  f"residual={est.residual:.3e}", f"iterations={est.iterations}",
                  f"shift={est.shift:g}"]
        if h.num_edges:
            fields.append(f"min_edge_geometric_degree={min_edge_geometric_degree(h)!r}")
        print(" ".join(fields), file=out, flush=True)
    return 0


def _cmd_family_gen(args, out) -> int:
    fam = Family(args.family)
    if fam is Family.EP:
        g = gen_EP(args.n, args.k, args.r, g2_edges=args.g2_edges)
    elif fam is Family.EC:
        g = gen_EC(args.n, args.k, args.s, args.m, args.t, g2_edges=args.g2_edges)
    elif fam is Family.ES:
        g = gen_ES(args.n, args.k, args.s, args.m, args.t, g2_edges=args.g2_edges)
    else:
        g = gen_union_cliques(args.n, args.k)
    print(to_graph6(g), file=out)
    return 0


def _cmd_family_test(args, graphs, out) -> int:
    fam = Family(args.family)
    for g in graphs:
        w = membership(g, fam, args.params)
        if w is None:
            print(f"family={fam.value} member=false", file=out)
            continue
        fields = [f"family={fam.value}", "member=true", f"r={w.r}",
                  "core=" + ",".join(map(str, sorted(w.core))),
                  "join_part=" + (",".join(map(str, sorted(w.join_part))) or "-")]
        if w.m is not None:
            fields += [f"m={w.m}", f"t={w.t}", "side_x=" + ",".join(map(str, sorted(w.side_x)))]
        print(" ".join(fields), file=out, flush=True)
    return 0


def _cmd_sweep(args, stdin, out) -> int:
    if args.graph is not None:
        source = _graphs(args.graph, args.format, stdin)
        report = soundness_sweep(source, args.theorems, relax_connectivity=args.relax_connectivity,
                                 tol=args.tol, band=args.band)
    elif args.p is not None:
        source = sample_gnp(args.n, args.p, args.seed, args.count)
        report = soundness_sweep(source, args.theorems, relax_connectivity=args.relax_connectivity,
                                 tol=args.tol, band=args.band)
    else:
        if args.n > 7:
            raise UsageError("exhaustive sweeps are capped at n=7; use --p for sampling")
        if args.relax_connectivity:
            report = soundness_sweep(enumerate_labeled(args.n), args.theorems,
                                     lambda n: valid_params(n, args.theorems),
                                     relax_connectivity=True, tol=args.tol, band=args.band)
        else:
            report = exhaustive_sweep(args.n, args.theorems, band=args.band, tol=args.tol)
    for line in report.records():
        print(line, file=out)
    return 1 if report.violations else 0


def _cmd_tightness(args, out) -> int:
    p = args.params
    found = tightness_search(p.theorem, args.n, p.k, p.s_or_beta, args.band)
    for inst in found:
        print(f"family={inst.family.value} graph6={to_graph6(inst.graph)} mu={inst.mu!r} "
              f"radicand={inst.radicand}", file=out)
    print(f"instances={len(found)}", file=out)
    return 0


def run(argv: Optional[list[str]] = None, stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _validate(args)
        cmd = args.command
        if cmd == "family-gen":
            return _cmd_family_gen(args, out)
        if cmd == "tightness":
            return _cmd_tightness(args, out)
        if cmd == "sweep":
            return _cmd_sweep(args, stdin, out)
        graphs = _graphs(args.graph, args.format, stdin)
        handler = {"certify": _cmd_certify, "oracle": _cmd_oracle, "closure": _cmd_closure,
                   "spectrum": _cmd_spectrum, "family-test": _cmd_family_test}[cmd]
        return handler(args, graphs, out)
    except GraphFormatError as exc:
        print(f"specert: malformed graph: {exc}", file=err)
        return 2
    except (OracleCapExceeded, MembershipCapExceeded) as exc:
        print(f"specert: {exc}", file=err)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"specert: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
