"""Batch command-line front end.

Every invocation is deterministic given identical flags; JSON outputs
carry a version stamp and validate against the schema shipped in
``schemas/cli_output.schema.json``.  Words travel on the wire as
comma-separated generator indices ("e" for the identity); matrices are
derived, never parsed.

Exit codes: 0 success, 1 domain rejection (with an error document on
stderr) or a false boolean under ``--strict-exit``, 2 malformed
invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, bruhat, flow, gkm, homology
from .roots import build_cartan, datum_to_json
from .weyl import AffineWeylGroup


def _parse_word(text: str) -> tuple:
    text = text.strip()
    if text in ("e", ""):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed word {text!r}; expected comma-separated indices")


def _parse_parabolic(text: str, rank: int) -> tuple:
    text = (text or "none").strip().lower()
    if text in ("none", "empty"):
        return ()
    if text == "finite":
        return tuple(range(1, rank + 1))
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise ValueError(
            f"malformed parabolic {text!r}; expected 'none', 'finite' or indices"
        )


def _parse_gamma(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"malformed gamma {text!r}; expected comma-separated integers")


def _group_for(args) -> AffineWeylGroup:
    return AffineWeylGroup(build_cartan(args.type, args.rank))


def _emit(args, payload: dict, out) -> None:
    doc = {"tool": "affineflags", "version": __version__, "command": args.command}
    doc.update(payload)
    json.dump(doc, out, indent=2, sort_keys=False)
    out.write("\n")


def _word_list(group, elements) -> list:
    return [list(group.reduced_word(w)) for w in elements]


def _add_group_flags(p, parabolic=True):
    p.add_argument("--type", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--rank", required=True, type=int)
    if parabolic:
        p.add_argument(
            "--parabolic",
            default="none",
            help="'none', 'finite', or comma-separated generator indices",
        )


def _add_generators_flag(p, name="--generator"):
    p.add_argument(
        name,
        action="append",
        default=None,
        dest=name.lstrip("-").replace("-", "_") + "s",
        metavar="WORD",
        help="ideal generator as a word; repeatable",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affineflags",
        description="Exact combinatorics of affine flag varieties.",
    )
    parser.add_argument("--config", default=None, help="JSON file of default flags")
    top = parser.add_subparsers(dest="group_cmd", required=True)

    # roots ------------------------------------------------------------
    roots_p = top.add_parser("roots").add_subparsers(dest="sub", required=True)
    p = roots_p.add_parser("show", help="Cartan datum as canonical JSON")
    _add_group_flags(p, parabolic=False)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="roots.show")

    # weyl ---------------------------------------------------------------
    weyl_p = top.add_parser("weyl").add_subparsers(dest="sub", required=True)
    p = weyl_p.add_parser("enumerate", help="minimal coset representatives")
    _add_group_flags(p)
    p.add_argument("--max-length", required=True, type=int)
    p.add_argument("--format", default="jsonl", choices=["jsonl", "json", "text"])
    p.set_defaults(command="weyl.enumerate")

    p = weyl_p.add_parser("word", help="normalize a word to canonical form")
    _add_group_flags(p, parabolic=False)
    p.add_argument("--word", required=True)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="weyl.word")

    # bruhat -----------------------------------------------------------
    bruhat_p = top.add_parser("bruhat").add_subparsers(dest="sub", required=True)
    p = bruhat_p.add_parser("leq", help="Bruhat comparison on the quotient")
    _add_group_flags(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--strict-exit", action="store_true")
    p.set_defaults(command="bruhat.leq")

    p = bruhat_p.add_parser("ideal", help="order ideal of coset representatives")
    _add_group_flags(p)
    p.add_argument("--direction", required=True, choices=["lower", "upper"])
    _add_generators_flag(p)
    p.add_argument("--truncation", type=int, default=None)
    p.set_defaults(command="bruhat.ideal")

    p = bruhat_p.add_parser("hasse", help="covering-relation diagram of an ideal")
    _add_group_flags(p)
    p.add_argument("--direction", required=True, choices=["lower", "upper"])
    _add_generators_flag(p)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--format", default="json", choices=["json", "dot"])
    p.set_defaults(command="bruhat.hasse")

    # flow ----------------------------------------------------------------
    flow_p = top.add_parser("flow").add_subparsers(dest="sub", required=True)
    p = flow_p.add_parser("validate", help="attraction conditions for (k, gamma)")
    _add_group_flags(p, parabolic=False)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--gamma", required=True, help="coroot coordinates, comma-separated")
    p.set_defaults(command="flow.validate")

    p = flow_p.add_parser("weights", help="flow weights on one cell")
    _add_group_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--gamma", default=None)
    p.set_defaults(command="flow.weights")

    # gkm -------------------------------------------------------------------
    gkm_p = top.add_parser("gkm").add_subparsers(dest="sub", required=True)
    p = gkm_p.add_parser("build", help="fixed-point graph with edge labels")
    _add_group_flags(p)
    p.add_argument("--max-length", required=True, type=int)
    p.add_argument("--level-bound", required=True, type=int)
    p.set_defaults(command="gkm.build")

    p = gkm_p.add_parser("check", help="membership test for a vertex function")
    _add_group_flags(p)
    p.add_argument("--graph", required=True, help="graph JSON produced by gkm build")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--function", help="vertex-function JSON file")
    source.add_argument("--constant", help="constant rational, e.g. 1 or 3/2")
    source.add_argument(
        "--character",
        help="'delta' or a simple-root index 1..rank; tests chi - w(chi)",
    )
    p.add_argument("--integral", action="store_true")
    p.add_argument("--strict-exit", action="store_true")
    p.set_defaults(command="gkm.check")

    p = gkm_p.add_parser("witnesses", help="reflections into an upper ideal")
    _add_group_flags(p)
    p.add_argument("--sigma", required=True)
    _add_generators_flag(p)
    p.add_argument("--truncation", required=True, type=int)
    p.add_argument("--want", required=True, type=int)
    p.add_argument("--level-bound", required=True, type=int)
    p.set_defaults(command="gkm.witnesses")

    # poincare ---------------------------------------------------------
    poin_p = top.add_parser("poincare").add_subparsers(dest="sub", required=True)
    p = poin_p.add_parser("flag", help="cell counts of the full index set")
    _add_group_flags(p)
    p.add_argument("--cap", required=True, type=int)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="poincare.flag")

    p = poin_p.add_parser("lower", help="cell counts of a Schubert union")
    _add_group_flags(p)
    _add_generators_flag(p)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="poincare.lower")

    p = poin_p.add_parser("pair", help="relative counts over an upper ideal")
    _add_group_flags(p)
    _add_generators_flag(p)
    p.add_argument("--truncation", required=True, type=int)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="poincare.pair")

    p = poin_p.add_parser("betti", help="Betti numbers of a Birkhoff union")
    _add_group_flags(p)
    _add_generators_flag(p)
    p.add_argument("--truncation", required=True, type=int)
    p.add_argument("--cap", required=True, type=int)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="poincare.betti")

    p = poin_p.add_parser("pinf", help="model intersection in P^infinity")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--format", default="json", choices=["json", "text"])
    p.set_defaults(command="poincare.pinf")

    # richardson ----------------------------------------------------------
    rich_p = top.add_parser("richardson").add_subparsers(dest="sub", required=True)
    p = rich_p.add_parser("codim", help="codimension data for lam <= mu")
    _add_group_flags(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(command="richardson.codim")

    # interval -------------------------------------------------------------
    int_p = top.add_parser("interval").add_subparsers(dest="sub", required=True)
    p = int_p.add_parser("connected", help="Hasse connectivity of an intersection")
    _add_group_flags(p)
    _add_generators_flag(p, "--upper-generator")
    _add_generators_flag(p, "--lower-generator")
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--strict-exit", action="store_true")
    p.set_defaults(command="interval.connected")

    return parser


def _ideal_from_args(group, args, direction=None, gens_attr="generators"):
    direction = direction or args.direction
    words = getattr(args, gens_attr, None) or (["e"] if direction == "lower" else None)
    if words is None:
        raise ValueError("at least one generator is required")
    gens = [group.element_from_word(_parse_word(w)) for w in words]
    I = _parse_parabolic(args.parabolic, args.rank)
    if direction == "lower":
        return bruhat.lower_ideal(group, gens, I)
    trunc = args.truncation
    if trunc is None:
        trunc = max(group.length(group.min_coset_rep(g, I)) for g in gens)
    return bruhat.upper_ideal(group, gens, I, trunc)


def _series_payload(series) -> dict:
    return {"series": series.to_json(), "rendered": series.render()}


def _run(args, out) -> int:
    cmd = args.command

    if cmd == "roots.show":
        datum = build_cartan(args.type, args.rank)
        if args.format == "text":
            out.write(f"{datum.name}: h={datum.coxeter_number}, ")
            out.write(f"|positive roots|={len(datum.positive_roots)}\n")
        else:
            _emit(args, {"datum": datum_to_json(datum)}, out)
        return 0

    if cmd == "weyl.enumerate":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        reps = group.enumerate_min_reps(I, args.max_length)
        if args.format == "jsonl":
            for w in reps:
                doc = group.element_to_json(w)
                doc["length"] = group.length(w)
                out.write(json.dumps(doc) + "\n")
        elif args.format == "text":
            for w in reps:
                word = group.reduced_word(w)
                out.write(("".join(map(str, word)) or "e") + "\n")
        else:
            _emit(
                args,
                {
                    "parabolic": list(I),
                    "max_length": args.max_length,
                    "elements": [
                        dict(group.element_to_json(w), length=group.length(w))
                        for w in reps
                    ],
                },
                out,
            )
        return 0

    if cmd == "weyl.word":
        group = _group_for(args)
        w = group.element_from_word(_parse_word(args.word))
        if args.format == "text":
            out.write(("".join(map(str, group.reduced_word(w))) or "e") + "\n")
        else:
            _emit(
                args,
                {
                    "element": group.element_to_json(w),
                    "length": group.length(w),
                    "right_descents": sorted(group.descents(w, "right")),
                    "left_descents": sorted(group.descents(w, "left")),
                },
                out,
            )
        return 0

    if cmd == "bruhat.leq":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        mu = group.element_from_word(_parse_word(args.mu))
        lam = group.element_from_word(_parse_word(args.lam))
        report = bruhat.bruhat_leq_report(group, mu, lam, I)
        _emit(
            args,
            {
                "result": report.result,
                "normalized_mu": report.normalized_mu,
                "normalized_lam": report.normalized_lam,
            },
            out,
        )
        return 0 if (report.result or not args.strict_exit) else 1

    if cmd == "bruhat.ideal":
        group = _group_for(args)
        ideal = _ideal_from_args(group, args)
        _emit(args, {"ideal": bruhat.ideal_to_json(group, ideal)}, out)
        return 0

    if cmd == "bruhat.hasse":
        group = _group_for(args)
        ideal = _ideal_from_args(group, args)
        diagram = bruhat.hasse(group, ideal.elements, ideal.parabolic)
        if args.format == "dot":
            out.write(bruhat.hasse_to_dot(group, diagram) + "\n")
        else:
            _emit(args, {"hasse": bruhat.hasse_to_json(group, diagram)}, out)
        return 0

    if cmd == "flow.validate":
        datum = build_cartan(args.type, args.rank)
        phi = flow.OneParamSubgroup(args.k, _parse_gamma(args.gamma))
        report = flow.validate_flow(datum, phi)
        _emit(
            args,
            {
                "k": phi.k,
                "gamma": list(phi.gamma),
                "condition_a": report.condition_a,
                "condition_b": report.condition_b,
                "max_abs_pairing": report.max_abs_pairing,
                "witness_a": list(report.witness_a) if report.witness_a else None,
                "witness_b": list(report.witness_b) if report.witness_b else None,
            },
            out,
        )
        return 0 if report.valid else 1

    if cmd == "flow.weights":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        if (args.k is None) != (args.gamma is None):
            raise ValueError("--k and --gamma must be given together")
        if args.k is None:
            phi = flow.canonical_flow(group.datum)
        else:
            phi = flow.OneParamSubgroup(args.k, _parse_gamma(args.gamma))
        w = group.min_coset_rep(group.element_from_word(_parse_word(args.word)), I)
        weights = flow.cell_weights(group, w, phi, I)
        _emit(
            args,
            {
                "word": list(group.reduced_word(w)),
                "k": phi.k,
                "gamma": list(phi.gamma),
                "weights": list(weights),
                "all_positive": all(x > 0 for x in weights),
            },
            out,
        )
        return 0

    if cmd == "gkm.build":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        verts = group.enumerate_min_reps(I, args.max_length)
        graph = gkm.build_gkm_graph(
            group, verts, I, args.level_bound, truncation_length=args.max_length
        )
        _emit(args, {"graph": gkm.graph_to_json(group, graph)}, out)
        return 0

    if cmd == "gkm.check":
        group = _group_for(args)
        with open(args.graph) as fh:
            graph_doc = json.load(fh)
        graph = gkm.graph_from_json(group, graph_doc.get("graph", graph_doc))
        if args.function:
            with open(args.function) as fh:
                f = gkm.function_from_json(group, graph, json.load(fh))
        elif args.constant is not None:
            f = gkm.constant_function(graph.vertices, group.dim, Fraction(args.constant))
        else:
            if args.character == "delta":
                chi = gkm.Character(1, (0,) * group.rank)
            else:
                idx = int(args.character)
                if not 1 <= idx <= group.rank:
                    raise ValueError(f"character index {idx} out of range 1..{group.rank}")
                chi = gkm.Character(0, group.datum.simple_root(idx - 1))
            f = gkm.character_class(group, graph.vertices, chi)
        report = gkm.check_membership(f, graph, integral=args.integral)
        index = graph.vertex_index()
        _emit(
            args,
            {
                "member": report.member,
                "violations": [
                    {
                        "src": index[e.src.mat],
                        "dst": index[e.dst.mat],
                        "label": {"delta": e.label.delta_coeff, "weight": list(e.label.weight)},
                    }
                    for e in report.violations
                ],
            },
            out,
        )
        return 0 if (report.member or not args.strict_exit) else 1

    if cmd == "gkm.witnesses":
        group = _group_for(args)
        ideal = _ideal_from_args(group, args, direction="upper")
        sigma = group.element_from_word(_parse_word(args.sigma))
        report = gkm.injectivity_witnesses(
            group, sigma, ideal, args.want, args.level_bound
        )
        _emit(
            args,
            {
                "found": report.found,
                "level_bound": report.level_bound,
                "witnesses": [
                    {
                        "root": {"level": theta.level, "finite": list(theta.finite)},
                        "target": list(group.reduced_word(target)),
                    }
                    for theta, target in report.witnesses
                ],
            },
            out,
        )
        return 0

    if cmd.startswith("poincare."):
        if cmd == "poincare.pinf":
            series = homology.pinf_toy(args.n, args.m)
        else:
            group = _group_for(args)
            I = _parse_parabolic(args.parabolic, args.rank)
            if cmd == "poincare.flag":
                series = homology.poincare_flag(group, I, args.cap)
            elif cmd == "poincare.lower":
                ideal = _ideal_from_args(group, args, direction="lower")
                series = homology.poincare_lower(group, ideal)
            elif cmd == "poincare.pair":
                ideal = _ideal_from_args(group, args, direction="upper")
                series = homology.poincare_pair(group, ideal)
            else:  # poincare.betti
                ideal = _ideal_from_args(group, args, direction="upper")
                series = homology.betti_birkhoff(group, ideal, args.cap)
        if args.format == "text":
            out.write(series.render() + "\n")
        else:
            _emit(args, _series_payload(series), out)
        return 0

    if cmd == "richardson.codim":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        lam = group.element_from_word(_parse_word(args.lam))
        mu = group.element_from_word(_parse_word(args.mu))
        report = homology.richardson_codim(group, lam, mu, I)
        _emit(args, {"codim": report.codim, "dim": report.dim}, out)
        return 0

    if cmd == "interval.connected":
        group = _group_for(args)
        I = _parse_parabolic(args.parabolic, args.rank)
        lower_words = args.lower_generators or []
        upper_words = args.upper_generators or []
        if not lower_words or not upper_words:
            raise ValueError("need --upper-generator and --lower-generator")
        lower = bruhat.lower_ideal(
            group, [group.element_from_word(_parse_word(w)) for w in lower_words], I
        )
        trunc = args.truncation
        if trunc is None:
            trunc = max(group.length(w) for w in lower.elements)
        upper = bruhat.upper_ideal(
            group,
            [group.element_from_word(_parse_word(w)) for w in upper_words],
            I,
            trunc,
        )
        report = bruhat.interval_connected(group, upper, lower)
        _emit(
            args,
            {
                "status": report.status,
                "intersection_size": report.intersection_size,
                "conclusion": (
                    "stratum intersection is path-connected"
                    if report.status == "connected"
                    else "criterion inconclusive"
                    if report.status == "inconclusive"
                    else "empty intersection"
                ),
            },
            out,
        )
        if args.strict_exit:
            return 0 if report.status == "connected" else 1
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def run(argv, out=None, err=None) -> int:
    """Entry point returning an exit code (0 ok, 1 domain, 2 usage)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()

    config = {}
    if "--config" in argv:
        path = argv[argv.index("--config") + 1]
        try:
            with open(path) as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            _error(err, f"cannot read config {path}: {exc}", "usage")
            return 2
        if not isinstance(config, dict):
            _error(err, "config must be a JSON object of flag defaults", "usage")
            return 2
        parser.set_defaults(**config)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    try:
        return _run(args, out)
    except ValueError as exc:
        _error(err, str(exc), "domain")
        return 1
    except OSError as exc:
        _error(err, str(exc), "domain")
        return 1


def _error(err, message: str, kind: str) -> None:
    json.dump(
        {
            "tool": "affineflags",
            "version": __version__,
            "error": {"kind": kind, "message": message},
        },
        err,
    )
    err.write("\n")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
