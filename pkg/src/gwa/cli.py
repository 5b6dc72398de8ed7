"""Command-line front end.

Subcommands:
    tensor        decompose a tensor product of two module literals
    decompose     split a single module literal into indecomposables
    groth-mul     multiply two character-ring elements
    hilbert       character-ring dimensions by total degree
    split-mul     multiply in a split ring (trivial/quotient/semisimple)
    graph-tensor  tensor product of two graph-JSON files
    render        draw a module, decomposition, or graph
    oracle-check  compare symbolic tensor products against the oracle
    selftest      run the built-in verification suite

Exit codes: 0 success, 2 parse error, 3 validation error,
4 mathematical obstruction (non-split spectrum / missing root),
5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import MathError, ParseError, ValidationError
from .exprparse import parse_module, parse_ring_element
from .graphmod import GraphModule, graph_tensor, graph_to_module
from .groth import hilbert_enumerated_coeff, hilbert_series_coeff
from .modules import composition_factors, split
from .oracle import kronecker_tensor, oracle_decompose, realize
from .orbit import OrbitConfig
from .render import render, render_text
from .tensorops import tensor


def _add_common(ap, suppress=False):
    d = argparse.SUPPRESS if suppress else None
    ap.add_argument("--p", type=int,
                    default=d if suppress else 3,
                    help="orbit size (default 3)")
    ap.add_argument("--conductor", type=int, default=d,
                    help="cyclotomic field conductor (default: p)")
    ap.add_argument("--seed", type=int,
                    default=d if suppress else 0,
                    help="seed for randomized commands")
    ap.add_argument("--format", choices=["json", "text", "dot", "svg"],
                    default=d if suppress else "text",
                    help="output format")
    ap.add_argument("--out", metavar="FILE", default=d,
                    help="write output to FILE instead of stdout")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="gwa",
        description="Exact weight-module calculus over rank-1 "
                    "generalized Weyl algebras on a finite orbit.")
    _add_common(ap)
    # the same flags are accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.
                            ArgumentParser(parents=[common], **kw))

    sp = sub.add_parser("tensor", help="tensor product of two modules")
    sp.add_argument("left", help='module literal, e.g. '
                                 'V[t=0:1,2:1; i=2; w="x1x"]')
    sp.add_argument("right", help="module literal")

    sp = sub.add_parser("decompose",
                        help="split a module into indecomposables")
    sp.add_argument("module", help="module literal")
    sp.add_argument("--factors", action="store_true",
                    help="also list composition factors")

    sp = sub.add_parser("groth-mul",
                        help="multiply character-ring elements")
    sp.add_argument("left", help="element, e.g. x[0,2]*x[1] + 2*u[z^4]")
    sp.add_argument("right", help="element")
    sp.add_argument("--route", choices=["rewrite", "modules", "both"],
                    default="rewrite",
                    help="rewrite rules, module tensors, or cross-check")

    sp = sub.add_parser("hilbert",
                        help="character-ring dimensions by degree")
    sp.add_argument("--maxdeg", type=int, default=6)
    sp.add_argument("--enumerate", action="store_true",
                    help="also enumerate basis monomials as a cross-check")

    sp = sub.add_parser("split-mul",
                        help="multiply in a split Grothendieck ring")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--ring",
                    choices=["trivial", "quotient", "semisimple"],
                    default="trivial")

    sp = sub.add_parser("graph-tensor",
                        help="tensor product of two graph-module JSON "
                             "files ('-' reads stdin)")
    sp.add_argument("left", help="path to graph JSON")
    sp.add_argument("right", help="path to graph JSON")

    sp = sub.add_parser("render",
                        help="draw a module or graph (use --format "
                             "dot/svg/text)")
    sp.add_argument("value", help="module literal or path to graph JSON")
    sp.add_argument("--decompose", action="store_true",
                    help="split into indecomposables before drawing")

    sp = sub.add_parser("oracle-check",
                        help="randomized symbolic-vs-matrix comparison")
    sp.add_argument("--pairs", type=int, default=20)

    sp = sub.add_parser("selftest",
                        help="run the built-in verification suite")
    sp.add_argument("--quick", action="store_true",
                    help="smaller sample sizes")
    return ap


def _config(args):
    return OrbitConfig(args.p, args.conductor or args.p)


def _emit(args, text_value, json_value):
    if args.format == "json":
        payload = json.dumps(json_value, indent=2, sort_keys=True)
    else:
        payload = text_value
    if not payload.endswith("\n"):
        payload += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _load_graph(path, cfg):
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return GraphModule.from_json(cfg, data)


def _element_json(elem):
    return elem.to_json() if hasattr(elem, "to_json") else repr(elem)


def _run(args):
    cfg = _config(args)
    if args.command == "tensor":
        m1 = parse_module(args.left, cfg)
        m2 = parse_module(args.right, cfg)
        dec = tensor(m1, m2).decomposition
        _emit(args, render(dec, args.format)
              if args.format in ("dot", "svg") else render_text(dec),
              dec.to_json())
        return 0
    if args.command == "decompose":
        m = parse_module(args.module, cfg)
        dec = split(m)
        text = render_text(dec)
        data = dec.to_json()
        if args.factors:
            factors = composition_factors(dec)
            text += "\nfactors: " + render_text(factors)
            data = {"summands": data["summands"],
                    "composition_factors": factors.to_json()["summands"]}
        _emit(args, render(dec, args.format)
              if args.format in ("dot", "svg") else text, data)
        return 0
    if args.command == "groth-mul":
        from .groth import groth_mul_modules, groth_mul_rewrite
        e1 = parse_ring_element(args.left, cfg, "groth")
        e2 = parse_ring_element(args.right, cfg, "groth")
        if args.route == "modules":
            prod = groth_mul_modules(e1, e2)
        else:
            prod = groth_mul_rewrite(e1, e2)
            if args.route == "both" and prod != groth_mul_modules(e1, e2):
                print("mismatch between rewrite and module routes",
                      file=sys.stderr)
                return 5
        _emit(args, render_text(prod), _element_json(prod))
        return 0
    if args.command == "hilbert":
        rows = []
        for deg in range(args.maxdeg + 1):
            coeff = hilbert_series_coeff(args.p, deg)
            row = {"degree": deg, "dimension": coeff}
            if args.enumerate:
                counted = hilbert_enumerated_coeff(args.p, deg)
                row["enumerated"] = counted
                if counted != coeff:
                    print(f"series/enumeration mismatch at degree {deg}",
                          file=sys.stderr)
                    return 5
            rows.append(row)
        text = "\n".join(f"degree {r['degree']}: {r['dimension']}"
                         for r in rows)
        _emit(args, text, {"p": args.p, "dimensions": rows})
        return 0
    if args.command == "split-mul":
        e1 = parse_ring_element(args.left, cfg, args.ring)
        e2 = parse_ring_element(args.right, cfg, args.ring)
        from .exprparse import _ring_ops
        _, _, mul = _ring_ops(cfg, args.ring)
        prod = mul(e1, e2)
        _emit(args, render_text(prod), _element_json(prod))
        return 0
    if args.command == "graph-tensor":
        g1 = _load_graph(args.left, cfg)
        g2 = _load_graph(args.right, cfg)
        gt = graph_tensor(g1, g2)
        _emit(args, render(gt, args.format)
              if args.format in ("dot", "svg") else render_text(gt),
              gt.to_json())
        return 0
    if args.command == "render":
        value = args.value
        if value.lstrip().startswith("V["):
            obj = parse_module(value, cfg)
            if args.decompose:
                obj = split(obj)
        else:
            obj = _load_graph(value, cfg)
        fmt = args.format if args.format != "json" else "text"
        _emit(args, render(obj, fmt), {"rendered": render(obj, fmt)})
        return 0
    if args.command == "oracle-check":
        from .errors import NonSplitSpectrum
        from .selftest import _rand_module
        rng = random.Random(args.seed)
        done = skipped = 0
        while done < args.pairs:
            p = rng.choice([2, 3, 4])
            c = OrbitConfig(p)
            m1 = _rand_module(rng, c)
            m2 = _rand_module(rng, c)
            if m1.dimension * m2.dimension > 40:
                continue
            try:
                res = tensor(m1, m2)
                od = oracle_decompose(
                    kronecker_tensor(realize(m1), realize(m2)),
                    seed=rng.randrange(10 ** 6))
            except NonSplitSpectrum:
                skipped += 1
                continue
            if not od.isomorphic(res.decomposition):
                print(f"MISMATCH\n  {m1!r}\n  {m2!r}\n"
                      f"  symbolic: {res.decomposition!r}\n"
                      f"  oracle:   {od!r}")
                return 5
            done += 1
        _emit(args, f"{done} pairs agree ({skipped} skipped: "
                    "spectrum not split over the working field)",
              {"pairs": done, "skipped": skipped, "agree": True})
        return 0
    if args.command == "selftest":
        from .selftest import run_all
        ok = run_all(quick=args.quick)
        return 0 if ok else 5
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 3
    except MathError as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return 4
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
