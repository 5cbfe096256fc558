"""Command-line front end.

Subcommands: analyze, norms, witness, check, examples.  All numeric output
defaults to exact rational strings; --float adds decimal approximations.
Exit codes: 0 success, 1 check violation, 2 input error, 3 precondition
unsatisfied (finite codimension, empty complement).  Identical invocations
(flags, files, seed) produce byte-identical output; ALGNORM_SEED overrides
the default seed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (AlgnormError, BoundedFunctional, EmptyComplement,
                     FiniteCodimension, FlagError, NotAssociative, ParseError,
                     UnknownEntry)
from .scalars import Magnitude, format_rational, parse_rational
from .algebra import Element, spec_from_json, format_element
from .analysis import analyze_algebra
from .functionals import corollary_phi_n, theorem_phi
from .norms import BASE_NORMS, L1, NormSpec, eval_norm, inequivalence_witness
from .verify import SamplerConfig, run_suite
from . import gallery

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})")


def _load_spec(path: str):
    return spec_from_json(_load_json(path))


def _load_elements(path: str):
    obj = _load_json(path)
    if isinstance(obj, list):
        return [Element.from_json(o) for o in obj]
    if isinstance(obj, dict) and "elements" in obj:
        return [Element.from_json(o) for o in obj["elements"]]
    if isinstance(obj, dict) and "coeffs" in obj:
        return [Element.from_json(obj)]
    raise ParseError(f"{path}: expected an element object, a list of them, "
                     "or {\"elements\": [...]}")


def _emit_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_table(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in obj:
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _emit_table(v, indent + 1)
            else:
                print(f"{pad}{k}: {_scalar_str(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                _emit_table(v, indent)
                print(f"{pad}-")
            else:
                print(f"{pad}- {_scalar_str(v)}")
    else:
        print(f"{pad}{_scalar_str(obj)}")


def _scalar_str(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _magnitude_json(m: Magnitude, with_float: bool):
    out = {}
    if m.exact is not None:
        out["exact"] = format_rational(m.exact)
    elif m.exact_sq is not None:
        out["exact_sq"] = format_rational(m.exact_sq)
    if with_float or m.exact is None:
        out["approx"] = m.approx
    return out


def _default_seed() -> int:
    env = os.environ.get("ALGNORM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise FlagError(f"ALGNORM_SEED must be an integer, got {env!r}")
    return 42


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    spec = _load_spec(args.spec)
    report = analyze_algebra(spec)
    if args.float:
        cert = report["dsap"]["certificate"]
        if "sup" in cert:
            try:
                cert["sup_approx"] = float(parse_rational(cert["sup"]))
            except ValueError:
                pass  # non-rational sup stays as reported
    if args.format == "json":
        _emit_json(report)
    else:
        _emit_table(report)
    return EXIT_OK


def _parse_functional(spec, text: str):
    if text == "theorem":
        return theorem_phi(spec)
    if text.startswith("corollary:"):
        try:
            piece = int(text.split(":", 1)[1])
        except ValueError:
            raise FlagError(f"bad functional {text!r}")
        if piece < 1:
            raise FlagError("corollary pieces start at 1")
        return corollary_phi_n(spec, piece)
    raise FlagError(f"unknown functional {text!r}; use theorem or corollary:<n>")


def _cmd_norms(args) -> int:
    spec = _load_spec(args.spec)
    f = _parse_functional(spec, args.functional)
    elements = _load_elements(args.eval)
    base_spec = NormSpec(args.base)
    p_spec = NormSpec(args.base, f)
    rows = []
    for e in elements:
        phi_val = f.eval(e)
        rows.append({
            "element": format_element(spec, e),
            "base": _magnitude_json(eval_norm(base_spec, e), args.float),
            "phi": {"re": format_rational(phi_val.re),
                    "im": format_rational(phi_val.im)},
            "p": _magnitude_json(eval_norm(p_spec, e), args.float),
        })
    out = {"base_norm": args.base, "functional": f.label(), "values": rows}
    if args.format == "json":
        _emit_json(out)
    else:
        _emit_table(out)
    return EXIT_OK


def _cmd_witness(args) -> int:
    spec = _load_spec(args.spec)
    if args.m == args.n:
        raise FlagError("--m and --n must differ")
    report = inequivalence_witness(spec, args.m, args.n, args.k_max,
                                   base=args.base)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        sys.stdout.write(report.to_csv())
    return EXIT_OK


def _cmd_check(args) -> int:
    spec = _load_spec(args.spec)
    cfg = SamplerConfig(seed=args.seed, trials=args.trials)
    suite = run_suite(cfg, negative_control=args.negative_control,
                      families=[(os.path.basename(args.spec), spec)])
    if args.format == "json":
        _emit_json(suite.to_json())
    else:
        for line in suite.human_lines():
            print(line)
    if args.negative_control:
        return EXIT_VIOLATION  # controlled failure (or rejected-vacuous)
    return EXIT_OK if suite.passed else EXIT_VIOLATION


def _cmd_examples(args) -> int:
    if args.list:
        entries = gallery.list_entries()
        out = [{"id": e.id, "symbolic": e.symbolic, "summary": e.summary,
                "params": e.params_doc or None} for e in entries]
        if args.format == "json":
            _emit_json(out)
        else:
            for e in out:
                kind = "doc " if e["symbolic"] else "calc"
                print(f"{e['id']:28s} [{kind}] {e['summary']}")
                if e["params"]:
                    print(f"{'':28s}        params: {e['params']}")
        return EXIT_OK
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.N is not None:
        params["N"] = args.N
    report = gallery.run_entry(args.run, params)
    if args.format == "json":
        _emit_json(report)
    else:
        _emit_table(report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="algnorm",
        description="Square subalgebras, discontinuous functionals and "
                    "inequivalent algebra norms on concrete algebras, "
                    "in exact arithmetic.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="span, codimension, identity and "
                                       "functional analysis of an algebra")
    p.add_argument("spec", help="algebra spec JSON file")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--float", action="store_true",
                   help="add decimal approximations")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("norms", help="evaluate base norm, phi and p on elements")
    p.add_argument("spec")
    p.add_argument("--functional", required=True,
                   help="theorem or corollary:<n>")
    p.add_argument("--eval", required=True, metavar="ELEMENTS",
                   help="element file (one element, a list, or {elements: []})")
    p.add_argument("--base", choices=BASE_NORMS, default=L1)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--float", action="store_true")
    p.set_defaults(fn=_cmd_norms)

    p = sub.add_parser("witness", help="pairwise inequivalence witness table")
    p.add_argument("spec")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, default=10, dest="k_max")
    p.add_argument("--base", choices=BASE_NORMS, default=L1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("check", help="run the verification suite on an algebra")
    p.add_argument("spec")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--negative-control", action="store_true",
                   dest="negative_control",
                   help="also run the deliberately broken functional; "
                        "the run then fails by design")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("examples", help="list or run the built-in gallery")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--run", metavar="ID")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=_cmd_examples)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "seed", None) is None and args.command == "check":
        try:
            args.seed = _default_seed()
        except FlagError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.fn(args)
    except (FiniteCodimension, EmptyComplement, BoundedFunctional) as exc:
        print(f"precondition unsatisfied: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, FlagError, NotAssociative, UnknownEntry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AlgnormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
