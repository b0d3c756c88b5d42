"""Command-line interface.

Exit codes: 0 on success, 2 on domain errors, 64 on usage errors.  With
--json-errors, domain errors are written to stderr as one JSON object.
All JSON output is canonical (sorted keys, compact separators) so that
fixed inputs yield byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import census, serialize
from .errors import ParameterError, WorkbenchError
from .mutation import is_mutable, mutate, mutation_path
from .quivers import build_higher_A_quiver, tensor_quiver
from .slices import construct_Ck, is_slice, slice_collisions, standard_slice
from .strip import apr_mutate, gamma_quiver, strip_category
from .subsets import Collection, CyclicSubset, first_intertwining_pair

USAGE_EXIT = 64
DOMAIN_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_element(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise ParameterError(f"cannot parse element {text!r}; expected e.g. 1,3,5,6")


def _read_collection(args) -> Collection:
    if getattr(args, "file", None):
        with open(args.file) as fh:
            doc = json.load(fh)
    else:
        doc = json.load(sys.stdin)
    return serialize.collection_from_dict(doc)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _quiver_output(quiver, fmt: str, extra: Optional[dict] = None) -> str:
    if fmt == "dot":
        return serialize.quiver_to_dot(quiver)
    doc = serialize.quiver_to_dict(quiver)
    if extra:
        doc.update(extra)
    return serialize.dumps(doc)


def _cmd_check(args) -> int:
    c = _read_collection(args)
    pair = first_intertwining_pair(c)
    doc = {"ok": pair is None}
    if pair is not None:
        doc["pair"] = [list(pair[0].elements), list(pair[1].elements)]
    _emit(serialize.dumps(doc))
    return 0


def _cmd_slice(args) -> int:
    if args.slice_cmd == "standard":
        _emit(serialize.dumps(serialize.collection_to_dict(standard_slice(args.n, args.l))))
        return 0
    c = _read_collection(args)
    cert = is_slice(c)
    if cert is not None:
        _emit(serialize.dumps({"slice": True, "certificate": cert.to_json()}))
    else:
        collisions = {
            str(i): [[list(a.elements), list(b.elements)] for a, b in pairs]
            for i, pairs in slice_collisions(c).items()
        }
        _emit(serialize.dumps({"slice": False, "collisions": collisions}))
    return 0


def _cmd_construct(args) -> int:
    if args.slice == "standard":
        t = standard_slice(args.n, args.l)
    else:
        t = _read_collection(args)
    result = construct_Ck(t, args.k, endpoints="check" if args.prime else "hat")
    _emit(serialize.dumps(serialize.collection_to_dict(result)))
    return 0


def _cmd_mutate(args) -> int:
    c = _read_collection(args)
    member = CyclicSubset.of(c.n, _parse_element(args.element))
    if args.probe:
        _emit(serialize.dumps(is_mutable(c, member).to_json()))
        return 0
    result = mutate(c, member, args.dir)
    _emit(serialize.dumps({"ok": True, "result": serialize.collection_to_dict(result)}))
    return 0


def _cmd_path(args) -> int:
    if args.standard:
        t = standard_slice(args.n, args.l)
    else:
        t = _read_collection(args)
    member = CyclicSubset.of(t.n, _parse_element(args.element))
    steps, result = mutation_path(t, member, args.k)
    _emit(
        serialize.dumps(
            {
                "steps": [
                    {"element": list(s.elements), "direction": d} for s, d in steps
                ],
                "result": serialize.collection_to_dict(result),
            }
        )
    )
    return 0


def _cmd_quiver(args) -> int:
    kind = args.kind
    if kind == "a":
        if args.m is None or args.d is None:
            raise ParameterError("quiver a needs --m and --d")
        _emit(_quiver_output(build_higher_A_quiver(args.m, args.d), args.format))
        return 0
    if args.n is None or args.k is None or args.l is None:
        raise ParameterError(f"quiver {kind} needs --n, --k and --l")
    if kind == "tensor":
        _emit(_quiver_output(tensor_quiver(args.n, args.k, args.l), args.format))
    elif kind == "gamma":
        _emit(_quiver_output(gamma_quiver(args.n, args.k, args.l), args.format))
    elif kind == "apr":
        _emit(_quiver_output(apr_mutate(args.n, args.k, args.l), args.format))
    elif kind == "strip":
        strip = strip_category(args.n, args.k, args.l)
        if args.format == "dot":
            from .quivers import LabeledQuiver

            quiver = LabeledQuiver(
                tuple(sorted(o.iota.elements for o in strip.objects)), strip.arrows
            )
            _emit(serialize.quiver_to_dot(quiver))
        else:
            _emit(serialize.dumps(serialize.strip_to_dict(strip)))
    return 0


def _cmd_enum(args) -> int:
    if args.enum_cmd == "maximal":
        found = census.enum_maximal_nonintertwining(args.n, args.l, max_atoms=args.max_atoms)
        doc = {
            "count": len(found),
            "sizes": sorted({len(c) for c in found}),
            "collections": [serialize.collection_to_dict(c) for c in found],
        }
        _emit(serialize.dumps(doc))
    elif args.enum_cmd == "subs-maximal":
        report = census.enum_maximal_non_l_intertwining(
            args.n, args.k, args.l, max_atoms=args.max_atoms
        )
        _emit(serialize.dumps(report.to_json()))
    elif args.enum_cmd == "slice-census":
        _emit(serialize.dumps(census.slice_census(args.n, args.l, max_atoms=args.max_atoms).to_json()))
    elif args.enum_cmd == "cross-validate":
        ns = list(range(4, args.n_max + 1))
        report = census.cross_validate(ns=ns)
        _emit(serialize.dumps(report))
        return 0 if report["passed"] else DOMAIN_EXIT
    return 0


def _cmd_serve(args) -> int:
    import os

    import uvicorn

    from .service import app

    port = int(os.environ.get("PORT", args.port))
    uvicorn.run(app, host=args.host, port=port)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="interlace", description=__doc__)
    parser.add_argument("--json-errors", action="store_true", help="emit domain errors as JSON on stderr")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="validate a collection read from stdin or --file")
    p.add_argument("--file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("slice", help="standard slice, or slice-check a collection")
    ssub = p.add_subparsers(dest="slice_cmd", required=True)
    ps = ssub.add_parser("standard")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--l", type=int, required=True)
    ps.set_defaults(fn=_cmd_slice)
    pc = ssub.add_parser("check")
    pc.add_argument("--file")
    pc.set_defaults(fn=_cmd_slice)

    p = sub.add_parser("construct", help="C_k (or C'_k with --prime) of a slice")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--slice", default="standard", help="'standard' or '-' to read a slice from stdin/--file")
    p.add_argument("--prime", action="store_true")
    p.add_argument("--file")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("mutate", help="single mutation step on a collection")
    p.add_argument("--dir", choices=["+", "-"], required=True)
    p.add_argument("--element", required=True, help="comma-separated, e.g. 1,3,5,6")
    p.add_argument("--probe", action="store_true", help="report mutability instead of mutating")
    p.add_argument("--file")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("path", help="mutation path from C_k of a slice")
    p.add_argument("--element", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--standard", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--file")
    p.set_defaults(fn=_cmd_path)

    p = sub.add_parser("quiver", help="emit a labeled quiver")
    p.add_argument("kind", choices=["a", "tensor", "gamma", "strip", "apr"])
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(fn=_cmd_quiver)

    p = sub.add_parser("enum", help="brute-force oracle runs")
    esub = p.add_subparsers(dest="enum_cmd", required=True)
    pm = esub.add_parser("maximal")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--l", type=int, required=True)
    pm.add_argument("--max-atoms", type=int, default=40)
    pm.set_defaults(fn=_cmd_enum)
    pk = esub.add_parser("subs-maximal")
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--l", type=int, required=True)
    pk.add_argument("--max-atoms", type=int, default=60)
    pk.set_defaults(fn=_cmd_enum)
    pe = esub.add_parser("slice-census")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--l", type=int, required=True)
    pe.add_argument("--max-atoms", type=int, default=40)
    pe.set_defaults(fn=_cmd_enum)
    pv = esub.add_parser("cross-validate")
    pv.add_argument("--n-max", type=int, default=8)
    pv.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.fn(args)
    except WorkbenchError as err:
        if args.json_errors:
            sys.stderr.write(json.dumps(err.to_json(), sort_keys=True) + "\n")
        else:
            sys.stderr.write(f"error [{err.code}]: {err.detail}\n")
        return DOMAIN_EXIT
    except json.JSONDecodeError as err:
        sys.stderr.write(f"error [malformed-json]: {err}\n")
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
