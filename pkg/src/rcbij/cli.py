"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 malformed input,
3 well-formed input outside the domain (inadmissible configuration, path not
in the crystal).
"""

import argparse
import json
import sys

from . import wire
from .bijection import combinatorial_r, phi, phi_inv
from .crystal_tableaux import DEFAULT_CAP, closure, path_elements, path_op
from .rigged_config import enumerate_all, enumerate_highest, is_admissible, rc_op
from .root_data import DynkinSpec
from .verify import check_pairs, run_battery, run_suite, SUITES

OK, FAILED, BAD_INPUT, OUT_OF_DOMAIN = 0, 1, 2, 3


class InputError(Exception):
    pass


class DomainError(Exception):
    pass


def parse_shape(text):
    """'2,2:3,2' -> ((2, 2), (3, 2))."""
    try:
        out = tuple(tuple(int(v) for v in part.split(",")) for part in text.split(":") if part.strip())
    except ValueError:
        raise InputError(f"bad shape {text!r}; expected r,s:r,s:...") from None
    if not out or any(len(x) != 2 for x in out):
        raise InputError(f"bad shape {text!r}; expected r,s:r,s:...")
    return out


def _spec(args, data=None):
    family = args.type or (data or {}).get("type")
    rank = args.rank or (data or {}).get("n")
    if family is None or rank is None:
        raise InputError("need --type and --rank (or type/n in the input)")
    if data is not None:
        if data.get("type") not in (None, family) or data.get("n") not in (None, rank):
            raise InputError("--type/--rank disagree with the input")
    try:
        return DynkinSpec(family, int(rank))
    except ValueError as err:
        raise InputError(str(err)) from None


def _shape(args, spec):
    if not args.shape:
        raise InputError("need --shape")
    shape = parse_shape(args.shape)
    for r, s in shape:
        if not 1 <= r <= spec.rank or s < 1:
            raise InputError(f"factor B^{r},{s} is not valid for {spec}")
    return shape


def _read_json(args):
    text = open(args.input).read() if args.input else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"malformed JSON: {err}") from None


def _read_rc(args):
    data = _read_json(args)
    spec = _spec(args, data)
    if args.shape and "shape" not in data:
        data["shape"] = [list(x) for x in parse_shape(args.shape)]
    try:
        rc = wire.rc_from_json(data, spec)
    except ValueError as err:
        raise InputError(str(err)) from None
    if args.shape and rc.shape != parse_shape(args.shape):
        raise InputError("--shape disagrees with the input")
    return rc


def _read_path(args):
    data = _read_json(args)
    spec = _spec(args, data)
    try:
        p = wire.path_from_json(data, spec)
    except ValueError as err:
        raise InputError(str(err)) from None
    if args.shape and p.shape != parse_shape(args.shape):
        raise InputError("--shape disagrees with the input")
    return p


def _emit(args, obj, text=None):
    if getattr(args, "human", False) and text is not None:
        print(text)
    else:
        print(json.dumps(obj, sort_keys=False))


def _to_path(rc):
    if not is_admissible(rc):
        raise DomainError("rigged configuration is not admissible")
    return phi(rc)


def _to_rc(p):
    try:
        return phi_inv(p)
    except ValueError as err:
        raise DomainError(f"path is not in the crystal: {err}") from None


def cmd_rc2path(args):
    p = _to_path(_read_rc(args))
    _emit(args, wire.path_to_json(p), wire.path_text(p))
    return OK


def cmd_path2rc(args):
    rc = _to_rc(_read_path(args))
    _emit(args, wire.rc_to_json(rc), wire.rc_text(rc))
    return OK


def _need_op(args):
    if args.op not in ("e", "f"):
        raise InputError("--op must be e or f")
    if args.index is None:
        raise InputError("--index is required")


def cmd_op(args):
    _need_op(args)
    if args.side == "rc":
        rc = _read_rc(args)
        _check_index(rc.spec, args.index)
        if not is_admissible(rc):
            raise DomainError("rigged configuration is not admissible")
        out = rc_op(rc, args.index, args.op)
        if out is None:
            print("null")
        else:
            _emit(args, wire.rc_to_json(out), wire.rc_text(out))
    else:
        p = _read_path(args)
        _check_index(p.spec, args.index)
        out = path_op(p, args.index, args.op)
        if out is None:
            print("null")
        else:
            _emit(args, wire.path_to_json(out), wire.path_text(out))
    return OK


def _check_index(spec, i):
    if not 1 <= i <= spec.rank:
        raise InputError(f"--index {i} out of range 1..{spec.rank}")


def cmd_rmatrix(args):
    p = _read_path(args)
    if len(p.factors) != 2:
        raise InputError("rmatrix needs a path with exactly two factors")
    _to_rc(p)
    q = combinatorial_r(p)
    _emit(args, wire.path_to_json(q), wire.path_text(q))
    return OK


def cmd_verify(args):
    suite = args.suite or "battery"
    if suite == "battery":
        if args.shape:
            spec = _spec(args)
            shape = _shape(args, spec)
            reports = [run_suite(name, spec, shape, args.cap) for name in SUITES
                       if name != "rmatrix" or len(shape) == 2]
        else:
            reports = run_battery(cap=args.cap)
    elif suite == "pairs":
        data = _read_json(args)
        try:
            pairs = [(wire.rc_from_json(d["rc"]), wire.path_from_json(d["path"])) for d in data]
        except (KeyError, TypeError, ValueError) as err:
            raise InputError(f"pairs input must be a list of {{rc, path}} objects: {err}") from None
        reports = [check_pairs(pairs)]
    elif suite in SUITES:
        spec = _spec(args)
        reports = [run_suite(suite, spec, _shape(args, spec), args.cap)]
    else:
        raise InputError(f"unknown suite {suite!r}; choose battery, pairs or one of {sorted(SUITES)}")
    body = {"passed": all(r.passed for r in reports), "reports": [r.to_json() for r in reports]}
    print(json.dumps(body, indent=1))
    return OK if body["passed"] else FAILED


def cmd_enumerate(args):
    spec = _spec(args)
    shape = _shape(args, spec)
    if args.side == "rc":
        items = enumerate_highest(spec, shape, cap=args.cap) if args.highest else enumerate_all(spec, shape, args.cap)
        for rc in items:
            _emit(args, wire.rc_to_json(rc), wire.rc_text(rc))
    else:
        items = path_elements(spec, shape, args.cap)
        if args.highest:
            items = [p for p in items if all(path_op(p, i, "e") is None for i in spec.nodes)]
        for p in items:
            _emit(args, wire.path_to_json(p), wire.path_text(p))
    return OK


def crystal_dot(spec, shape, side="path", cap=DEFAULT_CAP):
    """DOT text of the classical crystal graph, vertices in breadth-first order."""
    if side == "rc":
        nodes = enumerate_all(spec, shape, cap)
        step = lambda x, i: rc_op(x, i, "f")
        label = lambda x: json.dumps(wire.rc_to_json(x)["nu"])
    else:
        seeds = [p for p in path_elements(spec, shape, cap)
                 if all(path_op(p, i, "e") is None for i in spec.nodes)]
        step = lambda x, i: path_op(x, i, "f")
        nodes = closure(spec, seeds, step, cap)
        label = wire.path_text
    index = {x: k for k, x in enumerate(nodes)}
    lines = ["digraph crystal {"]
    for x, k in index.items():
        text = label(x).replace('"', '\\"')
        lines.append(f'  v{k} [label="{text}"];')
    for x, k in index.items():
        for i in spec.nodes:
            y = step(x, i)
            if y is not None:
                lines.append(f'  v{k} -> v{index[y]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args):
    spec = _spec(args)
    shape = _shape(args, spec)
    text = crystal_dot(spec, shape, args.side, args.cap)
    if args.dot_out:
        with open(args.dot_out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


COMMANDS = {
    "rc2path": cmd_rc2path,
    "path2rc": cmd_path2rc,
    "op": cmd_op,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "rmatrix": cmd_rmatrix,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="rcbij", description="Rigged configurations and KR crystal paths.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", choices=["A", "D"])
        p.add_argument("--rank", type=int)
        p.add_argument("--shape", help="tensor shape leftmost first, e.g. 2,2:3,2")
        p.add_argument("--input", help="read JSON from this file instead of stdin")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--human", action="store_true", help="print text instead of JSON")
        if name == "op":
            p.add_argument("--side", choices=["rc", "path"], default="path")
            p.add_argument("--op", choices=["e", "f"], required=True)
            p.add_argument("--index", type=int, required=True)
        if name in ("enumerate", "graph"):
            p.add_argument("--side", choices=["rc", "path"], default="path")
        if name == "enumerate":
            p.add_argument("--highest", action="store_true")
        if name == "verify":
            p.add_argument("--suite", default="battery")
        if name == "graph":
            p.add_argument("--dot-out")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return COMMANDS[args.command](args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return BAD_INPUT
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return OUT_OF_DOMAIN
    except (ValueError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return BAD_INPUT
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
