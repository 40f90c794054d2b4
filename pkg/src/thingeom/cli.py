"""Command-line front end.

Exit status: 0 on success, 1 on usage or parse errors, 2 when an invariant
or a verification check fails.  ``--json`` prints the machine-readable
report (keys: ``schema_version``, ``command``, ``input_digest``,
``result``).  Output is fully deterministic.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import textio
from .battery import classify_double_covers, classify_oriented
from .covering import (
    Covering,
    OrientedCovering,
    clifford_set,
    covering_isomorphism,
    discriminant,
    orient,
    oriented_isomorphism,
    parity_relation_is_partition,
    sign_law_holds,
)
from .d4 import CONVENTIONS, c1_inverse_gr1, gr1, triality_orbit
from .group_core import InvariantError, SizeLimitError, conjugacy_classes, format_cycles
from .gset import GSet, classify_gsets, is_isomorphic, orbits
from .split_algebra import product_compatibility_check, run_all_checks

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, result):
        super().__init__("verification failed")
        self.result = result


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path: str, *kinds: str):
    obj = textio.load(path)
    kind = textio.SUFFIXES[Path(path).suffix]
    if kinds and kind not in kinds:
        raise UsageError(f"{path}: expected a {' or '.join(kinds)} file, got {kind}")
    return obj


def _gen_actions(C) -> list[str]:
    G = C.gset.group
    return ["swap" if C.swaps_classes(g) else "fix" for g in G.generators]


def _covering_summary(cov: Covering) -> dict[str, Any]:
    return {
        "group_order": cov.group.order,
        "total_size": cov.total.size,
        "base_size": cov.n,
        "degree": cov.degree,
        "text": textio.format_covering(cov),
    }


def _oriented_summary(oc: OrientedCovering) -> dict[str, Any]:
    d = _covering_summary(oc.covering)
    d["orientation"] = oc.anchor_label
    d["text"] = textio.format_oriented(oc)
    return d


# -- commands ----------------------------------------------------------------

def cmd_verify(args):
    obj = _load(args.file)
    if isinstance(obj, OrientedCovering):
        return {"kind": "oriented", **_oriented_summary(obj)}
    if isinstance(obj, Covering):
        return {"kind": "covering", **_covering_summary(obj)}
    if isinstance(obj, GSet):
        return {"kind": "gset", "group_order": obj.group.order, "size": obj.size,
                "orbits": orbits(obj)}
    return {"kind": "group", "order": obj.order, "degree": obj.degree,
            "conjugacy_classes": len(conjugacy_classes(obj)),
            "generators": [format_cycles(p) for p in obj.gen_perms]}


def _as_covering(obj) -> Covering:
    return obj.covering if isinstance(obj, OrientedCovering) else obj


def cmd_clifford(args):
    cov = _as_covering(_load(args.file, "covering", "oriented"))
    C = clifford_set(cov)
    return {
        "base_size": C.n,
        "count": len(C),
        "sections": [{"index": i, "mask": C.sections[i], "points": list(C.points(i))}
                     for i in range(len(C))],
        "orbits": orbits(C.gset),
        "complement": list(C.complement),
        "classes": [list(b) for b in C.classes],
        "class_sizes": [len(b) for b in C.classes],
        "delta_action": _gen_actions(C),
        "orientable": C.is_orientable,
    }


def cmd_discriminant(args):
    cov = _as_covering(_load(args.file, "covering", "oriented"))
    C = clifford_set(cov)
    D = discriminant(C)
    result = {
        "blocks": [list(b) for b in D.blocks],
        "delta_action": _gen_actions(C),
        "swapping_elements": list(D.swapping_elements),
        "sign_law": sign_law_holds(C),
        "parity_partition": parity_relation_is_partition(C),
    }
    if not (result["sign_law"] and result["parity_partition"]):
        raise VerificationFailed(result)
    return result


def cmd_orient(args):
    cov = _as_covering(_load(args.file, "covering", "oriented"))
    oc = orient(cov, args.label)
    if oc is None:
        return {"orientable": False}
    return {"orientable": True, **_oriented_summary(oc)}


def cmd_gr1(args):
    X = _load(args.file, "gset")
    oc = gr1(X)
    return {"class_sizes": [len(b) for b in oc.clifford.classes], **_oriented_summary(oc)}


def cmd_c1(args):
    oc = _load(args.file, "oriented")
    X = c1_inverse_gr1(oc)
    return {"size": X.size, "orbits": orbits(X), "text": textio.format_gset(X)}


def cmd_triality(args):
    oc = _load(args.file, "oriented")
    orbit = triality_orbit(oc, args.steps, args.convention)
    steps = []
    for k, (o, w) in enumerate(zip(orbit.objects, orbit.witnesses)):
        steps.append({
            "step": k,
            **_oriented_summary(o),
            "isomorphic_to_input": w is not None,
            "witness": None if w is None else {"total": list(w.total_map), "base": list(w.base_map)},
        })
    return {"steps": steps, "orbit_length": orbit.orbit_length}


def cmd_iso(args):
    a, b = _load(args.first), _load(args.second)
    if type(a) is not type(b):
        raise UsageError("both files must have the same type")
    if isinstance(a, GSet):
        f = is_isomorphic(a, b)
        return {"isomorphic": f is not None, "witness": None if f is None else list(f.mapping)}
    if isinstance(a, OrientedCovering):
        w = oriented_isomorphism(a, b)
    elif isinstance(a, Covering):
        w = covering_isomorphism(a, b)
    else:
        raise UsageError("iso compares G-sets or coverings")
    return {"isomorphic": w is not None,
            "witness": None if w is None else {"total": list(w.total_map), "base": list(w.base_map)}}


def cmd_classify(args):
    G = _load(args.group, "group")
    if args.size < 1:
        raise UsageError("--size must be positive")
    if args.kind == "gset":
        reps = [textio.format_gset(X) for X in classify_gsets(G, args.size, workers=args.threads)]
    elif args.kind == "double-cover":
        reps = [textio.format_covering(c) for c in classify_double_covers(G, args.size, args.threads)]
    else:
        reps = [textio.format_oriented(o) for o in classify_oriented(G, args.size, args.threads)]
    return {"kind": args.kind, "group_order": G.order, "size": args.size,
            "count": len(reps), "representatives": reps}


def cmd_algebra(args):
    cov = _as_covering(_load(args.file, "covering", "oriented"))
    reports = [r.as_dict() for r in run_all_checks(cov)]
    if args.with_file:
        other = _as_covering(_load(args.with_file, "covering", "oriented"))
        reports.append(product_compatibility_check(cov, other).as_dict())
    result = {"base_size": cov.n, "checks": reports,
              "passed": all(r["passed"] for r in reports)}
    if not result["passed"]:
        raise VerificationFailed(result)
    return result


# -- plumbing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--threads", type=int, default=1, help="internal worker threads")

    p = _Parser(prog="thingeom", description="Thin G-sets, double coverings, Clifford sets and triality.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("verify", cmd_verify, "parse and validate a file").add_argument("file")
    add("clifford", cmd_clifford, "sections, classes and orbits of a double covering").add_argument("file")
    add("discriminant", cmd_discriminant, "discriminant classes and the sign law").add_argument("file")
    sp = add("orient", cmd_orient, "orientability and an orientation")
    sp.add_argument("file")
    sp.add_argument("--label", type=int, choices=(1, 2))
    add("gr1", cmd_gr1, "oriented 6/3 covering of 2-subsets of a 4-point G-set").add_argument("file")
    add("c1", cmd_c1, "class-1 sections of an oriented 6/3 covering").add_argument("file")
    sp = add("triality", cmd_triality, "iterate C1+ on an oriented 8/4 covering")
    sp.add_argument("file")
    sp.add_argument("--steps", type=int, default=3)
    sp.add_argument("--convention", choices=sorted(CONVENTIONS), default="standard",
                    help=argparse.SUPPRESS)
    sp = add("iso", cmd_iso, "isomorphism test with witness")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = add("classify", cmd_classify, "isomorphism classes over a group")
    sp.add_argument("--group", required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--kind", choices=("gset", "double-cover", "oriented"), default="gset")
    sp = add("algebra", cmd_algebra, "split Clifford algebra verification")
    sp.add_argument("file")
    sp.add_argument("--with", dest="with_file")
    return p


def _digest(paths: Sequence[str]) -> str:
    h = hashlib.sha256()
    for path in paths:
        try:
            h.update(Path(path).read_bytes())
        except OSError:
            pass
    return h.hexdigest()


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, str) and "\n" in v:
                lines.append(f"{pad}{k}: |")
                lines += [f"{pad}  {ln}" for ln in v.rstrip("\n").split("\n")]
            elif (isinstance(v, dict) and v) or (isinstance(v, list) and any(
                    isinstance(x, (dict, list)) or (isinstance(x, str) and "\n" in x) for x in v)):
                lines.append(f"{pad}{k}:")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines += _render(item, indent + 1)
            elif isinstance(item, str) and "\n" in item:
                lines.append(f"{pad}- |")
                lines += [f"{pad}    {ln}" for ln in item.rstrip("\n").split("\n")]
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def _input_paths(args) -> list[str]:
    return [v for k in ("file", "first", "second", "group", "with_file")
            if (v := getattr(args, k, None))]


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    code = 0
    try:
        result = args.func(args)
    except VerificationFailed as exc:
        result, code = exc.result, 2
    except InvariantError as exc:
        result, code = {"error": "invariant", "message": str(exc)}, 2
    except (UsageError, textio.ParseError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": _echo(args),
        "input_digest": _digest(_input_paths(args)),
        "result": result,
    }
    if args.json:
        out.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n".join(_render(report)) + "\n")
    return code


def _echo(args) -> dict[str, Any]:
    """Parsed arguments minus those that must not affect the output."""
    skip = {"func", "threads", "json", "command"}
    return {"name": args.command,
            "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip}}


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
