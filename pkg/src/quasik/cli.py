"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 closure cap
exceeded. JSON output is deterministic byte-for-byte for a given input.
"""

import argparse
import os
import sys

from . import jsonio
from .groups import ClosureCapExceeded, GSet, commuting_tuples
from .jsonio import InputError
from .loopspace import lambda_skeleton
from .qtheory import qk_compute, tate_export
from .verify import run_suite


def _load_group(path):
    if path is None:
        raise InputError("a group file is required (-g/--group)")
    return jsonio.load_group_file(path)


def _load_gset(group, path):
    if path is None:
        return GSet.point(group)
    return jsonio.load_gset_file(path, group)


def _emit(payload, fmt, table_fn):
    if fmt == "table":
        sys.stdout.write(table_fn(payload))
    else:
        sys.stdout.write(jsonio.dumps(payload))


def _classes_table(payload):
    lines = ["%-6s %-6s %-8s %s" % ("class", "size", "order", "rep")]
    for i, c in enumerate(payload["classes"]):
        lines.append("%-6d %-6d %-8d %s"
                     % (i, c["size"], c["element_order"],
                        c["representative"]))
    return "\n".join(lines) + "\n"


def cmd_classes(args):
    G = _load_group(args.group)
    _emit(jsonio.classes_to_json(G), args.format, _classes_table)
    return 0


def _tuples_table(payload):
    lines = ["%d commuting %d-tuples up to conjugacy"
             % (payload["count"], payload["n"])]
    for t in payload["tuples"]:
        lines.append("  " + " | ".join(str(r) for r in t))
    return "\n".join(lines) + "\n"


def cmd_tuples(args):
    G = _load_group(args.group)
    tuples = commuting_tuples(G, args.n)
    _emit(jsonio.tuples_to_json(G, args.n, tuples), args.format,
          _tuples_table)
    return 0


def _ring_table(payload):
    lines = ["QK_%d over |G|=%d on %d points: rank %d, %d components"
             % (payload["n"], payload["group"]["order"],
                payload["gset"]["points"],
                payload["total_rank"], len(payload["components"]))]
    for i, comp in enumerate(payload["components"]):
        lines.append("  comp %d: orbit size %d, stabilizer order %d, rank %d"
                     % (i, comp["orbit_size"], comp["stabilizer_order"],
                        len(comp["basis"])))
        for b in comp["basis"]:
            qd = ",".join(b["q_degree"]) or "-"
            lines.append("    chi deg %d  q=(%s)" % (b["char_degree"], qd))
    return "\n".join(lines) + "\n"


def cmd_qk(args):
    G = _load_group(args.group)
    X = _load_gset(G, args.gset)
    ring = qk_compute(G, X, args.n)
    _emit(jsonio.ring_to_json(ring), args.format, _ring_table)
    return 0


def _skeleton_table(payload):
    lines = []
    for c in payload["components"]:
        lines.append("sigma=%s rep=%d orbit=%d stab=%d"
                     % (c["sigma"], c["orbit_rep"], c["orbit_size"],
                        c["stabilizer_order"]))
    return "\n".join(lines) + "\n"


def cmd_skeleton(args):
    G = _load_group(args.group)
    X = _load_gset(G, args.gset)
    skel = lambda_skeleton(G, X, args.n)
    _emit(jsonio.skeleton_to_json(skel), args.format, _skeleton_table)
    return 0


def cmd_export_tate(args):
    G = _load_group(args.group)
    X = _load_gset(G, args.gset)
    ring = qk_compute(G, X, 1)
    sys.stdout.write(jsonio.dumps(tate_export(ring)))
    return 0


def _corpus_from_dir(path):
    names = sorted(f for f in os.listdir(path) if f.endswith(".json"))
    if not names:
        raise InputError("no .json group files in %r" % path)
    out = {}
    for fname in names:
        out[fname[:-5]] = jsonio.load_group_file(os.path.join(path, fname))
    return out


def cmd_verify(args):
    groups = _corpus_from_dir(args.corpus) if args.corpus else None
    results = run_suite(args.suite, groups=groups, fast=args.fast)
    failed = False
    for res in results:
        sys.stdout.write(res.summary() + "\n")
        if not res.passed:
            failed = True
            shown = res.failures if args.verbose else res.failures[:5]
            for msg in shown:
                sys.stdout.write("    " + msg + "\n")
            if len(res.failures) > len(shown):
                sys.stdout.write("    ... %d more\n"
                                 % (len(res.failures) - len(shown)))
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="quasik",
        description="exact quasi-theory rings over finite permutation groups")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, gset=False, n=False):
        sp.add_argument("-g", "--group", metavar="FILE",
                        help="group JSON file (degree + generators)")
        if gset:
            sp.add_argument("-x", "--gset", metavar="FILE",
                            help="G-set JSON file (default: one point)")
        if n:
            sp.add_argument("-n", type=int, default=1,
                            help="number of deformation directions")
        sp.add_argument("--format", choices=("json", "table"),
                        default="json")

    sp = sub.add_parser("classes", help="conjugacy classes")
    add_common(sp)
    sp.set_defaults(fn=cmd_classes)

    sp = sub.add_parser("tuples", help="commuting tuples up to conjugacy")
    add_common(sp, n=True)
    sp.set_defaults(fn=cmd_tuples)

    sp = sub.add_parser("qk", help="compute the ring and its basis")
    add_common(sp, gset=True, n=True)
    sp.set_defaults(fn=cmd_qk)

    sp = sub.add_parser("skeleton", help="component skeleton only")
    add_common(sp, gset=True, n=True)
    sp.set_defaults(fn=cmd_skeleton)

    sp = sub.add_parser("export-tate", help="n=1 completed-theory table")
    add_common(sp, gset=True)
    sp.set_defaults(fn=cmd_export_tate)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help="suite name or 'all'")
    sp.add_argument("--corpus", metavar="DIR",
                    help="directory of group JSON files (default: built-in)")
    sp.add_argument("--fast", action="store_true",
                    help="reduced parameters for a quick pass")
    sp.add_argument("--verbose", action="store_true",
                    help="print every failure, not just the first few")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except ClosureCapExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except KeyError as exc:
        if args.command == "verify":
            sys.stderr.write("error: %s\n" % exc.args[0])
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())
