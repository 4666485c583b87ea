"""Command-line front end.

Every command reads a group (builtin name or JSON file), runs one of the
library computations and writes a deterministic report: JSON with sorted
keys, DOT for skeletons, or plain text.  Exit codes: 0 success, 1 assertion
failure (a4-demo), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .categories import (
    build_category,
    hom_chain_report,
    quillen_category,
    skeleton,
    witness_scan,
)
from .colimits import colim_points, component_count, filtration_tower
from .demo import DemoFailure, a4_demo
from .elemab import enumerate_elem_abelians, p_rank
from .fqfield import FqError
from .groups import GroupError
from .library import (
    builtin_names,
    bundled_library,
    load_builtin,
    load_group_file,
)
from .polyfp import parse_poly
from .subrings import (
    SubringPresentation,
    UnsupportedGroupError,
    build_CR,
    sylow_elem_abelian,
    weyl_action,
)

_PRIMES = (2, 3, 5, 7)


class UsageError(ValueError):
    pass


def _load_group(args):
    if args.group is None:
        raise UsageError("a group is required (--group NAME_OR_PATH)")
    path = Path(args.group)
    if path.exists():
        return load_group_file(path)
    if args.group in builtin_names():
        return load_builtin(args.group)
    raise UsageError(
        "group %r is neither a file nor a builtin (builtins: %s)"
        % (args.group, ", ".join(builtin_names()))
    )


def _emit(args, text):
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload):
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _parse_level(value):
    if value in ("inf", "oo", "quillen"):
        return None
    n = int(value)
    if n < 0:
        raise UsageError("level must be >= 0 or 'inf'")
    return n


def _category_for(group, p, level):
    if level is None:
        return quillen_category(group, p)
    return build_category(group, p, level)


# -- commands -------------------------------------------------------------------


def cmd_group_info(args):
    group = _load_group(args)
    info = {
        "name": group.name,
        "order": group.order,
        "abelian": group.is_abelian(),
        "exponent": group.exponent(),
        "center_order": len(group.center()),
        "conjugacy_classes": group.conjugacy_class_count(),
        "p_ranks": {
            str(p): p_rank(group, p) for p in _PRIMES if group.order % p == 0
        },
    }
    _emit_json(args, info)
    return 0


def cmd_elemab(args):
    group = _load_group(args)
    subs = enumerate_elem_abelians(group, args.p)
    payload = {
        "group": group.name,
        "p": args.p,
        "p_rank": max(v.rank for v in subs),
        "subgroups": [
            {
                "rank": v.rank,
                "elements": list(v.sorted_elements()),
                "basis": list(v.basis),
                "labels": [group.labels[b] for b in v.basis],
            }
            for v in subs
        ],
    }
    _emit_json(args, payload)
    return 0


def cmd_category(args):
    group = _load_group(args)
    cat = _category_for(group, args.p, args.n)
    report = skeleton(cat)
    if args.format == "dot":
        _emit(args, report.to_dot())
        return 0
    payload = {
        "group": group.name,
        "p": args.p,
        "level": "inf" if args.n is None else args.n,
        "objects": len(cat.objects),
        "morphisms": cat.morphism_count(),
        "skeleton": report.to_dict(),
    }
    if args.format == "text":
        lines = ["%s at p=%d, level %s" % (group.name, args.p, payload["level"])]
        for c in report.classes:
            lines.append(
                "  class rank=%d |Aut|=%d (x%d)" % (c.rank, c.aut_order, len(c.members))
            )
        for e in report.edges:
            lines.append(
                "  edge %d->%d: %d morphisms, orbits %s"
                % (e.source, e.target, e.hom_size, list(e.orbits))
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, payload)
    return 0


def cmd_stab(args):
    group = _load_group(args)
    report = hom_chain_report(group, args.p)
    _emit_json(args, {"group": group.name, "p": args.p, **report.to_dict()})
    return 0


def cmd_colim(args):
    group = _load_group(args)
    if args.tower:
        tower = filtration_tower(group, args.p, args.q)
        payload = {"group": group.name, "p": args.p, **tower.to_dict()}
    else:
        cat = _category_for(group, args.p, args.n)
        res = colim_points(cat, args.q)
        payload = {
            "group": group.name,
            "p": args.p,
            "level": "inf" if args.n is None else args.n,
            "components": component_count(cat),
            **res.to_dict(),
        }
    _emit_json(args, payload)
    return 0


def cmd_cr(args):
    group = _load_group(args)
    sylow = sylow_elem_abelian(group, 2)
    weyl = weyl_action(group, sylow)
    if args.generators:
        doc = json.loads(Path(args.generators).read_text())
        gens = [parse_poly(s, 2, sylow.rank) for s in doc["generators"]]
        name = doc.get("name", Path(args.generators).stem)
    else:
        gens, name = [], "unit"
    presentation = SubringPresentation(sylow, weyl, gens, name=name)
    cat = build_CR(group, presentation)
    rank = max(v.rank for v in cat.objects)
    comparisons = {}
    for n in range(0, rank + 1):
        comparisons["A^(%d)" % n] = cat.equals(build_category(group, 2, n))
    comparisons["quillen"] = cat.equals(quillen_category(group, 2))
    payload = {
        "group": group.name,
        "subring": name,
        "generators": [g.render() for g in gens],
        "morphisms": cat.morphism_count(),
        "equals": comparisons,
        "skeleton": skeleton(cat).to_dict(),
    }
    _emit_json(args, payload)
    return 0


def cmd_invariants(args):
    group = _load_group(args)
    sylow = sylow_elem_abelian(group, args.p)
    weyl = weyl_action(group, sylow)
    from .polyfp import invariant_basis

    payload = {
        "group": group.name,
        "p": args.p,
        "sylow_rank": sylow.rank,
        "weyl_order": weyl.order(),
        "invariants": {
            str(d): [f.render() for f in invariant_basis(weyl, d)]
            for d in range(0, args.max_degree + 1)
        },
    }
    _emit_json(args, payload)
    return 0


def cmd_witness(args):
    directory = Path(args.library) if args.library else None
    library = bundled_library(max_order=args.max_order, directory=directory)
    result = witness_scan(library, args.p, args.n)
    _emit_json(args, result)
    return 0


def cmd_a4_demo(args):
    try:
        report = a4_demo()
    except DemoFailure as exc:
        _emit_json(args, {"ok": False, "error": str(exc)})
        return 1
    if args.format == "text":
        lines = ["A_4 worked example"]
        lines.append("  F(s,t) = %s" % report["fgl"])
        lines.append("  [2](x) = %s" % report["two_series"])
        lines.append("  Mackey terms: %s" % ", ".join(report["mackey_terms"]))
        lines.append("  reduced: %s" % report["reduced"])
        lines.append(
            "  degree-3 coefficient of b1ob1ob1 = %s" % report["b1_cube_degree3"]
        )
        lines.append(
            "  eta^2 in Chern subring: %s" % report["eta_sq_in_chern_subring"]
        )
        lines.append("  colim sizes q=4: %s, q=2: %s"
                     % (report["colim"]["q4_sizes"], report["colim"]["q2_sizes"]))
        lines.append("  all assertions passed")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, report)
    return 0


# -- argument parsing -------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="chromcat",
        description="chromatic categories of elementary abelian subgroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, group=True, prime=True, output=True, fmt=("json", "text")):
        if group:
            sp.add_argument("--group", "-g", help="builtin name or JSON file path")
        if prime:
            sp.add_argument("-p", type=int, default=2, help="prime (default 2)")
        if output:
            sp.add_argument("--output", "-o", help="write report to this path")
        if fmt:
            sp.add_argument("--format", choices=fmt, default=fmt[0])

    sp = sub.add_parser("group-info", help="order, center, classes, p-ranks")
    common(sp, prime=False)
    sp.set_defaults(func=cmd_group_info)

    sp = sub.add_parser("elemab", help="list elementary abelian p-subgroups")
    common(sp)
    sp.set_defaults(func=cmd_elemab)

    sp = sub.add_parser("category", help="skeleton of the level-n category")
    common(sp, fmt=("json", "dot", "text"))
    sp.add_argument("-n", type=_parse_level, default=None, help="level (int or 'inf')")
    sp.set_defaults(func=cmd_category)

    sp = sub.add_parser("stab", help="stabilization rank and hom-chain strictness")
    common(sp)
    sp.set_defaults(func=cmd_stab)

    sp = sub.add_parser("colim", help="F_q-points of the colimit")
    common(sp)
    sp.add_argument("-n", type=_parse_level, default=None)
    sp.add_argument("-q", type=int, required=True, help="field size, a power of p")
    sp.add_argument("--tower", action="store_true", help="full filtration tower")
    sp.set_defaults(func=cmd_colim)

    sp = sub.add_parser("cr", help="subring category C_R from a generator file")
    common(sp, prime=False)
    sp.add_argument(
        "--generators",
        help="JSON file {'generators': [poly strings], 'name': str}; empty for the unit subring",
    )
    sp.set_defaults(func=cmd_cr)

    sp = sub.add_parser("invariants", help="Weyl-invariant bases per degree")
    common(sp)
    sp.add_argument("--max-degree", type=int, default=6)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("witness", help="scan a library for A^(n) != A^(n+1)")
    common(sp, group=False)
    sp.add_argument("-n", type=int, default=1)
    sp.add_argument("--library", help="directory of group JSON files (default: bundled)")
    sp.add_argument("--max-order", type=int, default=64)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("a4-demo", help="run the A_4 worked example")
    common(sp, group=False, prime=False)
    sp.set_defaults(func=cmd_a4_demo)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupError, UnsupportedGroupError, FqError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
