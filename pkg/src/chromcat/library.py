"""Loading permutation groups from JSON files and the bundled library.

A group file is ``{"name": str, "degree": int, "generators": [[int, ...]]}``
with 0-indexed image arrays.  The bundled library ships as data files next to
this module so a witness scan can be extended by dropping files in a
directory.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .groups import DEFAULT_ORDER_CAP, FiniteGroup, GroupError, group_from_permutations

LIBRARY_DIR = Path(__file__).parent / "library"


def load_group_data(data: dict, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    try:
        name = data["name"]
        degree = data["degree"]
        generators = data["generators"]
    except (KeyError, TypeError) as exc:
        raise GroupError("group document needs name, degree, generators") from exc
    return group_from_permutations(degree, generators, name=name, order_cap=order_cap)


def load_group_file(path, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GroupError("malformed group file %s: %s" % (path, exc)) from exc
    return load_group_data(data, order_cap=order_cap)


def builtin_names() -> list[str]:
    return sorted(p.stem for p in LIBRARY_DIR.glob("*.json"))


def load_builtin(name: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    path = LIBRARY_DIR / (name + ".json")
    if not path.exists():
        raise GroupError(
            "unknown builtin group %r (have: %s)" % (name, ", ".join(builtin_names()))
        )
    return load_group_file(path, order_cap=order_cap)


def bundled_library(
    max_order: Optional[int] = None,
    directory: Optional[Path] = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> list[tuple[str, FiniteGroup]]:
    """(name, group) pairs from a library directory, smallest orders first.

    Groups whose closure exceeds max_order are dropped here (the scan caller
    reports groups over its own cap itself).
    """
    directory = Path(directory) if directory else LIBRARY_DIR
    out = []
    for path in sorted(directory.glob("*.json")):
        group = load_group_file(path, order_cap=order_cap)
        if max_order is not None and group.order > max_order:
            continue
        out.append((group.name, group))
    out.sort(key=lambda pair: (pair[1].order, pair[0]))
    return out
