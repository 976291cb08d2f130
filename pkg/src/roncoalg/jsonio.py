"""Canonical JSON forms for algebras, elements, and reports.

Algebra schema (1-based indices, zero cells omitted):

    {"dim": N, "kind": "leibniz",
     "bracket": [{"i": 1, "j": 2, "c": [{"k": 3, "v": "1/2"}]}]}

    {"dim": N, "kind": "mu", "lie_bracket": [...], "product": [...]}

Output is order-canonicalized — rows sorted by (i, j), entries by k,
rationals in reduced "p" / "p/q" form — so equal algebras serialize to
identical bytes.  `dumps_canonical` fixes indent 2 and a trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .freelie import format_word
from .linalg import format_rational, parse_rational
from .lincomb import LinComb
from .ronco import key_sort_key
from .structure import MuAlgebra, StructureAlgebra


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# structure-constant algebras

def _table_to_rows(table: dict) -> list:
    rows = []
    for i, j in sorted(table):
        cell = table[(i, j)]
        rows.append({
            "i": i + 1,
            "j": j + 1,
            "c": [{"k": k + 1, "v": format_rational(v)} for k, v in sorted(cell.items())],
        })
    return rows


def algebra_to_obj(x: StructureAlgebra | MuAlgebra) -> dict:
    if isinstance(x, StructureAlgebra):
        return {"dim": x.dim, "kind": "leibniz", "bracket": _table_to_rows(x.bracket)}
    if isinstance(x, MuAlgebra):
        return {
            "dim": x.dim,
            "kind": "mu",
            "lie_bracket": _table_to_rows(x.lie_bracket),
            "product": _table_to_rows(x.product),
        }
    raise TypeError(f"not an algebra: {x!r}")


def _rows_to_table(rows, dim: int, what: str) -> dict:
    if not isinstance(rows, list):
        raise ValueError(f"{what} must be a list of rows")
    table: dict = {}
    for row in rows:
        if not isinstance(row, dict) or not {"i", "j", "c"} <= row.keys():
            raise ValueError(f"malformed row in {what}: {row!r}")
        i, j = row["i"], row["j"]
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"row index ({i!r}, {j!r}) out of range 1..{dim}")
        if (i - 1, j - 1) in table:
            raise ValueError(f"duplicate row ({i}, {j}) in {what}")
        cell: dict = {}
        for entry in row["c"]:
            if not isinstance(entry, dict) or not {"k", "v"} <= entry.keys():
                raise ValueError(f"malformed entry in {what} row ({i}, {j}): {entry!r}")
            k = entry["k"]
            if not (isinstance(k, int) and 1 <= k <= dim):
                raise ValueError(f"entry index {k!r} out of range 1..{dim}")
            if k - 1 in cell:
                raise ValueError(f"duplicate entry k={k} in {what} row ({i}, {j})")
            if not isinstance(entry["v"], str):
                raise ValueError(f"coefficient must be a rational string, got {entry['v']!r}")
            cell[k - 1] = parse_rational(entry["v"])
        table[(i - 1, j - 1)] = cell
    return table


def obj_to_algebra(obj) -> StructureAlgebra | MuAlgebra:
    if not isinstance(obj, dict):
        raise ValueError("algebra JSON must be an object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ValueError(f"\"dim\" must be a nonnegative integer, got {dim!r}")
    kind = obj.get("kind")
    if kind == "leibniz":
        if "bracket" not in obj:
            raise ValueError('kind "leibniz" requires a "bracket" key')
        return StructureAlgebra(dim, _rows_to_table(obj["bracket"], dim, "bracket"))
    if kind == "mu":
        for key in ("lie_bracket", "product"):
            if key not in obj:
                raise ValueError(f'kind "mu" requires a "{key}" key')
        return MuAlgebra(
            dim,
            _rows_to_table(obj["lie_bracket"], dim, "lie_bracket"),
            _rows_to_table(obj["product"], dim, "product"),
        )
    raise ValueError(f'"kind" must be "leibniz" or "mu", got {kind!r}')


def loads_algebra(text: str) -> StructureAlgebra | MuAlgebra:
    return obj_to_algebra(json.loads(text))


def dumps_algebra(x: StructureAlgebra | MuAlgebra) -> str:
    return dumps_canonical(algebra_to_obj(x))


# ---------------------------------------------------------------------------
# free-algebra elements in (lyndon_word, generator) coordinates

def ronco_element_to_obj(x: LinComb, num_gens: int) -> dict:
    """Degree-1 part as a dense coefficient list; higher part as sorted
    (word-string, generator, rational-string) triples."""
    deg1 = [Fraction(0)] * num_gens
    higher = []
    for key, c in x.sorted_items(key=key_sort_key):
        word, v = key
        if not word:
            deg1[v - 1] = c
        else:
            higher.append([format_word(word, num_gens), v, format_rational(c)])
    return {"deg1": [format_rational(c) for c in deg1], "higher": higher}


# ---------------------------------------------------------------------------
# homology reports

def report_to_obj(report) -> dict:
    return {
        "dimension": report.dimension,
        "representatives": [[format_rational(v) for v in vec] for vec in report.representatives],
    }


def vectors_to_obj(vectors: Sequence[Sequence[Fraction]]) -> list:
    return [[format_rational(v) for v in vec] for vec in vectors]
