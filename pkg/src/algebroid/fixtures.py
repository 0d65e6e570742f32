"""JSON fixture files holding structure constants.

A fixture is one JSON object::

    {
      "kind": "vertex_algebroid",
      "name": "sl2-family-l1",
      "dims": {"A": 3, "G": 5},
      "labels": {"A": ["1", "a0", "a1"], "G": ["e", "f", "h", "da0", "da1"]},
      "unit": ["1", "0", "0"],
      "tables": {"act": [[i, j, k, "p/q"], ...], "brk": [...], ...},
      "partial": [[a, g, "p/q"], ...],
      "subspaces": {"levi": [["1", "0", ...], ...]}
    }

Table entries mean b_i o b_j = sum_k c b_k and are sparse; a partial
entry [a, g, c] puts c in row g, column a of the matrix of d. Rationals are
canonical strings "p/q" or "p". ``emit`` writes entries in lexicographic
order, one per line, so emit -> parse -> emit is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .calg import CommAlg
from .exactlin import Trilinear, format_rat, parse_rat
from .leibniz import LeibnizAlg
from .tca import TCA
from .valgd import VertexAlgebroid

KINDS = ("comm_alg", "leibniz", "tca", "vertex_algebroid")

# table name -> (left space, right space, output space)
TABLES = {
    "comm_alg": {"mul": ("A", "A", "A")},
    "leibniz": {"brk": ("L", "L", "L")},
    "tca": {"act0": ("C1", "C0", "C0"), "brk0": ("C1", "C1", "C1"), "pair1": ("C1", "C1", "C0")},
    "vertex_algebroid": {
        "mul": ("A", "A", "A"), "mact": ("A", "G", "G"), "brk": ("G", "G", "G"),
        "pair": ("G", "G", "A"), "act": ("G", "A", "A"),
    },
}
SPACES = {"comm_alg": ("A",), "leibniz": ("L",), "tca": ("C0", "C1"), "vertex_algebroid": ("A", "G")}
PARTIAL = {"tca": ("C0", "C1"), "vertex_algebroid": ("A", "G")}
HAS_UNIT = ("comm_alg", "vertex_algebroid")


class FixtureError(ValueError):
    """Malformed fixture; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__("%s: %s" % (where, message) if where else message)


@dataclass
class Fixture:
    kind: str
    name: str
    obj: object
    labels: dict = field(default_factory=dict)
    subspaces: dict = field(default_factory=dict)


# -- parsing -----------------------------------------------------------------

def _rat(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise FixtureError("rational must be a string like \"p/q\"", where)
    try:
        q = parse_rat(text)
    except ValueError as exc:
        raise FixtureError(str(exc), where) from None
    if format_rat(q) != text:
        raise FixtureError("rational %r is not canonical (expected %r)" % (text, format_rat(q)), where)
    return q


def _int(x, where: str, bound: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise FixtureError("index must be an integer", where)
    if not 0 <= x < bound:
        raise FixtureError("index %d out of range 0..%d" % (x, bound - 1), where)
    return x


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise FixtureError("missing field %r" % key, where)
    return obj[key]


def _table(entries, dims, where: str) -> Trilinear:
    if not isinstance(entries, list):
        raise FixtureError("table must be a list of [i, j, k, \"p/q\"]", where)
    data = {}
    for n, e in enumerate(entries):
        w = "%s[%d]" % (where, n)
        if not isinstance(e, list) or len(e) != 4:
            raise FixtureError("entry must be [i, j, k, \"p/q\"]", w)
        key = tuple(_int(e[t], w, dims[t]) for t in range(3))
        if key in data:
            raise FixtureError("duplicate entry %r" % (list(key),), w)
        data[key] = _rat(e[3], w)
    return Trilinear(tuple(dims), data)


def parse(text: str, source: str = "<fixture>") -> Fixture:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(exc.msg, "%s:%d:%d" % (source, exc.lineno, exc.colno)) from None
    if not isinstance(raw, dict):
        raise FixtureError("top level must be an object", source)
    kind = _require(raw, "kind", source)
    if kind not in KINDS:
        raise FixtureError("unknown kind %r" % (kind,), source + ".kind")
    name = raw.get("name", "")
    if not isinstance(name, str):
        raise FixtureError("name must be a string", source + ".name")
    dims_raw = _require(raw, "dims", source)
    if not isinstance(dims_raw, dict):
        raise FixtureError("dims must be an object", source + ".dims")
    dims = {}
    for sp in SPACES[kind]:
        d = _require(dims_raw, sp, source + ".dims")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise FixtureError("dimension must be a non-negative integer", "%s.dims.%s" % (source, sp))
        dims[sp] = d
    if "A" in dims and dims["A"] < 1:
        raise FixtureError("A must contain the unit, so dim A >= 1", source + ".dims.A")
    labels = raw.get("labels", {})
    if not isinstance(labels, dict):
        raise FixtureError("labels must be an object", source + ".labels")
    for sp, names in labels.items():
        if sp not in dims or not isinstance(names, list) or len(names) != dims[sp] \
                or not all(isinstance(x, str) for x in names):
            raise FixtureError("labels for %r must be %s strings" % (sp, dims.get(sp, "?")),
                               "%s.labels.%s" % (source, sp))
    tables_raw = _require(raw, "tables", source)
    if not isinstance(tables_raw, dict):
        raise FixtureError("tables must be an object", source + ".tables")
    tables = {}
    for tname, spaces in TABLES[kind].items():
        where = "%s.tables.%s" % (source, tname)
        entries = _require(tables_raw, tname, source + ".tables")
        tables[tname] = _table(entries, [dims[s] for s in spaces], where)
    extra = set(tables_raw) - set(TABLES[kind])
    if extra:
        raise FixtureError("unknown tables %s" % sorted(extra), source + ".tables")
    partial = None
    if kind in PARTIAL:
        src, dst = PARTIAL[kind]
        partial = [[Fraction(0)] * dims[src] for _ in range(dims[dst])]
        entries = raw.get("partial", [])
        if not isinstance(entries, list):
            raise FixtureError("partial must be a list of [a, g, \"p/q\"]", source + ".partial")
        seen = set()
        for n, e in enumerate(entries):
            w = "%s.partial[%d]" % (source, n)
            if not isinstance(e, list) or len(e) != 3:
                raise FixtureError("entry must be [a, g, \"p/q\"]", w)
            i, k = _int(e[0], w, dims[src]), _int(e[1], w, dims[dst])
            if (i, k) in seen:
                raise FixtureError("duplicate entry", w)
            seen.add((i, k))
            partial[k][i] = _rat(e[2], w)
    unit = None
    if kind in HAS_UNIT:
        u = _require(raw, "unit", source)
        if not isinstance(u, list) or len(u) != dims["A"]:
            raise FixtureError("unit must list %d rationals" % dims["A"], source + ".unit")
        unit = tuple(_rat(x, "%s.unit[%d]" % (source, n)) for n, x in enumerate(u))
    subspaces = {}
    for sname, rows in raw.get("subspaces", {}).items():
        w = "%s.subspaces.%s" % (source, sname)
        if not isinstance(rows, list):
            raise FixtureError("subspace must be a list of rows", w)
        subspaces[sname] = [tuple(_rat(x, "%s[%d][%d]" % (w, r, c)) for c, x in enumerate(row))
                            for r, row in enumerate(rows)]
    try:
        obj = _build(kind, dims, tables, partial, unit, labels)
    except ValueError as exc:
        raise FixtureError(str(exc), source) from None
    return Fixture(kind, name, obj, dict(labels), subspaces)


def _build(kind, dims, tables, partial, unit, labels):
    if kind == "comm_alg":
        return CommAlg(dims["A"], unit, tables["mul"])
    if kind == "leibniz":
        return LeibnizAlg(dims["L"], tables["brk"])
    if kind == "tca":
        return TCA(dims["C0"], dims["C1"], partial, tables["act0"], tables["brk0"], tables["pair1"])
    a = CommAlg(dims["A"], unit, tables["mul"])
    return VertexAlgebroid(a, dims["G"], tables["mact"], tables["brk"], tables["pair"],
                           tables["act"], partial, labels=dict(labels) or None)


def load(path) -> Fixture:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FixtureError(exc.strerror or str(exc), str(p)) from None
    return parse(text, str(p))


# -- emission ----------------------------------------------------------------

def kind_of(obj) -> str:
    for k, cls in (("comm_alg", CommAlg), ("leibniz", LeibnizAlg), ("tca", TCA),
                   ("vertex_algebroid", VertexAlgebroid)):
        if isinstance(obj, cls):
            return k
    raise TypeError("unsupported object %r" % type(obj))


def _pieces(obj):
    kind = kind_of(obj)
    if kind == "comm_alg":
        return {"A": obj.dim}, {"mul": obj.mul}, None, obj.unit
    if kind == "leibniz":
        return {"L": obj.dim}, {"brk": obj.bracket}, None, None
    if kind == "tca":
        return ({"C0": obj.d0, "C1": obj.d1},
                {"act0": obj.act0, "brk0": obj.brk0, "pair1": obj.pair1}, obj.partial, None)
    return ({"A": obj.a.dim, "G": obj.gdim},
            {"mul": obj.a.mul, "mact": obj.mact, "brk": obj.brk, "pair": obj.pair, "act": obj.act},
            obj.partial, obj.a.unit)


def _j(x) -> str:
    return json.dumps(x, ensure_ascii=False)


def _rows_block(rows: list[str], indent: str) -> str:
    if not rows:
        return "[]"
    inner = ",\n".join(indent + "  " + r for r in rows)
    return "[\n" + inner + "\n" + indent + "]"


def emit(obj, name: str = "", labels: dict | None = None, subspaces: dict | None = None) -> str:
    kind = kind_of(obj)
    dims, tables, partial, unit = _pieces(obj)
    if labels is None and kind == "vertex_algebroid" and obj.labels:
        labels = obj.labels
    lines = ["{"]
    fields = [
        '  "kind": %s' % _j(kind),
        '  "name": %s' % _j(name),
        '  "dims": {%s}' % ", ".join("%s: %d" % (_j(k), dims[k]) for k in sorted(dims)),
    ]
    if labels:
        fields.append('  "labels": {%s}' % ", ".join(
            "%s: %s" % (_j(k), _j(list(labels[k]))) for k in sorted(labels)))
    if unit is not None:
        fields.append('  "unit": %s' % _j([format_rat(x) for x in unit]))
    tparts = []
    for tname in sorted(tables):
        rows = [_j([i, j, k, format_rat(c)]) for i, j, k, c in tables[tname].sorted_entries()]
        tparts.append('    %s: %s' % (_j(tname), _rows_block(rows, "    ")))
    fields.append('  "tables": {\n' + ",\n".join(tparts) + "\n  }")
    if partial is not None:
        entries = sorted((a, g, c) for g, row in enumerate(partial) for a, c in enumerate(row) if c)
        rows = [_j([a, g, format_rat(c)]) for a, g, c in entries]
        fields.append('  "partial": %s' % _rows_block(rows, "  "))
    if subspaces:
        sparts = []
        for sname in sorted(subspaces):
            rows = [_j([format_rat(Fraction(x)) for x in r]) for r in subspaces[sname]]
            sparts.append('    %s: %s' % (_j(sname), _rows_block(rows, "    ")))
        fields.append('  "subspaces": {\n' + ",\n".join(sparts) + "\n  }")
    lines.append(",\n".join(fields))
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_fixture(fx: Fixture) -> str:
    return emit(fx.obj, fx.name, fx.labels or None, fx.subspaces or None)
