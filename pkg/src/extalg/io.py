"""JSON readers and writers for the file formats used by the command line.

Readers raise :class:`ParseError` for anything that is not the expected
shape; errors coming from the mathematics (non-homogeneous matrices,
vertices out of range, ...) are left to the library.
"""
import json

from .arrangements import Matroid, VectorConfiguration
from .clifford import SymmetricForm, signature_form
from .exactla import Matrix
from .exterior import MultiVector, mono
from .fields import QQ, format_scalar
from .lie import Bracket
from .simplicial import from_facets
from .tate.modules import ExteriorMatrix, GradedEModule, module_from_matrix

__all__ = [
    "ParseError", "load_json", "dumps",
    "read_complex", "read_arrangement", "read_matroid", "read_bracket",
    "read_form", "read_module", "read_term_list", "term_list",
]


class ParseError(ValueError):
    """Input does not match the expected file format."""


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def dumps(obj):
    """Canonical JSON text: fixed key order as built, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def _need(obj, key, kind, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    val = obj[key]
    if kind is int:
        if isinstance(val, bool) or not isinstance(val, int):
            raise ParseError(f"{where}: {key!r} must be an integer")
    elif not isinstance(val, kind):
        raise ParseError(f"{where}: {key!r} has the wrong type")
    return val


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        if isinstance(x, str):
            try:
                return int(x)
            except ValueError:
                pass
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    return x


def _scalar(x, field, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"{where}: scalars must be integers or strings 'a/b', got {x!r}")
    try:
        return field(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad scalar {x!r} ({exc})") from None


def _int_list(xs, where):
    if not isinstance(xs, list):
        raise ParseError(f"{where}: expected a list of integers")
    return [_int(x, where) for x in xs]


def read_complex(obj):
    """{"n": int, "facets": [[int, ...], ...]}"""
    n = _need(obj, "n", int, "complex")
    facets = _need(obj, "facets", list, "complex")
    return from_facets(n, [_int_list(f, "complex facet") for f in facets])


def read_arrangement(obj, field=QQ):
    """{"m": int, "forms": [[rational, ...], ...]}"""
    m = _need(obj, "m", int, "arrangement")
    forms = _need(obj, "forms", list, "arrangement")
    rows = []
    for f in forms:
        if not isinstance(f, list):
            raise ParseError("arrangement: each form is a list of coefficients")
        rows.append([_scalar(x, field, "arrangement form") for x in f])
    return VectorConfiguration(m, rows, field)


def read_matroid(obj):
    """{"n": int, "independent": [[int, ...], ...]} listing every independent set."""
    n = _need(obj, "n", int, "matroid")
    sets = _need(obj, "independent", list, "matroid")
    fam = {()} | {tuple(_int_list(s, "independent set")) for s in sets}
    return Matroid(n, fam)


def read_bracket(obj, field=QQ):
    """{"dim": int, "brackets": [{"i": int, "j": int, "coeffs": {"k": rational}}, ...]}"""
    dim = _need(obj, "dim", int, "bracket")
    entries = _need(obj, "brackets", list, "bracket")
    c = {}
    for e in entries:
        i = _need(e, "i", int, "bracket entry")
        j = _need(e, "j", int, "bracket entry")
        coeffs = _need(e, "coeffs", dict, "bracket entry")
        for k, v in coeffs.items():
            key = (i, j, _int(k, "bracket coefficient index"))
            x = _scalar(v, field, "bracket coefficient")
            c[key] = field.reduce(c.get(key, 0) + x)
    return Bracket(dim, c, field)


def read_form(obj, field=QQ):
    """{"gram": [[rational, ...], ...]} or {"p": int, "q": int}."""
    if isinstance(obj, dict) and "gram" in obj:
        g = obj["gram"]
        if not isinstance(g, list) or not all(isinstance(r, list) for r in g):
            raise ParseError("form: 'gram' must be a list of rows")
        return SymmetricForm([[_scalar(x, field, "gram entry") for x in r] for r in g], field)
    p = _need(obj, "p", int, "form")
    q = _need(obj, "q", int, "form")
    return signature_form(p, q, field)


def read_term_list(n, terms, field=QQ):
    """[{"coeff": rational, "indices": [int, ...]}, ...] -> MultiVector"""
    if not isinstance(terms, list):
        raise ParseError("term list: expected a list")
    out = MultiVector.zero(n, field)
    for t in terms:
        c = _scalar(_need(t, "coeff", (int, str), "term"), field, "term coeff")
        idx = _int_list(_need(t, "indices", list, "term"), "term indices")
        if len(set(idx)) != len(idx):
            continue  # a repeated generator wedges to zero
        for i in idx:
            if not 1 <= i <= n:
                raise ValueError(f"generator index {i} out of range 1..{n}")
        # indices may be unsorted: accumulate the sign of sorting them
        inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
        m = mono(tuple(idx)) if idx else 0
        out = out + MultiVector(n, {m: -c if inv & 1 else c}, field)
    return out


def term_list(v):
    """MultiVector -> JSON term list, grade-major then lexicographic."""
    from .exterior import grade, indices
    return [
        {"coeff": format_scalar(c), "indices": list(indices(m))}
        for m, c in sorted(v.items(), key=lambda mc: (grade(mc[0]), indices(mc[0])))
    ]


def _read_matrix_rows(rows, nrows, ncols, field, where):
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ParseError(f"{where}: expected {nrows} rows")
    ent = {}
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise ParseError(f"{where}: row {r} must have {ncols} entries")
        for c, x in enumerate(row):
            x = _scalar(x, field, where)
            if x:
                ent[(r, c)] = x
    return Matrix(nrows, ncols, ent, field)


def read_module(obj, field=QQ):
    """A graded E(n)-module, explicit or as the cokernel/image of a matrix.

    Explicit: {"n", "components": {deg: dim}, "actions": {i: {deg: matrix}}, "anchor"?}
    Matrix:   {"n", "matrix", "row_degrees", "col_degrees", "mode", "index"?}
    """
    n = _need(obj, "n", int, "module")
    if "matrix" in obj:
        rows = _need(obj, "matrix", list, "module")
        rdeg = _int_list(_need(obj, "row_degrees", list, "module"), "row_degrees")
        cdeg = _int_list(_need(obj, "col_degrees", list, "module"), "col_degrees")
        mode = obj.get("mode", "cokernel")
        if mode not in ("cokernel", "image"):
            raise ParseError(f"module: mode must be 'cokernel' or 'image', got {mode!r}")
        index = _int(obj.get("index", 0), "module index")
        if len(rows) != len(rdeg):
            raise ParseError(f"module: {len(rows)} matrix rows but {len(rdeg)} row degrees")
        ent = {}
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != len(cdeg):
                raise ParseError(f"module: matrix row {r} must have {len(cdeg)} entries")
            for c, cell in enumerate(row):
                v = read_term_list(n, cell, field)
                if v:
                    ent[(r, c)] = v
        A = ExteriorMatrix(n, rdeg, cdeg, ent, field)
        return module_from_matrix(A, mode, index)
    comps_raw = _need(obj, "components", dict, "module")
    comps = {_int(d, "component degree"): _int(m, "component dimension") for d, m in comps_raw.items()}
    acts = {}
    for i, per_deg in obj.get("actions", {}).items():
        if not isinstance(per_deg, dict):
            raise ParseError("module: actions[i] must map degrees to matrices")
        i = _int(i, "action index")
        for d, mat in per_deg.items():
            d = _int(d, "action degree")
            acts[(i, d)] = _read_matrix_rows(mat, comps.get(d + 1, 0), comps.get(d, 0), field, f"action e{i} on degree {d}")
    anchor = _int(obj.get("anchor", 0), "module anchor")
    return GradedEModule(n, comps, acts, field, anchor=anchor)
