"""Text literals and JSON documents for scalars, vectors, matrices, maps and bases.

Bicomplex literals come in two spellings::

    1+2i1-3i2+0.5i1i2      cartesian, any subset of terms
    [1+2i|-3i]e            idempotent, minus|plus as complex literals

Complex literals use a single unit ``i`` (``j`` is accepted too).  The
printer emits idempotent form unless asked for cartesian; a number whose
two components coincide is printed as the plain complex value ``a+bi1``.
Printed idempotent literals reparse to bit-identical values.
"""
from __future__ import annotations

import json
import re

import numpy as np

from .errors import DimensionError, ParseError
from .linalg import Basis
from .linmap import LinMap
from .matrix import BCMatrix
from .scalar import BiComplex, from_cartesian
from .vector import BCVector

__all__ = [
    "parse_complex",
    "parse_bicomplex",
    "format_real",
    "format_complex",
    "format_bicomplex",
    "format_vector",
    "format_matrix",
    "load_json",
    "vector_from_json",
    "vector_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "linmap_from_json",
    "linmap_to_json",
    "basis_from_json",
    "basis_to_json",
]

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_CARTESIAN_UNITS = {"": 0, "i1": 1, "i2": 2, "i1i2": 3, "i2i1": 3}
_COMPLEX_UNITS = {"": 0, "i": 1, "j": 1}


def _term_regex(units):
    alts = "|".join(sorted((u for u in units if u), key=len, reverse=True))
    return re.compile(
        rf"\s*(?P<sign>[+-])?\s*(?P<num>{_NUMBER})?\s*(?P<unit>{alts})?\s*"
    )


_CARTESIAN_TERM = _term_regex(_CARTESIAN_UNITS)
_COMPLEX_TERM = _term_regex(_COMPLEX_UNITS)


def _parse_terms(text, start, end, term_re, units, kind):
    """Sum of signed real multiples of units in ``text[start:end]``."""
    coeffs = [0.0] * (max(units.values()) + 1)
    seen = set()
    pos = start
    first = True
    if not text[start:end].strip():
        raise ParseError(f"empty {kind} literal", text, start)
    while pos < end:
        match = term_re.match(text, pos, end)
        if not match.group("num") and not match.group("unit"):
            at = match.end("sign") if match.group("sign") else pos
            raise ParseError(f"expected a {kind} term", text, at)
        if not first and not match.group("sign"):
            rest = text[pos:end]
            raise ParseError("missing sign between terms", text, pos + len(rest) - len(rest.lstrip()))
        if match.end() < end and text[match.end()] not in "+-":
            raise ParseError(f"unexpected character {text[match.end()]!r}", text, match.end())
        unit = match.group("unit") or ""
        slot = units[unit]
        if slot in seen:
            at = match.start("unit") if unit else match.start("num")
            raise ParseError(f"duplicate {unit or 'real'} term", text, at)
        seen.add(slot)
        value = float(match.group("num")) if match.group("num") else 1.0
        if match.group("sign") == "-":
            value = -value
        coeffs[slot] = value
        pos = match.end()
        first = False
    return coeffs


def parse_complex(text: str, start: int = 0, end: int | None = None) -> complex:
    end = len(text) if end is None else end
    re_, im = _parse_terms(text, start, end, _COMPLEX_TERM, _COMPLEX_UNITS, "complex")
    return complex(re_, im)


def parse_bicomplex(text: str) -> BiComplex:
    if not isinstance(text, str):
        raise ParseError(f"expected a string literal, got {type(text).__name__}", str(text), 0)
    stripped = text.strip()
    if stripped.startswith("["):
        open_at = text.index("[")
        bar = text.find("|", open_at)
        close = text.find("]", open_at)
        if bar < 0 or close < 0 or bar > close:
            raise ParseError("idempotent literal must look like [m|p]e", text, open_at)
        tail = text[close + 1 :].strip()
        if tail != "e":
            raise ParseError("expected 'e' after ']'", text, close + 1)
        return BiComplex(parse_complex(text, open_at + 1, bar), parse_complex(text, bar + 1, close))
    u = _parse_terms(text, 0, len(text), _CARTESIAN_TERM, _CARTESIAN_UNITS, "bicomplex")
    return from_cartesian(*u)


def format_real(x: float) -> str:
    x = float(x)
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def _format_terms(coeffs, units) -> str:
    out = ""
    for c, unit in zip(coeffs, units):
        if c == 0:
            continue
        mag = abs(c)
        body = format_real(mag) if not unit or mag != 1 else ""
        if out:
            out += ("-" if c < 0 else "+") + body + unit
        else:
            out = ("-" if c < 0 else "") + body + unit
    return out or "0"


def format_complex(z: complex) -> str:
    z = complex(z)
    return _format_terms((z.real, z.imag), ("", "i"))


def format_bicomplex(xi: BiComplex, cartesian: bool = False) -> str:
    if cartesian:
        return _format_terms(xi.cartesian(), ("", "i1", "i2", "i1i2"))
    if xi.minus == xi.plus:
        return _format_terms((xi.minus.real, xi.minus.imag), ("", "i1"))
    return f"[{format_complex(xi.minus)}|{format_complex(xi.plus)}]e"


def format_vector(v: BCVector, cartesian: bool = False) -> str:
    return "[" + ", ".join(format_bicomplex(x, cartesian) for x in v) + "]"


def format_matrix(M: BCMatrix, cartesian: bool = False) -> str:
    rows = (
        "[" + ", ".join(format_bicomplex(x, cartesian) for x in row) + "]" for row in M.entries()
    )
    return "[" + ",".join(rows) + "]"


# -- JSON documents ----------------------------------------------------------


def load_json(path):
    """Read a UTF-8 JSON file, mapping malformed content to :class:`ParseError`."""
    with open(path, encoding="utf-8") as fh:
        raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", raw, exc.pos) from None


def _bicomplex_value(x) -> BiComplex:
    if isinstance(x, str):
        return parse_bicomplex(x)
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return BiComplex(x, x)
    raise ParseError(f"expected a bicomplex literal, got {x!r}", repr(x), 0)


def _complex_value(x) -> complex:
    if isinstance(x, str):
        return parse_complex(x)
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    raise ParseError(f"expected a complex literal, got {x!r}", repr(x), 0)


def _complex_grid(rows, name):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{name!r} must be a list of rows", repr(rows), 0)
    if len({len(r) for r in rows}) > 1:
        raise DimensionError(f"ragged rows in {name!r}")
    return [[_complex_value(x) for x in r] for r in rows]


def _as_matrix(grid, rows, cols):
    a = np.array(grid, dtype=np.complex128)
    if a.size == 0:
        a = a.reshape(rows or 0, cols or 0)
    return a


def _check_shape(a, rows, cols, what):
    if rows is not None and a.shape[0] != rows or cols is not None and a.shape[1] != cols:
        raise DimensionError(f"{what} has shape {a.shape}, header says ({rows}, {cols})")


def vector_from_json(obj) -> BCVector:
    if isinstance(obj, dict):
        return BCVector(
            [_complex_value(x) for x in obj["minus"]], [_complex_value(x) for x in obj["plus"]]
        )
    if not isinstance(obj, list):
        raise ParseError("a vector is a JSON array of bicomplex literals", repr(obj), 0)
    return BCVector.from_entries(_bicomplex_value(x) for x in obj)


def vector_to_json(v: BCVector, cartesian: bool = False) -> list[str]:
    return [format_bicomplex(x, cartesian) for x in v]


def matrix_from_json(obj) -> BCMatrix:
    if not isinstance(obj, dict):
        raise ParseError("a matrix document is a JSON object", repr(obj), 0)
    rows, cols = obj.get("rows"), obj.get("cols")
    if "entries" in obj:
        grid = obj["entries"]
        if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
            raise ParseError("'entries' must be a list of rows", repr(grid), 0)
        if len({len(r) for r in grid}) > 1:
            raise DimensionError("ragged rows in 'entries'")
        M = BCMatrix.from_entries([[_bicomplex_value(x) for x in r] for r in grid])
        if M.rows == 0:
            M = BCMatrix(np.zeros((rows or 0, cols or 0)), np.zeros((rows or 0, cols or 0)))
    elif "minus" in obj and "plus" in obj:
        M = BCMatrix(
            _as_matrix(_complex_grid(obj["minus"], "minus"), rows, cols),
            _as_matrix(_complex_grid(obj["plus"], "plus"), rows, cols),
        )
    else:
        raise ParseError("matrix needs 'entries' or 'minus'/'plus'", json.dumps(obj), 0)
    _check_shape(M.minus, rows, cols, "matrix")
    return M


def _grid_to_json(a):
    return [[format_complex(z) for z in row] for row in a]


def matrix_to_json(M: BCMatrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "minus": _grid_to_json(M.minus),
        "plus": _grid_to_json(M.plus),
    }


def linmap_from_json(obj) -> LinMap:
    if not isinstance(obj, dict) or "t1" not in obj or "t2" not in obj:
        raise ParseError("a map document needs 't1' and 't2'", json.dumps(obj), 0)
    m, n = obj.get("m"), obj.get("n")
    t1 = _as_matrix(_complex_grid(obj["t1"], "t1"), m, n)
    t2 = _as_matrix(_complex_grid(obj["t2"], "t2"), m, n)
    _check_shape(t1, m, n, "t1")
    _check_shape(t2, m, n, "t2")
    return LinMap(t1, t2)


def linmap_to_json(T: LinMap) -> dict:
    return {"n": T.n, "m": T.m, "t1": _grid_to_json(T.t1), "t2": _grid_to_json(T.t2)}


def basis_from_json(obj) -> Basis:
    if not isinstance(obj, dict) or "vectors" not in obj:
        raise ParseError("a basis document needs 'vectors'", json.dumps(obj), 0)
    vectors = _complex_grid(obj["vectors"], "vectors")
    dim = obj.get("dim", len(vectors))
    if len(vectors) != dim:
        raise DimensionError(f"basis header says dim {dim}, got {len(vectors)} vectors")
    return Basis(vectors)


def basis_to_json(B: Basis) -> dict:
    return {"dim": B.dim, "vectors": [[format_complex(z) for z in v] for v in B.vectors]}
