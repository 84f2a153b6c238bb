"""``bcx`` command line front end.

Every verb parses its operands, calls one library function and prints the
result.  Exit status: 0 on success, 1 on a domain error (not invertible, no
solution, shape mismatch), 2 on malformed input or unreadable files.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import matrix, textio
from .errors import BcxError, NoSolution, NotInvertible, ParseError
from .linmap import BasisPair, LinMap
from .matrix import BCMatrix
from .scalar import BiComplex, Classification, classify, inverse
from .tolerance import tolerance_context
from .vector import BCVector


def _scalar(text):
    return textio.parse_bicomplex(text)


def _load_matrix(path):
    return textio.matrix_from_json(textio.load_json(path))


def _load_map(path):
    return textio.linmap_from_json(textio.load_json(path))


def _load_vector(source):
    # inline JSON array or path to a file holding one
    if source.lstrip().startswith(("[", "{")):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid inline JSON: {exc.msg}", source, exc.pos) from None
    else:
        obj = textio.load_json(source)
    return textio.vector_from_json(obj)


def _operator(args) -> LinMap:
    """The map given by ``--map``, or the one acting as ``--matrix``."""
    if args.map:
        return _load_map(args.map)
    if args.matrix:
        return LinMap.from_matrix(_load_matrix(args.matrix))
    raise _UsageError("one of --map or --matrix is required")


class _UsageError(Exception):
    pass


def _exactly_one(args, *names):
    given = [n for n in names if getattr(args, n) not in (None, [])]
    if len(given) != 1:
        flags = ", ".join(n if n == "value" else "--" + n for n in names)
        raise _UsageError(f"{args.verb} takes exactly one of: {flags}")
    return given[0]


# -- verbs -----------------------------------------------------------------


def cmd_split(args):
    which = _exactly_one(args, "value", "vector", "matrix")
    if which == "value":
        return _scalar(args.value).split()
    if which == "vector":
        return _load_vector(args.vector).split()
    return _load_matrix(args.matrix).split()


def cmd_join(args):
    return BiComplex(textio.parse_complex(args.minus), textio.parse_complex(args.plus))


def _binary(args, op):
    if args.matrix:
        if len(args.matrix) != 2 or args.values:
            raise _UsageError(f"{args.verb} takes two literals or two --matrix files")
        return op(_load_matrix(args.matrix[0]), _load_matrix(args.matrix[1]))
    if len(args.values) != 2:
        raise _UsageError(f"{args.verb} takes two literals or two --matrix files")
    return op(_scalar(args.values[0]), _scalar(args.values[1]))


def cmd_mul(args):
    return _binary(args, lambda a, b: a @ b if isinstance(a, BCMatrix) else a * b)


def cmd_add(args):
    return _binary(args, lambda a, b: a + b)


def cmd_inv(args):
    which = _exactly_one(args, "value", "matrix", "map")
    if which == "value":
        return inverse(_scalar(args.value))
    if which == "matrix":
        return matrix.inv(_load_matrix(args.matrix))
    return _load_map(args.map).inverse()


def cmd_det(args):
    return matrix.det(_load_matrix(args.matrix))


def cmd_rank(args):
    _exactly_one(args, "matrix", "map")
    return _operator(args).rank()


def cmd_kernel(args):
    _exactly_one(args, "matrix", "map")
    return _operator(args).kernel_basis()


def cmd_image(args):
    _exactly_one(args, "matrix", "map")
    return _operator(args).image_basis()


def cmd_solve(args):
    _exactly_one(args, "matrix", "map")
    return _operator(args).solve(_load_vector(args.rhs))


def cmd_repr(args):
    T = _load_map(args.map)
    b1 = textio.basis_from_json(textio.load_json(args.b1))
    b2 = textio.basis_from_json(textio.load_json(args.b2)) if args.b2 else b1
    return T.matrix_rep(BasisPair(b1, b2))


def cmd_compose(args):
    if len(args.map) != 2:
        raise _UsageError("compose takes exactly two --map files (outer first)")
    outer, inner = (_load_map(p) for p in args.map)
    return outer.compose(inner)


def cmd_classify(args):
    return classify(_scalar(args.value))


# -- output ------------------------------------------------------------------


def _to_text(result, cartesian):
    if isinstance(result, BiComplex):
        return textio.format_bicomplex(result, cartesian)
    if isinstance(result, BCVector):
        return textio.format_vector(result, cartesian)
    if isinstance(result, BCMatrix):
        return textio.format_matrix(result, cartesian)
    if isinstance(result, LinMap):
        return textio.format_matrix(BCMatrix(result.t1, result.t2), cartesian)
    if isinstance(result, Classification):
        return result.value
    if isinstance(result, tuple):
        return "\n".join(
            f"{name}: {_component_text(part)}" for name, part in zip(("minus", "plus"), result)
        )
    if isinstance(result, list):
        return "\n".join(_to_text(x, cartesian) for x in result)
    return str(result)


def _component_text(part):
    if isinstance(part, complex):
        return textio.format_complex(part)
    if part.ndim == 1:
        return "[" + ", ".join(textio.format_complex(z) for z in part) + "]"
    return "[" + ",".join(
        "[" + ", ".join(textio.format_complex(z) for z in row) + "]" for row in part
    ) + "]"


def _to_json(result, cartesian):
    if isinstance(result, BiComplex):
        return textio.format_bicomplex(result, cartesian)
    if isinstance(result, BCVector):
        return textio.vector_to_json(result, cartesian)
    if isinstance(result, BCMatrix):
        return textio.matrix_to_json(result)
    if isinstance(result, LinMap):
        return textio.linmap_to_json(result)
    if isinstance(result, Classification):
        return result.value
    if isinstance(result, tuple):
        return {
            name: textio.format_complex(part) if isinstance(part, complex)
            else [textio.format_complex(z) for z in part] if part.ndim == 1
            else [[textio.format_complex(z) for z in row] for row in part]
            for name, part in zip(("minus", "plus"), result)
        }
    if isinstance(result, list):
        return [_to_json(x, cartesian) for x in result]
    return result


# -- argument parsing ----------------------------------------------------------


def _common():
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_argument_group("output")
    fmt.add_argument("--cartesian", action="store_true", help="print a+bi1+ci2+di1i2 instead of [m|p]e")
    fmt.add_argument("--json", action="store_true", help="machine-readable JSON output")
    tol = p.add_argument_group("tolerances")
    tol.add_argument("--tol-pivot", type=float, help="relative pivot threshold (default 1e-10)")
    tol.add_argument("--tol-zero", type=float, help="zero threshold for idempotent components")
    tol.add_argument("--tol-resid", type=float, help="absolute residual bound")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="bcx", description="Bicomplex linear algebra in idempotent form."
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = verb("split", cmd_split, "idempotent components of a scalar, vector or matrix")
    p.add_argument("value", nargs="?")
    p.add_argument("--vector")
    p.add_argument("--matrix")

    p = verb("join", cmd_join, "build minus*e1 + plus*e2 from two complex literals")
    p.add_argument("minus")
    p.add_argument("plus")

    for name, func, help_ in (("mul", cmd_mul, "product"), ("add", cmd_add, "sum")):
        p = verb(name, func, f"{help_} of two scalars or two matrices")
        p.add_argument("values", nargs="*")
        p.add_argument("--matrix", action="append", default=[])

    p = verb("inv", cmd_inv, "inverse of a scalar, matrix or map")
    p.add_argument("value", nargs="?")
    p.add_argument("--matrix")
    p.add_argument("--map")

    p = verb("det", cmd_det, "determinant of a square matrix")
    p.add_argument("--matrix", required=True)

    for name, func, help_ in (
        ("rank", cmd_rank, "rank of a map or matrix"),
        ("kernel", cmd_kernel, "kernel basis, one vector per line"),
        ("image", cmd_image, "image basis, one vector per line"),
    ):
        p = verb(name, func, help_)
        p.add_argument("--matrix")
        p.add_argument("--map")

    p = verb("solve", cmd_solve, "solve T(v) = rhs")
    p.add_argument("--matrix")
    p.add_argument("--map")
    p.add_argument("--rhs", required=True, help="vector file or inline JSON array")

    p = verb("repr", cmd_repr, "matrix of a map relative to bases b1 (domain) and b2 (codomain)")
    p.add_argument("--map", required=True)
    p.add_argument("--b1", required=True)
    p.add_argument("--b2", help="defaults to --b1")

    p = verb("compose", cmd_compose, "composition S o T of --map S --map T")
    p.add_argument("--map", action="append", default=[])

    p = verb("classify", cmd_classify, "Zero, ZeroDivisor or Invertible")
    p.add_argument("value")
    return parser


def _error(kind, exc, **extra):
    payload = {"error": kind, "message": str(exc), **extra}
    print(json.dumps(payload), file=sys.stderr)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        name: value
        for name, value in (
            ("pivot", args.tol_pivot),
            ("zero", args.tol_zero),
            ("resid", args.tol_resid),
        )
        if value is not None
    }
    try:
        with tolerance_context(**overrides):
            result = args.func(args)
    except _UsageError as exc:
        _error("UsageError", exc)
        return 2
    except ParseError as exc:
        _error("ParseError", exc, position=exc.position)
        return 2
    except OSError as exc:
        _error("IOError", exc)
        return 2
    except (NotInvertible, NoSolution) as exc:
        extra = {"components": list(exc.components)}
        if getattr(exc, "classification", None) is not None:
            extra["classification"] = exc.classification.value
        _error(type(exc).__name__, exc, **extra)
        return 1
    except BcxError as exc:
        _error(type(exc).__name__, exc)
        return 1
    except ValueError as exc:
        _error("ValueError", exc)
        return 1
    if args.json:
        print(json.dumps(_to_json(result, args.cartesian)))
    elif result != []:
        print(_to_text(result, args.cartesian))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
