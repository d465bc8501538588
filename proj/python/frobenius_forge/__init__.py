"""Frobenius pushforwards of monomial modules over diagonal invariant rings."""

import json
from pathlib import Path

from .errors import ForgeError
from . import _forge

COMMANDS = ("decompose", "closure", "ematrix", "certify", "discriminant", "order", "witness")


def _text(spec):
    path = Path(spec)
    if "\n" not in str(spec) and path.exists():
        return path.read_text(), str(path)
    return str(spec), "<string>"


def run(command, spec, *, e=1, budget=16, q_max=None, tolerance="1/1000000000", cache_dir=None, c=None):
    """Runs a CLI command on a spec (file path or text) and returns (report dict, exit code)."""
    text, path = _text(spec)
    out, code = _forge.run(command, text, path, e, budget, q_max, str(tolerance),
                           None if cache_dir is None else str(cache_dir), c)
    return json.loads(out), code


def multiplicity_matrix(spec):
    """Class labels and the integer matrix E for a diagonal spec."""
    labels, rows = _forge.multiplicity_matrix(_text(spec)[0])
    return labels, [[int(x) for x in row] for row in rows]


def matrix_power(rows, e):
    return [[int(x) for x in row] for row in _forge.matrix_power(rows, e)]


primitivity = _forge.primitivity
wielandt_bound = _forge.wielandt_bound
digest = _forge.digest

__all__ = ["COMMANDS", "ForgeError", "run", "multiplicity_matrix", "matrix_power", "primitivity",
           "wielandt_bound", "digest"]
