"""JSON description files for algebras.

Format::

    {"kind": "hom-associative", "dim": 2, "name": "dual",
     "mu":    [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
     "alpha": [["1", "0"], ["0", "1"]]}

``mu[i][j][k]`` is the e_k coefficient of mu(e_i, e_j) and ``alpha[i][j]``
the e_j coefficient of alpha(e_i), all zero-based.  A hom-dialgebra carries
``dashv`` and ``vdash`` instead of ``mu``.  Entries are integers or strings
``"p/q"``; floats are refused.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np

from .exactlin import format_rational, parse_rational
from .homassoc import HomAssociativeAlgebra
from .homdialg import HomDialgebra

KINDS = ("hom-associative", "hom-dialgebra")


class AlgebraFileError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _array(data, field: str, dim: int, rank: int) -> np.ndarray:
    shape = (dim,) * rank

    def walk(node, depth, path):
        if depth == rank:
            try:
                return parse_rational(node)
            except ValueError as exc:
                raise AlgebraFileError(f"{field}{path}", str(exc)) from None
        if not isinstance(node, list) or len(node) != dim:
            got = len(node) if isinstance(node, list) else type(node).__name__
            raise AlgebraFileError(f"{field}{path}", f"expected a list of length {dim}, got {got}")
        return [walk(x, depth + 1, f"{path}[{i}]") for i, x in enumerate(node)]

    nested = walk(data, 0, "")
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(shape):
        v = nested
        for i in idx:
            v = v[i]
        out[idx] = v
    return out


def from_dict(data: dict):
    if not isinstance(data, dict):
        raise AlgebraFileError("<root>", "expected a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise AlgebraFileError("kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise AlgebraFileError("dim", f"expected a positive integer, got {dim!r}")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise AlgebraFileError("name", "expected a string")
    products = ("mu",) if kind == "hom-associative" else ("dashv", "vdash")
    for key in products + ("alpha",):
        if key not in data:
            raise AlgebraFileError(key, "missing")
    alpha = _array(data["alpha"], "alpha", dim, 2)
    tensors = [_array(data[key], key, dim, 3) for key in products]
    if kind == "hom-associative":
        return HomAssociativeAlgebra(tensors[0], alpha, name)
    return HomDialgebra(tensors[0], tensors[1], alpha, name)


def _nested(t: np.ndarray):
    if t.ndim == 1:
        return [format_rational(x) for x in t]
    return [_nested(t[i]) for i in range(t.shape[0])]


def to_dict(algebra) -> dict:
    if isinstance(algebra, HomAssociativeAlgebra):
        out = {"kind": "hom-associative", "dim": algebra.dim, "name": algebra.name,
               "mu": _nested(algebra.mu)}
    elif isinstance(algebra, HomDialgebra):
        out = {"kind": "hom-dialgebra", "dim": algebra.dim, "name": algebra.name,
               "dashv": _nested(algebra.dashv), "vdash": _nested(algebra.vdash)}
    else:
        raise TypeError(type(algebra).__name__)
    out["alpha"] = _nested(algebra.alpha)
    return out


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError("<json>", str(exc)) from None
    return from_dict(data)


def dumps(algebra) -> str:
    """One key per line; arrays stay on their line."""
    items = [f" {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in to_dict(algebra).items()]
    return "{\n" + ",\n".join(items) + "\n}\n"


def load(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError("<file>", f"{path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise AlgebraFileError("<file>", f"{path}: not UTF-8") from None
    return loads(text)


def save(algebra, path) -> None:
    Path(path).write_text(dumps(algebra), encoding="utf-8")


def shipped(name: str) -> Path:
    """Path of a shipped example file, e.g. ``shipped("dual")``."""
    return Path(str(resources.files("homga") / "data" / f"{name}.json"))


def shipped_names() -> list[str]:
    folder = resources.files("homga") / "data"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))
