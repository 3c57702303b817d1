"""
Canonical JSON encoding of decompositions.

    {"k": 4, "l": 2, "period": 2, "edges": [
      {"m": 0, "n": 0, "dir": "H", "color": 1},
      ...
    ]}

Edges are sorted by (n, m, dir) and there are exactly 2*k*period of them.
The text produced by `dumps` is the byte-exact fixture format.
"""
import json
import logging
from typing import Any, Dict

import numpy as np

from core.cayley import GklParams
from core.errors import FormatError, HamcayError
from core.file_manager import FileManager
from core.periodic import DIR_INDEX, Decomposition

logger = logging.getLogger(__name__)


def to_dict(d: Decomposition) -> Dict[str, Any]:
    return {
        "k": d.params.k,
        "l": d.params.l,
        "period": d.period,
        "edges": [
            {"m": e.m, "n": e.n, "dir": e.dir, "color": d.color_of(e)}
            for e in d.params.window_edges(d.period)
        ],
    }


def dumps(d: Decomposition) -> str:
    doc = to_dict(d)
    header = json.dumps({key: doc[key] for key in ("k", "l", "period")})[:-1]
    lines = ",\n".join(f"  {json.dumps(edge)}" for edge in doc["edges"])
    return f'{header}, "edges": [\n{lines}\n]}}\n'


def _integer(value: Any, what: str) -> int:
    """JSON integers only; floats, strings and booleans are rejected"""
    if type(value) is not int:
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def from_dict(doc: Dict[str, Any]) -> Decomposition:
    """Validate and decode; every window edge must appear once in sorted order"""
    try:
        k, l, period = (_integer(doc[key], key) for key in ("k", "l", "period"))
        edges = doc["edges"]
    except (KeyError, TypeError) as e:
        raise FormatError(f"missing or malformed header field: {e}") from None

    try:
        params = GklParams(k, l)
    except HamcayError as e:
        raise FormatError(str(e)) from None
    if period < 1:
        raise FormatError(f"period must be positive, got {period}")
    if not isinstance(edges, list) or len(edges) != 2 * k * period:
        count = len(edges) if isinstance(edges, list) else None
        raise FormatError(f"expected {2 * k * period} edges, got {count}")

    coloring = np.zeros((k, period, 2), dtype=np.int8)
    for index, (expected, entry) in enumerate(zip(params.window_edges(period), edges)):
        try:
            m, n, color = (_integer(entry[key], f"edge #{index} {key}") for key in ("m", "n", "color"))
            dir = entry["dir"]
        except (KeyError, TypeError):
            raise FormatError(f"edge #{index} is malformed: {entry!r}") from None
        if (m, n, dir) != (expected.m, expected.n, expected.dir):
            raise FormatError(f"edge #{index} is ({m},{n},{dir}); expected "
                              f"({expected.m},{expected.n},{expected.dir}) in (n, m, dir) order")
        if color not in (1, 2):
            raise FormatError(f"edge #{index} has color {color}; colors are 1 and 2")
        coloring[m, n, DIR_INDEX[dir]] = color
    return Decomposition(params, period, coloring, ("json",))


def loads(text: str) -> Decomposition:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    return from_dict(doc)


def read(path: str) -> Decomposition:
    try:
        text = FileManager.read_text(path)
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from None
    d = loads(text)
    logger.info(f"Read {d.params} period {d.period} from {path}")
    return d.with_provenance(f"read({path})")


def write(path: str, d: Decomposition) -> str:
    return FileManager.write_text_atomic(path, dumps(d))
