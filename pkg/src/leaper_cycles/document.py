"""The cycle file format: a header line plus one vertex per line.

Text form::

    # k=5 h=3 encoding=tuples closed=true
    0 0 0 0 0
    0 1 1 1 0
    ...

With ``encoding=tuples`` each body line holds the k coordinates leftmost
first, so files are directly comparable with printed listings; with
``encoding=ints`` each line holds the packed integer code (leftmost
coordinate = least significant bit). The JSON alternative carries the same
fields in one object. Output is deterministic: no timestamps, fixed field
order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import VertexPath

ENCODINGS = ("tuples", "ints")

_HEADER_RE = re.compile(
    r"^#\s*k=(\d+)\s+h=(\d+)\s+encoding=(\w+)\s+closed=(true|false)\s*$"
)


class DocumentError(ValueError):
    """Malformed cycle document; the message carries the line number."""


@dataclass(frozen=True)
class CycleDocument:
    k: int
    h: int
    encoding: str
    path: VertexPath
    closed: bool

    def __post_init__(self) -> None:
        if self.encoding not in ENCODINGS:
            raise ValueError(f"encoding must be one of {ENCODINGS}")


def render_text(doc: CycleDocument) -> str:
    closed = "true" if doc.closed else "false"
    lines = [f"# k={doc.k} h={doc.h} encoding={doc.encoding} closed={closed}"]
    if doc.encoding == "tuples":
        lines += [" ".join(map(str, row)) for row in doc.path.to_tuples()]
    else:
        lines += [str(c) for c in doc.path.codes]
    return "\n".join(lines) + "\n"


def render_json(doc: CycleDocument) -> str:
    if doc.encoding == "tuples":
        cycle: list = [list(row) for row in doc.path.to_tuples()]
    else:
        cycle = list(doc.path.codes)
    obj = {
        "k": doc.k,
        "h": doc.h,
        "encoding": doc.encoding,
        "cycle": cycle,
        "closed": doc.closed,
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def parse_document(text: str) -> CycleDocument:
    """Parse either the text or the JSON form, sniffing the first character."""
    stripped = text.lstrip()
    if not stripped:
        raise DocumentError("line 1: empty document")
    if stripped[0] == "{":
        return _parse_json(text)
    return _parse_text(text)


def _parse_text(text: str) -> CycleDocument:
    lines = text.splitlines()
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise DocumentError(
            "line 1: expected header '# k=<k> h=<h> encoding=<enc> closed=<bool>'"
        )
    k = int(header.group(1))
    h = int(header.group(2))
    encoding = header.group(3)
    closed = header.group(4) == "true"
    if encoding not in ENCODINGS:
        raise DocumentError(f"line 1: unknown encoding {encoding!r}")
    if k < 1:
        raise DocumentError("line 1: k must be positive")

    codes: list[int] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        tokens = line.split()
        if encoding == "tuples":
            if len(tokens) != k:
                raise DocumentError(
                    f"line {lineno}: expected {k} coordinates, got {len(tokens)}"
                )
            bits = 0
            for pos, tok in enumerate(tokens):
                if tok not in ("0", "1"):
                    raise DocumentError(
                        f"line {lineno}: position {pos + 1}: coordinate must "
                        f"be 0 or 1, got {tok!r}"
                    )
                bits |= int(tok) << pos
            codes.append(bits)
        else:
            if len(tokens) != 1:
                raise DocumentError(
                    f"line {lineno}: expected one integer, got {len(tokens)} tokens"
                )
            try:
                value = int(tokens[0])
            except ValueError:
                raise DocumentError(
                    f"line {lineno}: not an integer: {tokens[0]!r}"
                ) from None
            if value < 0:
                raise DocumentError(f"line {lineno}: negative vertex code")
            codes.append(value)
    if not codes:
        raise DocumentError("line 2: document has no vertices")
    return CycleDocument(k, h, encoding, VertexPath(k, tuple(codes)), closed)


def _parse_json(text: str) -> CycleDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"line {exc.lineno}: invalid JSON at column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(obj, dict):
        raise DocumentError("line 1: top-level JSON value must be an object")
    for field in ("k", "h", "encoding", "cycle", "closed"):
        if field not in obj:
            raise DocumentError(f"line 1: missing field {field!r}")
    k, h, encoding, cycle, closed = (
        obj["k"], obj["h"], obj["encoding"], obj["cycle"], obj["closed"]
    )
    if not isinstance(k, int) or k < 1:
        raise DocumentError("line 1: k must be a positive integer")
    if not isinstance(h, int) or h < 1:
        raise DocumentError("line 1: h must be a positive integer")
    if encoding not in ENCODINGS:
        raise DocumentError(f"line 1: unknown encoding {encoding!r}")
    if not isinstance(closed, bool):
        raise DocumentError("line 1: closed must be a boolean")
    if not isinstance(cycle, list) or not cycle:
        raise DocumentError("line 1: cycle must be a non-empty array")
    codes: list[int] = []
    for i, item in enumerate(cycle):
        if encoding == "tuples":
            if (
                not isinstance(item, list)
                or len(item) != k
                or any(c not in (0, 1) for c in item)
            ):
                raise DocumentError(
                    f"line 1: cycle[{i}] must be an array of {k} 0/1 coordinates"
                )
            codes.append(sum(c << pos for pos, c in enumerate(item)))
        else:
            if not isinstance(item, int) or isinstance(item, bool) or item < 0:
                raise DocumentError(
                    f"line 1: cycle[{i}] must be a nonnegative integer"
                )
            codes.append(item)
    return CycleDocument(k, h, encoding, VertexPath(k, tuple(codes)), closed)
